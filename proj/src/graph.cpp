#include "eccspec/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace eccspec {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError("graph must have at least one vertex");
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    normalized.emplace_back(u, v);
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  return Graph(n, std::move(normalized));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_vertex_token(std::string_view tok, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'", line_no);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> declared;
  std::vector<Edge> edges;
  bool seen_content = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (tokens.size() == 1 && !seen_content) {
      declared = parse_vertex_token(tokens[0], line_no);
      if (*declared < 1) throw ParseError("vertex count must be positive", line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) + " tokens", line_no);
    }
    int u = parse_vertex_token(tokens[0], line_no);
    int v = parse_vertex_token(tokens[1], line_no);
    if (u == v) {
      throw GraphError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                       std::to_string(u));
    }
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError("vertex id exceeds declared count " + std::to_string(*declared), line_no);
    }
    edges.emplace_back(u, v);
  }

  int n = 0;
  if (declared) {
    n = *declared;
  } else {
    if (edges.empty()) throw ParseError("empty edge list without a vertex-count header");
    std::vector<bool> touched;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
    touched.assign(n, false);
    for (auto [u, v] : edges) touched[u] = touched[v] = true;
    for (int v = 0; v < n; ++v) {
      if (!touched[v]) {
        throw ParseError("vertex " + std::to_string(v) +
                         " is isolated; add a vertex-count header to allow isolated vertices");
      }
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

constexpr int kG6Bias = 63;
constexpr char kG6Long = 126;

void append_graph6_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else if (n <= 258047) {
    out.push_back(kG6Long);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Bias));
    }
  } else {
    out.push_back(kG6Long);
    out.push_back(kG6Long);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Bias));
    }
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty string");
  for (char c : text) {
    if (c < kG6Bias || c > kG6Long) {
      throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) + " out of range");
    }
  }

  std::uint64_t n = 0;
  std::size_t pos = 0;
  auto read_digits = [&](int count) {
    if (pos + count > text.size()) throw ParseError("graph6: truncated vertex count");
    for (int i = 0; i < count; ++i) n = (n << 6) | static_cast<std::uint64_t>(text[pos++] - kG6Bias);
  };
  if (text[0] != kG6Long) {
    n = static_cast<std::uint64_t>(text[0] - kG6Bias);
    pos = 1;
  } else if (text.size() > 1 && text[1] == kG6Long) {
    pos = 2;
    read_digits(6);
  } else {
    pos = 1;
    read_digits(3);
  }
  if (n < 1) throw ParseError("graph6: graph must have at least one vertex");
  if (n > 100000) throw ParseError("graph6: vertex count " + std::to_string(n) + " unsupported");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - kG6Bias;
      if (byte & (0x20 >> (k % 6))) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  for (; k < bytes * 6; ++k) {
    int byte = text[pos + k / 6] - kG6Bias;
    if (byte & (0x20 >> (k % 6))) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  append_graph6_order(out, n);
  const std::uint64_t bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> data((bits + 5) / 6, 0);
  for (const auto& [u, v] : g.edges()) {
    // u < v: bit index of (u, v) in column-major upper-triangle order.
    const std::uint64_t k = static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
    data[k / 6] |= static_cast<std::uint8_t>(0x20 >> (k % 6));
  }
  for (auto b : data) out.push_back(static_cast<char>(b + kG6Bias));
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.order()) {
    throw ContractError("bfs source " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

Metric metric(const Graph& g) {
  const int n = g.order();
  Metric m;
  m.n = n;
  m.dist.resize(static_cast<std::size_t>(n) * n);
  m.ecc.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = bfs_distances(g, u);
    int e = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] == kUnreachable) throw DisconnectedError();
      m.dist[static_cast<std::size_t>(u) * n + v] = row[v];
      e = std::max(e, row[v]);
    }
    m.ecc[u] = e;
  }
  m.diam = *std::max_element(m.ecc.begin(), m.ecc.end());
  m.rad = *std::min_element(m.ecc.begin(), m.ecc.end());
  return m;
}

}  // namespace eccspec
