#include "eccspec/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <random>

namespace eccspec {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ContractError(msg);
}

template <typename T>
T parse_number(std::string_view tok, std::string_view spec) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("family spec '" + std::string(spec) + "': bad number '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

const std::map<std::string, Family, std::less<>>& family_names() {
  static const std::map<std::string, Family, std::less<>> names = {
      {"star", Family::Star},
      {"path", Family::Path},
      {"cycle", Family::Cycle},
      {"complete", Family::Complete},
      {"complete_bipartite", Family::CompleteBipartite},
      {"bipartite", Family::CompleteBipartite},
      {"complete_multipartite", Family::CompleteMultipartite},
      {"multipartite", Family::CompleteMultipartite},
      {"crown", Family::Crown},
      {"random_connected", Family::RandomConnected},
      {"random", Family::RandomConnected},
  };
  return names;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("family spec '" + std::string(text) + "' must look like name:params");
  }
  auto name = text.substr(0, colon);
  auto it = family_names().find(name);
  if (it == family_names().end()) throw ParseError("unknown family '" + std::string(name) + "'");
  auto fields = split(text.substr(colon + 1), ',');

  FamilySpec spec;
  spec.family = it->second;
  if (spec.family == Family::RandomConnected) {
    if (fields.size() != 3) throw ParseError("random family expects n,edge_prob,seed");
    spec.params = {parse_number<int>(fields[0], text)};
    spec.edge_prob = parse_number<double>(fields[1], text);
    spec.seed = parse_number<std::uint64_t>(fields[2], text);
    return spec;
  }
  for (auto f : fields) spec.params.push_back(parse_number<int>(f, text));

  const std::size_t arity = spec.params.size();
  switch (spec.family) {
    case Family::CompleteBipartite:
      if (arity != 2) throw ParseError("complete_bipartite expects p,q");
      break;
    case Family::CompleteMultipartite:
      if (arity < 2) throw ParseError("multipartite expects at least two part sizes");
      break;
    default:
      if (arity != 1) throw ParseError("family '" + std::string(name) + "' expects a single n");
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string name;
  for (const auto& [key, fam] : family_names()) {
    if (fam == spec.family && (name.empty() || key.size() > name.size())) name = key;
  }
  std::string out = name + ":";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spec.params[i]);
  }
  if (spec.family == Family::RandomConnected) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, spec.edge_prob);
    out += "," + std::string(buf, ptr) + "," + std::to_string(spec.seed);
  }
  return out;
}

Graph star(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int p, int q) { return complete_multipartite({p, q}); }

Graph complete_multipartite(const std::vector<int>& parts) {
  require(parts.size() >= 2, "multipartite needs at least two parts");
  std::vector<int> block;
  int n = 0;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    require(parts[b] >= 1, "multipartite part sizes must be >= 1");
    block.insert(block.end(), parts[b], static_cast<int>(b));
    n += parts[b];
  }
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (block[i] != block[j]) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph crown(int n) {
  require(n >= 2, "crown needs n >= 2");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.emplace_back(i, n + j);
  return Graph::from_edges(2 * n, e);
}

Graph make_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  require(!p.empty(), "family spec has no parameters");
  switch (spec.family) {
    case Family::Star: return star(p[0]);
    case Family::Path: return path(p[0]);
    case Family::Cycle: return cycle(p[0]);
    case Family::Complete: return complete(p[0]);
    case Family::CompleteBipartite:
      require(p.size() == 2, "complete_bipartite expects p,q");
      return complete_bipartite(p[0], p[1]);
    case Family::CompleteMultipartite: return complete_multipartite(p);
    case Family::Crown: return crown(p[0]);
    case Family::RandomConnected: return random_connected_graph(p[0], spec.edge_prob, spec.seed);
  }
  throw ContractError("unhandled family");
}

Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed) {
  require(n >= 1, "random graph needs n >= 1");
  require(edge_prob > 0.0 && edge_prob <= 1.0, "edge_prob must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0, 1) without relying on a library distribution, so
  // samples match across standard library implementations.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (uniform() < edge_prob) e.emplace_back(i, j);
    Graph g = Graph::from_edges(n, e);
    if (is_connected(g)) return g;
  }
  throw NumericError("random_connected_graph: " + std::to_string(kMaxAttempts) +
                     " consecutive disconnected samples; increase edge_prob");
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (static_cast<int>(g.size()) != n - 1) return false;
  if (n <= 2) return true;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g) {
  // Complete multipartite iff non-adjacency (plus identity) is an equivalence
  // relation; the classes are the parts.
  const int n = g.order();
  std::vector<int> part(n, -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (int w = v; w < n; ++w) {
      if (w == v || !g.adjacent(v, w)) {
        if (part[w] >= 0) return std::nullopt;
        part[w] = id;
        ++sizes[id];
      }
    }
  }
  if (sizes.size() < 2) return std::nullopt;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if ((part[u] == part[w]) == g.adjacent(u, w)) return std::nullopt;
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(n_, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
    }
  }

  std::string run() {
    std::vector<int> colors(n_);
    for (int v = 0; v < n_; ++v) colors[v] = std::popcount(adj_[v]);
    // Compress degrees to dense colour ids, ordered by degree.
    std::vector<int> degs = colors;
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (auto& c : colors) c = static_cast<int>(std::lower_bound(degs.begin(), degs.end(), c) - degs.begin());
    int k = refine(colors, static_cast<int>(degs.size()));
    search(colors, k);
    return best_;
  }

 private:
  // Equitable refinement; cells only split and keep their relative order.
  int refine(std::vector<int>& colors, int k) const {
    std::vector<int> order(n_);
    std::vector<std::vector<int>> sig(n_);
    while (true) {
      std::vector<std::uint64_t> cell(k, 0);
      for (int v = 0; v < n_; ++v) cell[colors[v]] |= std::uint64_t{1} << v;
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.assign(k + 1, 0);
        s[0] = colors[v];
        for (int c = 0; c < k; ++c) s[c + 1] = std::popcount(adj_[v] & cell[c]);
      }
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int next = 0;
      std::vector<int> fresh(n_);
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
        fresh[order[i]] = next;
      }
      const int new_k = n_ ? next + 1 : 0;
      colors.swap(fresh);
      if (new_k == k) return k;
      k = new_k;
    }
  }

  bool twins(int u, int v) const {
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    return (adj_[u] & ~bv) == (adj_[v] & ~bu);
  }

  void leaf(const std::vector<int>& pos) {
    const std::size_t bits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    std::string cert;
    cert.reserve(1 + (bits + 5) / 6);
    cert.push_back(static_cast<char>(63 + n_));
    std::vector<std::uint8_t> data((bits + 5) / 6, 0);
    for (int u = 0; u < n_; ++u) {
      std::uint64_t row = adj_[u];
      while (row) {
        int v = std::countr_zero(row);
        row &= row - 1;
        int a = pos[u], b = pos[v];
        if (a < b) {
          std::size_t k = static_cast<std::size_t>(b) * (b - 1) / 2 + a;
          data[k / 6] |= static_cast<std::uint8_t>(0x20 >> (k % 6));
        }
      }
    }
    for (auto d : data) cert.push_back(static_cast<char>(63 + d));
    if (best_.empty() || cert < best_) best_ = std::move(cert);
  }

  void search(const std::vector<int>& colors, int k) {
    if (k == n_) {
      leaf(colors);
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<int> count(k, 0);
    for (int c : colors) ++count[c];
    int target = 0;
    while (count[target] == 1) ++target;

    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      // Swapping twins is an automorphism fixing everything individualized
      // so far, so one representative per twin class suffices.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> child(colors);
      for (int w = 0; w < n_; ++w) {
        if (colors[w] > target) ++child[w];
        else if (colors[w] == target && w != v) child[w] = target + 1;
      }
      int child_k = refine(child, k + 1);
      search(child, child_k);
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::string best_;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw ContractError("canonical_form supports at most " + std::to_string(kCanonicalMaxOrder) +
                        " vertices");
  }
  return Canonizer(g).run();
}

// ---------------------------------------------------------------------------
// Tree enumeration

namespace {

Graph decode_prufer(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1, w = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) (u < 0 ? u : w) = v;
  }
  edges.emplace_back(u, w);
  return Graph::from_edges(n, edges);
}

// Level-sequence successor rules for free trees (constant amortized time).
using Layout = std::vector<int>;

std::optional<Layout> next_rooted_tree(const Layout& pred, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

std::pair<Layout, Layout> split_tree(const Layout& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

std::optional<Layout> next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) valid = false;
    else if (left.size() == rest.size() && left > rest) valid = false;
  }
  if (valid) return candidate;

  const int p = static_cast<int>(left.size());
  auto fresh = next_rooted_tree(candidate, p);
  if (!fresh) return std::nullopt;
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(*fresh);
    const int h = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i) (*fresh)[fresh->size() - len + i] = static_cast<int>(i) + 1;
  }
  return fresh;
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<Edge> edges;
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(stack.back(), i);
    }
    stack.push_back(i);
  }
  return Graph::from_edges(static_cast<int>(layout.size()), edges);
}

}  // namespace

struct TreeEnumerator::Impl {
  int n = 0;
  TreeMethod method = TreeMethod::Auto;
  bool done = false;

  // Prufer state
  std::vector<int> seq;
  bool first = true;
  std::unordered_set<std::string> seen;

  // level sequence state
  std::optional<Layout> layout;

  bool advance_sequence() {
    if (first) {
      first = false;
      return true;
    }
    for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
      if (++seq[i] < n) return true;
      seq[i] = 0;
    }
    return false;
  }

  // Labelled trees whose degrees are non-increasing in the label still cover
  // every isomorphism class; skip the rest before canonicalizing.
  bool degrees_sorted() const {
    std::vector<int> cnt(n, 0);
    for (int x : seq) ++cnt[x];
    for (int v = 0; v + 1 < n; ++v)
      if (cnt[v] < cnt[v + 1]) return false;
    return true;
  }

  std::optional<Graph> next_prufer() {
    if (n <= 2) {
      if (!first) return std::nullopt;
      first = false;
      return n == 1 ? Graph::from_edges(1, {}) : Graph::from_edges(2, {{0, 1}});
    }
    while (advance_sequence()) {
      if (!degrees_sorted()) continue;
      Graph t = decode_prufer(seq, n);
      if (seen.insert(canonical_form(t)).second) return t;
    }
    return std::nullopt;
  }

  std::optional<Graph> next_level() {
    if (n <= 2) return next_prufer();
    if (!layout) return std::nullopt;
    layout = next_tree(*layout);
    if (!layout) return std::nullopt;
    Graph t = layout_to_graph(*layout);
    layout = next_rooted_tree(*layout);
    return t;
  }
};

TreeEnumerator::TreeEnumerator(int n, TreeMethod method) : impl_(std::make_unique<Impl>()) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw ContractError("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
  }
  if (method == TreeMethod::Auto) method = n <= kPruferMaxOrder ? TreeMethod::Prufer : TreeMethod::LevelSequence;
  impl_->n = n;
  impl_->method = method;
  impl_->seq.assign(std::max(0, n - 2), 0);
  Layout init;
  for (int i = 0; i <= n / 2; ++i) init.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) init.push_back(i);
  impl_->layout = init;
}

TreeEnumerator::~TreeEnumerator() = default;
TreeEnumerator::TreeEnumerator(TreeEnumerator&&) noexcept = default;
TreeEnumerator& TreeEnumerator::operator=(TreeEnumerator&&) noexcept = default;

std::optional<Graph> TreeEnumerator::next() {
  return impl_->method == TreeMethod::Prufer ? impl_->next_prufer() : impl_->next_level();
}

std::vector<Graph> all_trees(int n, TreeMethod method) {
  std::vector<Graph> out;
  TreeEnumerator it(n, method);
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

// ---------------------------------------------------------------------------
// Connected graph enumeration

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n, bool allow_large) : n_(n) {
  const int cap = allow_large ? kMaxConnectedOrderOverride : kMaxConnectedOrder;
  if (n < 1 || n > cap) {
    throw ContractError("connected graph enumeration supports 1 <= n <= " + std::to_string(cap) +
                        (allow_large ? "" : " (n = 8 needs the override flag)"));
  }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots_.emplace_back(i, j);
  bits_ = static_cast<int>(slots_.size());
  end_ = std::uint64_t{1} << bits_;
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  std::vector<std::uint32_t> adj(n_);
  std::vector<int> deg(n_);
  for (; mask_ < end_; ++mask_) {
    std::fill(adj.begin(), adj.end(), 0);
    for (int b = 0; b < bits_; ++b) {
      if (mask_ >> b & 1) {
        auto [i, j] = slots_[b];
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
    bool sorted = true;
    for (int v = 0; v < n_; ++v) {
      deg[v] = std::popcount(adj[v]);
      if (v > 0 && deg[v] > deg[v - 1]) {
        sorted = false;
        break;
      }
    }
    // Every isomorphism class has a labelling with non-increasing degrees.
    if (!sorted) continue;

    std::uint32_t reached = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached != (1u << n_) - 1) continue;

    std::vector<Edge> edges;
    for (int b = 0; b < bits_; ++b)
      if (mask_ >> b & 1) edges.push_back(slots_[b]);
    Graph g = Graph::from_edges(n_, edges);
    if (seen_.insert(canonical_form(g)).second) {
      ++mask_;
      return g;
    }
  }
  return std::nullopt;
}

std::vector<Graph> all_connected_graphs(int n, bool allow_large) {
  std::vector<Graph> out;
  ConnectedGraphEnumerator it(n, allow_large);
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

namespace {

template <typename Generate>
const std::vector<Graph>& memoized(const std::string& kind, int n, const std::filesystem::path& dir,
                                   Generate generate) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::vector<Graph>> cache;
  std::lock_guard lock(mu);
  const auto file = dir.empty() ? std::filesystem::path{} : dir / (kind + "-" + std::to_string(n) + ".g6");
  auto key = std::make_pair(kind, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<Graph> graphs;
    if (!file.empty() && std::filesystem::exists(file)) {
      std::ifstream in(file);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) graphs.push_back(parse_graph6(line));
    } else {
      graphs = generate();
    }
    it = cache.emplace(key, std::move(graphs)).first;
  }
  if (!file.empty() && !std::filesystem::exists(file)) {
    std::filesystem::create_directories(dir);
    std::ofstream out(file);
    for (const auto& g : it->second) out << to_graph6(g) << '\n';
  }
  return it->second;
}

}  // namespace

const std::vector<Graph>& connected_graph_corpus(int n, const std::filesystem::path& cache_dir,
                                                 bool allow_large) {
  return memoized("connected", n, cache_dir, [&] { return all_connected_graphs(n, allow_large); });
}

const std::vector<Graph>& tree_corpus(int n, const std::filesystem::path& cache_dir) {
  return memoized("trees", n, cache_dir, [&] { return all_trees(n); });
}

}  // namespace eccspec
