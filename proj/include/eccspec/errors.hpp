#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eccspec {

/// Malformed textual input (edge lists, graph6, family specs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input violates the simple-graph model (self-loop, vertex out of range).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eccentricities are infinite on a disconnected graph.
class DisconnectedError : public std::domain_error {
 public:
  DisconnectedError() : std::domain_error("eccentricity undefined: graph disconnected") {}
};

/// Caller broke a documented precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eccspec
