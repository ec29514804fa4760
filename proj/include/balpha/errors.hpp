#pragma once

#include <stdexcept>
#include <string>

namespace balpha {

// Malformed graph6 text, edge-list text, or generator expression.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation requires every vertex to have degree >= 1.
struct IsolatedVertexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exact solver or enumeration was asked to exceed its size budget.
struct BudgetError : std::runtime_error {
  enum class Kind { coloring, independence, subgraph_expansion, char_poly };
  Kind kind;
  BudgetError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

}  // namespace balpha
