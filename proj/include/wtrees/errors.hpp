#pragma once

#include <stdexcept>
#include <string>

namespace wtrees {

enum class Errc {
  parse,             // malformed input text
  empty_side,        // a type must have at least one vertex of each color
  non_positive_weight,
  sum_mismatch,      // the two color classes of a type must have equal totals
  invalid_tree,      // malformed tree structure (not a tree, not bipartite, ...)
  non_positive_edge, // derived edge weights must be strictly positive
  residual_mismatch, // leaf peeling left a nonzero residual (internal bug)
  not_simple,        // operation requires pairwise distinct weights per color
  non_integer_result,// a count that must be a non-negative integer failed the check
  resource_budget,   // enumeration exceeded the configured work budget
  no_convergence,    // numeric solver found no solutions
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, long column = -1)
      : std::runtime_error(what), code_(code), column_(column) {}

  Errc code() const { return code_; }
  // Byte offset of the offending character for Errc::parse, else -1.
  long column() const { return column_; }

 private:
  Errc code_;
  long column_;
};

}  // namespace wtrees
