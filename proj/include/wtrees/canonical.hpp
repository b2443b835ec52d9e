#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wtrees/tree.hpp"

namespace wtrees {

/*
 * Canonical codes decide isotopy: two plane weighted trees are equivalent
 * under orientation-preserving homeomorphism of the plane (colors and weights
 * preserved) iff their canonical codes are equal.
 *
 * The code of one rooted traversal starts at a directed edge (root vertex +
 * first incident edge), emits the root vertex's color and weight, then walks
 * subtrees in counterclockwise order, emitting a down-marker with the edge
 * weight before each descent and an up-marker after.  The canonical code is
 * the minimum over all 2*(V-1) directed root edges in the token order
 *     down < up < white < black < weight values (by rational order).
 */
struct Token {
  enum Kind : std::uint8_t { down = 0, up = 1, white = 2, black = 3, weight = 4 };
  Kind kind;
  Rational value;  // meaningful only for kind == weight

  bool operator==(const Token& o) const {
    return kind == o.kind && (kind != weight || value == o.value);
  }
  std::strong_ordering operator<=>(const Token& o) const;
};

class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const std::vector<Token>& tokens() const { return tokens_; }
  bool operator==(const CanonicalCode& o) const { return tokens_ == o.tokens_; }
  std::strong_ordering operator<=>(const CanonicalCode& o) const;

  // Injective byte serialization of the token sequence.
  std::string bytes() const;
  // The byte serialization rendered as lowercase hex.
  std::string hex() const;

 private:
  std::vector<Token> tokens_;
};

struct CanonicalResult {
  CanonicalCode code;
  // Number of directed root edges achieving the minimal code.  The color- and
  // weight-preserving automorphism group of a plane tree is cyclic and acts
  // freely and transitively on those roots, so this is its order.
  int automorphism_order = 1;
};

CanonicalResult canonicalize(const PlaneTree& tree);
CanonicalCode canonical_code(const PlaneTree& tree);
int automorphism_order(const PlaneTree& tree);

bool are_isotopic(const PlaneTree& a, const PlaneTree& b);

// Rebuilds a tree from a code: vertex ids in preorder, edge ids in descent
// order, rotations listed entry-edge first.  decode(canonicalize(t)) is the
// canonical representative of t's class and depends only on the class.
PlaneTree decode_code(const CanonicalCode& code);
PlaneTree canonical_form(const PlaneTree& tree);

// All color- and weight-preserving automorphisms as vertex permutations
// (identity included; size equals the automorphism order).
std::vector<std::vector<int>> automorphisms(const PlaneTree& tree);

}  // namespace wtrees
