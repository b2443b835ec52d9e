#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wtrees/rational.hpp"

namespace wtrees {

/*
 * A type <k_1,...,k_s | l_1,...,l_t> records the white and black vertex
 * weights of a plane weighted tree, each list non-decreasing, with equal
 * totals.  Weights are positive rationals; the common total is n.
 */
class WeightedType {
 public:
  // Validates (both sides nonempty, all weights > 0, equal sums), sorts each
  // side non-decreasingly.  Throws Error on violation.
  WeightedType(std::vector<Rational> white, std::vector<Rational> black);

  const std::vector<Rational>& white() const { return white_; }
  const std::vector<Rational>& black() const { return black_; }
  std::size_t s() const { return white_.size(); }
  std::size_t t() const { return black_.size(); }
  std::size_t v() const { return white_.size() + black_.size(); }  // vertex count
  const Rational& total() const { return total_; }                 // n

  // Machine form "1,2,4|2,5" (weights as "p" or "p/q").
  std::string literal() const;
  // Display form "<1,2,4|2,5>".
  std::string display() const;

  bool operator==(const WeightedType& o) const {
    return white_ == o.white_ && black_ == o.black_;
  }

 private:
  std::vector<Rational> white_, black_;
  Rational total_;
};

// One vertex slot of a labeled type: its weight plus a label making equal
// weights distinguishable.  Labels are the positions 0..s-1 / 0..t-1.
struct LabeledVertex {
  int label;
  Rational weight;
};

// A type whose equal-weight vertices have been told apart by labels.  Always
// "simple" in the labeled sense: slots are pairwise distinct.
class LabeledType {
 public:
  LabeledType(std::vector<Rational> white, std::vector<Rational> black);

  const std::vector<LabeledVertex>& white() const { return white_; }
  const std::vector<LabeledVertex>& black() const { return black_; }
  std::size_t s() const { return white_.size(); }
  std::size_t t() const { return black_.size(); }
  std::size_t v() const { return white_.size() + black_.size(); }

  // Render with primes distinguishing repeated weights: "<1,1',1'',6|3,3',3''>".
  std::string display() const;

 private:
  std::vector<LabeledVertex> white_, black_;
};

// Parses "k1,k2,...|l1,l2,..." (fractions "p/q" allowed) into a validated
// type.  Throws Error(Errc::parse) carrying the byte offset of the first
// offending character, or validation errors from the WeightedType ctor.
WeightedType parse_type_literal(std::string_view text);

}  // namespace wtrees
