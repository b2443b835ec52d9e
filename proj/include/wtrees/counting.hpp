#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wtrees/enumerate.hpp"
#include "wtrees/rational.hpp"
#include "wtrees/type.hpp"

namespace wtrees {

struct Classification {
  // Pairwise distinct weights within each color class.
  bool simple = false;
  // A proper nonempty white subset and black subset with equal sums exist.
  bool decomposable = false;
};

Classification classify(const WeightedType& type);

struct DerivativeType {
  LabeledType labeled;
  // Product of the factorials of the weight multiplicities on both sides;
  // the labeled count overshoots the plain count by this factor (up to the
  // symmetry correction below).
  Integer p;
};

DerivativeType derivative_type(const WeightedType& type);

// One part of a partition of a labeled type: index subsets (bitmasks over
// white and black slots), nonempty on both sides, with equal weight sums.
struct Subtype {
  std::uint32_t whites = 0;
  std::uint32_t blacks = 0;
};

struct TypePartition {
  std::vector<Subtype> parts;  // sorted by smallest white index
};

// All partitions of the labeled type into matched-sum subtypes, each exactly
// once (parts are discovered pivoting on the smallest unassigned white slot,
// which makes the output canonical and duplicate-free).  The trivial
// one-part partition is always present.
std::vector<TypePartition> enumerate_partitions(const LabeledType& type);

/*
 * Inclusion–exclusion count of isotopy classes for a labeled (or simple)
 * type: over all partitions into n matched-sum parts of sizes v_1..v_n,
 *
 *     sum (-1)^(n-1) * (v-1)^(n-2) * prod_i (v_i - 1)!
 *
 * where v is the total vertex count (the n = 1 term reads (v-2)!).  Computed
 * exactly; the result must be a non-negative integer (zero happens: some
 * types admit no tree at all) or Errc::non_integer_result is thrown.  The
 * WeightedType overload requires a simple type (Errc::not_simple otherwise).
 */
Integer cardinality_simple(const LabeledType& type);
Integer cardinality_simple(const WeightedType& type);

// The same sum n-by-n, for diagnostics (--explain).
struct SimpleCountBreakdown {
  Integer total;
  std::map<unsigned, std::uint64_t> partitions_by_n;
  std::map<unsigned, Integer> summand_by_n;
};
SimpleCountBreakdown cardinality_simple_breakdown(const LabeledType& type);

/*
 * A way a tree of this type can admit a rotational symmetry of order i >= 2:
 * the fixed center is a vertex class (color, w) whose scaled weight is
 * divisible by i and whose multiplicity is = 1 (mod i), every other class
 * multiplicity = 0 (mod i).  The quotient type keeps (mult-1)/i vertices of
 * the center class, adds one vertex of weight w/i, and keeps mult/i of every
 * other class.
 */
struct QuotientConstruction {
  unsigned order = 0;               // i
  Color center_color = Color::white;
  Rational center_weight;           // w (in the original type)
  Rational quotient_center_weight;  // w / i
  WeightedType quotient;
};

std::vector<QuotientConstruction> quotient_constructions(const WeightedType& type,
                                                         unsigned i);

/*
 * S_i = number of isotopy classes of the type with automorphism order
 * exactly i, for i >= 2, recovered from quotients: U_i counts (quotient
 * tree, marked center candidate) pairs, the mark ranging over automorphism
 * orbits of vertices of the center's color and quotient weight; a tree has
 * order divisible by i iff it lifts from exactly one such pair, so
 * S_e = sum_{e | d} mu(d/e) U_d.  Quotient trees come from the enumerator.
 */
std::map<unsigned, Integer> symmetric_counts_via_quotients(
    const WeightedType& type, const EnumerateOptions& opts = {});

/*
 * Isotopy-class count of an arbitrary type:
 *
 *     |type| = T/p + sum_{i>=2} (1 - 1/i) * S_i
 *
 * with T the labeled count of the derivative type and p its multiplicity
 * factor.  Exact; throws Errc::non_integer_result if the total is not a
 * non-negative integer.
 */
Integer cardinality(const WeightedType& type, const EnumerateOptions& opts = {});

struct CountBreakdown {
  Integer total;
  Classification cls;
  Integer labeled_count;                // T
  Integer p;                            // multiplicity factor
  std::map<unsigned, Integer> s_exact;  // S_i, i >= 2 (only nonzero entries)
  std::optional<SimpleCountBreakdown> simple;  // partition detail for T
};
CountBreakdown cardinality_breakdown(const WeightedType& type,
                                     const EnumerateOptions& opts = {});

}  // namespace wtrees
