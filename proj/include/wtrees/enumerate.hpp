#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "wtrees/canonical.hpp"
#include "wtrees/tree.hpp"
#include "wtrees/type.hpp"

namespace wtrees {

struct EnumerateOptions {
  // Hard cap on generated plane embeddings before Errc::resource_budget.
  // Callers may override; the CLI also honors the WTREE_BUDGET env var.
  std::uint64_t budget = 100'000'000;
  // Worker threads (0 = hardware concurrency).  Results are identical for
  // any value: workers fill private sets that are merged by union.
  unsigned jobs = 0;
};

// Spanning trees of the complete bipartite graph on s labeled white and t
// labeled black vertices, visited once each as an edge list (white w and
// black b are joined by the pair {w, s + b}).  deg_cap (optional, indexed by
// the same numbering, whites then blacks) prunes any tree where some vertex
// would exceed its cap.  There are s^(t-1) * t^(s-1) trees when uncapped.
void enumerate_labeled_bipartite_trees(
    int s, int t, const std::function<void(const std::vector<EdgeEnds>&)>& visit,
    const std::vector<int>* deg_cap = nullptr);

std::uint64_t count_labeled_bipartite_trees(int s, int t);

// One isotopy class produced by the enumerator.
struct EnumeratedClass {
  PlaneTree tree;        // canonical representative (decoded from the code)
  CanonicalCode code;
  int automorphism_order;
};

/*
 * Explicit enumeration of all isotopy classes of plane weighted trees of the
 * given type, by exhausting labeled bipartite trees under the sorted weight
 * assignment (any tree of the type can be labeled weight-sorted, so one
 * assignment covers every class) and all plane embeddings ((deg(v)-1)!
 * cyclic orders per vertex), deriving edge weights and discarding any tree
 * with a non-positive one, then deduplicating by canonical code.  Output is
 * sorted by code, so it is deterministic and independent of scheduling.
 */
std::vector<EnumeratedClass> enumerate_classes(const WeightedType& type,
                                               const EnumerateOptions& opts = {});

std::vector<PlaneTree> enumerate_wtrees(const WeightedType& type,
                                        const EnumerateOptions& opts = {});

struct SymmetryCensus {
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> by_order;  // automorphism order -> class count
};

SymmetryCensus symmetric_census(const WeightedType& type,
                                const EnumerateOptions& opts = {});

// All types of integral total weight n: pairs of integer partitions of n.
// There are p(n)^2 of them.
std::vector<WeightedType> enumerate_types(unsigned n);

// Integer partitions of n (each non-decreasing), used by enumerate_types.
std::vector<std::vector<unsigned>> integer_partitions(unsigned n);

}  // namespace wtrees
