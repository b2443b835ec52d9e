#include "wtrees/counting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "wtrees/canonical.hpp"
#include "wtrees/errors.hpp"

namespace wtrees {

namespace {

// Scale the weights of both sides by the common denominator so subset sums
// become exact integers.
struct ScaledSides {
  std::vector<Integer> white, black;
};

ScaledSides scale_sides(const std::vector<Rational>& white,
                        const std::vector<Rational>& black) {
  std::vector<Rational> all = white;
  all.insert(all.end(), black.begin(), black.end());
  Integer l = denominator_lcm(all);
  ScaledSides out;
  for (const auto& w : white) out.white.push_back(numerator(Rational(w * l)));
  for (const auto& b : black) out.black.push_back(numerator(Rational(b * l)));
  return out;
}

constexpr std::size_t kMaskLimit = 20;  // subset bitmasks per side

void check_mask_limit(std::size_t s, std::size_t t) {
  if (s > kMaskLimit || t > kMaskLimit)
    throw Error(Errc::resource_budget,
                "partition search limited to 20 vertices per color");
}

}  // namespace

Classification classify(const WeightedType& type) {
  Classification c;
  auto distinct = [](const std::vector<Rational>& ws) {
    for (size_t i = 1; i < ws.size(); ++i)
      if (ws[i] == ws[i - 1]) return false;  // sorted, so repeats are adjacent
    return true;
  };
  c.simple = distinct(type.white()) && distinct(type.black());

  // Decomposable: proper nonempty subsets of equal sum on the two sides.
  check_mask_limit(type.s(), type.t());
  auto sides = scale_sides(type.white(), type.black());
  std::map<Integer, char> white_sums;
  std::uint32_t wfull = (1u << type.s()) - 1;
  for (std::uint32_t m = 1; m < wfull; ++m) {  // proper nonempty
    Integer sum = 0;
    for (size_t i = 0; i < type.s(); ++i)
      if (m >> i & 1) sum += sides.white[i];
    white_sums[sum] = 1;
  }
  std::uint32_t bfull = (1u << type.t()) - 1;
  c.decomposable = false;
  for (std::uint32_t m = 1; m < bfull && !c.decomposable; ++m) {
    Integer sum = 0;
    for (size_t j = 0; j < type.t(); ++j)
      if (m >> j & 1) sum += sides.black[j];
    if (white_sums.count(sum)) c.decomposable = true;
  }
  return c;
}

DerivativeType derivative_type(const WeightedType& type) {
  DerivativeType d{LabeledType(type.white(), type.black()), 1};
  auto mult_factor = [](const std::vector<Rational>& ws) {
    Integer p = 1;
    size_t run = 1;
    for (size_t i = 1; i <= ws.size(); ++i) {
      if (i < ws.size() && ws[i] == ws[i - 1]) {
        ++run;
      } else {
        p *= factorial(static_cast<unsigned>(run));
        run = 1;
      }
    }
    return p;
  };
  d.p = mult_factor(type.white()) * mult_factor(type.black());
  return d;
}

namespace {

// Shared scaffolding for walking partitions of a labeled type into
// matched-sum parts: subset sums per white mask, black masks grouped by sum.
struct PartitionSpace {
  int s, t;
  std::vector<Integer> wsum;                       // by white mask
  std::map<Integer, std::vector<std::uint32_t>> black_by_sum;  // nonempty masks

  explicit PartitionSpace(const LabeledType& type) {
    check_mask_limit(type.s(), type.t());
    s = static_cast<int>(type.s());
    t = static_cast<int>(type.t());
    std::vector<Rational> white, black;
    for (const auto& lv : type.white()) white.push_back(lv.weight);
    for (const auto& lv : type.black()) black.push_back(lv.weight);
    auto sides = scale_sides(white, black);

    wsum.assign(std::size_t(1) << s, 0);
    for (std::uint32_t m = 1; m < wsum.size(); ++m) {
      int low = std::countr_zero(m);
      wsum[m] = wsum[m & (m - 1)] + sides.white[low];
    }
    for (std::uint32_t m = 1; m < (1u << t); ++m) {
      Integer sum = 0;
      for (int j = 0; j < t; ++j)
        if (m >> j & 1) sum += sides.black[j];
      black_by_sum[sum].push_back(m);
    }
  }
};

}  // namespace

std::vector<TypePartition> enumerate_partitions(const LabeledType& type) {
  PartitionSpace space(type);
  std::uint32_t wfull = (1u << space.s) - 1, bfull = (1u << space.t) - 1;
  std::vector<TypePartition> out;
  std::vector<Subtype> cur;

  // Pivot on the smallest unassigned white slot: every partition is built
  // exactly once, parts ordered by smallest white index.
  auto rec = [&](auto&& self, std::uint32_t wm, std::uint32_t bm) -> void {
    if (wm == 0) {
      if (bm == 0) out.push_back({cur});
      return;
    }
    std::uint32_t pivot = wm & -wm;
    std::uint32_t rest = wm ^ pivot;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t I = sub | pivot;
      auto it = space.black_by_sum.find(space.wsum[I]);
      if (it != space.black_by_sum.end()) {
        for (std::uint32_t J : it->second) {
          if ((J & bm) != J) continue;
          cur.push_back({I, J});
          self(self, wm ^ I, bm ^ J);
          cur.pop_back();
        }
      }
      if (sub == 0) break;
    }
  };
  rec(rec, wfull, bfull);
  return out;
}

namespace {

/*
 * The inclusion–exclusion sum grouped by part count: over the remaining
 * (white mask, black mask) slots, f[n] = number of matched-sum partitions
 * into n parts weighted by prod (v_i - 1)!, and c[n] = the raw partition
 * count.  Memoized on the mask pair; the final answer combines
 *     sum_n (-1)^(n-1) (v-1)^(n-2) f[n]
 * exactly (the n = 1 term is (v-1)!/(v-1) = (v-2)!).
 */
struct PartitionDP {
  PartitionSpace space;
  std::vector<Integer> fact;
  std::unordered_map<std::uint64_t, std::vector<std::pair<Integer, Integer>>> memo;

  explicit PartitionDP(const LabeledType& type) : space(type) {
    for (unsigned k = 0; k <= static_cast<unsigned>(space.s + space.t); ++k)
      fact.push_back(factorial(k));
  }

  // results[n] = (count, weighted), n = number of parts.
  const std::vector<std::pair<Integer, Integer>>& solve(std::uint32_t wm,
                                                        std::uint32_t bm) {
    std::uint64_t key = (std::uint64_t(wm) << 32) | bm;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<std::pair<Integer, Integer>> res;
    if (wm == 0) {
      if (bm == 0) res.push_back({1, 1});  // the empty partition
      return memo.emplace(key, std::move(res)).first->second;
    }
    std::uint32_t pivot = wm & -wm;
    std::uint32_t rest = wm ^ pivot;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t I = sub | pivot;
      auto bit = space.black_by_sum.find(space.wsum[I]);
      if (bit != space.black_by_sum.end()) {
        for (std::uint32_t J : bit->second) {
          if ((J & bm) != J) continue;
          const auto& tail = solve(wm ^ I, bm ^ J);
          unsigned size = std::popcount(I) + std::popcount(J);
          const Integer& f = fact[size - 1];
          if (res.size() < tail.size() + 1) res.resize(tail.size() + 1, {0, 0});
          for (size_t n = 0; n < tail.size(); ++n) {
            if (tail[n].first == 0 && tail[n].second == 0) continue;
            res[n + 1].first += tail[n].first;
            res[n + 1].second += f * tail[n].second;
          }
        }
      }
      if (sub == 0) break;
    }
    return memo.emplace(key, std::move(res)).first->second;
  }
};

Integer combine_ie_sum(const std::vector<std::pair<Integer, Integer>>& by_n,
                       unsigned v) {
  Rational total = 0;
  for (size_t n = 1; n < by_n.size(); ++n) {
    const Integer& f = by_n[n].second;
    if (f == 0) continue;
    Rational term(f);
    // (v-1)^(n-2): negative exponent only at n = 1.
    if (n == 1)
      term /= v - 1;
    else
      for (size_t k = 2; k < n; ++k) term *= v - 1;
    if (n % 2 == 0) term = -term;
    total += term;
  }
  if (!is_integer(total) || total < 0)
    throw Error(Errc::non_integer_result,
                "count came out as " + to_string(total) +
                    ", expected a non-negative integer");
  return numerator(total);
}

}  // namespace

Integer cardinality_simple(const LabeledType& type) {
  PartitionDP dp(type);
  std::uint32_t wfull = (1u << dp.space.s) - 1, bfull = (1u << dp.space.t) - 1;
  return combine_ie_sum(dp.solve(wfull, bfull), static_cast<unsigned>(type.v()));
}

Integer cardinality_simple(const WeightedType& type) {
  if (!classify(type).simple)
    throw Error(Errc::not_simple, "type has repeated weights; use cardinality()");
  return cardinality_simple(LabeledType(type.white(), type.black()));
}

SimpleCountBreakdown cardinality_simple_breakdown(const LabeledType& type) {
  PartitionDP dp(type);
  std::uint32_t wfull = (1u << dp.space.s) - 1, bfull = (1u << dp.space.t) - 1;
  const auto& by_n = dp.solve(wfull, bfull);
  SimpleCountBreakdown out;
  out.total = combine_ie_sum(by_n, static_cast<unsigned>(type.v()));
  unsigned v = static_cast<unsigned>(type.v());
  for (size_t n = 1; n < by_n.size(); ++n) {
    if (by_n[n].first == 0) continue;
    out.partitions_by_n[static_cast<unsigned>(n)] =
        static_cast<std::uint64_t>(by_n[n].first);
    Rational term(by_n[n].second);
    if (n == 1)
      term /= v - 1;
    else
      for (size_t k = 2; k < n; ++k) term *= v - 1;
    if (n % 2 == 0) term = -term;
    out.summand_by_n[static_cast<unsigned>(n)] = numerator(term);
  }
  return out;
}

std::vector<QuotientConstruction> quotient_constructions(const WeightedType& type,
                                                         unsigned i) {
  std::vector<QuotientConstruction> out;
  if (i < 2) return out;

  // (color, weight) classes with multiplicities, whites first, by weight.
  struct Cls {
    Color color;
    Rational weight;
    unsigned mult;
  };
  std::vector<Cls> classes;
  auto collect = [&](const std::vector<Rational>& ws, Color c) {
    for (size_t k = 0; k < ws.size();) {
      size_t j = k;
      while (j < ws.size() && ws[j] == ws[k]) ++j;
      classes.push_back({c, ws[k], static_cast<unsigned>(j - k)});
      k = j;
    }
  };
  collect(type.white(), Color::white);
  collect(type.black(), Color::black);

  std::vector<Rational> all = type.white();
  all.insert(all.end(), type.black().begin(), type.black().end());
  Integer l = denominator_lcm(all);

  for (size_t c = 0; c < classes.size(); ++c) {
    const Cls& center = classes[c];
    if (center.mult % i != 1) continue;
    // The center's weight must split into i equal positive orbit sums; for a
    // type scaling to integers this forces i | scaled weight.
    if (numerator(Rational(center.weight * l)) % i != 0) continue;
    bool ok = true;
    for (size_t o = 0; o < classes.size() && ok; ++o)
      if (o != c && classes[o].mult % i != 0) ok = false;
    if (!ok) continue;

    std::vector<Rational> qwhite, qblack;
    auto push = [&](Color col, const Rational& w, unsigned count) {
      auto& side = col == Color::white ? qwhite : qblack;
      side.insert(side.end(), count, w);
    };
    for (size_t o = 0; o < classes.size(); ++o) {
      unsigned keep = o == c ? (classes[o].mult - 1) / i : classes[o].mult / i;
      push(classes[o].color, classes[o].weight, keep);
    }
    Rational qw = center.weight / i;
    push(center.color, qw, 1);
    out.push_back({i, center.color, center.weight, qw,
                   WeightedType(std::move(qwhite), std::move(qblack))});
  }
  return out;
}

namespace {

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // squared factor
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// U_d: isotopy classes of (quotient tree, marked center candidate) pairs
// over all constructions of order d; equals the number of trees of the
// original type whose automorphism order is divisible by d.
Integer u_count(const WeightedType& type, unsigned d, const EnumerateOptions& opts) {
  Integer u = 0;
  for (const auto& qc : quotient_constructions(type, d)) {
    for (const auto& cls : enumerate_classes(qc.quotient, opts)) {
      auto perms = automorphisms(cls.tree);
      int V = static_cast<int>(cls.tree.vertex_count());
      for (int v = 0; v < V; ++v) {
        const auto& vx = cls.tree.vertex(v);
        if (vx.color != qc.center_color || vx.weight != qc.quotient_center_weight)
          continue;
        // Count automorphism orbits through their minimal element.
        int rep = v;
        for (const auto& perm : perms) rep = std::min(rep, perm[v]);
        if (rep == v) ++u;
      }
    }
  }
  return u;
}

}  // namespace

std::map<unsigned, Integer> symmetric_counts_via_quotients(
    const WeightedType& type, const EnumerateOptions& opts) {
  unsigned dmax = static_cast<unsigned>(std::max(type.s(), type.t()));
  std::map<unsigned, Integer> u;
  for (unsigned d = 2; d <= dmax; ++d) {
    Integer ud = u_count(type, d, opts);
    if (ud != 0) u[d] = ud;
  }
  std::map<unsigned, Integer> s;
  for (unsigned e = 2; e <= dmax; ++e) {
    Integer se = 0;
    for (unsigned d = e; d <= dmax; d += e) {
      auto it = u.find(d);
      if (it != u.end()) se += moebius(d / e) * it->second;
    }
    if (se < 0)
      throw Error(Errc::non_integer_result,
                  "negative symmetry count; quotient bookkeeping is inconsistent");
    if (se != 0) s[e] = se;
  }
  return s;
}

Integer cardinality(const WeightedType& type, const EnumerateOptions& opts) {
  return cardinality_breakdown(type, opts).total;
}

CountBreakdown cardinality_breakdown(const WeightedType& type,
                                     const EnumerateOptions& opts) {
  CountBreakdown out;
  out.cls = classify(type);
  auto deriv = derivative_type(type);
  out.p = deriv.p;
  SimpleCountBreakdown sb = cardinality_simple_breakdown(deriv.labeled);
  out.labeled_count = sb.total;
  out.simple = std::move(sb);
  out.s_exact = symmetric_counts_via_quotients(type, opts);

  Rational total = Rational(out.labeled_count) / out.p;
  for (const auto& [i, si] : out.s_exact)
    total += (Rational(i - 1) / i) * si;
  if (!is_integer(total) || total < 0)
    throw Error(Errc::non_integer_result,
                "count came out as " + to_string(total) +
                    ", expected a non-negative integer");
  out.total = numerator(total);
  return out;
}

}  // namespace wtrees
