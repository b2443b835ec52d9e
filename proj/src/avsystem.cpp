#include "wtrees/avsystem.hpp"

#include <algorithm>

#include "wtrees/errors.hpp"

namespace wtrees {

std::uint64_t AVSystem::bezout_bound() const {
  std::uint64_t r = 1;
  for (unsigned k = 2; k <= equation_count; ++k) r *= k;
  return r;
}

std::string AVSystem::unknown_name(unsigned idx) const {
  unsigned s1 = static_cast<unsigned>(white_coeffs.size());
  if (idx < s1) return "x" + std::to_string(idx + 1);
  return "y" + std::to_string(idx - s1 + 1);
}

std::string AVSystem::text() const {
  std::string out;
  for (const auto& eq : reduced)
    out += eq.text([&](unsigned j) { return unknown_name(j - 1); }) + " = 0\n";
  return out;
}

namespace {

// Signed-coefficient (elementary symmetric) functions e_1..e_m of a root
// multiset made of the unknown positions with integer multiplicities plus
// one pinned root with its own multiplicity.  Pinned root 0 contributes
// nothing; pinned root 1 contributes binomially.
std::vector<Poly> elementary_functions(const std::vector<Integer>& mults,
                                       unsigned var_offset, unsigned m,
                                       const Integer& pinned_mult, int pinned_root) {
  // e_r = sum over choices c_a <= mult_a, c_pin <= pinned_mult with
  // sum c = r of prod C(mult_a, c_a) x_a^{c_a} * C(pinned_mult, c_pin) * root^{c_pin}.
  auto binom = [](const Integer& n, unsigned k) {
    Integer r = 1;
    for (unsigned j = 0; j < k; ++j) {
      r *= n - j;
      r /= j + 1;
    }
    return r;
  };
  std::vector<Poly> e(m + 1);
  e[0] = Poly::constant(1);
  // Multiply the generating polynomial (1 + x_a z)^{mult_a} factor by factor,
  // truncating beyond degree m in z; track z-degree as vector index.
  auto clamp = [](const Integer& n, unsigned cap) {
    return n > cap ? cap : n.convert_to<unsigned>();
  };
  for (size_t a = 0; a < mults.size(); ++a) {
    std::vector<Poly> next(m + 1);
    for (unsigned r = 0; r <= m; ++r) {
      if (e[r].is_zero() && r > 0) continue;
      unsigned top = std::min(m - r, clamp(mults[a], m));
      for (unsigned c = 0; c <= top; ++c) {
        Poly add = e[r].scaled(binom(mults[a], c));
        for (unsigned k = 0; k < c; ++k)
          add = add * Poly::variable(var_offset + static_cast<unsigned>(a) + 1);
        next[r + c] += add;
      }
    }
    e = std::move(next);
  }
  if (pinned_root != 0 && pinned_mult > 0) {
    std::vector<Poly> next(m + 1);
    for (unsigned r = 0; r <= m; ++r) {
      unsigned top = std::min(m - r, clamp(pinned_mult, m));
      for (unsigned c = 0; c <= top; ++c)
        next[r + c] += e[r].scaled(binom(pinned_mult, c));  // root 1: 1^c
    }
    e = std::move(next);
  }
  return e;
}

}  // namespace

AVSystem build_system(const WeightedType& type) {
  AVSystem sys;
  unsigned s = static_cast<unsigned>(type.s()), t = static_cast<unsigned>(type.t());
  sys.equation_count = s + t - 2;

  // Pin the largest white at 0 and the largest black at 1 (the lists are
  // sorted non-decreasingly; ties resolve to the last position).  Remaining
  // unknowns are ordered heaviest first.
  sys.pinned_white_coeff = type.white().back();
  sys.pinned_black_coeff = type.black().back();
  for (size_t a = type.white().size() - 1; a-- > 0;)
    sys.white_coeffs.push_back(type.white()[a]);
  for (size_t b = type.black().size() - 1; b-- > 0;)
    sys.black_coeffs.push_back(type.black()[b]);

  if (sys.equation_count == 0) return sys;  // single-edge type: empty system

  unsigned s1 = s - 1, t1 = t - 1;
  for (unsigned r = 1; r <= sys.equation_count; ++r) {
    Poly eq;
    for (unsigned a = 0; a < s1; ++a) {
      Poly p = Poly::constant(sys.white_coeffs[a]);
      for (unsigned k = 0; k < r; ++k) p = p * Poly::variable(a + 1);
      eq += p;
    }
    for (unsigned b = 0; b < t1; ++b) {
      Poly p = Poly::constant(-sys.black_coeffs[b]);
      for (unsigned k = 0; k < r; ++k) p = p * Poly::variable(s1 + b + 1);
      eq += p;
    }
    eq += Poly::constant(-sys.pinned_black_coeff);
    sys.reduced.push_back(std::move(eq));
  }

  // Raw coefficient matching (integral weights only) plus the symbolic
  // power-sum reduction check, skipped above a size cutoff.
  bool integral = true;
  for (const auto& w : type.white())
    if (!is_integer(w)) integral = false;
  for (const auto& w : type.black())
    if (!is_integer(w)) integral = false;
  if (integral && sys.equation_count <= 8) {
    unsigned m = sys.equation_count;
    std::vector<Integer> wm, bm;
    for (unsigned a = 0; a < s1; ++a) wm.push_back(numerator(sys.white_coeffs[a]));
    for (unsigned b = 0; b < t1; ++b) bm.push_back(numerator(sys.black_coeffs[b]));
    auto ew = elementary_functions(wm, 0, m, numerator(sys.pinned_white_coeff), 0);
    auto eb = elementary_functions(bm, s1, m, numerator(sys.pinned_black_coeff), 1);
    for (unsigned r = 1; r <= m; ++r) sys.raw.push_back(ew[r] - eb[r]);
    sys.raw_available = true;

    sys.equivalence_verified = true;
    std::vector<Poly> ew_args(ew.begin() + 1, ew.end());
    std::vector<Poly> eb_args(eb.begin() + 1, eb.end());
    for (unsigned r = 1; r <= m && sys.equivalence_verified; ++r) {
      Poly q = newton_q(r);
      Poly lhs = q.compose(ew_args) - q.compose(eb_args);
      if (!(lhs == sys.reduced[r - 1])) sys.equivalence_verified = false;
    }
  }
  return sys;
}

}  // namespace wtrees
