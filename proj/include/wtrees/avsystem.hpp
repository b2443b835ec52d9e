#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wtrees/qpoly.hpp"
#include "wtrees/type.hpp"

namespace wtrees {

/*
 * The polynomial system locating the vertices of a plane weighted tree of a
 * given type on the line/plane: pin the largest white weight's vertex at 0
 * and the largest black weight's vertex at 1; the unknowns are the remaining
 * vertex positions.  Matching the top coefficients of the two monic weight
 * products is equivalent (through the q_i reduction) to the power-sum system
 *
 *     sum_a k_a x_a^r - sum_b l_b y_b^r - l_pinned = 0,   r = 1..s+t-2,
 *
 * whose solution count is generically (s+t-2)! (Bezout bound).
 */
struct AVSystem {
  // Unknown metadata, whites first then blacks, heaviest first within each
  // color (matching how such systems are conventionally displayed).
  std::vector<Rational> white_coeffs;  // k_a for unknowns x_1..x_{s-1}
  std::vector<Rational> black_coeffs;  // l_b for unknowns y_1..y_{t-1}
  Rational pinned_black_coeff;         // weight of the black vertex pinned at 1
  Rational pinned_white_coeff;         // weight of the white vertex pinned at 0
  unsigned equation_count = 0;         // s+t-2

  // The reduced (power-sum) equations as polynomials, one per r, variables
  // x1..x_{s-1} then x_s..x_{s+t-2} standing for the y's.
  std::vector<Poly> reduced;

  // The raw coefficient-matching equations e_r(whites) - e_r(blacks) = 0,
  // available when all weights are integers (otherwise the weight products
  // are not polynomials and only the power-sum form applies).
  std::vector<Poly> raw;
  bool raw_available = false;
  // Whether q_r(e_1..e_r)(whites) - q_r(...)(blacks) was symbolically checked
  // to equal each reduced equation (skipped above a size cutoff).
  bool equivalence_verified = false;

  std::uint64_t bezout_bound() const;  // (s+t-2)!
  std::string unknown_name(unsigned idx) const;  // "x1".."y1"..
  std::string text() const;                      // equations, one per line
};

AVSystem build_system(const WeightedType& type);

struct SolveConfig {
  unsigned starts = 500;
  double tol = 1e-10;
  double dedup_radius = 1e-6;
  std::uint64_t seed = 0;
  unsigned max_iterations = 200;
};

struct Solution {
  std::vector<std::complex<double>> point;
  double residual = 0.0;
};

/*
 * Damped-Newton multistart: starts drawn uniformly from the complex disk of
 * radius 3 centered at 1/2 (independently per coordinate), Newton steps with
 * halving (up to 20 times) whenever the residual would increase, converged
 * points deduplicated within dedup_radius and sorted coordinate-wise.  The
 * returned count is a lower bound on the true number of isolated solutions.
 * Deterministic for a fixed seed.
 */
std::vector<Solution> solve_multistart(const AVSystem& system,
                                       const SolveConfig& cfg = {});

}  // namespace wtrees
