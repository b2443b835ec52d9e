#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wtrees/rational.hpp"

namespace wtrees {

/*
 * Sparse polynomials over Q in variables x1, x2, ... — just enough for the
 * power-sum machinery: monomials are exponent vectors, ordered by total
 * degree and then by the sorted multiset of variable indices (so e.g.
 * x1*x5 < x2*x4 < x3^2 within degree two), which matches the conventional
 * way these polynomials are written out.
 */
struct Monomial {
  std::vector<std::uint16_t> exps;  // exps[j] = exponent of x_{j+1}; trimmed

  unsigned total_degree() const;
  // Weighted degree with x_j of weight j: the natural grading when x_j
  // stands for a degree-j coefficient function.
  unsigned weighted_degree() const;
  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator<(const Monomial& o) const;
};

class Poly {
 public:
  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(unsigned j);  // x_j, 1-based

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Product dropping every monomial of weighted degree > cap (for truncated
  // series work).
  Poly mul_truncated(const Poly& o, unsigned cap) const;
  // Keep only monomials of weighted degree exactly d.
  Poly weighted_part(unsigned d) const;

  // Substitute args[j] for x_{j+1} (args must cover every used variable).
  Poly compose(const std::vector<Poly>& args) const;
  Rational eval(const std::vector<Rational>& args) const;

  // "x1^3 - 3*x1*x2 + 3*x3" (leading terms first); "0" for the zero
  // polynomial.  The overload renames variables (namer gets the 1-based index).
  std::string text() const;
  std::string text(const std::function<std::string(unsigned)>& namer) const;

  void add_term(Monomial m, const Rational& c);

 private:
  std::map<Monomial, Rational> terms_;
};

/*
 * q_i: the universal polynomial with q_i(e_1,...,e_i) = weighted power sum
 * p_i for any finite weighted point set, where e_j are its signed elementary
 * coefficient functions.  Generated from the series identity
 * -ln(1 - u) = sum u^m / m with u = x1 X - x2 X^2 + x3 X^3 - ...: q_i is i
 * times the weighted-degree-i part.  First few:
 *     q_1 = x1
 *     q_2 = x1^2 - 2*x2
 *     q_3 = x1^3 - 3*x1*x2 + 3*x3
 */
Poly newton_q(unsigned i);

}  // namespace wtrees
