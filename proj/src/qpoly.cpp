#include "wtrees/qpoly.hpp"

#include <algorithm>

#include "wtrees/errors.hpp"

namespace wtrees {

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

unsigned Monomial::weighted_degree() const {
  unsigned d = 0;
  for (size_t j = 0; j < exps.size(); ++j) d += static_cast<unsigned>(j + 1) * exps[j];
  return d;
}

bool Monomial::operator<(const Monomial& o) const {
  unsigned da = total_degree(), db = o.total_degree();
  if (da != db) return da < db;
  // Same total degree: compare the sorted variable-index multisets, so
  // x1*x5 < x2*x4 < x3^2.
  auto indices = [](const Monomial& m) {
    std::vector<unsigned> ix;
    for (size_t j = 0; j < m.exps.size(); ++j)
      ix.insert(ix.end(), m.exps[j], static_cast<unsigned>(j + 1));
    return ix;
  };
  return indices(*this) < indices(o);
}

static void trim(Monomial& m) {
  while (!m.exps.empty() && m.exps.back() == 0) m.exps.pop_back();
}

void Poly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  trim(m);
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(unsigned j) {
  if (j == 0) throw Error(Errc::parse, "variables are 1-based");
  Poly p;
  Monomial m;
  m.exps.assign(j, 0);
  m.exps[j - 1] = 1;
  p.add_term(std::move(m), 1);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

static Monomial mul_mono(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.exps.assign(std::max(a.exps.size(), b.exps.size()), 0);
  for (size_t j = 0; j < a.exps.size(); ++j) m.exps[j] += a.exps[j];
  for (size_t j = 0; j < b.exps.size(); ++j) m.exps[j] += b.exps[j];
  return m;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mul_mono(ma, mb), ca * cb);
  return r;
}

Poly Poly::mul_truncated(const Poly& o, unsigned cap) const {
  Poly r;
  for (const auto& [ma, ca] : terms_) {
    unsigned da = ma.weighted_degree();
    if (da > cap) continue;
    for (const auto& [mb, cb] : o.terms_) {
      if (da + mb.weighted_degree() > cap) continue;
      r.add_term(mul_mono(ma, mb), ca * cb);
    }
  }
  return r;
}

Poly Poly::weighted_part(unsigned d) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree() == d) r.add_term(m, c);
  return r;
}

Poly Poly::compose(const std::vector<Poly>& args) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(c);
    for (size_t j = 0; j < m.exps.size(); ++j) {
      if (m.exps[j] == 0) continue;
      if (j >= args.size())
        throw Error(Errc::parse, "compose: missing argument polynomial");
      for (unsigned k = 0; k < m.exps[j]; ++k) term = term * args[j];
    }
    out += term;
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& args) const {
  Rational out = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (size_t j = 0; j < m.exps.size(); ++j) {
      if (j >= args.size() && m.exps[j] > 0)
        throw Error(Errc::parse, "eval: missing argument");
      for (unsigned k = 0; k < m.exps[j]; ++k) term *= args[j];
    }
    out += term;
  }
  return out;
}

std::string Poly::text() const {
  return text([](unsigned j) { return "x" + std::to_string(j); });
}

std::string Poly::text(const std::function<std::string(unsigned)>& namer) const {
  if (terms_.empty()) return "0";
  // Leading terms first: descending total degree, index order within a
  // degree (so 2*x1^2 + x2^2 - 2*y1^2 - 5 reads the usual way).
  std::vector<const std::pair<const Monomial, Rational>*> disp;
  for (const auto& term : terms_) disp.push_back(&term);
  std::stable_sort(disp.begin(), disp.end(), [](const auto* a, const auto* b) {
    return a->first.total_degree() > b->first.total_degree();
  });
  std::string out;
  for (const auto* term : disp) {
    const auto& [m, c] = *term;
    Rational a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (size_t j = 0; j < m.exps.size(); ++j) {
      if (m.exps[j] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += namer(static_cast<unsigned>(j + 1));
      if (m.exps[j] > 1) mono += "^" + std::to_string(m.exps[j]);
    }
    std::string coef = to_string(a);
    if (coef.find('/') != std::string::npos) coef = "(" + coef + ")";
    if (mono.empty())
      out += coef;
    else if (a == 1)
      out += mono;
    else
      out += coef + "*" + mono;
  }
  return out;
}

Poly newton_q(unsigned i) {
  if (i == 0) throw Error(Errc::parse, "q_i needs i >= 1");
  // u = x1 - x2 + x3 - ... (x_j carrying weighted degree j); the weighted
  // power sum is i times the degree-i part of -ln(1-u) = sum_m u^m / m.
  Poly u;
  for (unsigned j = 1; j <= i; ++j)
    u += Poly::variable(j).scaled(j % 2 == 1 ? 1 : -1);
  Poly acc, upow = Poly::constant(1);
  for (unsigned m = 1; m <= i; ++m) {
    upow = upow.mul_truncated(u, i);
    acc += upow.scaled(Rational(1, m));
  }
  return acc.weighted_part(i).scaled(i);
}

}  // namespace wtrees
