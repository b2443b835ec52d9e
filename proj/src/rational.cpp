#include "wtrees/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "wtrees/errors.hpp"

namespace wtrees {

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

Rational parse_positive_rational(std::string_view text) {
  // Reports the offset *within text*; callers add their own base offset.
  auto digits = [&](size_t from, size_t to) -> Integer {
    if (from == to)
      throw Error(Errc::parse, "expected a number", static_cast<long>(from));
    Integer v = 0;
    for (size_t i = from; i < to; ++i) {
      char c = text[i];
      if (c < '0' || c > '9')
        throw Error(Errc::parse, std::string("unexpected character '") + c + "'",
                    static_cast<long>(i));
      v = v * 10 + (c - '0');
    }
    return v;
  };

  size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    Integer p = digits(0, text.size());
    if (p == 0) throw Error(Errc::non_positive_weight, "weight must be positive", 0);
    return Rational(p);
  }
  Integer p = digits(0, slash);
  Integer q = digits(slash + 1, text.size());
  if (q == 0)
    throw Error(Errc::parse, "zero denominator", static_cast<long>(slash + 1));
  if (p == 0) throw Error(Errc::non_positive_weight, "weight must be positive", 0);
  return Rational(p, q);
}

Integer denominator_lcm(const std::vector<Rational>& ws) {
  Integer l = 1;
  for (const auto& w : ws) l = boost::integer::lcm(l, Integer(denominator(w)));
  return l;
}

}  // namespace wtrees
