#include "wtrees/type.hpp"

#include <algorithm>
#include <numeric>

#include "wtrees/errors.hpp"

namespace wtrees {

WeightedType::WeightedType(std::vector<Rational> white, std::vector<Rational> black)
    : white_(std::move(white)), black_(std::move(black)) {
  if (white_.empty() || black_.empty())
    throw Error(Errc::empty_side, "a type needs at least one vertex of each color");
  for (const auto& w : white_)
    if (w <= 0) throw Error(Errc::non_positive_weight, "white weight must be positive");
  for (const auto& w : black_)
    if (w <= 0) throw Error(Errc::non_positive_weight, "black weight must be positive");
  std::sort(white_.begin(), white_.end());
  std::sort(black_.begin(), black_.end());
  Rational ws = std::accumulate(white_.begin(), white_.end(), Rational(0));
  Rational bs = std::accumulate(black_.begin(), black_.end(), Rational(0));
  if (ws != bs)
    throw Error(Errc::sum_mismatch, "white total " + wtrees::to_string(ws) +
                                        " != black total " + wtrees::to_string(bs));
  total_ = ws;
}

static std::string join_weights(const std::vector<Rational>& ws) {
  std::string s;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ',';
    s += to_string(ws[i]);
  }
  return s;
}

std::string WeightedType::literal() const {
  return join_weights(white_) + "|" + join_weights(black_);
}

std::string WeightedType::display() const { return "<" + literal() + ">"; }

LabeledType::LabeledType(std::vector<Rational> white, std::vector<Rational> black) {
  // Reuse the WeightedType validation/sorting, then attach position labels.
  WeightedType base(std::move(white), std::move(black));
  for (size_t i = 0; i < base.white().size(); ++i)
    white_.push_back({static_cast<int>(i), base.white()[i]});
  for (size_t i = 0; i < base.black().size(); ++i)
    black_.push_back({static_cast<int>(i), base.black()[i]});
}

static void render_labeled(std::string& out, const std::vector<LabeledVertex>& side) {
  for (size_t i = 0; i < side.size(); ++i) {
    if (i) out += ',';
    out += to_string(side[i].weight);
    // Primes distinguish repeats of the same weight: 1, 1', 1'', ...
    size_t rep = 0;
    for (size_t j = 0; j < i; ++j)
      if (side[j].weight == side[i].weight) ++rep;
    out.append(rep, '\'');
  }
}

std::string LabeledType::display() const {
  std::string s = "<";
  render_labeled(s, white_);
  s += '|';
  render_labeled(s, black_);
  s += '>';
  return s;
}

WeightedType parse_type_literal(std::string_view text) {
  size_t bar = text.find('|');
  if (bar == std::string_view::npos)
    throw Error(Errc::parse, "missing '|' separator", static_cast<long>(text.size()));

  auto parse_side = [&](size_t from, size_t to) {
    std::vector<Rational> ws;
    size_t pos = from;
    while (true) {
      size_t comma = text.find(',', pos);
      size_t end = (comma == std::string_view::npos || comma >= to) ? to : comma;
      try {
        ws.push_back(parse_positive_rational(text.substr(pos, end - pos)));
      } catch (const Error& e) {
        long col = e.column() >= 0 ? static_cast<long>(pos) + e.column()
                                   : static_cast<long>(pos);
        throw Error(e.code(), e.what(), col);
      }
      if (end == to) break;
      pos = end + 1;
    }
    return ws;
  };

  return WeightedType(parse_side(0, bar), parse_side(bar + 1, text.size()));
}

}  // namespace wtrees
