#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "wtrees/canonical.hpp"
#include "wtrees/counting.hpp"
#include "wtrees/enumerate.hpp"
#include "wtrees/errors.hpp"

using namespace wtrees;

namespace {

WeightedType ty(const char* lit) { return parse_type_literal(lit); }

Integer side_sum(const std::vector<LabeledVertex>& side, std::uint32_t mask,
                 Rational& out) {
  out = 0;
  int picked = 0;
  for (size_t i = 0; i < side.size(); ++i)
    if (mask >> i & 1) out += side[i].weight, ++picked;
  return picked;
}

}  // namespace

TEST_CASE("classification") {
  CHECK(classify(ty("5,12|1,7,9")).simple);
  CHECK_FALSE(classify(ty("5,12|1,7,9")).decomposable);
  CHECK(classify(ty("1,2,4|1,2,4")).simple);
  CHECK(classify(ty("1,2,4|1,2,4")).decomposable);
  CHECK(classify(ty("1,2,4|2,5")).decomposable);  // {2} vs {2}
  CHECK_FALSE(classify(ty("2|1,1")).simple);
  CHECK_FALSE(classify(ty("2|1,1")).decomposable);  // no proper white subset
  CHECK_FALSE(classify(ty("6,1,1,1|3,3,3")).simple);
  CHECK(classify(ty("6,1,1,1|3,3,3")).decomposable);
  CHECK(classify(ty("1|1/2,1/2")).simple == false);
  CHECK(classify(ty("1,2|3")).simple);
  CHECK_FALSE(classify(ty("1,2|3")).decomposable);
}

TEST_CASE("derivative type") {
  auto d = derivative_type(ty("6,1,1,1|3,3,3"));
  CHECK(d.p == 36);  // 3! * 3!
  CHECK(d.labeled.display() == "<1,1',1'',6|3,3',3''>");
  CHECK(derivative_type(ty("2|1,1")).p == 2);
  CHECK(derivative_type(ty("1,2,4|2,5")).p == 1);
  CHECK(derivative_type(ty("2,2,2|3,3")).p == 12);  // 3! * 2!
}

TEST_CASE("partition enumeration is a canonical cover") {
  LabeledType lt = derivative_type(ty("6,1,1,1|3,3,3")).labeled;
  auto parts = enumerate_partitions(lt);
  CHECK(parts.size() == 4);  // the trivial one plus three 2-part splits

  std::uint32_t all_w = (1u << lt.s()) - 1, all_b = (1u << lt.t()) - 1;
  std::set<std::string> seen;
  for (const auto& tp : parts) {
    std::uint32_t uw = 0, ub = 0;
    std::string key;
    std::uint32_t prev_min = 0;
    for (const auto& part : tp.parts) {
      CHECK(part.whites != 0);
      CHECK(part.blacks != 0);
      CHECK((uw & part.whites) == 0);  // disjoint
      CHECK((ub & part.blacks) == 0);
      uw |= part.whites;
      ub |= part.blacks;
      Rational ws, bs;
      side_sum(lt.white(), part.whites, ws);
      side_sum(lt.black(), part.blacks, bs);
      CHECK(ws == bs);  // matched sums
      std::uint32_t lowest = part.whites & -part.whites;
      CHECK(lowest >= prev_min);  // sorted by smallest white slot
      prev_min = lowest;
      key += std::to_string(part.whites) + "/" + std::to_string(part.blacks) + ";";
    }
    CHECK(uw == all_w);  // together they cover everything
    CHECK(ub == all_b);
    CHECK(seen.insert(key).second);  // no duplicates
  }

  // Non-decomposable types only admit the trivial partition.
  auto lone = enumerate_partitions(derivative_type(ty("5,12|1,7,9")).labeled);
  CHECK(lone.size() == 1);
  CHECK(lone[0].parts.size() == 1);
}

TEST_CASE("simple counts") {
  // Non-decomposable simple types hit the factorial exactly.
  CHECK(cardinality_simple(ty("5,12|1,7,9")) == factorial(3));
  CHECK(cardinality_simple(ty("1,2|3")) == 1);
  // Decomposable ones fall strictly short.
  CHECK(cardinality_simple(ty("1,2,4|1,2,4")) == 11);
  CHECK(cardinality_simple(ty("1,2,4|2,5")) == 4);

  bool caught = false;
  try {
    cardinality_simple(ty("2|1,1"));
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code() == Errc::not_simple);
  }
  CHECK(caught);
}

TEST_CASE("breakdown of a symmetric type") {
  auto bd = cardinality_breakdown(ty("6,1,1,1|3,3,3"));
  CHECK(bd.total == 3);
  CHECK(bd.p == 36);
  CHECK(bd.labeled_count == 84);  // 120 - 36
  REQUIRE(bd.simple.has_value());
  CHECK(bd.simple->partitions_by_n.at(1) == 1);
  CHECK(bd.simple->partitions_by_n.at(2) == 3);
  CHECK(bd.simple->summand_by_n.at(1) == 120);
  CHECK(bd.simple->summand_by_n.at(2) == -36);
  REQUIRE(bd.s_exact.size() == 1);
  CHECK(bd.s_exact.at(3) == 1);

  auto bd2 = cardinality_breakdown(ty("5,2,1,1|3,3,3"));
  CHECK(bd2.total == 4);
  CHECK(bd2.labeled_count == 48);
}

TEST_CASE("quotient constructions") {
  auto qs = quotient_constructions(ty("6,1,1,1|3,3,3"), 3);
  REQUIRE(qs.size() == 1);
  CHECK(qs[0].order == 3);
  CHECK(qs[0].center_color == Color::white);
  CHECK(qs[0].center_weight == 6);
  CHECK(qs[0].quotient_center_weight == 2);
  CHECK(qs[0].quotient == ty("1,2|3"));

  auto q9 = quotient_constructions(ty("9|1,1,1,1,1,1,1,1,1"), 3);
  REQUIRE(q9.size() == 1);
  CHECK(q9[0].quotient == ty("3|1,1,1"));

  auto q2 = quotient_constructions(ty("2|1,1"), 2);
  REQUIRE(q2.size() == 1);
  CHECK(q2[0].quotient == ty("1|1"));

  // No valid center: multiplicities 2,2 never satisfy mult = 1 (mod 2).
  CHECK(quotient_constructions(ty("1,2|1,2"), 2).empty());
}

TEST_CASE("symmetry counts via quotients") {
  auto s = symmetric_counts_via_quotients(ty("6,1,1,1|3,3,3"));
  REQUIRE(s.size() == 1);
  CHECK(s.at(3) == 1);

  // Orders 3 and 9 both divide the star's rotation; Moebius inversion must
  // cancel the order-3 slot and keep exactly the order-9 one.
  auto s9 = symmetric_counts_via_quotients(ty("9|1,1,1,1,1,1,1,1,1"));
  REQUIRE(s9.size() == 1);
  CHECK(s9.at(9) == 1);

  CHECK(symmetric_counts_via_quotients(ty("2|1,1")).at(2) == 1);
  CHECK(symmetric_counts_via_quotients(ty("1,2,4|2,5")).empty());
}

TEST_CASE("published counts") {
  CHECK(cardinality(ty("5,12|1,7,9")) == 6);
  CHECK(cardinality(ty("1,5,7|2,4,7")) == 18);
  CHECK(cardinality(ty("1,3,11|4,5,6")) == 20);
  CHECK(cardinality(ty("1,2,4|1,2,4")) == 11);
  CHECK(cardinality(ty("1,2,4,5|1,2,9")) == 72);
  CHECK(cardinality(ty("1,2,3|1,2,3")) == 7);
  CHECK(cardinality(ty("1,2,6,10|4,5,10")) == 96);
  CHECK(cardinality(ty("7,5,1|7,4,2")) == 18);
  CHECK(cardinality(ty("4,2,1|4,2,1")) == 11);
  CHECK(cardinality(ty("3,2,1|3,2,1")) == 7);
  CHECK(cardinality(ty("6,1,1,1|3,3,3")) == 3);
  CHECK(cardinality(ty("5,2,1,1|3,3,3")) == 4);
  CHECK(cardinality(ty("1,2,4|2,5")) == 4);
}

TEST_CASE("zero counts are genuine") {
  CHECK(cardinality(ty("1,1,1,1|2,2")) == 0);
  CHECK(cardinality(ty("2,3|1,1,1,1,1")) == 0);
  CHECK(enumerate_classes(ty("2,3|1,1,1,1,1")).empty());
}

TEST_CASE("rational weights count fine") {
  CHECK(cardinality(ty("1|1/2,1/2")) == 1);
  CHECK(cardinality(ty("1/2,1/2|1/3,1/3,1/3")) == cardinality(ty("3,3|2,2,2")));
}

TEST_CASE("formula vs enumerator vs Burnside on all small types") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& type : enumerate_types(n)) {
      CAPTURE(type.literal());
      auto bd = cardinality_breakdown(type);
      auto classes = enumerate_classes(type);
      CHECK(bd.total == classes.size());

      // The labeled count sees each class p/aut times.
      Rational labeled = 0;
      for (const auto& cls : classes)
        labeled += Rational(bd.p) / cls.automorphism_order;
      CHECK(Rational(bd.labeled_count) == labeled);

      // Exact symmetry counts match the census.
      auto census = symmetric_census(type);
      std::map<unsigned, Integer> from_census;
      for (const auto& [order, cnt] : census.by_order)
        if (order >= 2) from_census[static_cast<unsigned>(order)] = cnt;
      CHECK(bd.s_exact == from_census);

      // Factorial laws for simple types.
      if (bd.cls.simple) {
        Integer bound = factorial(static_cast<unsigned>(type.v()) - 2);
        if (bd.cls.decomposable)
          CHECK(bd.total < bound);
        else
          CHECK(bd.total == bound);
      }
    }
  }
}
