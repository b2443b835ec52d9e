#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>

#include "wtrees/errors.hpp"
#include "wtrees/rational.hpp"
#include "wtrees/tree.hpp"
#include "wtrees/type.hpp"

using namespace wtrees;

TEST_CASE("rational parsing") {
  CHECK(parse_positive_rational("3") == Rational(3));
  CHECK(parse_positive_rational("5/10") == Rational(1, 2));
  CHECK(parse_positive_rational("12/4") == Rational(3));
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(is_integer(Rational(6, 3)));
  CHECK_FALSE(is_integer(Rational(1, 3)));

  CHECK_THROWS_AS(parse_positive_rational(""), Error);
  CHECK_THROWS_AS(parse_positive_rational("0"), Error);
  CHECK_THROWS_AS(parse_positive_rational("-1"), Error);
  CHECK_THROWS_AS(parse_positive_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_positive_rational("2x"), Error);
  CHECK_THROWS_AS(parse_positive_rational("1/2/3"), Error);
  bool caught = false;
  try {
    parse_positive_rational("12a");
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code() == Errc::parse);
    CHECK(e.column() == 2);
  }
  CHECK(caught);
}

TEST_CASE("factorial and lcm") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(denominator_lcm({}) == 1);
  CHECK(denominator_lcm({Rational(1, 2), Rational(1, 3)}) == 6);
  CHECK(denominator_lcm({Rational(3), Rational(5, 6), Rational(1, 4)}) == 12);
}

TEST_CASE("weighted type validation and display") {
  WeightedType t({Rational(4), Rational(1), Rational(2)}, {Rational(5), Rational(2)});
  CHECK(t.s() == 3);
  CHECK(t.t() == 2);
  CHECK(t.v() == 5);
  CHECK(t.total() == 7);
  CHECK(t.literal() == "1,2,4|2,5");  // sides are sorted non-decreasingly
  CHECK(t.display() == "<1,2,4|2,5>");

  CHECK_THROWS_AS(WeightedType({}, {Rational(1)}), Error);
  CHECK_THROWS_AS(WeightedType({Rational(0)}, {Rational(0)}), Error);
  bool caught = false;
  try {
    WeightedType({Rational(3)}, {Rational(4)});
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code() == Errc::sum_mismatch);
  }
  CHECK(caught);
}

TEST_CASE("labeled type primes") {
  LabeledType lt({Rational(6), Rational(1), Rational(1), Rational(1)},
                 {Rational(3), Rational(3), Rational(3)});
  CHECK(lt.display() == "<1,1',1'',6|3,3',3''>");
  CHECK(lt.white()[0].label == 0);
  CHECK(lt.white()[3].weight == 6);
}

TEST_CASE("type literal parsing") {
  CHECK(parse_type_literal("1,2,4|2,5").literal() == "1,2,4|2,5");
  CHECK(parse_type_literal("1|1/2,1/2").literal() == "1|1/2,1/2");
  CHECK(parse_type_literal("4,1,2|5,2").literal() == "1,2,4|2,5");

  CHECK_THROWS_AS(parse_type_literal("1,2"), Error);
  CHECK_THROWS_AS(parse_type_literal("1,|1"), Error);
  CHECK_THROWS_AS(parse_type_literal("|1"), Error);
  bool caught = false;
  try {
    parse_type_literal("1,2|x");
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code() == Errc::parse);
    CHECK(e.column() == 4);  // byte offset of the bad character
  }
  CHECK(caught);
}

namespace {

// Independent derivation of one edge weight: cut the edge and take the
// color-alternating vertex-weight sum of the component containing either
// endpoint (internal edges cancel in pairs, leaving just the cut edge).
Rational cut_component_weight(const TreeTopology& topo, size_t cut) {
  int start = topo.edges[cut].u;
  std::vector<char> seen(topo.vertices.size(), 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  Rational sum = 0;
  Color base = topo.vertices[start].color;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    sum += topo.vertices[v].color == base ? topo.vertices[v].weight
                                          : -topo.vertices[v].weight;
    for (size_t e = 0; e < topo.edges.size(); ++e) {
      if (e == cut) continue;
      int u = topo.edges[e].u, w = topo.edges[e].v;
      if (u == v && !seen[w]) seen[w] = 1, q.push(w);
      if (w == v && !seen[u]) seen[u] = 1, q.push(u);
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("edge weight derivation") {
  // Star <2|1,1>: both edges carry 1.
  TreeTopology star{{{Color::white, 2}, {Color::black, 1}, {Color::black, 1}},
                    {{0, 1}, {0, 2}}};
  auto ws = derive_edge_weights(star);
  CHECK(ws == std::vector<Rational>{1, 1});

  // Path 1 - 3 - 2: the center weight splits as 1 + 2.
  TreeTopology path{{{Color::white, 1}, {Color::black, 3}, {Color::white, 2}},
                    {{0, 1}, {2, 1}}};
  ws = derive_edge_weights(path);
  CHECK(ws == std::vector<Rational>{1, 2});

  // Fractions work the same.
  TreeTopology half{{{Color::white, 1}, {Color::black, Rational(1, 2)},
                     {Color::black, Rational(1, 2)}},
                    {{0, 1}, {0, 2}}};
  ws = derive_edge_weights(half);
  CHECK(ws == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("edge weight derivation matches the cut-component oracle") {
  // A caterpillar with mixed weights.
  TreeTopology topo{{{Color::white, 3},
                     {Color::white, 1},
                     {Color::white, 2},
                     {Color::black, Rational(7, 2)},
                     {Color::black, Rational(5, 2)}},
                    {{0, 3}, {1, 3}, {2, 4}, {0, 4}}};
  auto ws = derive_edge_weights(topo);
  for (size_t e = 0; e < topo.edges.size(); ++e)
    CHECK(ws[e] == cut_component_weight(topo, e));
}

TEST_CASE("derivation failure modes") {
  // Zero middle edge: 1 - 1 - 1 - 1 path forces the middle to 0.
  TreeTopology zero{{{Color::white, 1}, {Color::black, 1}, {Color::white, 1},
                     {Color::black, 1}},
                    {{0, 1}, {2, 1}, {2, 3}}};
  bool caught = false;
  try {
    derive_edge_weights(zero);
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code() == Errc::non_positive_edge);
  }
  CHECK(caught);
  std::vector<Rational> out;
  CHECK_FALSE(try_derive_edge_weights(zero, out));

  // Not a tree: 4 vertices, cycle.
  TreeTopology cyc{{{Color::white, 2}, {Color::black, 2}, {Color::white, 2},
                    {Color::black, 2}},
                   {{0, 1}, {2, 1}, {2, 3}, {0, 3}}};
  CHECK_THROWS_AS(derive_edge_weights(cyc), Error);

  // Monochromatic edge.
  TreeTopology mono{{{Color::white, 1}, {Color::white, 1}}, {{0, 1}}};
  CHECK_THROWS_AS(derive_edge_weights(mono), Error);

  // Disconnected.
  TreeTopology disc{{{Color::white, 1}, {Color::black, 1}, {Color::white, 1},
                     {Color::black, 1}},
                    {{0, 1}, {2, 3}}};
  CHECK_THROWS_AS(derive_edge_weights(disc), Error);
}

TEST_CASE("plane tree construction") {
  std::vector<Vertex> vs{{Color::white, 2}, {Color::black, 1}, {Color::black, 1}};
  std::vector<EdgeEnds> es{{0, 1}, {0, 2}};
  std::vector<Rational> ws{1, 1};
  std::vector<std::vector<int>> rot{{0, 1}, {0}, {1}};

  PlaneTree t(vs, es, ws, rot);
  CHECK(t.vertex_count() == 3);
  CHECK(t.degree(0) == 2);
  CHECK(t.opposite(0, 0) == 1);
  CHECK(t.type().literal() == "2|1,1");

  // Wrong edge weight breaks the vertex-sum axiom.
  CHECK_THROWS_AS(PlaneTree(vs, es, {Rational(2), Rational(1)}, rot), Error);
  // Rotation must be a permutation of the incident edges.
  CHECK_THROWS_AS(PlaneTree(vs, es, ws, {{0, 0}, {0}, {1}}), Error);
  CHECK_THROWS_AS(PlaneTree(vs, es, ws, {{0}, {0}, {1}}), Error);
  CHECK_THROWS_AS(PlaneTree(vs, es, ws, {{1, 0}, {1}, {0}}), Error);

  PlaneTree t2 = PlaneTree::from_topology({vs, es}, rot);
  CHECK(t2.edge_weight(0) == 1);
}
