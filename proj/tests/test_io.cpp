#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "wtrees/canonical.hpp"
#include "wtrees/counting.hpp"
#include "wtrees/errors.hpp"
#include "wtrees/io.hpp"
#include "wtrees/verify.hpp"

using namespace wtrees;

namespace {

PlaneTree sample_tree() {
  return PlaneTree({{Color::white, 3},
                    {Color::white, 1},
                    {Color::white, 2},
                    {Color::black, Rational(7, 2)},
                    {Color::black, Rational(5, 2)}},
                   {{0, 3}, {1, 3}, {2, 4}, {0, 4}},
                   {Rational(5, 2), 1, 2, Rational(1, 2)},
                   {{0, 3}, {1}, {2}, {0, 1}, {2, 3}});
}

}  // namespace

TEST_CASE("tree json round trip") {
  PlaneTree t = sample_tree();
  Json doc = tree_to_json(t);
  CHECK(doc["vertices"].size() == 5);
  CHECK(doc["edges"].size() == 4);
  CHECK(doc["vertices"][3]["weight"] == "7/2");
  CHECK(doc["edges"][3]["weight"] == "1/2");
  CHECK(doc["rotation"]["0"] == Json::array({0, 3}));

  PlaneTree back = tree_from_json(doc);
  CHECK(are_isotopic(t, back));
  CHECK(tree_to_json(back) == doc);
}

TEST_CASE("tree json with loose ids and derived weights") {
  // Ids need not be dense or ordered, and edge weights may be left out.
  Json doc = Json::parse(R"({
    "vertices": [
      {"id": 42, "color": "white", "weight": "2"},
      {"id": 7,  "color": "black", "weight": "1"},
      {"id": -3, "color": "black", "weight": "1"}
    ],
    "edges": [
      {"id": 100, "u": 42, "v": 7},
      {"id": 200, "u": 42, "v": -3}
    ],
    "rotation": {"42": [100, 200], "7": [100], "-3": [200]}
  })");
  PlaneTree t = tree_from_json(doc);
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_weight(0) == 1);
  CHECK(t.type().literal() == "2|1,1");
}

TEST_CASE("tree json rejects malformed documents") {
  auto bad = [](const char* text) {
    bool caught = false;
    try {
      tree_from_json(Json::parse(text));
    } catch (const Error& e) {
      caught = true;
      CHECK(e.code() == Errc::parse);
    }
    return caught;
  };
  // Duplicate vertex id.
  CHECK(bad(R"({"vertices":[{"id":1,"color":"white","weight":"1"},
                             {"id":1,"color":"black","weight":"1"}],
                "edges":[{"id":0,"u":1,"v":1}],"rotation":{}})"));
  // Unknown color.
  CHECK(bad(R"({"vertices":[{"id":0,"color":"red","weight":"1"}],
                "edges":[],"rotation":{}})"));
  // Edge endpoint that is not a vertex.
  CHECK(bad(R"({"vertices":[{"id":0,"color":"white","weight":"1"},
                             {"id":1,"color":"black","weight":"1"}],
                "edges":[{"id":0,"u":0,"v":9}],"rotation":{}})"));
  // Rotation key that is not a vertex, then one that is not numeric.
  CHECK(bad(R"({"vertices":[{"id":0,"color":"white","weight":"1"},
                             {"id":1,"color":"black","weight":"1"}],
                "edges":[{"id":0,"u":0,"v":1}],"rotation":{"9":[0]}})"));
  CHECK(bad(R"({"vertices":[{"id":0,"color":"white","weight":"1"},
                             {"id":1,"color":"black","weight":"1"}],
                "edges":[{"id":0,"u":0,"v":1}],"rotation":{"zero":[0]}})"));
  // Rotation entry that is not an edge.
  CHECK(bad(R"({"vertices":[{"id":0,"color":"white","weight":"1"},
                             {"id":1,"color":"black","weight":"1"}],
                "edges":[{"id":0,"u":0,"v":1}],"rotation":{"0":[5],"1":[0]}})"));
  // Missing sections map onto the same error code.
  CHECK(bad(R"({"vertices":[]})"));
  CHECK(bad(R"({})"));
}

TEST_CASE("dot rendering") {
  PlaneTree star({{Color::white, 2}, {Color::black, 1}, {Color::black, 1}},
                 {{0, 1}, {0, 2}}, {1, 1}, {{0, 1}, {0}, {1}});
  CHECK(tree_to_dot(star) ==
        "graph wtree {\n"
        "  node [shape=circle];\n"
        "  v0 [label=\"2\"];\n"
        "  v1 [label=\"1\", style=filled, fillcolor=black, fontcolor=white];\n"
        "  v2 [label=\"1\", style=filled, fillcolor=black, fontcolor=white];\n"
        "  v0 -- v1 [label=\"1\"];\n"
        "  v0 -- v2 [label=\"1\"];\n"
        "}\n");
  CHECK(tree_to_dot(star, "g7").substr(0, 9) == "graph g7 ");
}

TEST_CASE("census json") {
  auto census = symmetric_census(parse_type_literal("6,1,1,1|3,3,3"));
  CHECK(census_to_json(census).dump() == R"({"total":3,"byOrder":{"1":2,"3":1}})");
}

TEST_CASE("partition rendering") {
  LabeledType lt = derivative_type(parse_type_literal("6,1,1,1|3,3,3")).labeled;
  auto parts = enumerate_partitions(lt);
  REQUIRE(parts.size() == 4);
  std::set<std::string> texts;
  for (const auto& p : parts) texts.insert(partition_text(lt, p));
  // Heaviest part first within a partition; primes track labels.
  CHECK(texts == std::set<std::string>{
                     "<6,1,1',1''|3,3',3''>",
                     "<6|3',3''> ∪ <1,1',1''|3>",
                     "<6|3,3''> ∪ <1,1',1''|3'>",
                     "<6|3,3'> ∪ <1,1',1''|3''>",
                 });
}

TEST_CASE("partition json") {
  LabeledType lt = derivative_type(parse_type_literal("5,12|1,7,9")).labeled;
  auto parts = enumerate_partitions(lt);
  REQUIRE(parts.size() == 1);
  Json doc = partition_to_json(lt, parts[0]);
  CHECK(doc["parts"].size() == 1);
  CHECK(doc["parts"][0]["white"] == Json::array({"12", "5"}));
  CHECK(doc["parts"][0]["black"] == Json::array({"9", "7", "1"}));
  CHECK(doc["parts"][0]["sum"] == "17");
  CHECK(doc["text"] == "<12,5|9,7,1>");
}

TEST_CASE("system and solution json") {
  AVSystem sys = build_system(parse_type_literal("1,2,4|2,5"));
  Json doc = system_to_json(sys);
  CHECK(doc["unknowns"].size() == 3);
  CHECK(doc["unknowns"][0] ==
        Json{{"name", "x1"}, {"color", "white"}, {"coefficient", "2"}});
  CHECK(doc["unknowns"][2] ==
        Json{{"name", "y1"}, {"color", "black"}, {"coefficient", "2"}});
  CHECK(doc["pinned"]["white"]["coefficient"] == "4");
  CHECK(doc["pinned"]["black"]["at"] == 1);
  CHECK(doc["equationCount"] == 3);
  CHECK(doc["bezoutBound"] == 6);
  CHECK(doc["reduced"] == Json::array({"2*x1 + x2 - 2*y1 - 5 = 0",
                                       "2*x1^2 + x2^2 - 2*y1^2 - 5 = 0",
                                       "2*x1^3 + x2^3 - 2*y1^3 - 5 = 0"}));
  CHECK(doc["raw"][1] == "x1^2 + 2*x1*x2 - y1^2 - 10*y1 - 10 = 0");
  CHECK(doc["equivalenceVerified"] == true);

  auto sols = solve_multistart(sys);
  Json sj = solutions_to_json(sols);
  CHECK(sj["count"] == 4);
  CHECK(sj["solutions"].size() == 4);
  CHECK(sj["solutions"][0]["point"].size() == 3);
  CHECK(sj["solutions"][0]["point"][0].size() == 2);
  CHECK(sj["solutions"][0].contains("residual"));
}

TEST_CASE("sweep report") {
  SweepReport rep = run_sweep(3);
  CHECK(rep.max_weight == 3);
  CHECK(rep.types_checked == 14);  // p(1)^2 + p(2)^2 + p(3)^2
  CHECK(rep.mismatches == 0);
  CHECK(rep.skipped == 0);
  REQUIRE(rep.rows.size() == 14);
  for (const auto& row : rep.rows) {
    CHECK(row.status == "ok");
    CHECK(Integer(row.enumerated) == row.formula);
  }
  CHECK(rep.rows[0].type == "1|1");

  Json doc = sweep_report_to_json(rep);
  CHECK(doc["schemaVersion"] == 1);
  CHECK(doc["maxWeight"] == 3);
  CHECK(doc["typesChecked"] == 14);
  CHECK(doc["rows"].size() == 14);
  CHECK(doc["rows"][0]["type"] == "1|1");
  CHECK(doc["rows"][0]["formula"] == "1");

  // Determinism: a rerun with a different worker count dumps identically.
  EnumerateOptions two;
  two.jobs = 2;
  CHECK(sweep_report_to_json(run_sweep(3, two)).dump(2) == doc.dump(2));
}
