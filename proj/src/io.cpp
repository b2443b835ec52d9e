#include "wtrees/io.hpp"

#include <map>
#include <stdexcept>

#include "wtrees/errors.hpp"

namespace wtrees {

namespace {

const char* color_name(Color c) { return c == Color::white ? "white" : "black"; }

}  // namespace

Json tree_to_json(const PlaneTree& tree) {
  Json doc;
  Json verts = Json::array();
  for (int v = 0; v < static_cast<int>(tree.vertex_count()); ++v) {
    verts.push_back({{"id", v},
                     {"color", color_name(tree.vertex(v).color)},
                     {"weight", to_string(tree.vertex(v).weight)}});
  }
  doc["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (int e = 0; e < static_cast<int>(tree.edge_count()); ++e) {
    edges.push_back({{"id", e},
                     {"u", tree.edge(e).u},
                     {"v", tree.edge(e).v},
                     {"weight", to_string(tree.edge_weight(e))}});
  }
  doc["edges"] = std::move(edges);
  Json rot = Json::object();
  for (int v = 0; v < static_cast<int>(tree.vertex_count()); ++v)
    rot[std::to_string(v)] = tree.rotation(v);
  doc["rotation"] = std::move(rot);
  return doc;
}

PlaneTree tree_from_json(const Json& doc) {
  try {
    std::map<long long, int> vid;  // external id -> dense index
    std::vector<Vertex> vertices;
    for (const auto& jv : doc.at("vertices")) {
      long long id = jv.at("id").get<long long>();
      if (!vid.emplace(id, static_cast<int>(vertices.size())).second)
        throw Error(Errc::parse, "duplicate vertex id " + std::to_string(id));
      std::string color = jv.at("color").get<std::string>();
      if (color != "white" && color != "black")
        throw Error(Errc::parse, "unknown color \"" + color + "\"");
      vertices.push_back({color == "white" ? Color::white : Color::black,
                          parse_positive_rational(jv.at("weight").get<std::string>())});
    }

    std::map<long long, int> eid;
    std::vector<EdgeEnds> edges;
    std::vector<Rational> eweights;
    bool all_weighted = true;
    for (const auto& je : doc.at("edges")) {
      long long id = je.at("id").get<long long>();
      if (!eid.emplace(id, static_cast<int>(edges.size())).second)
        throw Error(Errc::parse, "duplicate edge id " + std::to_string(id));
      auto endpoint = [&](const char* key) {
        long long v = je.at(key).get<long long>();
        auto it = vid.find(v);
        if (it == vid.end())
          throw Error(Errc::parse, "edge endpoint " + std::to_string(v) +
                                       " is not a vertex id");
        return it->second;
      };
      edges.push_back({endpoint("u"), endpoint("v")});
      if (je.contains("weight"))
        eweights.push_back(parse_positive_rational(je.at("weight").get<std::string>()));
      else
        all_weighted = false;
    }

    std::vector<std::vector<int>> rotation(vertices.size());
    const Json& rot = doc.at("rotation");
    for (const auto& [key, val] : rot.items()) {
      auto it = vid.find(std::stoll(key));
      if (it == vid.end())
        throw Error(Errc::parse, "rotation key " + key + " is not a vertex id");
      for (const auto& je : val) {
        auto eit = eid.find(je.get<long long>());
        if (eit == eid.end())
          throw Error(Errc::parse, "rotation entry is not an edge id");
        rotation[it->second].push_back(eit->second);
      }
    }

    // Edge weights may be omitted; they are forced by the vertex weights
    // anyway.  When present they are validated against the vertex sums.
    if (all_weighted)
      return PlaneTree(std::move(vertices), std::move(edges), std::move(eweights),
                       std::move(rotation));
    TreeTopology topo{std::move(vertices), std::move(edges)};
    return PlaneTree::from_topology(topo, std::move(rotation));
  } catch (const Json::exception& e) {
    throw Error(Errc::parse, std::string("bad tree document: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(Errc::parse, "bad tree document: non-numeric id");
  }
}

std::string tree_to_dot(const PlaneTree& tree, const std::string& name) {
  std::string s = "graph " + name + " {\n";
  s += "  node [shape=circle];\n";
  for (int v = 0; v < static_cast<int>(tree.vertex_count()); ++v) {
    s += "  v" + std::to_string(v) + " [label=\"" + to_string(tree.vertex(v).weight) + "\"";
    if (tree.vertex(v).color == Color::black)
      s += ", style=filled, fillcolor=black, fontcolor=white";
    s += "];\n";
  }
  for (int e = 0; e < static_cast<int>(tree.edge_count()); ++e) {
    s += "  v" + std::to_string(tree.edge(e).u) + " -- v" +
         std::to_string(tree.edge(e).v) + " [label=\"" +
         to_string(tree.edge_weight(e)) + "\"];\n";
  }
  s += "}\n";
  return s;
}

Json census_to_json(const SymmetryCensus& census) {
  Json doc;
  doc["total"] = census.total;
  Json by = Json::object();
  for (const auto& [order, count] : census.by_order) by[std::to_string(order)] = count;
  doc["byOrder"] = std::move(by);
  return doc;
}

namespace {

// Weights of one side of a part, heaviest first, primes marking repeats of
// the same weight elsewhere in the labeled type.
std::vector<std::string> part_side(const std::vector<LabeledVertex>& side,
                                   std::uint32_t mask) {
  std::vector<const LabeledVertex*> picked;
  for (size_t i = 0; i < side.size(); ++i)
    if (mask >> i & 1u) picked.push_back(&side[i]);
  std::sort(picked.begin(), picked.end(), [](const LabeledVertex* a, const LabeledVertex* b) {
    if (a->weight != b->weight) return a->weight > b->weight;
    return a->label < b->label;
  });
  std::vector<std::string> out;
  for (const LabeledVertex* lv : picked) {
    std::string w = to_string(lv->weight);
    size_t rep = 0;
    for (size_t j = 0; j < side.size(); ++j)
      if (static_cast<int>(j) < lv->label && side[j].weight == lv->weight) ++rep;
    w.append(rep, '\'');
    out.push_back(std::move(w));
  }
  return out;
}

Rational side_sum(const std::vector<LabeledVertex>& side, std::uint32_t mask) {
  Rational s = 0;
  for (size_t i = 0; i < side.size(); ++i)
    if (mask >> i & 1u) s += side[i].weight;
  return s;
}

std::vector<const Subtype*> display_order(const LabeledType& type,
                                          const TypePartition& part) {
  std::vector<const Subtype*> order;
  for (const auto& p : part.parts) order.push_back(&p);
  std::sort(order.begin(), order.end(), [&](const Subtype* a, const Subtype* b) {
    Rational sa = side_sum(type.white(), a->whites);
    Rational sb = side_sum(type.white(), b->whites);
    if (sa != sb) return sa > sb;  // heaviest part first
    return a->whites < b->whites;
  });
  return order;
}

}  // namespace

std::string partition_text(const LabeledType& type, const TypePartition& part) {
  std::string s;
  for (const Subtype* p : display_order(type, part)) {
    if (!s.empty()) s += " ∪ ";  // union sign
    s += '<';
    auto ws = part_side(type.white(), p->whites);
    for (size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + ws[i];
    s += '|';
    auto bs = part_side(type.black(), p->blacks);
    for (size_t i = 0; i < bs.size(); ++i) s += (i ? "," : "") + bs[i];
    s += '>';
  }
  return s;
}

Json partition_to_json(const LabeledType& type, const TypePartition& part) {
  Json parts = Json::array();
  for (const Subtype* p : display_order(type, part)) {
    Json jp;
    jp["white"] = part_side(type.white(), p->whites);
    jp["black"] = part_side(type.black(), p->blacks);
    jp["sum"] = to_string(side_sum(type.white(), p->whites));
    parts.push_back(std::move(jp));
  }
  return Json{{"parts", std::move(parts)}, {"text", partition_text(type, part)}};
}

Json system_to_json(const AVSystem& system) {
  Json doc;
  Json unknowns = Json::array();
  for (unsigned i = 0; i < system.equation_count; ++i) {
    const bool white = i < system.white_coeffs.size();
    const Rational& coeff = white ? system.white_coeffs[i]
                                  : system.black_coeffs[i - system.white_coeffs.size()];
    unknowns.push_back({{"name", system.unknown_name(i)},
                        {"color", white ? "white" : "black"},
                        {"coefficient", to_string(coeff)}});
  }
  doc["unknowns"] = std::move(unknowns);
  doc["pinned"] = {{"white", {{"coefficient", to_string(system.pinned_white_coeff)}, {"at", 0}}},
                   {"black", {{"coefficient", to_string(system.pinned_black_coeff)}, {"at", 1}}}};
  doc["equationCount"] = system.equation_count;
  doc["bezoutBound"] = system.bezout_bound();
  // Poly::text hands us 1-based variable indices.
  auto namer = [&](unsigned i) { return system.unknown_name(i - 1); };
  Json reduced = Json::array();
  for (const auto& p : system.reduced) reduced.push_back(p.text(namer) + " = 0");
  doc["reduced"] = std::move(reduced);
  if (system.raw_available) {
    Json raw = Json::array();
    for (const auto& p : system.raw) raw.push_back(p.text(namer) + " = 0");
    doc["raw"] = std::move(raw);
    doc["equivalenceVerified"] = system.equivalence_verified;
  }
  return doc;
}

Json solutions_to_json(const std::vector<Solution>& sols) {
  Json doc;
  doc["count"] = sols.size();
  Json arr = Json::array();
  for (const auto& sol : sols) {
    Json point = Json::array();
    for (const auto& c : sol.point) point.push_back({c.real(), c.imag()});
    arr.push_back({{"point", std::move(point)}, {"residual", sol.residual}});
  }
  doc["solutions"] = std::move(arr);
  return doc;
}

}  // namespace wtrees
