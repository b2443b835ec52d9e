#include "wtrees/tree.hpp"

#include <algorithm>

#include "wtrees/errors.hpp"

namespace wtrees {

namespace {

// Adjacency as (edge index, neighbor) lists; also validates index ranges.
std::vector<std::vector<std::pair<int, int>>> adjacency(const TreeTopology& topo,
                                                        bool validate) {
  size_t V = topo.vertices.size(), E = topo.edges.size();
  if (validate && E + 1 != V)
    throw Error(Errc::invalid_tree, "edge count must be vertex count - 1");
  std::vector<std::vector<std::pair<int, int>>> adj(V);
  for (size_t e = 0; e < E; ++e) {
    int u = topo.edges[e].u, v = topo.edges[e].v;
    if (validate) {
      if (u < 0 || v < 0 || static_cast<size_t>(u) >= V || static_cast<size_t>(v) >= V)
        throw Error(Errc::invalid_tree, "edge endpoint out of range");
      if (topo.vertices[u].color == topo.vertices[v].color)
        throw Error(Errc::invalid_tree, "edge joins two vertices of the same color");
    }
    adj[u].push_back({static_cast<int>(e), v});
    adj[v].push_back({static_cast<int>(e), u});
  }
  return adj;
}

}  // namespace

bool try_derive_edge_weights(const TreeTopology& topo, std::vector<Rational>& out) {
  size_t V = topo.vertices.size(), E = topo.edges.size();
  out.assign(E, Rational(0));

  // Peel leaves inward: a leaf's single edge carries the whole residual
  // weight of that leaf; removing it leaves a smaller instance.  The result
  // does not depend on the peeling order because each edge weight equals the
  // alternating color-sum of the component it cuts off, a quantity fixed by
  // the topology alone.
  auto adj = adjacency(topo, false);
  std::vector<int> deg(V);
  std::vector<Rational> residual(V);
  std::vector<int> stack;
  for (size_t v = 0; v < V; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    residual[v] = topo.vertices[v].weight;
    if (deg[v] == 1) stack.push_back(static_cast<int>(v));
  }
  std::vector<char> done_edge(E, 0), done_vertex(V, 0);
  size_t peeled = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (done_vertex[v]) continue;
    done_vertex[v] = 1;
    ++peeled;
    if (peeled == V) break;  // the last vertex has no remaining edge
    int e = -1, u = -1;
    for (auto [ei, ui] : adj[v])
      if (!done_edge[ei]) {
        e = ei;
        u = ui;
        break;
      }
    if (e < 0) continue;
    if (residual[v] <= 0) return false;
    out[e] = residual[v];
    done_edge[e] = 1;
    residual[u] -= residual[v];
    if (--deg[u] == 1 && !done_vertex[u]) stack.push_back(u);
  }
  return true;
}

std::vector<Rational> derive_edge_weights(const TreeTopology& topo) {
  // Validating path: build adjacency with checks, confirm connectivity,
  // then peel and confirm the final residual vanishes.
  size_t V = topo.vertices.size();
  if (V == 0) throw Error(Errc::invalid_tree, "empty tree");
  auto adj = adjacency(topo, true);
  std::vector<char> seen(V, 0);
  std::vector<int> bfs{0};
  seen[0] = 1;
  for (size_t i = 0; i < bfs.size(); ++i)
    for (auto [e, u] : adj[bfs[i]])
      if (!seen[u]) {
        seen[u] = 1;
        bfs.push_back(u);
      }
  if (bfs.size() != V) throw Error(Errc::invalid_tree, "tree is not connected");
  for (const auto& vx : topo.vertices)
    if (vx.weight <= 0)
      throw Error(Errc::non_positive_weight, "vertex weight must be positive");

  std::vector<Rational> out;
  if (!try_derive_edge_weights(topo, out))
    throw Error(Errc::non_positive_edge, "derived edge weight is not positive");

  // Cross-check the vertex-sum axiom (equivalent to zero final residual).
  for (size_t v = 0; v < V; ++v) {
    Rational sum = 0;
    for (auto [e, u] : adj[v]) sum += out[e];
    if (sum != topo.vertices[v].weight)
      throw Error(Errc::residual_mismatch, "leaf peeling left a nonzero residual");
  }
  return out;
}

PlaneTree::PlaneTree(std::vector<Vertex> vertices, std::vector<EdgeEnds> edges,
                     std::vector<Rational> edge_weights,
                     std::vector<std::vector<int>> rotation) {
  TreeTopology topo{vertices, edges};
  auto derived = derive_edge_weights(topo);  // validates the structure
  if (edge_weights != derived)
    throw Error(Errc::invalid_tree,
                "edge weights disagree with the vertex-sum derivation");
  if (rotation.size() != vertices.size())
    throw Error(Errc::invalid_tree, "rotation must list every vertex");
  auto adj = adjacency(topo, false);
  for (size_t v = 0; v < vertices.size(); ++v) {
    std::vector<int> expect, got = rotation[v];
    for (auto [e, u] : adj[v]) expect.push_back(e);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (expect != got)
      throw Error(Errc::invalid_tree,
                  "rotation at a vertex is not a permutation of its edges");
  }
  vertices_ = std::move(vertices);
  edges_ = std::move(edges);
  edge_weights_ = std::move(edge_weights);
  rotation_ = std::move(rotation);
}

PlaneTree PlaneTree::from_topology(const TreeTopology& topo,
                                   std::vector<std::vector<int>> rotation) {
  return PlaneTree(topo.vertices, topo.edges, derive_edge_weights(topo),
                   std::move(rotation));
}

PlaneTree PlaneTree::unchecked(std::vector<Vertex> vertices, std::vector<EdgeEnds> edges,
                               std::vector<Rational> edge_weights,
                               std::vector<std::vector<int>> rotation) {
  PlaneTree t;
  t.vertices_ = std::move(vertices);
  t.edges_ = std::move(edges);
  t.edge_weights_ = std::move(edge_weights);
  t.rotation_ = std::move(rotation);
  return t;
}

WeightedType PlaneTree::type() const {
  std::vector<Rational> white, black;
  for (const auto& vx : vertices_)
    (vx.color == Color::white ? white : black).push_back(vx.weight);
  return WeightedType(std::move(white), std::move(black));
}

}  // namespace wtrees
