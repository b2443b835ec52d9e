#pragma once

#include <cstddef>
#include <vector>

#include "wtrees/rational.hpp"
#include "wtrees/type.hpp"

namespace wtrees {

enum class Color { white, black };

inline Color other(Color c) { return c == Color::white ? Color::black : Color::white; }

struct Vertex {
  Color color;
  Rational weight;
};

struct EdgeEnds {
  int u, v;  // vertex indices; one end white, the other black
};

/*
 * Abstract (non-embedded) weighted tree topology: colored, weighted vertices
 * plus tree edges without weights.  Edge weights are always derived, never
 * free: each vertex weight must equal the sum of its incident edge weights,
 * which pins every edge weight uniquely (peel leaves inward).
 */
struct TreeTopology {
  std::vector<Vertex> vertices;
  std::vector<EdgeEnds> edges;
};

// Derives the unique edge-weight assignment (indexed like topo.edges).
// Throws Error(Errc::non_positive_edge) if some derived weight is <= 0,
// Error(Errc::invalid_tree) if the input is not a bipartite tree.
std::vector<Rational> derive_edge_weights(const TreeTopology& topo);

// Hot-path variant: no validation beyond the sign check, no exceptions.
// Returns false iff some derived weight is <= 0.  `out` is resized inside.
bool try_derive_edge_weights(const TreeTopology& topo, std::vector<Rational>& out);

/*
 * A plane weighted tree: bipartite tree, positive vertex and edge weights
 * with the vertex-sum axiom, plus a rotation system (counterclockwise cyclic
 * order of incident edges at every vertex) fixing the plane embedding up to
 * orientation-preserving homeomorphism.  Mirror images are distinct objects
 * unless some rotation happens to coincide.
 */
class PlaneTree {
 public:
  // Fully validating constructor: checks bipartite tree structure, weight
  // positivity, the vertex-sum axiom, and rotation completeness (rotation[v]
  // is a permutation of the edges at v).  Throws Error otherwise.
  PlaneTree(std::vector<Vertex> vertices, std::vector<EdgeEnds> edges,
            std::vector<Rational> edge_weights, std::vector<std::vector<int>> rotation);

  // Derives edge weights from the topology, then validates as above.
  static PlaneTree from_topology(const TreeTopology& topo,
                                 std::vector<std::vector<int>> rotation);

  // Trusted fast path used by the enumerator (inputs known consistent).
  static PlaneTree unchecked(std::vector<Vertex> vertices, std::vector<EdgeEnds> edges,
                             std::vector<Rational> edge_weights,
                             std::vector<std::vector<int>> rotation);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const EdgeEnds& edge(int e) const { return edges_[e]; }
  const Rational& edge_weight(int e) const { return edge_weights_[e]; }
  // Incident edges at v in counterclockwise order.
  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
  int opposite(int e, int v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  // The multiset of (color, weight) pairs as a sorted type.
  WeightedType type() const;

 private:
  PlaneTree() = default;
  std::vector<Vertex> vertices_;
  std::vector<EdgeEnds> edges_;
  std::vector<Rational> edge_weights_;
  std::vector<std::vector<int>> rotation_;
};

}  // namespace wtrees
