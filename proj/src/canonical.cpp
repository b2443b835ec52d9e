#include "wtrees/canonical.hpp"

#include <algorithm>

#include "wtrees/errors.hpp"

namespace wtrees {

std::strong_ordering Token::operator<=>(const Token& o) const {
  if (kind != o.kind) return kind <=> o.kind;
  if (kind != weight) return std::strong_ordering::equal;
  int c = value.compare(o.value);
  return c < 0   ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::strong_ordering CanonicalCode::operator<=>(const CanonicalCode& o) const {
  size_t n = std::min(tokens_.size(), o.tokens_.size());
  for (size_t i = 0; i < n; ++i) {
    auto c = tokens_[i] <=> o.tokens_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return tokens_.size() <=> o.tokens_.size();
}

std::string CanonicalCode::bytes() const {
  // 'D' 'U' 'w' 'b' markers; weights as decimal "p[/q]" terminated by ';'.
  std::string out;
  for (const auto& t : tokens_) {
    switch (t.kind) {
      case Token::down: out += 'D'; break;
      case Token::up: out += 'U'; break;
      case Token::white: out += 'w'; break;
      case Token::black: out += 'b'; break;
      case Token::weight:
        out += to_string(t.value);
        out += ';';
        break;
    }
  }
  return out;
}

std::string CanonicalCode::hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string raw = bytes(), out;
  out.reserve(raw.size() * 2);
  for (unsigned char c : raw) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

namespace {

void emit_vertex(const PlaneTree& t, int v, std::vector<Token>& out) {
  out.push_back({t.vertex(v).color == Color::white ? Token::white : Token::black,
                 t.vertex(v).weight});
  out.push_back({Token::weight, t.vertex(v).weight});
}

// Preorder walk from vertex v entered along rotation position `entry_pos`
// (-1 for the root: all incident edges are descended, starting at
// `start_pos`).  Children are taken in counterclockwise order after the
// entry edge.  Appends tokens; optionally records the vertex visit order.
void walk(const PlaneTree& t, int v, int entry_pos, int start_pos,
          std::vector<Token>* out, std::vector<int>* order) {
  if (order) order->push_back(v);
  if (out) emit_vertex(t, v, *out);
  const auto& rot = t.rotation(v);
  int d = static_cast<int>(rot.size());
  int steps = entry_pos < 0 ? d : d - 1;
  int base = entry_pos < 0 ? start_pos : entry_pos;
  for (int k = 1; k <= steps; ++k) {
    int pos = (base + (entry_pos < 0 ? k - 1 : k)) % d;
    int e = rot[pos];
    int child = t.opposite(e, v);
    if (out) {
      out->push_back({Token::down, 0});
      out->push_back({Token::weight, t.edge_weight(e)});
    }
    // Find the entry position of e in the child's rotation.
    const auto& crot = t.rotation(child);
    int cpos = static_cast<int>(std::find(crot.begin(), crot.end(), e) - crot.begin());
    walk(t, child, cpos, 0, out, order);
    if (out) out->push_back({Token::up, 0});
  }
}

std::vector<Token> rooted_code(const PlaneTree& t, int v, int pos) {
  std::vector<Token> out;
  out.reserve(5 * t.vertex_count());
  walk(t, v, -1, pos, &out, nullptr);
  return out;
}

std::vector<int> rooted_order(const PlaneTree& t, int v, int pos) {
  std::vector<int> order;
  order.reserve(t.vertex_count());
  walk(t, v, -1, pos, nullptr, &order);
  return order;
}

// All directed roots (vertex, rotation position) achieving the minimal code.
struct MinRoots {
  std::vector<Token> code;
  std::vector<std::pair<int, int>> roots;
};

std::strong_ordering compare_tokens(const std::vector<Token>& a,
                                    const std::vector<Token>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    auto c = a[i] <=> b[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return a.size() <=> b.size();
}

MinRoots minimal_roots(const PlaneTree& t) {
  if (t.edge_count() == 0)
    throw Error(Errc::invalid_tree, "cannot canonicalize an edgeless tree");
  MinRoots best;
  for (int v = 0; v < static_cast<int>(t.vertex_count()); ++v) {
    for (int pos = 0; pos < t.degree(v); ++pos) {
      auto code = rooted_code(t, v, pos);
      if (best.roots.empty()) {
        best.code = std::move(code);
        best.roots = {{v, pos}};
        continue;
      }
      auto cmp = compare_tokens(code, best.code);
      if (cmp == std::strong_ordering::less) {
        best.code = std::move(code);
        best.roots = {{v, pos}};
      } else if (cmp == std::strong_ordering::equal) {
        best.roots.push_back({v, pos});
      }
    }
  }
  return best;
}

}  // namespace

CanonicalResult canonicalize(const PlaneTree& tree) {
  auto mr = minimal_roots(tree);
  return {CanonicalCode(std::move(mr.code)), static_cast<int>(mr.roots.size())};
}

CanonicalCode canonical_code(const PlaneTree& tree) { return canonicalize(tree).code; }

int automorphism_order(const PlaneTree& tree) {
  return canonicalize(tree).automorphism_order;
}

bool are_isotopic(const PlaneTree& a, const PlaneTree& b) {
  return canonical_code(a) == canonical_code(b);
}

PlaneTree decode_code(const CanonicalCode& code) {
  const auto& toks = code.tokens();
  std::vector<Vertex> vertices;
  std::vector<EdgeEnds> edges;
  std::vector<Rational> eweights;
  std::vector<std::vector<int>> rotation;
  size_t pos = 0;

  auto take = [&](Token::Kind k) -> const Token& {
    if (pos >= toks.size() || toks[pos].kind != k)
      throw Error(Errc::parse, "malformed code");
    return toks[pos++];
  };

  auto read_vertex = [&]() -> int {
    if (pos >= toks.size() ||
        (toks[pos].kind != Token::white && toks[pos].kind != Token::black))
      throw Error(Errc::parse, "malformed code");
    Color c = toks[pos].kind == Token::white ? Color::white : Color::black;
    ++pos;
    const Token& w = take(Token::weight);
    vertices.push_back({c, w.value});
    rotation.emplace_back();
    return static_cast<int>(vertices.size()) - 1;
  };

  // Recursive descent over the bracket structure.
  auto children = [&](auto&& self, int v, int entry_edge) -> void {
    if (entry_edge >= 0) rotation[v].push_back(entry_edge);
    while (pos < toks.size() && toks[pos].kind == Token::down) {
      ++pos;
      const Token& ew = take(Token::weight);
      int e = static_cast<int>(edges.size());
      edges.push_back({v, -1});
      eweights.push_back(ew.value);
      rotation[v].push_back(e);
      int child = read_vertex();
      edges[e].v = child;
      self(self, child, e);
      take(Token::up);
    }
  };

  int root = read_vertex();
  children(children, root, -1);
  if (pos != toks.size()) throw Error(Errc::parse, "trailing tokens in code");
  return PlaneTree::unchecked(std::move(vertices), std::move(edges),
                              std::move(eweights), std::move(rotation));
}

PlaneTree canonical_form(const PlaneTree& tree) {
  return decode_code(canonical_code(tree));
}

std::vector<std::vector<int>> automorphisms(const PlaneTree& tree) {
  auto mr = minimal_roots(tree);
  auto base = rooted_order(tree, mr.roots[0].first, mr.roots[0].second);
  std::vector<std::vector<int>> perms;
  for (const auto& [v, pos] : mr.roots) {
    auto img = rooted_order(tree, v, pos);
    std::vector<int> perm(tree.vertex_count());
    for (size_t i = 0; i < base.size(); ++i) perm[base[i]] = img[i];
    perms.push_back(std::move(perm));
  }
  return perms;
}

}  // namespace wtrees
