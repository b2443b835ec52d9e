#include "wtrees/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "wtrees/errors.hpp"

namespace wtrees {

std::vector<std::vector<unsigned>> integer_partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  // Non-decreasing parts, each at least as large as the one before it.
  auto rec = [&](auto&& self, unsigned left, unsigned min_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = min_part; p <= left; ++p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

std::vector<WeightedType> enumerate_types(unsigned n) {
  auto parts = integer_partitions(n);
  std::vector<WeightedType> out;
  out.reserve(parts.size() * parts.size());
  for (const auto& w : parts)
    for (const auto& b : parts) {
      std::vector<Rational> white(w.begin(), w.end()), black(b.begin(), b.end());
      out.emplace_back(std::move(white), std::move(black));
    }
  return out;
}

std::uint64_t count_labeled_bipartite_trees(int s, int t) {
  // s^(t-1) * t^(s-1)
  std::uint64_t r = 1;
  for (int i = 1; i < t; ++i) r *= s;
  for (int i = 1; i < s; ++i) r *= t;
  return r;
}

namespace {

/*
 * Spanning trees of K_{s,t} via rooted parent assignments: vertex 0 (a
 * white) is the root; every other vertex picks a parent of the opposite
 * color; an assignment is a tree iff no parent chain closes a cycle, which
 * is checked at the moment the closing edge would be added.  Degree caps
 * prune: a non-root vertex with c children has final degree >= c + 1.
 */
struct TreeGen {
  int s, t, V;
  const std::vector<int>* cap;  // nullable
  std::vector<int> parent;      // -1 root, -2 unassigned
  std::vector<int> children;    // current child counts
  std::vector<EdgeEnds> edges;  // scratch, rebuilt per emitted tree
  const std::function<void(const std::vector<EdgeEnds>&)>* visit;

  bool capped(int v, int extra) const {
    if (!cap) return false;
    int self_edge = v == 0 ? 0 : 1;
    return children[v] + extra + self_edge > (*cap)[v];
  }

  bool closes_cycle(int u, int p) const {
    int x = p;
    while (true) {
      if (x == u) return true;
      if (x == 0) return false;
      int px = parent[x];
      if (px == -2) return false;
      x = px;
    }
  }

  void emit() {
    edges.clear();
    for (int u = 1; u < V; ++u) {
      int p = parent[u];
      int w = u < s ? u : p;  // white endpoint first
      int b = u < s ? p : u;
      edges.push_back({w, b});
    }
    (*visit)(edges);
  }

  void rec(int u) {
    if (u == V) {
      emit();
      return;
    }
    int from = u < s ? s : 0;      // candidate parents: the opposite color
    int to = u < s ? V : s;
    for (int p = from; p < to; ++p) {
      if (capped(p, 1) || closes_cycle(u, p)) continue;
      parent[u] = p;
      ++children[p];
      rec(u + 1);
      --children[p];
      parent[u] = -2;
    }
  }
};

}  // namespace

void enumerate_labeled_bipartite_trees(
    int s, int t, const std::function<void(const std::vector<EdgeEnds>&)>& visit,
    const std::vector<int>* deg_cap) {
  if (s < 1 || t < 1) throw Error(Errc::invalid_tree, "need vertices of both colors");
  int V = s + t, E = V - 1;
  if (deg_cap) {
    long sum_w = 0, sum_b = 0;
    for (int v = 0; v < s; ++v) sum_w += (*deg_cap)[v];
    for (int v = s; v < V; ++v) sum_b += (*deg_cap)[v];
    if (sum_w < E || sum_b < E) return;  // some side cannot host all edges
  }
  TreeGen gen;
  gen.s = s;
  gen.t = t;
  gen.V = V;
  gen.cap = deg_cap;
  gen.parent.assign(V, -2);
  gen.parent[0] = -1;
  gen.children.assign(V, 0);
  gen.visit = &visit;
  if (V == 1) return;  // no spanning tree semantics for a single vertex
  gen.rec(1);
}

namespace {

// Degree caps for the sorted weight assignment.  Scaling by the common
// denominator turns every weight integral, and a surviving tree then has
// integer scaled edge weights >= 1, so deg(v) <= scaled_weight(v); the
// structural bound deg <= opposite side size always applies too.
std::vector<int> degree_caps(const std::vector<Rational>& wa,
                             const std::vector<Rational>& ba,
                             const Integer& scale) {
  int s = static_cast<int>(wa.size()), t = static_cast<int>(ba.size());
  std::vector<int> cap(s + t);
  auto one = [&](const Rational& w, int structural) {
    Integer scaled = numerator(Rational(w * scale));
    int c = structural;
    if (scaled < structural) c = scaled.convert_to<int>();
    return c;
  };
  for (int i = 0; i < s; ++i) cap[i] = one(wa[i], t);
  for (int j = 0; j < t; ++j) cap[s + j] = one(ba[j], s);
  return cap;
}

/*
 * Hot-path codes: one token packs into a u64 as (kind << 48) | scaled value,
 * with the scale the common denominator of all type weights, so that u64
 * order coincides with Token order and a code is just a u64 vector.  Used
 * whenever the scaled total fits 48 bits (anything sane); the Rational-token
 * fallback below keeps absurd denominators correct.
 */
constexpr int kKindShift = 48;
constexpr std::uint64_t kTokDown = 0;
constexpr std::uint64_t kTokUp = 1ull << kKindShift;
constexpr std::uint64_t kTokWhite = 2ull << kKindShift;
constexpr std::uint64_t kTokBlack = 3ull << kKindShift;
constexpr std::uint64_t kTokWeight = 4ull << kKindShift;

using FastCode = std::vector<std::uint64_t>;

struct FastCoder {
  const std::vector<EdgeEnds>* edges = nullptr;
  const std::vector<std::vector<int>>* rot = nullptr;
  std::vector<std::uint64_t> vcolor, vweight;  // per vertex, fixed per call
  std::vector<std::uint64_t> eweight;          // per edge, set per tree
  std::vector<int> cands;  // only these vertices can host a minimal root
  FastCode cur, best;
  int best_count = 0;

  int opposite(int e, int v) const {
    const auto& ed = (*edges)[e];
    return ed.u == v ? ed.v : ed.u;
  }

  void walk(int v, int entry_pos, int start_pos) {
    cur.push_back(vcolor[v]);
    cur.push_back(vweight[v]);
    const auto& r = (*rot)[v];
    int d = static_cast<int>(r.size());
    int steps = entry_pos < 0 ? d : d - 1;
    int base = entry_pos < 0 ? start_pos : entry_pos;
    for (int k = 1; k <= steps; ++k) {
      int pos = (base + (entry_pos < 0 ? k - 1 : k)) % d;
      int e = r[pos];
      int child = opposite(e, v);
      cur.push_back(kTokDown);
      cur.push_back(kTokWeight | eweight[e]);
      const auto& crot = (*rot)[child];
      int cpos = static_cast<int>(std::find(crot.begin(), crot.end(), e) - crot.begin());
      walk(child, cpos, 0);
      cur.push_back(kTokUp);
    }
  }

  // Minimal code over all directed roots of the current embedding, plus the
  // number of roots achieving it (the automorphism order).  All codes have
  // the same length, so comparison is element-wise.
  void run() {
    best.clear();
    best_count = 0;
    for (int v : cands) {
      int d = static_cast<int>((*rot)[v].size());
      for (int pos = 0; pos < d; ++pos) {
        cur.clear();
        walk(v, -1, pos);
        if (best.empty()) {
          std::swap(best, cur);
          best_count = 1;
          continue;
        }
        int cmp = 0;
        for (size_t i = 0; i < cur.size(); ++i) {
          if (cur[i] != best[i]) {
            cmp = cur[i] < best[i] ? -1 : 1;
            break;
          }
        }
        if (cmp < 0) {
          std::swap(best, cur);
          best_count = 1;
        } else if (cmp == 0) {
          ++best_count;
        }
      }
    }
  }
};

using FastAccum = std::map<FastCode, int>;  // code -> automorphism order

/*
 * All plane embeddings of one labeled weighted tree: for every vertex,
 * every cyclic order of its incident edges, realized as permutations of the
 * incidence list with the first element pinned.  The odometer advances one
 * vertex's permutation at a time.
 */
void fast_embeddings(FastCoder& coder, const std::vector<EdgeEnds>& edges, int V,
                     std::atomic<std::uint64_t>& used, std::uint64_t budget,
                     FastAccum& acc, std::vector<std::vector<int>>& adj,
                     std::vector<std::vector<int>>& rot) {
  for (int v = 0; v < V; ++v) adj[v].clear();
  for (size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].u].push_back(static_cast<int>(e));
    adj[edges[e].v].push_back(static_cast<int>(e));
  }
  rot = adj;
  coder.edges = &edges;
  coder.rot = &rot;
  while (true) {
    if (used.fetch_add(1, std::memory_order_relaxed) >= budget)
      throw Error(Errc::resource_budget, "embedding budget exhausted");
    coder.run();
    auto it = acc.find(coder.best);
    if (it == acc.end()) acc.emplace(coder.best, coder.best_count);
    // Advance the odometer: next_permutation on rot[v] beyond the pinned
    // first entry; carry to the next vertex on wrap.
    int v = 0;
    for (; v < V; ++v) {
      if (rot[v].size() > 2 &&
          std::next_permutation(rot[v].begin() + 1, rot[v].end()))
        break;
      rot[v] = adj[v];  // wrapped: reset and carry
    }
    if (v == V) break;
  }
}

struct SlowAccum {
  // code bytes -> (code, automorphism order); bytes give cheap map keys.
  std::map<std::string, std::pair<CanonicalCode, int>> classes;
};

void slow_embeddings(const std::vector<Vertex>& vertices,
                     const std::vector<EdgeEnds>& edges,
                     const std::vector<Rational>& eweights,
                     std::atomic<std::uint64_t>& used, std::uint64_t budget,
                     SlowAccum& acc) {
  int V = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> adj(V);
  for (size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].u].push_back(static_cast<int>(e));
    adj[edges[e].v].push_back(static_cast<int>(e));
  }
  std::vector<std::vector<int>> rot = adj;
  while (true) {
    if (used.fetch_add(1, std::memory_order_relaxed) >= budget)
      throw Error(Errc::resource_budget, "embedding budget exhausted");
    PlaneTree tree = PlaneTree::unchecked(vertices, edges, eweights, rot);
    auto res = canonicalize(tree);
    std::string key = res.code.bytes();
    acc.classes.emplace(std::move(key),
                        std::make_pair(std::move(res.code), res.automorphism_order));
    int v = 0;
    for (; v < V; ++v) {
      if (rot[v].size() > 2 &&
          std::next_permutation(rot[v].begin() + 1, rot[v].end()))
        break;
      rot[v] = adj[v];
    }
    if (v == V) break;
  }
}

}  // namespace

std::vector<EnumeratedClass> enumerate_classes(const WeightedType& type,
                                               const EnumerateOptions& opts) {
  int s = static_cast<int>(type.s()), t = static_cast<int>(type.t());
  int V = s + t;

  /*
   * One weight assignment suffices: any tree of the type can be labeled so
   * that slot weights match the sorted lists, so exhausting labeled trees
   * for the sorted assignment alone already visits every isotopy class
   * (dedup by canonical code collapses the repeats).  Iterating multiset
   * permutations of the weights would multiply the work by their number
   * without producing any new class.
   */
  std::vector<Vertex> vertices;
  for (const auto& w : type.white()) vertices.push_back({Color::white, w});
  for (const auto& b : type.black()) vertices.push_back({Color::black, b});

  std::vector<Rational> all = type.white();
  all.insert(all.end(), type.black().begin(), type.black().end());
  Integer scale = denominator_lcm(all);
  auto caps = degree_caps(type.white(), type.black(), scale);

  Integer max_scaled = numerator(Rational(type.total() * scale));
  const bool fast = max_scaled < (Integer(1) << kKindShift);

  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());

  std::atomic<std::uint64_t> used{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto scaled_of = [&](const Rational& w) {
    return numerator(Rational(w * scale)).convert_to<std::uint64_t>();
  };

  struct Worker {
    TreeTopology topo;  // vertices fixed, edges swapped in per tree
    std::vector<Rational> ew;
    std::vector<std::vector<int>> adj, rot;
    FastCoder coder;
    FastAccum fast_acc;
    SlowAccum slow_acc;
  };
  std::vector<Worker> workers(jobs);
  for (auto& w : workers) {
    w.topo.vertices = vertices;
    w.adj.resize(V);
    if (fast) {
      for (int v = 0; v < V; ++v) {
        w.coder.vcolor.push_back(v < s ? kTokWhite : kTokBlack);
        w.coder.vweight.push_back(kTokWeight | scaled_of(vertices[v].weight));
      }
      // Only vertices with the minimal (color, weight) token pair can start
      // a minimal code; that is the lightest whites, which sit first.
      for (int v = 0; v < s && vertices[v].weight == vertices[0].weight; ++v)
        w.coder.cands.push_back(v);
    }
  }

  auto process = [&](Worker& w, const std::vector<EdgeEnds>& edges) {
    w.topo.edges = edges;
    if (!try_derive_edge_weights(w.topo, w.ew)) return;
    if (fast) {
      w.coder.eweight.resize(w.ew.size());
      for (size_t e = 0; e < w.ew.size(); ++e)
        w.coder.eweight[e] = scaled_of(w.ew[e]);
      fast_embeddings(w.coder, edges, V, used, opts.budget, w.fast_acc, w.adj, w.rot);
    } else {
      slow_embeddings(vertices, edges, w.ew, used, opts.budget, w.slow_acc);
    }
  };

  // The generator is cheap next to embedding + coding, so one thread runs
  // it, buffering trees; the buffer is then swept in parallel strides.
  std::vector<std::vector<EdgeEnds>> buffer;
  const size_t chunk = jobs > 1 ? 4096 : 256;

  auto flush = [&] {
    if (buffer.empty()) return;
    if (jobs <= 1 || buffer.size() < 4 * jobs) {
      for (const auto& edges : buffer) process(workers[0], edges);
    } else {
      auto span = [&](unsigned wi, size_t lo, size_t hi) {
        try {
          for (size_t i = lo; i < hi; ++i) process(workers[wi], buffer[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lk(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      };
      size_t per = (buffer.size() + jobs - 1) / jobs;
      std::vector<std::thread> pool;
      for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(span, j, per * j, std::min(buffer.size(), per * (j + 1)));
      span(0, 0, std::min(buffer.size(), per));
      for (auto& th : pool) th.join();
      if (first_error) std::rethrow_exception(first_error);
    }
    buffer.clear();
  };

  enumerate_labeled_bipartite_trees(
      s, t,
      [&](const std::vector<EdgeEnds>& edges) {
        if (used.fetch_add(1, std::memory_order_relaxed) >= opts.budget)
          throw Error(Errc::resource_budget, "labeled-tree budget exhausted");
        buffer.push_back(edges);
        if (buffer.size() >= chunk) flush();
      },
      &caps);
  flush();

  std::vector<EnumeratedClass> out;
  if (fast) {
    FastAccum merged = std::move(workers[0].fast_acc);
    for (unsigned j = 1; j < jobs; ++j) merged.merge(workers[j].fast_acc);
    // The u64 order is the Token order, so the map is already sorted.
    for (const auto& [fcode, aut] : merged) {
      std::vector<Token> toks;
      toks.reserve(fcode.size());
      for (std::uint64_t tok : fcode) {
        auto kind = static_cast<Token::Kind>(tok >> kKindShift);
        Rational w = kind == Token::weight
                         ? Rational(Integer(tok & ((1ull << kKindShift) - 1)), scale)
                         : Rational(0);
        toks.push_back({kind, std::move(w)});
      }
      CanonicalCode code(std::move(toks));
      out.push_back({decode_code(code), std::move(code), aut});
    }
  } else {
    SlowAccum merged = std::move(workers[0].slow_acc);
    for (unsigned j = 1; j < jobs; ++j) merged.classes.merge(workers[j].slow_acc.classes);
    std::vector<const std::pair<CanonicalCode, int>*> sorted;
    for (const auto& [key, val] : merged.classes) sorted.push_back(&val);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return a->first < b->first; });
    for (const auto* val : sorted)
      out.push_back({decode_code(val->first), val->first, val->second});
  }
  return out;
}

std::vector<PlaneTree> enumerate_wtrees(const WeightedType& type,
                                        const EnumerateOptions& opts) {
  std::vector<PlaneTree> out;
  for (auto& cls : enumerate_classes(type, opts)) out.push_back(std::move(cls.tree));
  return out;
}

SymmetryCensus symmetric_census(const WeightedType& type,
                                const EnumerateOptions& opts) {
  SymmetryCensus census;
  for (const auto& cls : enumerate_classes(type, opts)) {
    ++census.total;
    ++census.by_order[cls.automorphism_order];
  }
  return census;
}

}  // namespace wtrees
