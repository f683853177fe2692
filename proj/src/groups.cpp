#include "topsnut/groups.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

int wrap(long long v, int n) { return static_cast<int>(((v - 1) % n + n) % n) + 1; }
int residue(long long v, int n) { return static_cast<int>((v % n + n) % n); }

void check_index(const GraphicGroup &g, int i) {
  if (i < 1 || i > g.n)
    throw PreconditionError("element index " + std::to_string(i) + " outside [1," +
                            std::to_string(g.n) + "]");
}

// Per-component moduli and offsets of element i.
struct Parts {
  int s, k;
};
Parts split(const GraphicGroup &g, int i) {
  return {(i - 1) / g.qmod + 1, (i - 1) % g.qmod + 1};
}

template <class Op> int combine(const GraphicGroup &g, int i, int j, int zero, Op op) {
  check_index(g, i);
  check_index(g, j);
  check_index(g, zero);
  if (g.mode != GroupMode::Mixed) return wrap(op(i, j, zero), g.n);
  auto a = split(g, i), b = split(g, j), z = split(g, zero);
  return mixed_index(g, wrap(op(a.s, b.s, z.s), g.pmod), wrap(op(a.k, b.k, z.k), g.qmod));
}

Labeling shifted(const GraphicGroup &g, int i) {
  Labeling out;
  if (g.mode == GroupMode::Mixed) {
    auto [s, k] = split(g, i);
    for (int x : g.f.vertex) out.vertex.push_back(residue(x + s - 1, g.pmod));
    std::vector<int> e;
    for (int x : *g.f.edge) e.push_back(residue(x + k - 1, g.qmod));
    out.edge = e;
    return out;
  }
  if (g.mode == GroupMode::Vertex)
    for (int x : g.f.vertex) out.vertex.push_back(residue(x + i - 1, g.n));
  if (g.mode == GroupMode::Edge) {
    out.vertex = g.f.vertex;
    std::vector<int> e;
    for (int x : *g.f.edge) e.push_back(residue(x + i - 1, g.n));
    out.edge = e;
  }
  return out;
}

} // namespace

GraphicGroup build_group(const Graph &g, const Labeling &f, int n, GroupMode mode) {
  if (mode == GroupMode::Mixed)
    throw PreconditionError("mixed groups take two moduli");
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (static_cast<int>(f.vertex.size()) != g.p)
    throw PreconditionError("labeling does not cover the vertices");
  if (mode == GroupMode::Edge && (!f.edge || static_cast<int>(f.edge->size()) != g.q()))
    throw PreconditionError("edge mode needs edge colors");
  GraphicGroup G{g, f, n, mode, n, 1, {}};
  for (int i = 1; i <= n; ++i) G.elements.push_back(shifted(G, i));
  return G;
}

GraphicGroup build_mixed_group(const Graph &g, const Labeling &f, int pmod, int qmod) {
  if (pmod < 1 || qmod < 1) throw PreconditionError("moduli must be at least 1");
  if (static_cast<int>(f.vertex.size()) != g.p || !f.edge ||
      static_cast<int>(f.edge->size()) != g.q())
    throw PreconditionError("mixed mode needs vertex and edge colors");
  GraphicGroup G{g, f, pmod * qmod, GroupMode::Mixed, pmod, qmod, {}};
  for (int i = 1; i <= G.n; ++i) G.elements.push_back(shifted(G, i));
  return G;
}

int mixed_index(const GraphicGroup &g, int s, int k) {
  if (s < 1 || s > g.pmod || k < 1 || k > g.qmod)
    throw PreconditionError("mixed element outside the moduli");
  return (s - 1) * g.qmod + k;
}

int group_add(const GraphicGroup &g, int i, int j, int zero) {
  return combine(g, i, j, zero, [](long long a, long long b, long long z) { return a + b - z; });
}

int group_subtract(const GraphicGroup &g, int i, int j, int zero) {
  return combine(g, i, j, zero, [](long long a, long long b, long long z) { return a - b + z; });
}

int group_inverse(const GraphicGroup &g, int i, int zero) {
  // i + j - zero = zero
  return combine(g, i, zero, zero,
                 [](long long a, long long, long long z) { return 2 * z - a; });
}

AxiomReport check_axioms(const GraphicGroup &g) {
  if (g.n > 64) throw PreconditionError("exhaustive axiom check needs n <= 64");
  AxiomReport r;
  const int n = g.n;
  if (static_cast<int>(g.elements.size()) != n) {
    r.labelIdentity = false;
    r.labelFailures = 1;
    return r;
  }
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      if (group_add(g, i, k, k) != i || group_add(g, k, i, k) != i) r.zeroLaw = false;
      int inverses = 0;
      for (int j = 1; j <= n; ++j) {
        int l = group_add(g, i, j, k);
        if (l < 1 || l > n) r.closure = false;
        if (l == k) ++inverses;
        if (l != group_add(g, j, i, k)) r.commutative = false;
      }
      if (inverses != 1) r.inverse = false;
    }
    for (int a = 1; a <= n && r.associative; ++a)
      for (int b = 1; b <= n && r.associative; ++b) {
        int ab = group_add(g, a, b, k);
        for (int c = 1; c <= n; ++c)
          if (group_add(g, ab, c, k) != group_add(g, a, group_add(g, b, c, k), k)) {
            r.associative = false;
            break;
          }
      }
  }
  // label level: f_i + f_j - f_k agrees with f_lambda modulo each domain's modulus
  const int vm = g.mode == GroupMode::Mixed ? g.pmod : g.n;
  const int em = g.mode == GroupMode::Mixed ? g.qmod : g.n;
  auto check = [&](const std::vector<int> &a, const std::vector<int> &b,
                   const std::vector<int> &c, const std::vector<int> &l, int m) {
    for (size_t x = 0; x < a.size(); ++x) {
      long long v = static_cast<long long>(a[x]) + b[x] - c[x];
      if (residue(v, m) != l[x]) {
        r.labelIdentity = false;
        ++r.labelFailures;
      }
      if (v < 0 || v >= m) {
        if (m - v != residue(v, m)) ++r.literalMismatches;
      }
    }
  };
  bool vertexDomain = g.mode != GroupMode::Edge;
  bool edgeDomain = g.mode != GroupMode::Vertex;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        int l = group_add(g, i, j, k);
        const auto &A = g.elements[i - 1], &B = g.elements[j - 1], &C = g.elements[k - 1],
                   &L = g.elements[l - 1];
        if (vertexDomain) check(A.vertex, B.vertex, C.vertex, L.vertex, vm);
        if (edgeDomain) check(*A.edge, *B.edge, *C.edge, *L.edge, em);
      }
  return r;
}

std::vector<int> tree_group_coloring(const Graph &t, const GraphicGroup &g,
                                     const std::vector<int> &edgeElements, int zero) {
  if (!t.is_tree()) throw PreconditionError("tree group coloring needs a tree");
  if (static_cast<int>(edgeElements.size()) != t.q())
    throw PreconditionError("one element per edge expected");
  check_index(g, zero);
  std::set<int> distinct;
  for (int e : edgeElements) {
    check_index(g, e);
    if (!distinct.insert(e).second)
      throw PreconditionError("edge elements must be distinct");
  }
  std::vector<int> F(t.p, 0);
  if (t.p == 0) return F;
  std::vector<std::vector<std::pair<int, int>>> inc(t.p);
  for (int i = 0; i < t.q(); ++i) {
    inc[t.edges[i].first].push_back({t.edges[i].second, i});
    inc[t.edges[i].second].push_back({t.edges[i].first, i});
  }
  F[0] = zero;
  std::queue<int> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (auto [w, i] : inc[u]) {
      if (F[w] != 0) continue;
      F[w] = group_subtract(g, edgeElements[i], F[u], zero);
      bfs.push(w);
    }
  }
  for (int i = 0; i < t.q(); ++i) {
    auto [u, v] = t.edges[i];
    if (group_add(g, F[u], F[v], zero) != edgeElements[i])
      throw std::logic_error("tree group coloring produced an inconsistent edge");
  }
  return F;
}

Encryption encrypt_graph(const Graph &h, const GraphicGroup &g, const Seed &seed,
                         int zero) {
  if (g.n < 1) throw PreconditionError("empty group");
  check_index(g, zero);
  Encryption out;
  if (auto *map = std::get_if<std::vector<int>>(&seed)) {
    if (static_cast<int>(map->size()) != h.p)
      throw PreconditionError("seed map needs one element per vertex");
    for (int x : *map) check_index(g, x);
    out.vertex = *map;
  } else {
    std::mt19937 rng(static_cast<std::uint32_t>(std::get<std::uint64_t>(seed)));
    for (int v = 0; v < h.p; ++v) out.vertex.push_back(1 + static_cast<int>(rng() % g.n));
  }
  for (auto [u, v] : h.edges) out.edge.push_back(group_add(g, out.vertex[u], out.vertex[v], zero));
  std::vector<int> sorted = out.edge;
  std::sort(sorted.begin(), sorted.end());
  const int q = h.q();
  out.graceful = out.oddGraceful = q > 0;
  for (int i = 0; i < q; ++i) {
    if (sorted[i] != i + 1) out.graceful = false;
    if (sorted[i] != 2 * i + 1) out.oddGraceful = false;
  }
  return out;
}

} // namespace topsnut
