#include "topsnut/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

Bipartition resolve(const Graph &g, const Labeling &f,
                    const std::optional<Bipartition> &b) {
  if (static_cast<int>(f.vertex.size()) != g.p)
    throw PreconditionError("labeling does not match the graph");
  if (!b) return oriented_bipartition(g, f.vertex);
  if (static_cast<int>(b->side.size()) != g.p)
    throw PreconditionError("bipartition does not match the graph");
  for (auto [u, v] : g.edges)
    if (b->side[u] == b->side[v])
      throw PreconditionError("edge inside one side of the bipartition");
  return *b;
}

// Vertices of one side ordered by label; ties are rejected.
std::vector<int> ranked(const std::vector<int> &side, const std::vector<int> &c) {
  std::vector<int> out = side;
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    return c[a] != c[b] ? c[a] < c[b] : a < b;
  });
  for (size_t i = 1; i < out.size(); ++i)
    if (c[out[i]] == c[out[i - 1]])
      throw PreconditionError("labels repeat within one side");
  return out;
}

std::string describe(const VerifyReport &r) {
  std::string s;
  for (auto &x : r.failures) s += " " + x.condition + " (" + x.witness + ")";
  return s;
}

TransformResult checked(const Graph &g, Labeling out, VerifierSpec target,
                        const std::string &what) {
  TransformResult r{std::move(out), target, {}};
  r.report = verify(g, r.labeling, target);
  if (!r.report.pass)
    throw TransformFailed(what + " output fails " + kind_name(target.kind) + ":" +
                          describe(r.report));
  return r;
}

void require_set_ordered_graceful(const Graph &g, const Labeling &f) {
  if (static_cast<int>(f.vertex.size()) != g.p)
    throw PreconditionError("labeling does not match the graph");
  Labeling v{f.vertex, std::nullopt};
  if (!verify(g, v, VerifierSpec::of(Kind::SetOrderedGraceful)).pass)
    throw PreconditionError("labeling is not set-ordered graceful");
}

struct Canonical {
  std::vector<int> xs, ys; // x_1..x_s, y_1..y_t
  std::vector<int> f;      // canonical labels
  int s = 0, t = 0;
  int yrev(int v) const {   // f(y_{t-j+1}) for v = y_j
    int j = static_cast<int>(std::find(ys.begin(), ys.end(), v) - ys.begin());
    return f[ys[t - 1 - j]];
  }
  int xrev(int v) const {
    int i = static_cast<int>(std::find(xs.begin(), xs.end(), v) - xs.begin());
    return f[xs[s - 1 - i]];
  }
};

Canonical canonical(const Graph &t, const Labeling &f) {
  if (!t.is_tree()) throw PreconditionError("transform needs a tree");
  require_set_ordered_graceful(t, f);
  auto b = oriented_bipartition(t, f.vertex);
  Canonical c;
  c.xs = ranked(b.X, f.vertex);
  c.ys = ranked(b.Y, f.vertex);
  c.s = static_cast<int>(c.xs.size());
  c.t = static_cast<int>(c.ys.size());
  c.f.assign(t.p, 0);
  for (int i = 0; i < c.s; ++i) c.f[c.xs[i]] = i;
  for (int j = 0; j < c.t; ++j) c.f[c.ys[j]] = c.s + j;
  return c;
}

void fill_induced(const Graph &g, Labeling &f, EdgeRule rule) {
  std::vector<int> e;
  for (int i = 0; i < g.q(); ++i) e.push_back(induced_edge_color(g, f, rule, i));
  f.edge = e;
}

} // namespace

Elements all_vertices(const Graph &g) {
  Elements s;
  s.vertices.resize(g.p);
  std::iota(s.vertices.begin(), s.vertices.end(), 0);
  return s;
}

Elements all_elements(const Graph &g) {
  Elements s = all_vertices(g);
  s.edges.resize(g.q());
  std::iota(s.edges.begin(), s.edges.end(), 0);
  return s;
}

Labeling dual(const Labeling &f, const Elements &s) {
  if (s.vertices.empty() && s.edges.empty()) throw PreconditionError("empty element set");
  if (!s.edges.empty() && !f.edge) throw PreconditionError("labeling has no edge colors");
  std::vector<int> values;
  for (int v : s.vertices) {
    if (v < 0 || v >= static_cast<int>(f.vertex.size()))
      throw PreconditionError("vertex outside the labeling");
    values.push_back(f.vertex[v]);
  }
  for (int e : s.edges) {
    if (e < 0 || e >= static_cast<int>(f.edge->size()))
      throw PreconditionError("edge outside the labeling");
    values.push_back((*f.edge)[e]);
  }
  auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  int sum = *mn + *mx;
  Labeling out = f;
  for (int v : std::set<int>(s.vertices.begin(), s.vertices.end()))
    out.vertex[v] = sum - f.vertex[v];
  for (int e : std::set<int>(s.edges.begin(), s.edges.end()))
    (*out.edge)[e] = sum - (*f.edge)[e];
  return out;
}

Bipartition oriented_bipartition(const Graph &g, const std::vector<int> &c) {
  auto b = bipartition(g);
  if (!b) throw PreconditionError("graph is not bipartite");
  if (static_cast<int>(c.size()) != g.p)
    throw PreconditionError("labeling does not match the graph");
  std::vector<int> side(g.p, 0);
  if (auto t = set_order_threshold(g, c); t && g.q() > 0) {
    for (int v = 0; v < g.p; ++v) side[v] = c[v] <= *t ? 0 : 1;
  } else {
    auto adj = g.adjacency();
    std::vector<int> comp(g.p, -1);
    for (int s = 0; s < g.p; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> members{s}, stack{s};
      comp[s] = s;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
          if (comp[w] < 0) {
            comp[w] = s;
            members.push_back(w);
            stack.push_back(w);
          }
      }
      int low = *std::min_element(members.begin(), members.end(),
                                  [&](int a, int b2) { return c[a] < c[b2]; });
      for (int u : members) side[u] = b->side[u] == b->side[low] ? 0 : 1;
    }
  }
  // isolated vertices: keep them wherever the threshold put them
  Bipartition out;
  out.side = side;
  for (int v = 0; v < g.p; ++v) (side[v] == 0 ? out.X : out.Y).push_back(v);
  return out;
}

Labeling partial_dual(const Graph &g, const Labeling &f, Side side,
                      const std::optional<Bipartition> &b) {
  auto bip = resolve(g, f, b);
  const auto &vs = side == Side::X ? bip.X : bip.Y;
  if (vs.empty()) return f;
  Elements s;
  s.vertices = vs;
  return dual(f, s);
}

Labeling reciprocal(const Graph &g, const Labeling &f, Side side,
                    const std::optional<Bipartition> &b) {
  auto bip = resolve(g, f, b);
  auto order = ranked(side == Side::X ? bip.X : bip.Y, f.vertex);
  Labeling out = f;
  const int n = static_cast<int>(order.size());
  for (int r = 0; r < n; ++r) out.vertex[order[r]] = f.vertex[order[n - 1 - r]];
  return out;
}

Labeling linear(const Graph &g, const Labeling &f, int a, int b,
                const std::optional<Bipartition> &bip) {
  if (a < 1 || b < 0) throw PreconditionError("linear map needs a >= 1 and b >= 0");
  auto B = resolve(g, f, bip);
  Labeling out{f.vertex, std::nullopt};
  for (int v = 0; v < g.p; ++v)
    out.vertex[v] = B.side[v] == 0 ? a * f.vertex[v] : b + a * f.vertex[v];
  return out;
}

Labeling canonical_set_ordered(const Graph &t, const Labeling &f) {
  return {canonical(t, f).f, std::nullopt};
}

TransformResult harmonious_family(const Graph &t, const Labeling &f, Member m, int k,
                                  int d) {
  auto c = canonical(t, f);
  const int q = t.q();
  if (k < 1 || d < 1) throw PreconditionError("k and d must be at least 1");
  if (m == Member::G6 && std::abs(c.s - c.t) != 1)
    throw PreconditionError("g6 needs sides differing in size by one");
  Labeling out{std::vector<int>(t.p, 0), std::nullopt};
  VerifierSpec target;
  for (int v = 0; v < t.p; ++v) {
    bool x = std::find(c.xs.begin(), c.xs.end(), v) != c.xs.end();
    int fx = c.f[v];
    int fy = x ? 0 : c.yrev(v);
    int &g = out.vertex[v];
    switch (m) {
    case Member::G1:
      g = (x ? fx : fy) % std::max(q, 1);
      break;
    case Member::G2:
      g = 2 * (x ? fx : fy);
      break;
    case Member::G3:
    case Member::G6:
      g = x ? 2 * fx : 2 * fy - 1;
      break;
    case Member::G4:
      g = 2 * k * (x ? fx : fy);
      break;
    case Member::G5:
      g = x ? fx : fy;
      break;
    case Member::G7:
      g = x ? d * fx : k + d * fy;
      break;
    }
  }
  switch (m) {
  case Member::G1:
    target = VerifierSpec::of(Kind::Harmonious);
    target.treeException = true;
    break;
  case Member::G2:
    target = VerifierSpec::of(Kind::EvenHarmonious);
    break;
  case Member::G3:
  case Member::G6:
    target = VerifierSpec::of(Kind::OddHarmonious);
    break;
  case Member::G4:
    target = VerifierSpec::of(Kind::KEvenSequential);
    target.k = k;
    break;
  case Member::G5:
    target = VerifierSpec::of(Kind::StronglyCHarmonious);
    target.treeException = true;
    break;
  case Member::G7:
    target = VerifierSpec::of(Kind::KdHarmonious);
    target.k = k;
    target.d = d;
    target.treeException = true;
    break;
  }
  return checked(t, out, target, "g" + std::to_string(static_cast<int>(m)));
}

VerifyReport verify_g6_literal(const Graph &t, const Labeling &g6) {
  return verify(t, g6, VerifierSpec::of(Kind::StronglyOddHarmonious));
}

TransformResult equivalent_transform(const Graph &t, const Labeling &f,
                                     Equivalence target) {
  auto c = canonical(t, f);
  const int p = t.p, q = t.q();
  Labeling out{std::vector<int>(p, 0), std::nullopt};
  auto isX = [&](int v) { return std::find(c.xs.begin(), c.xs.end(), v) != c.xs.end(); };
  auto color = [&](int i) { return std::abs(c.f[t.edges[i].first] - c.f[t.edges[i].second]); };
  switch (target) {
  case Equivalence::OddGraceful: {
    for (int v = 0; v < p; ++v) out.vertex[v] = isX(v) ? 2 * c.f[v] : 2 * c.f[v] - 1;
    fill_induced(t, out, {Rule::AbsDiff});
    return checked(t, out, VerifierSpec::of(Kind::OddGraceful), "odd-graceful transform");
  }
  case Equivalence::EdgeMagicTotal: {
    for (int v = 0; v < p; ++v) out.vertex[v] = (isX(v) ? c.xrev(v) : c.f[v]) + 1;
    std::vector<int> e;
    for (int i = 0; i < q; ++i) e.push_back(p + q + 1 - color(i));
    out.edge = e;
    return checked(t, out, VerifierSpec::of(Kind::EdgeMagicTotal),
                   "edge-magic transform");
  }
  case Equivalence::OddEvenSeparableEmt: {
    for (int v = 0; v < p; ++v) out.vertex[v] = 2 * (isX(v) ? c.xrev(v) : c.f[v]) + 1;
    std::vector<int> e;
    for (int i = 0; i < q; ++i) e.push_back(2 * (q + 1 - color(i)));
    out.edge = e;
    auto r = checked(t, out, VerifierSpec::of(Kind::EdgeMagicTotal),
                     "odd-even separable transform");
    for (int x : out.vertex)
      if (x % 2 == 0) r.report.fail("parity", "even vertex color " + std::to_string(x));
    for (int x : e)
      if (x % 2 != 0) r.report.fail("parity", "odd edge color " + std::to_string(x));
    if (!r.report.pass) throw TransformFailed("odd-even separable transform breaks parity");
    return r;
  }
  case Equivalence::OddElegant: {
    for (int v = 0; v < p; ++v) out.vertex[v] = isX(v) ? 2 * c.xrev(v) : 2 * c.f[v] - 1;
    fill_induced(t, out, {Rule::SumMod, 2 * std::max(q, 1)});
    return checked(t, out, VerifierSpec::of(Kind::OddElegant), "odd-elegant transform");
  }
  }
  throw PreconditionError("unknown target");
}

TransformResult kd_graceful_from_graceful(const Graph &g, const Labeling &f, int k,
                                          int d) {
  if (k < 1 || d < 1) throw PreconditionError("k and d must be at least 1");
  require_set_ordered_graceful(g, f);
  auto b = oriented_bipartition(g, f.vertex);
  Labeling out{std::vector<int>(g.p, 0), std::nullopt};
  for (int v = 0; v < g.p; ++v)
    out.vertex[v] = b.side[v] == 0 ? d * f.vertex[v] : k - d + d * f.vertex[v];
  VerifierSpec target = VerifierSpec::of(Kind::KdGraceful);
  target.k = k;
  target.d = d;
  return checked(g, out, target, "kd-graceful transform");
}

TransformResult image_pair(const Graph &g, const Labeling &f, int k) {
  if (static_cast<int>(f.vertex.size()) != g.p)
    throw PreconditionError("labeling does not match the graph");
  if (!set_order_threshold(g, f.vertex))
    throw PreconditionError("image pair needs a set-ordered labeling");
  std::vector<int> colors;
  for (auto [u, v] : g.edges) colors.push_back(std::abs(f.vertex[u] - f.vertex[v]));
  int top = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  if (k <= top)
    throw PreconditionError("k must exceed the largest edge color " + std::to_string(top));
  auto b = oriented_bipartition(g, f.vertex);
  Labeling out{std::vector<int>(g.p, 0), std::nullopt};
  for (int v = 0; v < g.p; ++v)
    out.vertex[v] = b.side[v] == 0 ? -f.vertex[v] : k - f.vertex[v];
  if (g.p > 0) {
    int lo = *std::min_element(out.vertex.begin(), out.vertex.end());
    for (int &x : out.vertex) x -= lo;
  }
  std::set<int> distinct(out.vertex.begin(), out.vertex.end());
  if (static_cast<int>(distinct.size()) != g.p)
    throw PreconditionError("no injective mirror exists for k=" + std::to_string(k));
  VerifierSpec target = VerifierSpec::of(Kind::Custom);
  for (int c : colors) target.targetEdges.push_back(k - c);
  target.rule = {Rule::AbsDiff};
  target.bound = *distinct.rbegin();
  return checked(g, out, target, "image pair");
}

LeafAdded leaf_add_kd(const Graph &g, const Labeling &f,
                      const std::vector<int> &leafCounts, int k, int d) {
  if (k < 1 || d < 1) throw PreconditionError("k and d must be at least 1");
  if (static_cast<int>(leafCounts.size()) != g.p)
    throw PreconditionError("one leaf count per vertex expected");
  if (std::any_of(leafCounts.begin(), leafCounts.end(), [](int x) { return x < 0; }))
    throw PreconditionError("negative leaf count");
  if (!g.connected()) throw PreconditionError("leaf adding needs a connected graph");
  VerifierSpec spec = VerifierSpec::of(Kind::KdGracefulTotal);
  spec.k = k;
  spec.d = d;
  if (!verify(g, f, spec).pass)
    throw PreconditionError("labeling is not a (k,d)-gracefully total coloring");
  auto b = bipartition(g);
  const auto &c = f.vertex;
  auto zero = std::find(c.begin(), c.end(), 0);
  if (zero == c.end()) throw PreconditionError("ordering: no vertex colored 0");
  int z = static_cast<int>(zero - c.begin());
  std::vector<int> side = b->side;
  if (side[z] != 0)
    for (int &s : side) s = 1 - s;
  std::vector<int> X, Y;
  for (int v = 0; v < g.p; ++v) (side[v] == 0 ? X : Y).push_back(v);
  auto byColor = [&](std::vector<int> &vs) {
    std::stable_sort(vs.begin(), vs.end(), [&](int a, int b2) { return c[a] < c[b2]; });
  };
  byColor(X);
  byColor(Y);
  if (!X.empty() && !Y.empty() && c[X.back()] > c[Y.front()])
    throw PreconditionError("ordering: max f(X) exceeds min f(Y)");
  for (auto [u, v] : g.edges) {
    int x = side[u] == 0 ? u : v, y = side[u] == 0 ? v : u;
    if (c[y] <= c[x]) throw PreconditionError("ordering: edge with f(y) <= f(x)");
  }

  const int L = std::accumulate(leafCounts.begin(), leafCounts.end(), 0);
  LeafAdded out;
  out.graph = g;
  out.labeling.vertex = c;
  std::vector<int> edgeColors = *f.edge;
  for (int y : Y) out.labeling.vertex[y] += L * d;
  for (int &e : edgeColors) e += L * d;
  int r = 0;
  auto hang = [&](int at, bool fromX) {
    for (int n = 0; n < leafCounts[at]; ++n, ++r) {
      int color = k + r * d;
      int leaf = out.graph.p++;
      out.graph.edges.push_back({at, leaf});
      if (!out.graph.names.empty()) out.graph.names.push_back("");
      edgeColors.push_back(color);
      out.labeling.vertex.push_back(fromX ? c[at] + color
                                          : out.labeling.vertex[at] - color);
    }
  };
  for (int x : X) hang(x, true);
  for (int y : Y) hang(y, false);
  out.labeling.edge = edgeColors;
  out.report = verify(out.graph, out.labeling, spec);
  if (!out.report.pass)
    throw TransformFailed("leaf adding output fails:" + describe(out.report));
  return out;
}

} // namespace topsnut
