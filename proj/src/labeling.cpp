#include "topsnut/labeling.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

int mod(long long a, long long m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<int> range(int lo, int hi, int step = 1) {
  std::vector<int> v;
  for (int x = lo; x <= hi; x += step) v.push_back(x);
  return v;
}

std::vector<int> odd_set(int q) { return range(1, 2 * q - 1, 2); }

std::vector<int> progression(int k, int d, int q) {
  std::vector<int> v;
  for (int i = 0; i < q; ++i) v.push_back(k + i * d);
  return v;
}

std::string vname(int v) { return "v" + std::to_string(v); }
std::string ename(const Graph &g, int i) {
  return "e" + std::to_string(i) + "(" + std::to_string(g.edges[i].first) + "," +
         std::to_string(g.edges[i].second) + ")";
}

const std::map<Kind, std::string> &names() {
  static const std::map<Kind, std::string> table = {
      {Kind::Graceful, "graceful"},
      {Kind::OddGraceful, "odd-graceful"},
      {Kind::SetOrderedGraceful, "set-ordered-graceful"},
      {Kind::SetOrderedOddGraceful, "set-ordered-odd-graceful"},
      {Kind::StronglyGraceful, "strongly-graceful"},
      {Kind::StronglyOddGraceful, "strongly-odd-graceful"},
      {Kind::KGraceful, "k-graceful"},
      {Kind::KdGraceful, "kd-graceful"},
      {Kind::KdArithmetic, "kd-arithmetic"},
      {Kind::KdEdgeAntimagicTotal, "kd-edge-antimagic-total"},
      {Kind::KdHarmonious, "kd-harmonious"},
      {Kind::EdgeMagicTotal, "edge-magic-total"},
      {Kind::SuperEdgeMagicTotal, "super-edge-magic-total"},
      {Kind::EdgeMagicGraceful, "edge-magic-graceful"},
      {Kind::EdgeMagicTotalGraceful, "edge-magic-total-graceful"},
      {Kind::KLambdaMagic, "k-lambda-magic"},
      {Kind::Felicitous, "felicitous"},
      {Kind::Harmonious, "harmonious"},
      {Kind::OddElegant, "odd-elegant"},
      {Kind::TotalGraceful, "total-graceful"},
      {Kind::GcdGraceful, "gcd-graceful"},
      {Kind::GcdOddGraceful, "gcd-odd-graceful"},
      {Kind::EdgeDifference, "edge-difference"},
      {Kind::GracefulDifference, "graceful-difference"},
      {Kind::FelicitousDifference, "felicitous-difference"},
      {Kind::Custom, "custom"},
      {Kind::EvenHarmonious, "even-harmonious"},
      {Kind::OddHarmonious, "odd-harmonious"},
      {Kind::KEvenSequential, "k-even-sequential"},
      {Kind::StronglyCHarmonious, "strongly-c-harmonious"},
      {Kind::StronglyOddHarmonious, "strongly-odd-harmonious"},
      {Kind::KdGracefulTotal, "kd-graceful-total"},
      {Kind::SixC, "6c"},
  };
  return table;
}

bool is_set_ordered_kind(Kind k) {
  return k == Kind::SetOrderedGraceful || k == Kind::SetOrderedOddGraceful;
}

// Kinds whose edge equation F(f(u), f(uv), f(v)) is a single constant.
bool is_magic_kind(Kind k) {
  switch (k) {
  case Kind::EdgeMagicTotal:
  case Kind::SuperEdgeMagicTotal:
  case Kind::EdgeMagicGraceful:
  case Kind::EdgeMagicTotalGraceful:
  case Kind::KLambdaMagic:
  case Kind::EdgeDifference:
  case Kind::GracefulDifference:
  case Kind::FelicitousDifference:
    return true;
  default:
    return false;
  }
}

int magic_value(Kind kind, int fu, int fe, int fv, int lambda) {
  switch (kind) {
  case Kind::EdgeMagicTotal:
  case Kind::SuperEdgeMagicTotal:
    return fu + fe + fv;
  case Kind::EdgeMagicGraceful:
  case Kind::FelicitousDifference:
    return std::abs(fu + fv - fe);
  case Kind::EdgeMagicTotalGraceful:
  case Kind::EdgeDifference:
    return fe + std::abs(fu - fv);
  case Kind::GracefulDifference:
    return std::abs(std::abs(fu - fv) - fe);
  case Kind::KLambdaMagic:
    return fu + fv - lambda * fe;
  default:
    return 0;
  }
}

// Kuhn's augmenting paths; returns true if every left node gets a partner.
bool perfect_matching(int n, const std::vector<std::vector<int>> &allowed) {
  std::vector<int> owner(n, -1);
  std::function<bool(int, std::vector<bool> &)> grab = [&](int a,
                                                           std::vector<bool> &seen) {
    for (int b : allowed[a]) {
      if (seen[b]) continue;
      seen[b] = true;
      if (owner[b] < 0 || grab(owner[b], seen)) {
        owner[b] = a;
        return true;
      }
    }
    return false;
  };
  for (int a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    if (!grab(a, seen)) return false;
  }
  return true;
}

void check_multiset(VerifyReport &r, std::vector<int> got, std::vector<int> want,
                    const std::string &condition) {
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got == want) return;
  std::vector<int> extra, missing;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                      std::back_inserter(extra));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  std::string w;
  if (!extra.empty()) w += "unexpected color " + std::to_string(extra.front());
  if (!missing.empty())
    w += std::string(w.empty() ? "" : ", ") + "missing color " +
         std::to_string(missing.front());
  r.fail(condition, w);
}

void check_range(VerifyReport &r, const std::vector<int> &colors, int lo, int hi,
                 const std::string &condition, const std::string &prefix = "v") {
  for (size_t i = 0; i < colors.size(); ++i)
    if (colors[i] < lo || colors[i] > hi) {
      r.fail(condition, prefix + std::to_string(i) + "=" +
                            std::to_string(colors[i]) + " outside [" +
                            std::to_string(lo) + "," + std::to_string(hi) + "]");
      return;
    }
}

// repeatsAllowed: number of label values that may appear on exactly two vertices
void check_injective(VerifyReport &r, const std::vector<int> &colors,
                     int repeatsAllowed = 0) {
  std::map<int, std::vector<int>> at;
  for (size_t v = 0; v < colors.size(); ++v) at[colors[v]].push_back(static_cast<int>(v));
  int repeats = 0;
  for (auto &[c, vs] : at) {
    if (vs.size() == 1) continue;
    if (vs.size() == 2 && repeats < repeatsAllowed) {
      ++repeats;
      continue;
    }
    r.fail("vertex-injective", vname(vs[0]) + " and " + vname(vs[1]) +
                                   " share color " + std::to_string(c));
    return;
  }
}

void check_bijection(VerifyReport &r, const Graph &g, const Labeling &f) {
  int n = g.p + g.q();
  std::vector<int> seen(n + 1, -1);
  auto visit = [&](int c, const std::string &who) {
    if (c < 1 || c > n) {
      r.fail("bijection", who + "=" + std::to_string(c) + " outside [1," +
                              std::to_string(n) + "]");
      return false;
    }
    if (seen[c] >= 0) {
      r.fail("bijection", "color " + std::to_string(c) + " used twice");
      return false;
    }
    seen[c] = 1;
    return true;
  };
  for (int v = 0; v < g.p; ++v)
    if (!visit(f.vertex[v], vname(v))) return;
  for (int i = 0; i < g.q(); ++i)
    if (!visit((*f.edge)[i], ename(g, i))) return;
}

void check_matching(VerifyReport &r, const Graph &g, const std::vector<int> &c,
                    int target, const std::optional<std::vector<int>> &declared) {
  if (declared) {
    std::vector<int> cover(g.p, 0);
    for (int i : *declared) {
      if (i < 0 || i >= g.q()) {
        r.fail("matching", "edge index " + std::to_string(i) + " out of range");
        return;
      }
      auto [u, v] = g.edges[i];
      ++cover[u];
      ++cover[v];
      if (c[u] + c[v] != target) {
        r.fail("matching", ename(g, i) + " sums to " + std::to_string(c[u] + c[v]));
        return;
      }
    }
    for (int v = 0; v < g.p; ++v)
      if (cover[v] != 1) {
        r.fail("matching", vname(v) + " covered " + std::to_string(cover[v]) +
                               " times");
        return;
      }
    return;
  }
  // labels are injective here, so the partner of v is forced
  std::map<int, int> byColor;
  for (int v = 0; v < g.p; ++v) byColor[c[v]] = v;
  for (int v = 0; v < g.p; ++v) {
    auto it = byColor.find(target - c[v]);
    if (it == byColor.end() || it->second == v || !g.has_edge(v, it->second)) {
      r.fail("matching", vname(v) + " has no partner summing to " +
                             std::to_string(target));
      return;
    }
  }
}

} // namespace

int EdgeRule::apply(int a, int b) const {
  switch (rule) {
  case Rule::AbsDiff:
    return std::abs(a - b);
  case Rule::Sum:
    return a + b;
  case Rule::SumMod:
    return mod(static_cast<long long>(a) + b, m);
  case Rule::Gcd:
    return std::gcd(a, b);
  case Rule::SumPlusModStar:
    return k + mod(static_cast<long long>(a) + b - k, m);
  case Rule::SumEvenModStar: {
    long long s = static_cast<long long>(a) + b;
    if (s % 2 != 0) ++s;
    return k + mod(s - k, m);
  }
  }
  return 0;
}

int induced_edge_color(const Graph &g, const Labeling &f, const EdgeRule &rule,
                       int edge) {
  if (edge < 0 || edge >= g.q()) throw PreconditionError("edge index out of range");
  auto [u, v] = g.edges[edge];
  if (u >= static_cast<int>(f.vertex.size()) || v >= static_cast<int>(f.vertex.size()))
    throw PreconditionError("uncolored endpoint");
  if ((rule.rule == Rule::SumMod || rule.rule == Rule::SumPlusModStar ||
       rule.rule == Rule::SumEvenModStar) &&
      rule.m < 1)
    throw PreconditionError("modulus must be at least 1");
  return rule.apply(f.vertex[u], f.vertex[v]);
}

std::string kind_name(Kind kind) { return names().at(kind); }

std::optional<Kind> kind_from_name(const std::string &name) {
  for (auto &[k, n] : names())
    if (n == name) return k;
  return std::nullopt;
}

std::vector<Kind> all_kinds() {
  std::vector<Kind> out;
  for (auto &[k, n] : names()) out.push_back(k);
  return out;
}

void VerifyReport::fail(std::string condition, std::string witness) {
  pass = false;
  failures.push_back({std::move(condition), std::move(witness)});
}

bool VerifyReport::has(const std::string &condition) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const Failure &x) { return x.condition == condition; });
}

KindTraits kind_traits(const Graph &g, const VerifierSpec &spec) {
  const int p = g.p, q = g.q();
  const int k = spec.k.value_or(1), d = spec.d;
  if (d < 1) throw PreconditionError("d must be at least 1");
  KindTraits t;
  auto induced = [&](int lo, int hi, EdgeRule rule, std::vector<int> edges) {
    t.injective = true;
    t.lo = lo;
    t.hi = hi;
    t.rule = rule;
    std::sort(edges.begin(), edges.end());
    t.distinctEdges = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
    t.edges = std::move(edges);
  };
  auto totalKind = [&](bool bijective) {
    t.total = true;
    t.bijective = bijective;
    t.injective = bijective;
    t.lo = t.edgeLo = 1;
    t.hi = t.edgeHi = spec.bound.value_or(p + q);
  };
  const EdgeRule abs{Rule::AbsDiff};
  const int qm = std::max(q, 1);
  switch (spec.kind) {
  case Kind::Graceful:
  case Kind::SetOrderedGraceful:
  case Kind::StronglyGraceful:
    induced(0, q, abs, range(1, q));
    t.graceful_family = true;
    break;
  case Kind::OddGraceful:
  case Kind::SetOrderedOddGraceful:
  case Kind::StronglyOddGraceful:
    induced(0, 2 * q - 1, abs, odd_set(q));
    t.graceful_family = true;
    break;
  case Kind::KGraceful:
    induced(0, q + k - 1, abs, range(k, q + k - 1));
    t.graceful_family = true;
    break;
  case Kind::KdGraceful:
    induced(0, k + (q - 1) * d, abs, progression(k, d, q));
    t.graceful_family = true;
    break;
  case Kind::KdArithmetic:
    induced(0, k + (q - 1) * d, {Rule::Sum}, progression(k, d, q));
    break;
  case Kind::KdHarmonious: {
    int hi = k + (q - 1) * d;
    if (spec.treeException && g.is_tree()) hi += d;
    induced(0, hi, {Rule::SumPlusModStar, std::max(q * d, 1), k}, progression(k, d, q));
    break;
  }
  case Kind::Felicitous:
    induced(0, q, {Rule::SumMod, qm}, range(0, q - 1));
    break;
  case Kind::Harmonious:
    induced(0, q - 1, {Rule::SumMod, qm}, range(0, q - 1));
    if (spec.treeException && g.is_tree()) t.injective = false;
    break;
  case Kind::OddElegant:
  case Kind::OddHarmonious:
    induced(0, 2 * q - 1, {Rule::SumMod, 2 * qm}, odd_set(q));
    break;
  case Kind::StronglyOddHarmonious:
    induced(0, q, {Rule::SumMod, 2 * qm}, odd_set(q));
    break;
  case Kind::EvenHarmonious:
    induced(0, 2 * q, {Rule::SumMod, 2 * qm}, range(0, 2 * q - 2, 2));
    break;
  case Kind::KEvenSequential:
    induced(0, 2 * k * q, {Rule::SumEvenModStar, 2 * qm * k, 2 * k},
            progression(2 * k, 2 * k, q));
    break;
  case Kind::StronglyCHarmonious:
    induced(0, q - 1 + ((spec.treeException && g.is_tree()) ? 1 : 0), {Rule::Sum}, {});
    t.edges.reset();
    t.distinctEdges = true;
    break;
  case Kind::GcdGraceful:
    induced(1, spec.bound.value_or(2 * q), {Rule::Gcd}, range(1, q));
    t.injective = false;
    break;
  case Kind::GcdOddGraceful:
    induced(1, spec.bound.value_or(2 * (2 * q - 1)), {Rule::Gcd}, odd_set(q));
    t.injective = false;
    break;
  case Kind::Custom: {
    int top = 0;
    for (int c : spec.targetEdges) top = std::max(top, c);
    induced(0, spec.bound.value_or(top), spec.rule, spec.targetEdges);
    t.injective = spec.injective;
    break;
  }
  case Kind::EdgeMagicTotal:
  case Kind::EdgeMagicGraceful:
  case Kind::EdgeMagicTotalGraceful:
  case Kind::KLambdaMagic:
    totalKind(!spec.coloring);
    break;
  case Kind::SuperEdgeMagicTotal:
  case Kind::KdEdgeAntimagicTotal:
  case Kind::TotalGraceful:
  case Kind::SixC:
    totalKind(true);
    break;
  case Kind::EdgeDifference:
  case Kind::GracefulDifference:
  case Kind::FelicitousDifference:
    totalKind(false);
    break;
  case Kind::KdGracefulTotal:
    t.total = true;
    t.lo = 0;
    t.hi = k + (q - 1) * d;
    t.edgeLo = k;
    t.edgeHi = k + (q - 1) * d;
    t.edges = progression(k, d, q);
    t.distinctEdges = true;
    break;
  }
  return t;
}

std::vector<int> edge_colors(const Graph &g, const Labeling &f,
                             const VerifierSpec &spec) {
  auto t = kind_traits(g, spec);
  if (t.total) {
    if (!f.edge) throw PreconditionError("labeling has no edge colors");
    return *f.edge;
  }
  std::vector<int> out;
  for (int i = 0; i < g.q(); ++i) out.push_back(induced_edge_color(g, f, *t.rule, i));
  return out;
}

std::optional<int> set_order_threshold(const Graph &g, const std::vector<int> &c) {
  int lowTop = std::numeric_limits<int>::min();
  int highBottom = std::numeric_limits<int>::max();
  for (auto [u, v] : g.edges) {
    lowTop = std::max(lowTop, std::min(c[u], c[v]));
    highBottom = std::min(highBottom, std::max(c[u], c[v]));
  }
  if (g.q() == 0) return 0;
  if (lowTop < highBottom) return lowTop;
  return std::nullopt;
}

VerifyReport verify(const Graph &g, const Labeling &f, const VerifierSpec &spec) {
  if (spec.kind == Kind::SixC) return verify_6C(g, f).report;
  const int p = g.p, q = g.q();
  if (static_cast<int>(f.vertex.size()) != p)
    throw PreconditionError("labeling colors " + std::to_string(f.vertex.size()) +
                            " vertices, graph has " + std::to_string(p));
  if (spec.kind == Kind::KLambdaMagic && spec.lambda == 0)
    throw PreconditionError("k-lambda-magic needs lambda != 0");
  auto t = kind_traits(g, spec);
  if (t.total && (!f.edge || static_cast<int>(f.edge->size()) != q))
    throw PreconditionError(kind_name(spec.kind) + " needs one color per edge");
  if (f.edge && static_cast<int>(f.edge->size()) != q)
    throw PreconditionError("edge colors do not match the edge count");

  VerifyReport r;
  const auto &c = f.vertex;

  if (!t.total) {
    std::vector<int> colors;
    for (int i = 0; i < q; ++i) colors.push_back(t.rule->apply(c[g.edges[i].first], c[g.edges[i].second]));
    if (f.edge)
      for (int i = 0; i < q; ++i)
        if ((*f.edge)[i] != colors[i]) {
          r.fail("edge-rule", ename(g, i) + " colored " + std::to_string((*f.edge)[i]) +
                                  ", rule gives " + std::to_string(colors[i]));
          break;
        }
    check_range(r, c, t.lo, t.hi, "vertex-range");
    if (t.injective) {
      check_injective(r, c);
    } else if (spec.kind == Kind::Harmonious) {
      check_injective(r, c, 1);
    }
    if (t.edges) {
      check_multiset(r, colors, *t.edges, "edge-set");
    } else if (spec.kind == Kind::StronglyCHarmonious && q > 0) {
      int lo = *std::min_element(colors.begin(), colors.end());
      check_multiset(r, colors, range(lo, lo + q - 1), "edge-set");
      if (r.pass) r.derivedConstant = lo;
    }
    if (is_set_ordered_kind(spec.kind) && !set_order_threshold(g, c))
      r.fail("set-ordered", "no threshold splits every edge");
    if (spec.kind == Kind::StronglyGraceful)
      check_matching(r, g, c, q, spec.matching);
    if (spec.kind == Kind::StronglyOddGraceful)
      check_matching(r, g, c, 2 * q - 1, spec.matching);
    return r;
  }

  const auto &e = *f.edge;
  for (int x : c)
    if (x < 0) {
      r.fail("vertex-range", "negative color");
      break;
    }
  if (t.bijective) check_bijection(r, g, f);

  if (is_magic_kind(spec.kind)) {
    if (q > 0) {
      std::optional<int> want = spec.k;
      for (int i = 0; i < q; ++i) {
        auto [u, v] = g.edges[i];
        int val = magic_value(spec.kind, c[u], e[i], c[v], spec.lambda);
        if (!want) want = val;
        if (val != *want) {
          r.fail("magic", ename(g, i) + " gives " + std::to_string(val) +
                              ", expected " + std::to_string(*want));
          break;
        }
      }
      if ((spec.kind == Kind::EdgeMagicTotal || spec.kind == Kind::SuperEdgeMagicTotal ||
           spec.kind == Kind::EdgeDifference) &&
          *want <= 0)
        r.fail("magic", "constant must be positive");
      if (!r.has("magic")) r.derivedConstant = want;
    }
    if (spec.kind == Kind::SuperEdgeMagicTotal) {
      std::vector<int> vs = c;
      check_multiset(r, vs, range(1, p), "super");
    }
    return r;
  }

  switch (spec.kind) {
  case Kind::KdEdgeAntimagicTotal: {
    std::vector<int> sums;
    for (int i = 0; i < q; ++i) sums.push_back(c[g.edges[i].first] + e[i] + c[g.edges[i].second]);
    check_multiset(r, sums, progression(spec.k.value_or(1), spec.d, q), "edge-set");
    break;
  }
  case Kind::TotalGraceful: {
    for (int i = 0; i < q; ++i) {
      auto [u, v] = g.edges[i];
      if (e[i] != std::abs(c[u] - c[v])) {
        r.fail("edge-rule", ename(g, i) + " is not |f(u)-f(v)|");
        break;
      }
    }
    check_injective(r, c);
    std::vector<int> es = e;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
      r.fail("edge-injective", "two edges share a color");
    break;
  }
  case Kind::KdGracefulTotal: {
    auto b = bipartition(g);
    if (!b) {
      r.fail("bipartite", "graph has an odd cycle");
      break;
    }
    const int k = spec.k.value_or(1), d = spec.d;
    auto inX = [&](int x) { return x >= 0 && x % d == 0; };
    auto inY = [&](int x) { return x >= k && (x - k) % d == 0; };
    for (int i = 0; i < q; ++i) {
      auto [u, v] = g.edges[i];
      if (e[i] != std::abs(c[u] - c[v])) {
        r.fail("edge-rule", ename(g, i) + " is not |f(u)-f(v)|");
        break;
      }
    }
    // each component may put its X side on either color class
    auto adj = g.adjacency();
    std::vector<int> comp(p, -1);
    int ncomp = 0;
    for (int s = 0; s < p; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = ncomp;
      std::vector<int> members;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        members.push_back(u);
        for (int w : adj[u])
          if (comp[w] < 0) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
      }
      bool okStraight = true, okFlipped = true;
      for (int u : members) {
        bool x = b->side[u] == 0;
        if (!(x ? inX(c[u]) : inY(c[u]))) okStraight = false;
        if (!(x ? inY(c[u]) : inX(c[u]))) okFlipped = false;
      }
      if (!okStraight && !okFlipped)
        r.fail("color-classes", "component of " + vname(s) +
                                    " mixes the vertex color classes");
      ++ncomp;
    }
    check_multiset(r, e, *t.edges, "edge-set");
    break;
  }
  default:
    break;
  }
  return r;
}

MagicProfile magic_profile(const Graph &g, const Labeling &f) {
  if (!f.edge || static_cast<int>(f.edge->size()) != g.q())
    throw PreconditionError("magic_profile needs a total labeling");
  MagicProfile m;
  if (g.q() == 0) return m;
  auto constant = [&](Kind kind) -> std::optional<int> {
    std::optional<int> want;
    for (int i = 0; i < g.q(); ++i) {
      auto [u, v] = g.edges[i];
      int val = magic_value(kind, f.vertex[u], (*f.edge)[i], f.vertex[v], 0);
      if (!want) want = val;
      if (val != *want) return std::nullopt;
    }
    return want;
  };
  m.sum = constant(Kind::EdgeMagicTotal);
  m.edgeDifference = constant(Kind::EdgeDifference);
  m.felicitousDifference = constant(Kind::FelicitousDifference);
  m.gracefulDifference = constant(Kind::GracefulDifference);
  return m;
}

SixCReport verify_6C(const Graph &g, const Labeling &f) {
  const int p = g.p, q = g.q(), n = p + q;
  if (static_cast<int>(f.vertex.size()) != p || !f.edge ||
      static_cast<int>(f.edge->size()) != q)
    throw PreconditionError("6C labeling must color every vertex and edge");
  {
    VerifyReport b;
    check_bijection(b, g, f);
    if (!b.pass) throw PreconditionError("6C labeling is not a bijection onto [1,p+q]");
  }
  if (!bipartition(g)) throw PreconditionError("6C labeling needs a bipartite graph");
  const auto &c = f.vertex;
  const auto &e = *f.edge;
  SixCReport out;
  auto diff = [&](int i) { return std::abs(c[g.edges[i].first] - c[g.edges[i].second]); };

  // (i) e-magic
  bool emagic = q > 0;
  for (int i = 0; i < q && emagic; ++i)
    emagic = e[i] + diff(i) == e[0] + diff(0);
  if (emagic) out.k = e[0] + diff(0);

  // (ii) ee-difference: every edge paired with another edge
  std::vector<std::vector<int>> allowed(q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (a != b && (e[a] == diff(b) || e[a] == 2 * n - diff(b))) allowed[a].push_back(b);
  bool eeDiff = q > 0 && perfect_matching(q, allowed);

  // (iii) ee-balanced with constant k'
  std::vector<int> s(q);
  for (int i = 0; i < q; ++i) s[i] = diff(i) - e[i];
  bool eeBal = false;
  if (q > 1) {
    std::set<int> candidates;
    for (int b = 1; b < q; ++b) {
      candidates.insert(s[0] + s[b]);
      candidates.insert(2 * n + s[0] + s[b]);
    }
    for (int kp : candidates) {
      std::vector<std::vector<int>> ok(q);
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
          if (a != b && (s[a] + s[b] == kp || 2 * n + s[a] + s[b] == kp)) ok[a].push_back(b);
      if (perfect_matching(q, ok)) {
        eeBal = true;
        out.kPrime = kp;
        break;
      }
    }
  }

  // (iv) EV-ordered
  std::set<int> V(c.begin(), c.end()), E(e.begin(), e.end());
  bool evOrdered = false;
  if (p > 0 && q > 0) {
    evOrdered = *V.begin() > *E.rbegin() || *V.rbegin() < *E.begin() ||
                std::includes(E.begin(), E.end(), V.begin(), V.end()) ||
                std::includes(V.begin(), V.end(), E.begin(), E.end()) ||
                (std::all_of(c.begin(), c.end(), [](int x) { return x % 2 == 1; }) &&
                 std::all_of(e.begin(), e.end(), [](int x) { return x % 2 == 0; }));
  }

  // (v) ve-matching with constant k'' and at most one singular vertex
  bool veMatch = false;
  const int singular = (p + q + 1) / 2;
  if (q > 0) {
    std::map<int, int> vertexOf;
    for (int v = 0; v < p; ++v) vertexOf[c[v]] = v;
    for (int v = 0; v < p && !veMatch; ++v) {
      int kk = e[0] + c[v];
      std::vector<bool> used(p, false);
      bool ok = true;
      for (int i = 0; i < q && ok; ++i) {
        auto it = vertexOf.find(kk - e[i]);
        if (it == vertexOf.end()) ok = false;
        else used[it->second] = true;
      }
      int unmatched = 0;
      for (int w = 0; w < p && ok; ++w)
        if (!used[w]) {
          ++unmatched;
          if (c[w] != singular) ok = false;
        }
      if (ok && unmatched <= 1) {
        veMatch = true;
        out.kDoublePrime = kk;
      }
    }
  }

  // (vi) set-ordered
  bool setOrdered = set_order_threshold(g, c).has_value();

  out.flags = {emagic, eeDiff, eeBal, evOrdered, veMatch, setOrdered};
  const char *ids[6] = {"e-magic", "ee-difference", "ee-balanced",
                        "ev-ordered", "ve-matching", "set-ordered"};
  for (int i = 0; i < 6; ++i)
    if (!out.flags[i]) out.report.fail(ids[i], "condition does not hold");
  if (emagic) out.report.derivedConstant = out.k;
  return out;
}

TwinReport verify_twin_pair(const Graph &g1, const Labeling &f1, const Graph &g2,
                            const Labeling &f2, TwinKind kind) {
  if (g1.q() != g2.q()) throw PreconditionError("twin pair needs equal edge counts");
  const int q = g1.q();
  TwinReport out;
  auto absorb = [&](const VerifyReport &r, const std::string &tag) {
    for (auto &x : r.failures) out.report.fail(tag + ":" + x.condition, x.witness);
  };
  if (kind == TwinKind::OddGraceful) {
    absorb(verify(g1, f1, VerifierSpec::of(Kind::OddGraceful)), "first");
    VerifyReport r2;
    if (static_cast<int>(f2.vertex.size()) != g2.p)
      throw PreconditionError("second labeling has the wrong size");
    std::vector<int> colors;
    for (auto [u, v] : g2.edges) colors.push_back(std::abs(f2.vertex[u] - f2.vertex[v]));
    check_multiset(r2, colors, odd_set(q), "edge-set");
    check_range(r2, f2.vertex, 0, 2 * q - 1, "vertex-range");
    absorb(r2, "second");
  } else {
    absorb(verify(g1, f1, VerifierSpec::of(Kind::OddElegant)), "first");
    absorb(verify(g2, f2, VerifierSpec::of(Kind::OddElegant)), "second");
  }
  std::set<int> a(f1.vertex.begin(), f1.vertex.end()), b(f2.vertex.begin(), f2.vertex.end());
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  out.overlap = static_cast<int>(both.size());
  out.report.derivedConstant = out.overlap;
  return out;
}

VerifyReport verify_flawed(const std::vector<Graph> &parts,
                           const std::vector<Edge> &estar, const VerifierSpec &spec,
                           const Labeling &f) {
  Graph joined = add_edges(disjoint_union(parts).graph, estar);
  if (!joined.connected())
    throw PreconditionError("parts plus the added edges are disconnected");
  return verify(joined, f, spec);
}

} // namespace topsnut
