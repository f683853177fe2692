#include "topsnut/topcode.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

std::set<int> values(const TopcodeMatrix &t) {
  std::set<int> v(t.X.begin(), t.X.end());
  v.insert(t.Y.begin(), t.Y.end());
  return v;
}

bool is_interval(const std::set<int> &s, int lo, int hi) {
  if (hi < lo) return s.empty();
  return static_cast<int>(s.size()) == hi - lo + 1 && *s.begin() == lo &&
         *s.rbegin() == hi;
}

bool is_odd_set(const std::set<int> &s, int q) {
  if (static_cast<int>(s.size()) != q) return false;
  int want = 1;
  for (int x : s) {
    if (x != want) return false;
    want += 2;
  }
  return true;
}

std::optional<int> constant(const TopcodeMatrix &t,
                            const std::function<int(int, int, int)> &f) {
  std::optional<int> k;
  for (int i = 0; i < t.q(); ++i) {
    int v = f(t.X[i], t.E[i], t.Y[i]);
    if (k && *k != v) return std::nullopt;
    k = v;
  }
  return k;
}

// Value multigraph: vertex per distinct value, edge per column.
struct ValueGraph {
  std::vector<int> value;
  std::vector<std::pair<int, int>> edges;
};

ValueGraph value_graph(const TopcodeMatrix &t) {
  ValueGraph g;
  auto vs = values(t);
  g.value.assign(vs.begin(), vs.end());
  auto id = [&](int x) {
    return static_cast<int>(std::lower_bound(g.value.begin(), g.value.end(), x) -
                            g.value.begin());
  };
  for (int i = 0; i < t.q(); ++i) g.edges.push_back({id(t.X[i]), id(t.Y[i])});
  return g;
}

bool match_from(const ValueGraph &g, std::vector<bool> &covered) {
  int n = static_cast<int>(g.value.size());
  int v = 0;
  while (v < n && covered[v]) ++v;
  if (v == n) return true;
  for (auto [a, b] : g.edges) {
    if (a == b) continue;
    int w = a == v ? b : (b == v ? a : -1);
    if (w < 0 || covered[w]) continue;
    covered[v] = covered[w] = true;
    if (match_from(g, covered)) return true;
    covered[v] = covered[w] = false;
  }
  return false;
}

bool hamilton(const ValueGraph &g) {
  int n = static_cast<int>(g.value.size());
  if (n < 2) return false;
  // multiplicity of each value pair, loops dropped
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (auto [a, b] : g.edges)
    if (a != b) {
      ++mult[a][b];
      ++mult[b][a];
    }
  // a 2-cycle needs two parallel columns
  if (n == 2) return mult[0][1] >= 2;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // fix vertex 0 first; permute the rest
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = mult[order[i]][order[(i + 1) % n]] > 0;
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

bool valid_perm(const std::vector<int> &perm, int q) {
  if (static_cast<int>(perm.size()) != 3 * q) return false;
  std::vector<bool> seen(3 * q, false);
  for (int c : perm) {
    if (c < 0 || c >= 3 * q || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

} // namespace

TopcodeMatrix make_matrix(std::vector<int> X, std::vector<int> E, std::vector<int> Y) {
  if (X.size() != E.size() || Y.size() != E.size())
    throw PreconditionError("matrix rows differ in length");
  for (auto *row : {&X, &E, &Y})
    for (int x : *row)
      if (x < 0) throw PreconditionError("matrix entries must be non-negative");
  return {std::move(X), std::move(E), std::move(Y)};
}

TopcodeMatrix from_labeled_graph(const Graph &g, const Labeling &f, const EdgeRule &rule,
                                 const std::optional<Bipartition> &sides) {
  if (static_cast<int>(f.vertex.size()) != g.p)
    throw PreconditionError("every vertex needs a color");
  if (f.edge && static_cast<int>(f.edge->size()) != g.q())
    throw PreconditionError("every edge needs a color");
  if (sides && static_cast<int>(sides->side.size()) != g.p)
    throw PreconditionError("bipartition does not match the graph");
  std::vector<std::tuple<int, int, int>> cols;
  for (int i = 0; i < g.q(); ++i) {
    auto [u, v] = g.edges[i];
    int e = f.edge ? (*f.edge)[i] : induced_edge_color(g, f, rule, i);
    int a = f.vertex[u], b = f.vertex[v];
    int x = std::min(a, b), y = std::max(a, b);
    if (sides) {
      if (sides->side[u] == sides->side[v])
        throw PreconditionError("edge inside one side of the bipartition");
      x = sides->side[u] == 0 ? a : b;
      y = sides->side[u] == 0 ? b : a;
    }
    cols.emplace_back(e, x, y);
  }
  std::sort(cols.begin(), cols.end(), [](const auto &l, const auto &r) {
    auto [e1, x1, y1] = l;
    auto [e2, x2, y2] = r;
    return std::make_tuple(e1, std::min(x1, y1), std::max(x1, y1)) <
           std::make_tuple(e2, std::min(x2, y2), std::max(x2, y2));
  });
  TopcodeMatrix t;
  for (auto [e, x, y] : cols) {
    t.X.push_back(x);
    t.E.push_back(e);
    t.Y.push_back(y);
  }
  return make_matrix(t.X, t.E, t.Y);
}

std::vector<Tag> classify(const TopcodeMatrix &t) {
  std::vector<Tag> tags;
  const int q = t.q();
  if (q == 0) return tags;
  auto xy = values(t);
  std::set<int> E(t.E.begin(), t.E.end());
  const int p = static_cast<int>(xy.size());
  const int top = *xy.rbegin();

  bool c1 = is_interval(xy, 0, p - 1) && p <= q + 1;
  bool c3 = top <= q;
  bool c4 = top <= 2 * q - 1;
  bool c7 = is_interval(E, 1, q);
  bool c8 = is_odd_set(E, q);
  bool absRule = true, modQ = true, mod2Q = true;
  for (int i = 0; i < q; ++i) {
    absRule = absRule && t.E[i] == std::abs(t.X[i] - t.Y[i]);
    modQ = modQ && t.E[i] == (t.X[i] + t.Y[i]) % q;
    mod2Q = mod2Q && t.E[i] == (t.X[i] + t.Y[i]) % (2 * q);
  }
  bool c10 = absRule && c7;
  bool c11 = absRule && c8;
  bool c12 = mod2Q && c8;
  bool c13 = modQ && is_interval(E, 0, q - 1);
  bool c18 = *std::max_element(t.X.begin(), t.X.end()) <
             *std::min_element(t.Y.begin(), t.Y.end());

  if (c3 && c7 && c10) {
    tags.push_back({"graceful", {}});
    if (c18) tags.push_back({"set-ordered-graceful", {}});
  }
  if (c4 && c8 && c11) {
    tags.push_back({"odd-graceful", {}});
    if (c18) tags.push_back({"set-ordered-odd-graceful", {}});
  }
  if (auto k = constant(t, [](int x, int e, int y) { return x + e + y; }); k && *k > 0)
    tags.push_back({"edge-magic-total", k});
  if (auto k = constant(t, [](int x, int e, int y) { return e + std::abs(x - y); });
      k && *k > 0)
    tags.push_back({"edge-difference", k});
  if (auto k = constant(t, [](int x, int e, int y) { return std::abs(x + y - e); });
      k && c7)
    tags.push_back({"felicitous-difference", k});
  if (auto k = constant(t,
                        [](int x, int e, int y) { return std::abs(std::abs(x - y) - e); });
      k && c7)
    tags.push_back({"graceful-difference", k});
  if (c1 && c13) tags.push_back({"elegant", {}});
  if (c4 && c12) tags.push_back({"odd-elegant", {}});
  if (c3 && c13) tags.push_back({"harmonious", {}});
  return tags;
}

bool has_tag(const std::vector<Tag> &tags, const std::string &name) {
  return std::any_of(tags.begin(), tags.end(), [&](const Tag &t) { return t.name == name; });
}

std::string tag_string(const Tag &t) {
  return t.constant ? t.name + "(" + std::to_string(*t.constant) + ")" : t.name;
}

Structure analyze(const TopcodeMatrix &t) {
  Structure s;
  auto g = value_graph(t);
  const int n = static_cast<int>(g.value.size());
  s.values = n;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<int> degree(n, 0);
  for (auto [a, b] : g.edges) {
    parent[find(a)] = find(b);
    ++degree[a];
    ++degree[b];
  }
  s.connected = true;
  for (int v = 1; v < n; ++v) s.connected = s.connected && find(v) == find(0);
  s.euler = std::all_of(degree.begin(), degree.end(), [](int d) { return d % 2 == 0; });
  std::vector<bool> covered(n, false);
  s.perfectMatching = n > 0 && match_from(g, covered);
  if (n <= 10) s.hamilton = hamilton(g);
  return s;
}

TopcodeMatrix matrix_union(const TopcodeMatrix &a, const TopcodeMatrix &b) {
  TopcodeMatrix t = a;
  t.X.insert(t.X.end(), b.X.begin(), b.X.end());
  t.E.insert(t.E.end(), b.E.begin(), b.E.end());
  t.Y.insert(t.Y.end(), b.Y.begin(), b.Y.end());
  return t;
}

std::optional<Route> route_from_name(const std::string &name) {
  static const std::map<std::string, Route> m = {
      {"o1", Route::O1}, {"o2", Route::O2}, {"o3", Route::O3},
      {"o4", Route::O4}, {"perm", Route::Perm}};
  auto it = m.find(name);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::optional<Variant> variant_from_name(const std::string &name) {
  if (name == "base") return Variant::Base;
  if (name == "reciprocal") return Variant::Reciprocal;
  if (name == "inverse") return Variant::Inverse;
  return std::nullopt;
}

std::vector<std::pair<int, int>> route_cells(int q, Route route, Variant variant,
                                             const std::vector<int> &perm) {
  enum { X = 0, E = 1, Y = 2 };
  std::vector<std::pair<int, int>> cells;
  // columns are 1-based below
  auto put = [&](int row, int col) { cells.push_back({row, col - 1}); };
  switch (route) {
  case Route::O1:
    for (int i = 1; i <= q; ++i) put(X, i);
    for (int i = q; i >= 1; --i) put(E, i);
    for (int i = 1; i <= q; ++i) put(Y, i);
    break;
  case Route::O2:
    for (int i = 1; i <= q; ++i) {
      bool odd = i % 2 == 1;
      put(odd ? X : Y, i);
      put(E, i);
      put(odd ? Y : X, i);
    }
    break;
  case Route::O3: {
    auto maybe = [&](int row, int i) {
      if (i >= 1 && i <= q && !(row == E && i == q)) put(row, i);
    };
    for (int t = 0; 2 * t <= q; ++t) {
      if (t == 0) {
        maybe(Y, 2);
        maybe(Y, 1);
      } else {
        maybe(Y, 2 * t + 1);
        maybe(Y, 2 * t + 2);
      }
      maybe(E, 2 * t + 1);
      if (t == 0) {
        maybe(X, 1);
      } else {
        maybe(X, 2 * t);
        maybe(X, 2 * t + 1);
      }
      maybe(E, 2 * t + 2);
    }
    if (q >= 1) put(E, q);
    break;
  }
  case Route::O4:
    for (int i = 1; i <= q; ++i) {
      put(X, i);
      put(E, i);
      put(Y, i);
    }
    break;
  case Route::Perm:
    if (!valid_perm(perm, q))
      throw PreconditionError("perm must list each of the 3q cells once");
    for (int c : perm) put(c / q, c % q + 1);
    break;
  }
  for (auto &[row, col] : cells) {
    if (variant == Variant::Reciprocal && row != E) row = 2 - row;
    if (variant == Variant::Inverse) col = q - 1 - col;
  }
  return cells;
}

std::string emit_string(const TopcodeMatrix &t, Route route, Variant variant,
                        const std::vector<int> &perm) {
  std::string out;
  for (auto [row, col] : route_cells(t.q(), route, variant, perm)) {
    const auto &r = row == 0 ? t.X : (row == 1 ? t.E : t.Y);
    out += std::to_string(r[col]);
  }
  return out;
}

void partition_visit(const std::string &s, int q, const PartitionOptions &options,
                     const std::function<bool(const TopcodeMatrix &)> &visit) {
  if (q < 1) throw PreconditionError("q must be at least 1");
  if (q > options.maxQ)
    throw PreconditionError("q=" + std::to_string(q) + " exceeds the partition cap " +
                            std::to_string(options.maxQ));
  for (char ch : s)
    if (ch < '0' || ch > '9') throw ParseError("digit string expected");
  auto cells = route_cells(q, options.route, options.variant, options.perm);
  const int n = 3 * q;
  const int len = static_cast<int>(s.size());
  if (len < n) return;
  TopcodeMatrix t{std::vector<int>(q), std::vector<int>(q), std::vector<int>(q)};
  auto cell = [&](int k) -> int & {
    auto [row, col] = cells[k];
    return (row == 0 ? t.X : (row == 1 ? t.E : t.Y))[col];
  };
  bool stop = false;
  std::function<void(int, int)> go = [&](int k, int pos) {
    if (stop) return;
    if (k == n) {
      if (pos != len) return;
      if (options.tag && !has_tag(classify(t), *options.tag)) return;
      if (!visit(t)) stop = true;
      return;
    }
    int remaining = n - k - 1;
    // a zero digit can only stand alone
    int maxLen = s[pos] == '0' ? 1 : 9;
    for (int l = 1; l <= maxLen && pos + l + remaining <= len && !stop; ++l) {
      if (len - (pos + l) > 9 * remaining) continue;
      int value = std::stoi(s.substr(pos, l));
      if (options.maxEntry && value > *options.maxEntry) break;
      cell(k) = value;
      go(k + 1, pos + l);
    }
  };
  go(0, 0);
}

std::vector<TopcodeMatrix> partition_string(const std::string &s, int q,
                                            const PartitionOptions &options) {
  std::vector<TopcodeMatrix> out;
  partition_visit(s, q, options, [&](const TopcodeMatrix &t) {
    out.push_back(t);
    return true;
  });
  return out;
}

} // namespace topsnut
