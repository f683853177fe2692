#include "topsnut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

Edge norm(Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

void check_vertex(const Graph &g, int v, const char *what) {
  if (v < 0 || v >= g.p)
    throw PreconditionError(std::string(what) + ": vertex " +
                            std::to_string(v) + " out of range");
}

// Renumbers vertices after deleting the ones flagged in `gone`.
Graph drop_vertices(const Graph &g, const std::vector<bool> &gone) {
  std::vector<int> to(g.p, -1);
  int next = 0;
  for (int v = 0; v < g.p; ++v)
    if (!gone[v]) to[v] = next++;
  Graph out;
  out.p = next;
  for (auto [u, v] : g.edges) out.edges.push_back({to[u], to[v]});
  if (!g.names.empty())
    for (int v = 0; v < g.p; ++v)
      if (!gone[v]) out.names.push_back(g.names[v]);
  return out;
}

// Identifies each vertex v with target[v]; edge `drop` (or -1) disappears.
// Any loop or parallel edge produced is a precondition failure.
Graph contract(const Graph &g, const std::vector<int> &target, int drop,
               const char *what) {
  Graph mid;
  mid.p = g.p;
  mid.names = g.names;
  std::set<Edge> seen;
  for (int i = 0; i < g.q(); ++i) {
    if (i == drop) continue;
    Edge e{target[g.edges[i].first], target[g.edges[i].second]};
    if (e.first == e.second)
      throw PreconditionError(std::string(what) + ": merge creates a loop");
    if (!seen.insert(norm(e)).second)
      throw PreconditionError(std::string(what) +
                              ": merge creates a duplicate edge");
    mid.edges.push_back(e);
  }
  std::vector<bool> gone(g.p, false);
  for (int v = 0; v < g.p; ++v) gone[v] = target[v] != v;
  return drop_vertices(mid, gone);
}

bool is_leaf(const Graph &g, int v) { return g.degrees()[v] == 1; }

} // namespace

SearchTooLarge::SearchTooLarge(double estimate, double cap)
    : std::runtime_error("search space estimate " + std::to_string(estimate) +
                         " exceeds cap " + std::to_string(cap)),
      estimate_(estimate), cap_(cap) {}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(p);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(p, 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  for (int i = 0; i < q(); ++i) {
    auto [a, b] = edges[i];
    if ((a == u && b == v) || (a == v && b == u)) return i;
  }
  return -1;
}

bool Graph::connected() const {
  if (p == 0) return true;
  auto adj = adjacency();
  std::vector<bool> seen(p, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == p;
}

Graph make_graph(int p, const std::vector<Edge> &edges) {
  if (p < 0) throw PreconditionError("negative vertex count");
  Graph g;
  g.p = p;
  std::set<Edge> seen;
  for (auto e : edges) {
    if (e.first < 0 || e.first >= p || e.second < 0 || e.second >= p)
      throw PreconditionError("edge endpoint out of range");
    if (e.first == e.second)
      throw PreconditionError("self-loop at vertex " + std::to_string(e.first));
    if (!seen.insert(norm(e)).second)
      throw PreconditionError("duplicate edge " + std::to_string(e.first) +
                              "-" + std::to_string(e.second));
    g.edges.push_back(e);
  }
  return g;
}

Graph path_graph(int p) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < p; ++i) e.push_back({i, i + 1});
  return make_graph(p, e);
}

Graph cycle_graph(int p) {
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i) e.push_back({i, (i + 1) % p});
  return make_graph(p, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return make_graph(leaves + 1, e);
}

Graph complete_graph(int p) {
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) e.push_back({i, j});
  return make_graph(p, e);
}

Graph parse_graph(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<Edge> rows;
  std::vector<int> rowLine;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != tok.size() || used == 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": not an integer: '" + tok + "'");
      nums.push_back(v);
    }
    if (nums.empty()) continue;
    if (nums.size() != 2)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected two integers");
    if (nums[0] < 0 || nums[1] < 0 || nums[0] > 1000000 || nums[1] > 1000000)
      throw ParseError("line " + std::to_string(lineno) + ": value out of range");
    rows.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1])});
    rowLine.push_back(lineno);
  }
  if (rows.empty()) return Graph{};

  // "p q" header: exactly q rows follow and all of them fit below p
  bool header = false;
  if (static_cast<int>(rows.size()) - 1 == rows[0].second) {
    int maxv = -1;
    for (size_t i = 1; i < rows.size(); ++i)
      maxv = std::max({maxv, rows[i].first, rows[i].second});
    header = maxv < rows[0].first;
  }
  size_t start = header ? 1 : 0;
  int p = header ? rows[0].first : 0;
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (size_t i = start; i < rows.size(); ++i) {
    auto e = rows[i];
    std::string where = "line " + std::to_string(rowLine[i]);
    if (e.first == e.second)
      throw ParseError(where + ": self-loop at vertex " + std::to_string(e.first));
    if (!seen.insert(norm(e)).second)
      throw ParseError(where + ": duplicate edge " + std::to_string(e.first) +
                       " " + std::to_string(e.second));
    if (!header) p = std::max({p, e.first + 1, e.second + 1});
    edges.push_back(e);
  }
  return make_graph(p, edges);
}

std::string format_graph(const Graph &g) {
  std::ostringstream out;
  out << g.p << ' ' << g.q() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::optional<Bipartition> bipartition(const Graph &g) {
  auto adj = g.adjacency();
  std::vector<int> side(g.p, -1);
  for (int s = 0; s < g.p; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : adj[u]) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          bfs.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  b.side = side;
  for (int v = 0; v < g.p; ++v) (side[v] == 0 ? b.X : b.Y).push_back(v);
  return b;
}

Graph vertex_split(const Graph &g, int u, const std::vector<int> &part) {
  check_vertex(g, u, "vertex_split");
  auto adj = g.adjacency();
  if (adj[u].size() < 2)
    throw PreconditionError("vertex_split: degree of u is below 2");
  std::set<int> keep(part.begin(), part.end());
  if (keep.size() != part.size())
    throw PreconditionError("vertex_split: repeated vertex in part");
  for (int w : keep)
    if (std::find(adj[u].begin(), adj[u].end(), w) == adj[u].end())
      throw PreconditionError("vertex_split: part is not inside N(u)");
  if (keep.empty() || keep.size() == adj[u].size())
    throw PreconditionError("vertex_split: part must be a nonempty proper subset");
  Graph out = g;
  int fresh = g.p;
  out.p = g.p + 1;
  if (!out.names.empty()) out.names.push_back(g.names[u] + "''");
  for (auto &e : out.edges) {
    if (e.first == u && !keep.count(e.second)) e.first = fresh;
    else if (e.second == u && !keep.count(e.first)) e.second = fresh;
  }
  return out;
}

Graph vertex_coincide(const Graph &g, int u, int v) {
  check_vertex(g, u, "vertex_coincide");
  check_vertex(g, v, "vertex_coincide");
  if (u == v) throw PreconditionError("vertex_coincide: u equals v");
  if (g.has_edge(u, v))
    throw PreconditionError("vertex_coincide: u and v are adjacent");
  auto adj = g.adjacency();
  for (int w : adj[u])
    if (std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end())
      throw PreconditionError("vertex_coincide: common neighbor " +
                              std::to_string(w));
  std::vector<int> target(g.p);
  std::iota(target.begin(), target.end(), 0);
  target[v] = u;
  return contract(g, target, -1, "vertex_coincide");
}

Graph leaf_split(const Graph &g, int u, int v) {
  int idx = g.edge_index(u, v);
  if (idx < 0) throw PreconditionError("leaf_split: uv is not an edge");
  Graph out = g;
  int leafOfU = g.p, leafOfV = g.p + 1;
  out.p = g.p + 2;
  if (!out.names.empty()) {
    out.names.push_back(g.names[v] + "''");
    out.names.push_back(g.names[u] + "'");
  }
  out.edges[idx] = {u, leafOfU};
  out.edges.push_back({leafOfV, v});
  return out;
}

Graph leaf_coincide(const Graph &g, int u, int leaf1, int leaf2, int v) {
  for (int x : {u, leaf1, leaf2, v}) check_vertex(g, x, "leaf_coincide");
  int i1 = g.edge_index(u, leaf1), i2 = g.edge_index(leaf2, v);
  if (i1 < 0 || i2 < 0)
    throw PreconditionError("leaf_coincide: leaf edge missing");
  std::set<int> four{u, leaf1, leaf2, v};
  if (four.size() != 4)
    throw PreconditionError("leaf_coincide: endpoints must be distinct");
  if (!is_leaf(g, leaf1) || !is_leaf(g, leaf2))
    throw PreconditionError("leaf_coincide: argument is not a leaf");
  if (g.has_edge(u, v))
    throw PreconditionError("leaf_coincide: uv already present");
  auto adj = g.adjacency();
  for (int w : adj[u])
    if (w != leaf1 && std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end() &&
        w != leaf2)
      throw PreconditionError("leaf_coincide: u and v share neighbor " +
                              std::to_string(w));
  Graph mid = g;
  mid.edges[i1] = {u, v};
  mid.edges.erase(mid.edges.begin() + i2);
  std::vector<bool> gone(g.p, false);
  gone[leaf1] = gone[leaf2] = true;
  return drop_vertices(mid, gone);
}

Graph edge_split(const Graph &g, int u, int v, const std::vector<int> &partU,
                 const std::vector<int> &partV) {
  int idx = g.edge_index(u, v);
  if (idx < 0) throw PreconditionError("edge_split: uv is not an edge");
  auto adj = g.adjacency();
  std::set<int> nu, nv;
  for (int w : adj[u])
    if (w != v) nu.insert(w);
  for (int w : adj[v])
    if (w != u) nv.insert(w);
  std::set<int> pu(partU.begin(), partU.end()), pv(partV.begin(), partV.end());
  if (pu.size() != partU.size() || pv.size() != partV.size())
    throw PreconditionError("edge_split: repeated vertex in a part");
  for (int w : pu)
    if (!nu.count(w)) throw PreconditionError("edge_split: partU not in N(u)-v");
  for (int w : pv)
    if (!nv.count(w)) throw PreconditionError("edge_split: partV not in N(v)-u");
  // the four blocks must be pairwise disjoint, so a common neighbor of u and v
  // can never be placed
  for (int w : nu)
    if (nv.count(w))
      throw PreconditionError("edge_split: u and v share neighbor " +
                              std::to_string(w));
  Graph out = g;
  int u2 = g.p, v2 = g.p + 1;
  out.p = g.p + 2;
  if (!out.names.empty()) {
    out.names.push_back(g.names[u] + "''");
    out.names.push_back(g.names[v] + "''");
  }
  for (int i = 0; i < g.q(); ++i) {
    if (i == idx) continue;
    auto &e = out.edges[i];
    auto moveEnd = [&](int &end, int other) {
      if (end == u && nu.count(other) && !pu.count(other)) end = u2;
      else if (end == v && nv.count(other) && !pv.count(other)) end = v2;
    };
    int a = e.first, b = e.second;
    moveEnd(e.first, b);
    moveEnd(e.second, a);
  }
  out.edges.push_back({u2, v2});
  return out;
}

Graph edge_coincide(const Graph &g, Edge e1, Edge e2) {
  auto [u1, v1] = e1;
  auto [u2, v2] = e2;
  for (int x : {u1, v1, u2, v2}) check_vertex(g, x, "edge_coincide");
  int i1 = g.edge_index(u1, v1), i2 = g.edge_index(u2, v2);
  if (i1 < 0 || i2 < 0) throw PreconditionError("edge_coincide: edge missing");
  std::set<int> four{u1, v1, u2, v2};
  if (four.size() != 4)
    throw PreconditionError("edge_coincide: endpoints must be pairwise distinct");
  auto adj = g.adjacency();
  auto common = [&](int a, int b) {
    for (int w : adj[a])
      if (std::find(adj[b].begin(), adj[b].end(), w) != adj[b].end()) return true;
    return false;
  };
  if (common(u1, u2) || common(v1, v2))
    throw PreconditionError("edge_coincide: neighbor clash");
  std::vector<int> target(g.p);
  std::iota(target.begin(), target.end(), 0);
  // merged vertex takes the smaller index so the survivor is well defined
  target[u2] = u1;
  target[v2] = v1;
  return contract(g, target, i2, "edge_coincide");
}

Union disjoint_union(const std::vector<Graph> &parts) {
  Union out;
  bool named = std::any_of(parts.begin(), parts.end(),
                           [](const Graph &h) { return !h.names.empty(); });
  for (const auto &h : parts) {
    int off = out.graph.p;
    out.offsets.push_back(off);
    for (auto [u, v] : h.edges) out.graph.edges.push_back({u + off, v + off});
    if (named)
      for (int v = 0; v < h.p; ++v)
        out.graph.names.push_back(h.names.empty() ? std::to_string(v + off)
                                                  : h.names[v]);
    out.graph.p += h.p;
  }
  return out;
}

Graph add_edges(const Graph &g, const std::vector<Edge> &extra) {
  std::vector<Edge> all = g.edges;
  all.insert(all.end(), extra.begin(), extra.end());
  Graph out = make_graph(g.p, all);
  out.names = g.names;
  return out;
}

DegreeSequence degree_sequence(const Graph &g) { return DegreeSequence(g.degrees()); }

bool isomorphic(const Graph &a, const Graph &b) {
  if (a.p > 8 || b.p > 8)
    throw PreconditionError("isomorphic: brute force limited to p <= 8");
  if (a.p != b.p || a.q() != b.q()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  std::vector<int> perm(a.p);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Edge> target;
  for (auto e : b.edges) target.insert(norm(e));
  do {
    bool ok = true;
    for (auto [u, v] : a.edges)
      if (!target.count(norm({perm[u], perm[v]}))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace topsnut
