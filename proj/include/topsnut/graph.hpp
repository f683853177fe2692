#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topsnut/degseq.hpp"

namespace topsnut {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..p-1. Edge order is load order and
// every operation below keeps it (new edges go to the back).
struct Graph {
  int p = 0;
  std::vector<Edge> edges;
  std::vector<std::string> names;

  int q() const { return static_cast<int>(edges.size()); }
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  bool has_edge(int u, int v) const;
  // index of edge uv in stored order, or -1
  int edge_index(int u, int v) const;
  bool connected() const;
  bool is_tree() const { return p >= 1 && q() == p - 1 && connected(); }

  bool operator==(const Graph &o) const { return p == o.p && edges == o.edges; }
};

// Validates and builds; throws PreconditionError on loops, duplicates or
// out-of-range endpoints.
Graph make_graph(int p, const std::vector<Edge> &edges);

Graph path_graph(int p);
Graph cycle_graph(int p);
Graph star_graph(int leaves);
Graph complete_graph(int p);

// "u v" per line, optional leading "p q" header, '#' comments.
Graph parse_graph(const std::string &text);
std::string format_graph(const Graph &g);

struct Bipartition {
  std::vector<int> X;
  std::vector<int> Y;
  std::vector<int> side; // 0 for X, 1 for Y
};

// Per component the side holding the smallest index is X.
std::optional<Bipartition> bipartition(const Graph &g);

// The six split/coincide operations.
Graph vertex_split(const Graph &g, int u, const std::vector<int> &part);
Graph vertex_coincide(const Graph &g, int u, int v);
Graph leaf_split(const Graph &g, int u, int v);
// merges leaf edges u-leaf1 and leaf2-v into the single edge uv
Graph leaf_coincide(const Graph &g, int u, int leaf1, int leaf2, int v);
Graph edge_split(const Graph &g, int u, int v, const std::vector<int> &partU,
                 const std::vector<int> &partV);
// merges edge (u1,v1) with (u2,v2): u2 into u1 and v2 into v1
Graph edge_coincide(const Graph &g, Edge e1, Edge e2);

struct Union {
  Graph graph;
  std::vector<int> offsets;
};
Union disjoint_union(const std::vector<Graph> &parts);
Graph add_edges(const Graph &g, const std::vector<Edge> &extra);

DegreeSequence degree_sequence(const Graph &g);

// Brute-force permutation search, refuses p > 8.
bool isomorphic(const Graph &a, const Graph &b);

} // namespace topsnut
