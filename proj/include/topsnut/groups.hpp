#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "topsnut/graph.hpp"
#include "topsnut/labeling.hpp"

namespace topsnut {

enum class GroupMode { Vertex, Edge, Mixed };

// Every-zero graphic group with elements H_1..H_n (1-based).
struct GraphicGroup {
  Graph base;
  Labeling f;
  int n = 0;
  GroupMode mode = GroupMode::Vertex;
  int pmod = 0; // mixed mode moduli; n = pmod * qmod
  int qmod = 0;
  // elements[i-1] is H_i's labeling; kept explicitly so a tampered family is
  // visible to check_axioms
  std::vector<Labeling> elements;
};

GraphicGroup build_group(const Graph &g, const Labeling &f, int n,
                         GroupMode mode = GroupMode::Vertex);
GraphicGroup build_mixed_group(const Graph &g, const Labeling &f, int pmod, int qmod);

// Mixed mode: H_{(s,k)} has flat index (s-1)*qmod + k.
int mixed_index(const GraphicGroup &g, int s, int k);

int group_add(const GraphicGroup &g, int i, int j, int zero);
int group_subtract(const GraphicGroup &g, int i, int j, int zero);
int group_inverse(const GraphicGroup &g, int i, int zero);

struct AxiomReport {
  bool closure = true;
  bool zeroLaw = true;
  bool inverse = true;
  bool associative = true;
  bool commutative = true;
  bool labelIdentity = true;
  long long labelFailures = 0;
  // triples (i,j,k) and elements x where the out-of-range rule
  // "n - value" disagrees with the ordinary residue
  long long literalMismatches = 0;
  bool pass() const {
    return closure && zeroLaw && inverse && associative && commutative && labelIdentity;
  }
};
AxiomReport check_axioms(const GraphicGroup &g);

// Vertex elements with F(uv) = F(u) (+) F(v) under `zero`; the lowest vertex
// gets H_zero. edgeElements holds one distinct element index per edge.
std::vector<int> tree_group_coloring(const Graph &t, const GraphicGroup &g,
                                     const std::vector<int> &edgeElements, int zero = 1);

struct Encryption {
  std::vector<int> vertex; // element index per vertex
  std::vector<int> edge;   // element index per edge
  bool graceful = false;   // edge indices are exactly 1..q
  bool oddGraceful = false; // edge indices are exactly 1,3,..,2q-1
};
using Seed = std::variant<std::vector<int>, std::uint64_t>;
Encryption encrypt_graph(const Graph &h, const GraphicGroup &g, const Seed &seed,
                         int zero = 1);

} // namespace topsnut
