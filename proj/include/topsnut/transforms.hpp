#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topsnut/graph.hpp"
#include "topsnut/labeling.hpp"

namespace topsnut {

struct Elements {
  std::vector<int> vertices;
  std::vector<int> edges;
};
Elements all_vertices(const Graph &g);
Elements all_elements(const Graph &g);

// z -> max f(S) + min f(S) - f(z) on S, identity elsewhere.
Labeling dual(const Labeling &f, const Elements &s);

// Bipartition with the lower labels on X: split at the set-order threshold
// when there is one, otherwise per component by the smallest label.
Bipartition oriented_bipartition(const Graph &g, const std::vector<int> &colors);

enum class Side { X, Y };

Labeling partial_dual(const Graph &g, const Labeling &f, Side side,
                      const std::optional<Bipartition> &b = std::nullopt);
// Order reversal within one side.
Labeling reciprocal(const Graph &g, const Labeling &f, Side side,
                    const std::optional<Bipartition> &b = std::nullopt);
// a f(x) on X, b + a f(y) on Y.
Labeling linear(const Graph &g, const Labeling &f, int a, int b,
                const std::optional<Bipartition> &bip = std::nullopt);

struct TransformResult {
  Labeling labeling;
  VerifierSpec target;
  VerifyReport report;
};

// Relabels a set-ordered graceful labeling of a tree so x_i gets i-1 and
// y_j gets s-1+j. Throws when f is not set-ordered graceful.
Labeling canonical_set_ordered(const Graph &t, const Labeling &f);

enum class Member { G1 = 1, G2, G3, G4, G5, G6, G7 };
TransformResult harmonious_family(const Graph &t, const Labeling &f, Member m,
                                  int k = 1, int d = 1);
// The strongly odd-harmonious predicate exactly as stated (vertex labels in
// [0,q]); g6 outputs usually fail it.
VerifyReport verify_g6_literal(const Graph &t, const Labeling &g6);

enum class Equivalence { OddGraceful, EdgeMagicTotal, OddEvenSeparableEmt, OddElegant };
TransformResult equivalent_transform(const Graph &t, const Labeling &f,
                                     Equivalence target);

TransformResult kd_graceful_from_graceful(const Graph &g, const Labeling &f, int k,
                                          int d);

// Partner labeling whose edge colors are k - f(uv).
TransformResult image_pair(const Graph &g, const Labeling &f, int k);

struct LeafAdded {
  Graph graph;
  Labeling labeling;
  VerifyReport report;
};
// leafCounts[v] leaves hung on v; f is a (k,d)-gracefully total coloring.
LeafAdded leaf_add_kd(const Graph &g, const Labeling &f,
                      const std::vector<int> &leafCounts, int k, int d);

} // namespace topsnut
