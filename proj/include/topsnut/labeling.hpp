#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "topsnut/graph.hpp"

namespace topsnut {

// Vertex colors plus optional explicit edge colors (absent when induced).
struct Labeling {
  std::vector<int> vertex;
  std::optional<std::vector<int>> edge;

  bool operator==(const Labeling &) const = default;
};

// SumEvenModStar rounds an odd sum up to even before the mod* reduction.
enum class Rule { AbsDiff, Sum, SumMod, Gcd, SumPlusModStar, SumEvenModStar };

struct EdgeRule {
  Rule rule = Rule::AbsDiff;
  int m = 1; // modulus for SumMod / SumPlusModStar
  int k = 0; // offset for SumPlusModStar

  int apply(int a, int b) const;
};

int induced_edge_color(const Graph &g, const Labeling &f, const EdgeRule &rule,
                       int edge);

enum class Kind {
  Graceful,
  OddGraceful,
  SetOrderedGraceful,
  SetOrderedOddGraceful,
  StronglyGraceful,
  StronglyOddGraceful,
  KGraceful,
  KdGraceful,
  KdArithmetic,
  KdEdgeAntimagicTotal,
  KdHarmonious,
  EdgeMagicTotal,
  SuperEdgeMagicTotal,
  EdgeMagicGraceful,
  EdgeMagicTotalGraceful,
  KLambdaMagic,
  Felicitous,
  Harmonious,
  OddElegant,
  TotalGraceful,
  GcdGraceful,
  GcdOddGraceful,
  EdgeDifference,
  GracefulDifference,
  FelicitousDifference,
  Custom,
  // members of the harmonious family and a few composite predicates
  EvenHarmonious,
  OddHarmonious,
  KEvenSequential,
  StronglyCHarmonious,
  StronglyOddHarmonious,
  KdGracefulTotal,
  SixC,
};

std::string kind_name(Kind kind);
std::optional<Kind> kind_from_name(const std::string &name);
std::vector<Kind> all_kinds();

struct VerifierSpec {
  Kind kind = Kind::Graceful;
  std::optional<int> k; // magic constant or family parameter
  int d = 1;
  int lambda = 0;
  // harmonious: one repeated vertex label allowed on a tree;
  // kd-harmonious and strongly c-harmonious: vertex bound one step wider on a tree
  bool treeException = false;
  // magic kinds: check only the edge equation, no bijection onto [1,p+q]
  bool coloring = false;
  std::optional<int> bound; // largest label for gcd and custom kinds
  // custom kind
  std::vector<int> targetEdges;
  EdgeRule rule;
  bool injective = true;
  // strongly kinds: edge indices of a declared perfect matching
  std::optional<std::vector<int>> matching;

  static VerifierSpec of(Kind kind) {
    VerifierSpec s;
    s.kind = kind;
    return s;
  }
};

struct Failure {
  std::string condition;
  std::string witness;
};

struct VerifyReport {
  bool pass = true;
  std::vector<Failure> failures;
  std::optional<int> derivedConstant;

  void fail(std::string condition, std::string witness);
  bool has(const std::string &condition) const;
};

// Shape facts the solver needs about a kind.
struct KindTraits {
  bool total = false;      // edge colors are explicit
  bool bijective = false;  // V and E together biject onto [1,p+q]
  bool injective = false;  // vertex colors pairwise distinct
  int lo = 0;              // vertex color range
  int hi = 0;
  int edgeLo = 0;          // explicit edge color range (total kinds)
  int edgeHi = 0;
  std::optional<EdgeRule> rule;          // induced edge rule (vertex kinds)
  std::optional<std::vector<int>> edges; // exact edge color multiset, sorted
  bool distinctEdges = false;            // no two edges share a color
  bool graceful_family = false;          // dual maps solutions to solutions
};

KindTraits kind_traits(const Graph &g, const VerifierSpec &spec);

VerifyReport verify(const Graph &g, const Labeling &f, const VerifierSpec &spec);

// Edge colors as the kind sees them (explicit or induced).
std::vector<int> edge_colors(const Graph &g, const Labeling &f,
                             const VerifierSpec &spec);

// Largest t with every edge having one end <= t < other end, if any.
std::optional<int> set_order_threshold(const Graph &g,
                                       const std::vector<int> &colors);

struct MagicProfile {
  std::optional<int> sum;                  // f(u)+f(uv)+f(v)
  std::optional<int> edgeDifference;       // f(uv)+|f(u)-f(v)|
  std::optional<int> felicitousDifference; // |f(u)+f(v)-f(uv)|
  std::optional<int> gracefulDifference;   // ||f(u)-f(v)|-f(uv)|
};
MagicProfile magic_profile(const Graph &g, const Labeling &f);

struct SixCReport {
  VerifyReport report;
  // e-magic, ee-difference, ee-balanced, EV-ordered, ve-matching, set-ordered
  std::array<bool, 6> flags{};
  std::optional<int> k;
  std::optional<int> kPrime;
  std::optional<int> kDoublePrime;
};
SixCReport verify_6C(const Graph &g, const Labeling &f);

enum class TwinKind { OddGraceful, OddElegant };
struct TwinReport {
  VerifyReport report;
  int overlap = 0;
};
TwinReport verify_twin_pair(const Graph &g1, const Labeling &f1, const Graph &g2,
                            const Labeling &f2, TwinKind kind);

VerifyReport verify_flawed(const std::vector<Graph> &parts,
                           const std::vector<Edge> &estar,
                           const VerifierSpec &spec, const Labeling &f);

} // namespace topsnut
