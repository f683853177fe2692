#include <doctest.h>

#include "support/oracles.hpp"
#include "topsnut/error.hpp"
#include "topsnut/io.hpp"
#include "topsnut/solver.hpp"
#include "topsnut/transforms.hpp"

using namespace topsnut;

namespace {

Graph integer_graph() {
  return make_graph(7, {{4, 5}, {3, 4}, {0, 2}, {0, 3}, {1, 5}, {1, 6}, {0, 6}});
}
Labeling integer_labeling() { return {{0, 2, 5, 7, 10, 11, 13}, std::nullopt}; }

Graph a6_graph() {
  return make_graph(10, {{0, 5}, {1, 5}, {0, 6}, {2, 5}, {1, 7}, {3, 6}, {4, 7}, {2, 8}, {2, 9}});
}
Labeling a6_labeling() {
  return {{7, 5, 1, 1, 1, 18, 14, 12, 10, 8}, std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15, 17}};
}

} // namespace

TEST_CASE("induced edge colors") {
  Graph k2 = path_graph(2);
  CHECK(induced_edge_color(k2, {{10, 11}}, {Rule::AbsDiff}, 0) == 1);
  CHECK(induced_edge_color(k2, {{5, 5}}, {Rule::AbsDiff}, 0) == 0);
  CHECK(induced_edge_color(k2, {{3, 5}}, {Rule::SumMod, 6}, 0) == 2);
  CHECK(induced_edge_color(k2, {{0, 6}}, {Rule::Gcd}, 0) == 6);
  // k + ((a + b - k) mod m) never drops below k
  CHECK(induced_edge_color(k2, {{0, 1}}, {Rule::SumPlusModStar, 6, 3}, 0) == 7);
  CHECK_THROWS_AS(induced_edge_color(k2, {{1}}, {Rule::AbsDiff}, 0), PreconditionError);
  CHECK_THROWS_AS(induced_edge_color(k2, {{1, 2}}, {Rule::SumMod, 0}, 0), PreconditionError);
}

TEST_CASE("odd-graceful labeling behind the integer matrix") {
  auto r = verify(integer_graph(), integer_labeling(), VerifierSpec::of(Kind::OddGraceful));
  CHECK(r.pass);
  CHECK(r.failures.empty());
  CHECK_FALSE(verify(integer_graph(), integer_labeling(), VerifierSpec::of(Kind::Graceful)).pass);
}

TEST_CASE("A(6) is an edge-magic total coloring with constant 26") {
  auto spec = VerifierSpec::of(Kind::EdgeMagicTotal);
  spec.coloring = true;
  auto r = verify(a6_graph(), a6_labeling(), spec);
  CHECK(r.pass);
  // oracle: every column sum
  auto f = a6_labeling();
  auto g = a6_graph();
  std::set<int> sums;
  for (int i = 0; i < g.q(); ++i)
    sums.insert(f.vertex[g.edges[i].first] + (*f.edge)[i] + f.vertex[g.edges[i].second]);
  REQUIRE(sums.size() == 1);
  CHECK(r.derivedConstant == *sums.begin());
  CHECK(r.derivedConstant == 26);
  // labels repeat, so the labeling proper fails
  CHECK(verify(g, f, VerifierSpec::of(Kind::EdgeMagicTotal)).has("bijection"));
}

TEST_CASE("graceful paths") {
  Graph p4 = path_graph(4);
  Labeling good{{0, 3, 1, 2}};
  CHECK(oracle::graceful_by_definition(p4, good.vertex));
  CHECK(verify(p4, good, VerifierSpec::of(Kind::Graceful)).pass);
  auto bad = verify(p4, {{0, 1, 2, 3}}, VerifierSpec::of(Kind::Graceful));
  CHECK_FALSE(bad.pass);
  CHECK(bad.has("edge-set"));
  CHECK_THROWS_AS(verify(p4, {{0, 1}}, VerifierSpec::of(Kind::Graceful)), PreconditionError);
  CHECK_THROWS_AS(verify(p4, good, VerifierSpec::of(Kind::EdgeMagicTotal)), PreconditionError);
  // explicit edge colors must agree with the induced ones
  Labeling wrong{{0, 3, 1, 2}, std::vector<int>{3, 2, 2}};
  CHECK(verify(p4, wrong, VerifierSpec::of(Kind::Graceful)).has("edge-rule"));
}

TEST_CASE("graceful pass implies the exact difference multiset") {
  for (auto &g : oracle::all_graphs(4)) {
    for (auto &f : search_all(g, VerifierSpec::of(Kind::Graceful))) {
      std::multiset<int> colors;
      for (auto [u, v] : g.edges) colors.insert(std::abs(f.vertex[u] - f.vertex[v]));
      std::multiset<int> want;
      for (int i = 1; i <= g.q(); ++i) want.insert(i);
      CHECK(colors == want);
      CHECK(std::set<int>(f.vertex.begin(), f.vertex.end()).size() == size_t(g.p));
    }
  }
}

TEST_CASE("magic profiles") {
  auto m = magic_profile(a6_graph(), a6_labeling());
  CHECK(m.sum == 26);
  CHECK_FALSE(m.edgeDifference);
  CHECK_FALSE(m.felicitousDifference);
  CHECK_FALSE(m.gracefulDifference);

  auto one = magic_profile(path_graph(2), {{1, 3}, std::vector<int>{2}});
  CHECK(one.sum == 6);
  CHECK(one.edgeDifference == 4);
  CHECK(one.felicitousDifference == 2);
  CHECK(one.gracefulDifference == 0);

  auto two = magic_profile(path_graph(3), {{1, 2, 3}, std::vector<int>{4, 5}});
  CHECK_FALSE(two.sum);
  CHECK_THROWS_AS(magic_profile(path_graph(2), {{1, 3}}), PreconditionError);
}

TEST_CASE("verified magic constants agree with the profile") {
  for (Kind kind : {Kind::EdgeMagicTotal, Kind::EdgeDifference, Kind::FelicitousDifference,
                    Kind::GracefulDifference}) {
    auto spec = VerifierSpec::of(kind);
    for (auto &f : search_all(path_graph(3), spec)) {
      auto r = verify(path_graph(3), f, spec);
      REQUIRE(r.pass);
      auto m = magic_profile(path_graph(3), f);
      std::optional<int> want = kind == Kind::EdgeMagicTotal   ? m.sum
                                : kind == Kind::EdgeDifference ? m.edgeDifference
                                : kind == Kind::FelicitousDifference ? m.felicitousDifference
                                                                     : m.gracefulDifference;
      CHECK(r.derivedConstant == want);
    }
  }
}

TEST_CASE("set-ordered labelings live on bipartite graphs") {
  for (int p = 2; p <= 5; ++p)
    for (auto &g : oracle::all_graphs(p)) {
      if (g.q() == 0 || g.q() > 6) continue;
      auto fs = search_all(g, VerifierSpec::of(Kind::SetOrderedGraceful));
      if (fs.empty()) continue;
      REQUIRE(bipartition(g));
      for (auto &f : fs) {
        auto b = oriented_bipartition(g, f.vertex);
        int maxX = -1, minY = 1 << 30;
        for (int v : b.X) maxX = std::max(maxX, f.vertex[v]);
        for (int v : b.Y) minY = std::min(minY, f.vertex[v]);
        CHECK(maxX < minY);
      }
    }
}

TEST_CASE("strongly graceful matchings") {
  Graph p4 = path_graph(4);
  Labeling f{{0, 3, 1, 2}};
  auto spec = VerifierSpec::of(Kind::StronglyGraceful);
  CHECK(verify(p4, f, spec).pass);
  spec.matching = std::vector<int>{0, 2};
  CHECK(verify(p4, f, spec).pass);
  spec.matching = std::vector<int>{1};
  CHECK(verify(p4, f, spec).has("matching"));
  // P3 has an odd number of vertices, no perfect matching
  CHECK_FALSE(exists_labeling(path_graph(3), VerifierSpec::of(Kind::StronglyGraceful)));

  for (auto &g : oracle::trees(6))
    for (auto &h : search_all(g, VerifierSpec::of(Kind::StronglyGraceful))) {
      std::vector<int> cover(g.p, 0);
      for (int v = 0; v < g.p; ++v) {
        int partner = -1;
        for (int w = 0; w < g.p; ++w)
          if (h.vertex[w] == g.q() - h.vertex[v]) partner = w;
        REQUIRE(partner >= 0);
        CHECK(g.has_edge(v, partner));
        ++cover[partner];
      }
      for (int c : cover) CHECK(c == 1);
    }
}

TEST_CASE("verification is pure") {
  auto a = verify(integer_graph(), integer_labeling(), VerifierSpec::of(Kind::Graceful));
  auto b = verify(integer_graph(), integer_labeling(), VerifierSpec::of(Kind::Graceful));
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("parameterized families") {
  Graph p4 = path_graph(4);
  auto kg = VerifierSpec::of(Kind::KGraceful);
  kg.k = 2;
  CHECK(verify(p4, {{0, 4, 1, 3}}, kg).pass); // colors 4,3,2
  auto kd = VerifierSpec::of(Kind::KdGraceful);
  kd.k = 3;
  kd.d = 2;
  CHECK(verify(p4, {{0, 7, 2, 5}}, kd).pass); // colors 7,5,3
  kd.d = 0;
  CHECK_THROWS_AS(verify(p4, {{0, 7, 2, 5}}, kd), PreconditionError);

  auto ka = VerifierSpec::of(Kind::KdArithmetic);
  ka.k = 1;
  ka.d = 1;
  CHECK(verify(p4, {{0, 1, 1, 2}}, ka).has("vertex-injective"));
  CHECK(verify(p4, {{1, 0, 2, 1}}, ka).has("vertex-injective"));
  CHECK(verify(p4, {{0, 1, 2, 0}}, ka).has("vertex-injective"));
  CHECK(verify(p4, {{0, 1, 2, 3}}, ka).has("edge-set")); // sums 1,3,5
  CHECK(exists_labeling(p4, ka) == false);

  auto lam = VerifierSpec::of(Kind::KLambdaMagic);
  CHECK_THROWS_AS(verify(path_graph(2), {{1, 2}, std::vector<int>{3}}, lam), PreconditionError);
  lam.lambda = 1;
  auto r = verify(path_graph(2), {{1, 3}, std::vector<int>{2}}, lam);
  CHECK(r.pass);
  CHECK(r.derivedConstant == 2);

  auto harm = VerifierSpec::of(Kind::Harmonious);
  // repeated label on P3 is only allowed with the tree exception
  Labeling rep{{0, 1, 1}};
  CHECK_FALSE(verify(path_graph(3), rep, harm).pass);
  harm.treeException = true;
  Graph p4h = path_graph(4);
  Labeling tree{{1, 0, 0, 2}}; // sums 1,0,2 mod 3, one repeated label
  CHECK(verify(p4h, tree, harm).pass);
  harm.treeException = false;
  CHECK(verify(p4h, tree, harm).has("vertex-injective"));
}

TEST_CASE("gcd labelings need labels from one upward") {
  auto spec = VerifierSpec::of(Kind::GcdGraceful);
  CHECK(verify(path_graph(3), {{2, 2, 1}}, spec).pass); // gcds 2,1
  CHECK(verify(path_graph(3), {{0, 2, 1}}, spec).has("vertex-range"));
}

TEST_CASE("6C labelings") {
  Graph p3 = path_graph(3);
  CHECK_THROWS_AS(verify_6C(p3, {{1, 1, 2}, std::vector<int>{3, 4}}), PreconditionError);
  CHECK_THROWS_AS(verify_6C(cycle_graph(3), {{1, 2, 3}, std::vector<int>{4, 5, 6}}),
                  PreconditionError);

  auto found = search_all(p3, VerifierSpec::of(Kind::SixC));
  REQUIRE_FALSE(found.empty());
  for (auto &f : found) {
    auto r = verify_6C(p3, f);
    CHECK(r.report.pass);
    for (bool flag : r.flags) CHECK(flag);
    REQUIRE(r.k);
    auto [u, v] = p3.edges[0];
    CHECK(*r.k == (*f.edge)[0] + std::abs(f.vertex[u] - f.vertex[v]));
  }
  // oracle: exhaust all bijections [1,5] -> V and E and keep those with
  // every flag set; the solver must find exactly these
  std::vector<int> perm{1, 2, 3, 4, 5};
  int brute = 0;
  do {
    Labeling f{{perm[0], perm[1], perm[2]}, std::vector<int>{perm[3], perm[4]}};
    auto r = verify_6C(p3, f);
    if (std::all_of(r.flags.begin(), r.flags.end(), [](bool b) { return b; })) ++brute;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(brute == static_cast<int>(found.size()));

  // e-magic but vertices and edges interleave and mix parity
  auto r = verify_6C(p3, {{2, 1, 4}, std::vector<int>{5, 3}});
  CHECK(r.flags[0]);
  CHECK_FALSE(r.flags[3]);
  CHECK(r.report.has("ev-ordered"));
}

TEST_CASE("twin pairs") {
  Graph k2 = path_graph(2);
  auto r = verify_twin_pair(k2, {{0, 1}}, k2, {{1, 0}}, TwinKind::OddGraceful);
  CHECK(r.report.pass);
  CHECK(r.overlap == 2);

  // oracle: exhaust label pairs on P3 in [0,3]
  Graph p3 = path_graph(3);
  auto oddColors = [&](const std::vector<int> &f) {
    std::set<int> c{std::abs(f[0] - f[1]), std::abs(f[1] - f[2])};
    return c == std::set<int>{1, 3};
  };
  std::vector<std::vector<int>> firsts, seconds;
  oracle::each_function(3, 0, 3, [&](const std::vector<int> &f) {
    if (!oddColors(f)) return;
    seconds.push_back(f);
    if (std::set<int>(f.begin(), f.end()).size() == 3) firsts.push_back(f);
  });
  REQUIRE_FALSE(firsts.empty());
  for (auto &a : firsts)
    for (auto &b : seconds) {
      auto t = verify_twin_pair(p3, {a}, p3, {b}, TwinKind::OddGraceful);
      CHECK(t.report.pass);
      std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end()), both;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::inserter(both, both.begin()));
      CHECK(t.overlap == static_cast<int>(both.size()));
    }

  auto bad = verify_twin_pair(p3, {firsts[0]}, p3, {{0, 2, 0}}, TwinKind::OddGraceful);
  CHECK_FALSE(bad.report.pass);
  CHECK(bad.report.has("second:edge-set"));
  CHECK_THROWS_AS(verify_twin_pair(k2, {{0, 1}}, p3, {{0, 1, 2}}, TwinKind::OddGraceful),
                  PreconditionError);

  auto e = verify_twin_pair(k2, {{0, 1}}, k2, {{1, 0}}, TwinKind::OddElegant);
  CHECK(e.report.pass);
}

TEST_CASE("flawed labelings") {
  std::vector<Graph> parts{path_graph(2), path_graph(2)};
  auto f = find_labeling(path_graph(4), VerifierSpec::of(Kind::Graceful));
  REQUIRE(f);
  CHECK(verify_flawed(parts, {{1, 2}}, VerifierSpec::of(Kind::Graceful), *f).pass);
  CHECK_THROWS_AS(verify_flawed(parts, {}, VerifierSpec::of(Kind::Graceful), *f),
                  PreconditionError);

  std::vector<Graph> forest{star_graph(2), path_graph(3)};
  Graph joined = add_edges(disjoint_union(forest).graph, {{1, 4}});
  auto so = find_labeling(joined, VerifierSpec::of(Kind::SetOrderedGraceful));
  REQUIRE(so);
  CHECK(verify_flawed(forest, {{1, 4}}, VerifierSpec::of(Kind::SetOrderedGraceful), *so).pass);
}

TEST_CASE("duals of graceful labelings stay graceful on small trees") {
  for (int p = 2; p <= 8; ++p)
    for (auto &t : oracle::trees(p)) {
      auto f = find_labeling(t, VerifierSpec::of(Kind::Graceful));
      REQUIRE(f);
      CHECK(verify(t, dual(*f, all_vertices(t)), VerifierSpec::of(Kind::Graceful)).pass);
    }
}

TEST_CASE("kind names round trip") {
  for (Kind k : all_kinds()) CHECK(kind_from_name(kind_name(k)) == k);
  CHECK_FALSE(kind_from_name("nope"));
}
