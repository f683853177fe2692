#include <doctest.h>

#include "support/oracles.hpp"
#include "topsnut/error.hpp"
#include "topsnut/solver.hpp"

using namespace topsnut;

namespace {

bool distinct_in(const std::vector<int> &f, int lo, int hi) {
  std::set<int> s(f.begin(), f.end());
  if (s.size() != f.size()) return false;
  return f.empty() || (*s.begin() >= lo && *s.rbegin() <= hi);
}

std::multiset<int> colors(const Graph &g, const std::vector<int> &f, bool sum, int mod) {
  std::multiset<int> c;
  for (auto [u, v] : g.edges) {
    int x = sum ? f[u] + f[v] : std::abs(f[u] - f[v]);
    c.insert(mod ? x % mod : x);
  }
  return c;
}

std::multiset<int> progression(int a, int step, int n) {
  std::multiset<int> s;
  for (int i = 0; i < n; ++i) s.insert(a + i * step);
  return s;
}

// Vertex kinds, each written straight from its definition.
std::uint64_t brute_count(const Graph &g, Kind kind) {
  const int q = g.q();
  std::uint64_t n = 0;
  auto run = [&](int hi, const std::function<bool(const std::vector<int> &)> &ok) {
    oracle::each_function(g.p, 0, hi, [&](const std::vector<int> &f) {
      if (distinct_in(f, 0, hi) && ok(f)) ++n;
    });
  };
  switch (kind) {
  case Kind::Graceful:
    run(q, [&](auto &f) { return colors(g, f, false, 0) == progression(1, 1, q); });
    break;
  case Kind::OddGraceful:
    run(2 * q - 1, [&](auto &f) { return colors(g, f, false, 0) == progression(1, 2, q); });
    break;
  case Kind::KGraceful: // k = 2
    run(q + 1, [&](auto &f) { return colors(g, f, false, 0) == progression(2, 1, q); });
    break;
  case Kind::Felicitous:
    run(q, [&](auto &f) { return colors(g, f, true, q) == progression(0, 1, q); });
    break;
  case Kind::Harmonious:
    run(q - 1, [&](auto &f) { return colors(g, f, true, q) == progression(0, 1, q); });
    break;
  case Kind::OddElegant:
    run(2 * q - 1, [&](auto &f) { return colors(g, f, true, 2 * q) == progression(1, 2, q); });
    break;
  default:
    FAIL("no oracle");
  }
  return n;
}

std::uint64_t brute_edge_magic_total(const Graph &g) {
  const int p = g.p, q = g.q();
  std::vector<int> perm(p + q);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t n = 0;
  do {
    std::set<int> sums;
    for (int i = 0; i < q; ++i)
      sums.insert(perm[g.edges[i].first] + perm[p + i] + perm[g.edges[i].second]);
    if (sums.size() == 1) ++n;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n;
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (int p = 1; p <= 5; ++p)
    for (auto &g : oracle::all_graphs(p))
      if (g.q() >= 1 && g.p + g.q() <= 8) out.push_back(g);
  return out;
}

} // namespace

TEST_CASE("small counts") {
  CHECK(count_labelings(path_graph(3), VerifierSpec::of(Kind::Graceful)) == 4);
  CHECK(count_labelings(path_graph(2), VerifierSpec::of(Kind::Graceful)) == 2);
  CHECK(count_labelings(cycle_graph(3), VerifierSpec::of(Kind::OddGraceful)) == 0);
  auto c3 = find_labeling(cycle_graph(3), VerifierSpec::of(Kind::Graceful));
  REQUIRE(c3);
  CHECK(oracle::graceful_by_definition(cycle_graph(3), c3->vertex));
  CHECK_FALSE(exists_labeling(cycle_graph(5), VerifierSpec::of(Kind::Graceful)));
}

TEST_CASE("graceful counts agree with brute force on every small graph") {
  for (auto &g : small_graphs()) {
    CAPTURE(format_graph(g));
    CHECK(count_labelings(g, VerifierSpec::of(Kind::Graceful)) == oracle::graceful_count(g));
  }
}

TEST_CASE("vertex kinds agree with brute force") {
  for (Kind kind : {Kind::OddGraceful, Kind::KGraceful, Kind::Felicitous, Kind::Harmonious,
                    Kind::OddElegant}) {
    auto spec = VerifierSpec::of(kind);
    if (kind == Kind::KGraceful) spec.k = 2;
    for (auto &g : small_graphs()) {
      if (g.p > 4) continue;
      CAPTURE(kind_name(kind));
      CAPTURE(format_graph(g));
      CHECK(count_labelings(g, spec) == brute_count(g, kind));
    }
  }
}

TEST_CASE("edge-magic total labelings agree with brute force") {
  std::vector<Graph> gs{path_graph(2), path_graph(3), path_graph(4), star_graph(3),
                        cycle_graph(3), cycle_graph(4)};
  for (auto &g : gs) {
    CAPTURE(format_graph(g));
    CHECK(count_labelings(g, VerifierSpec::of(Kind::EdgeMagicTotal)) ==
          brute_edge_magic_total(g));
  }
}

TEST_CASE("every tree up to eight vertices is graceful") {
  for (int p = 1; p <= 8; ++p)
    for (auto &t : oracle::trees(p)) {
      auto f = find_labeling(t, VerifierSpec::of(Kind::Graceful));
      REQUIRE(f);
      CHECK(oracle::graceful_by_definition(t, f->vertex));
    }
}

TEST_CASE("every emitted labeling verifies") {
  std::vector<Graph> gs{path_graph(3), path_graph(4), star_graph(3)};
  for (Kind kind : all_kinds()) {
    if (kind == Kind::Custom) continue;
    auto spec = VerifierSpec::of(kind);
    if (kind == Kind::KLambdaMagic) spec.lambda = 1;
    for (auto &g : gs) {
      CAPTURE(kind_name(kind));
      CAPTURE(format_graph(g));
      SearchOptions o;
      o.limit = 25;
      for (auto &f : search_all(g, spec, o)) CHECK(verify(g, f, spec).pass);
    }
  }
}

TEST_CASE("custom kinds search the given color multiset") {
  auto spec = VerifierSpec::of(Kind::Custom);
  spec.targetEdges = {2, 4};
  spec.bound = 4;
  auto all = search_all(path_graph(3), spec);
  REQUIRE_FALSE(all.empty());
  std::uint64_t brute = 0;
  oracle::each_function(3, 0, 4, [&](const std::vector<int> &f) {
    if (distinct_in(f, 0, 4) &&
        colors(path_graph(3), f, false, 0) == std::multiset<int>{2, 4})
      ++brute;
  });
  CHECK(all.size() == brute);
}

TEST_CASE("limits and early stop") {
  SearchOptions o;
  o.limit = 3;
  CHECK(search_all(path_graph(5), VerifierSpec::of(Kind::Graceful), o).size() == 3);
  int seen = 0;
  search(path_graph(5), VerifierSpec::of(Kind::Graceful), {}, [&](const Labeling &) {
    ++seen;
    return false;
  });
  CHECK(seen == 1);
}

TEST_CASE("symmetry breaking keeps one labeling of each dual pair") {
  for (int p = 3; p <= 6; ++p)
    for (auto &t : oracle::trees(p)) {
      SearchOptions o;
      o.symmetryBreak = true;
      auto full = count_labelings(t, VerifierSpec::of(Kind::Graceful));
      CHECK(2 * count_labelings(t, VerifierSpec::of(Kind::Graceful), o) == full);
    }
}

TEST_CASE("oversized searches are refused before they start") {
  SearchOptions o;
  o.maxNodes = 1e6;
  try {
    search(path_graph(40), VerifierSpec::of(Kind::Graceful), o,
           [](const Labeling &) { return true; });
    FAIL("expected SearchTooLarge");
  } catch (const SearchTooLarge &e) {
    CHECK(e.cap() == doctest::Approx(1e6));
    CHECK(e.estimate() > 1e6);
  }
  CHECK(search_estimate(path_graph(3), VerifierSpec::of(Kind::Graceful)) ==
        doctest::Approx(27.0));
}

TEST_CASE("realization follows the graphical test") {
  for (int n = 1; n <= 5; ++n) {
    auto good = oracle::realizable_sequences(n);
    oracle::each_function(n, 0, n - 1, [&](const std::vector<int> &raw) {
      if (!std::is_sorted(raw.rbegin(), raw.rend())) return;
      auto g = realize(DegreeSequence(raw));
      bool realizable = good.count(raw) > 0;
      CHECK(g.has_value() == realizable);
      CHECK(is_graphical(DegreeSequence(raw)) == realizable);
      if (g) CHECK(oracle::sorted_degrees(*g) == raw);
    });
  }
  CHECK_FALSE(realize(DegreeSequence{3, 3}));
}
