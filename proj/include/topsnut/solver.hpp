#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "topsnut/degseq.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/labeling.hpp"

namespace topsnut {

struct SearchOptions {
  std::optional<std::uint64_t> limit;
  // graceful-family kinds: keep one labeling of each {f, dual f} pair
  bool symmetryBreak = false;
  // estimated node cap; defaults to default_max_nodes()
  std::optional<double> maxNodes;
};

// 1e9, or TOPSNUT_MAX_NODES when set.
double default_max_nodes();

// Size estimate |label universe|^p checked against the cap.
double search_estimate(const Graph &g, const VerifierSpec &spec);

// Calls emit for each labeling passing verify(g, ., spec), depth first with
// vertices in index order and labels ascending. emit returns false to stop.
// Returns the number emitted.
std::uint64_t search(const Graph &g, const VerifierSpec &spec,
                     const SearchOptions &options,
                     const std::function<bool(const Labeling &)> &emit);

std::vector<Labeling> search_all(const Graph &g, const VerifierSpec &spec,
                                 const SearchOptions &options = {});
std::optional<Labeling> find_labeling(const Graph &g, const VerifierSpec &spec);
bool exists_labeling(const Graph &g, const VerifierSpec &spec);
std::uint64_t count_labelings(const Graph &g, const VerifierSpec &spec,
                              const SearchOptions &options = {});

// Havel-Hakimi: highest residual degree first, ties by index.
std::optional<Graph> realize(const DegreeSequence &d);

} // namespace topsnut
