#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topsnut/graph.hpp"
#include "topsnut/labeling.hpp"

namespace topsnut {

struct TopcodeMatrix {
  std::vector<int> X, E, Y;

  int q() const { return static_cast<int>(E.size()); }
  bool operator==(const TopcodeMatrix &) const = default;
};

// Throws PreconditionError on ragged rows or negative entries.
TopcodeMatrix make_matrix(std::vector<int> X, std::vector<int> E, std::vector<int> Y);

// One column per edge, sorted by (e, x, y). x is the smaller end unless
// sides are given, in which case x is the end on side 0.
TopcodeMatrix from_labeled_graph(const Graph &g, const Labeling &f,
                                 const EdgeRule &rule = {},
                                 const std::optional<Bipartition> &sides = std::nullopt);

struct Tag {
  std::string name;
  std::optional<int> constant;
  bool operator==(const Tag &) const = default;
};
std::vector<Tag> classify(const TopcodeMatrix &t);
bool has_tag(const std::vector<Tag> &tags, const std::string &name);
std::string tag_string(const Tag &t);

struct Structure {
  int values = 0; // |(XY)*|
  bool connected = false;
  bool euler = false;
  bool perfectMatching = false;
  std::optional<bool> hamilton; // absent above 10 values
};
Structure analyze(const TopcodeMatrix &t);

TopcodeMatrix matrix_union(const TopcodeMatrix &a, const TopcodeMatrix &b);

enum class Route { O1, O2, O3, O4, Perm };
enum class Variant { Base, Reciprocal, Inverse };

std::optional<Route> route_from_name(const std::string &name);
std::optional<Variant> variant_from_name(const std::string &name);

// Cells as (row, column) with rows 0=X, 1=E, 2=Y. perm lists row-major cell
// indices and is used only by Route::Perm.
std::vector<std::pair<int, int>> route_cells(int q, Route route, Variant variant,
                                             const std::vector<int> &perm = {});

std::string emit_string(const TopcodeMatrix &t, Route route,
                        Variant variant = Variant::Base,
                        const std::vector<int> &perm = {});

struct PartitionOptions {
  Route route = Route::O1;
  Variant variant = Variant::Base;
  std::vector<int> perm;
  std::optional<std::string> tag; // keep matrices carrying this class tag
  std::optional<int> maxEntry;
  int maxQ = 5;
};

// Visits every matrix whose emission is s; visit returns false to stop.
void partition_visit(const std::string &s, int q, const PartitionOptions &options,
                     const std::function<bool(const TopcodeMatrix &)> &visit);
std::vector<TopcodeMatrix> partition_string(const std::string &s, int q,
                                            const PartitionOptions &options = {});

} // namespace topsnut
