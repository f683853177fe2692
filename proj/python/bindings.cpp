#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "topsnut/error.hpp"
#include "topsnut/groups.hpp"
#include "topsnut/io.hpp"
#include "topsnut/solver.hpp"
#include "topsnut/topcode.hpp"
#include "topsnut/transforms.hpp"

namespace py = pybind11;
using namespace topsnut;

namespace {

Kind kind_of(const std::string &name) {
  auto k = kind_from_name(name);
  if (!k) throw PreconditionError("unknown kind '" + name + "'");
  return *k;
}

VerifierSpec make_spec(const std::string &kind, std::optional<int> k, int d, int lambda,
                       bool treeException, bool coloring, std::optional<int> bound,
                       std::vector<int> targetEdges) {
  VerifierSpec s = VerifierSpec::of(kind_of(kind));
  s.k = k;
  s.d = d;
  s.lambda = lambda;
  s.treeException = treeException;
  s.coloring = coloring;
  s.bound = bound;
  s.targetEdges = std::move(targetEdges);
  return s;
}

py::dict report_dict(const VerifyReport &r) {
  py::dict out;
  out["pass"] = r.pass;
  py::list fails;
  for (auto &f : r.failures) fails.append(py::make_tuple(f.condition, f.witness));
  out["failures"] = fails;
  out["constant"] = r.derivedConstant;
  return out;
}

Route route_of(const std::string &name) {
  auto r = route_from_name(name);
  if (!r) throw PreconditionError("unknown route '" + name + "'");
  return *r;
}

} // namespace

PYBIND11_MODULE(topsnut, m) {
  m.doc() = "Graph labelings, Topcode-matrices, graphic groups and degree sequences";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<SearchTooLarge>(m, "SearchTooLarge", PyExc_RuntimeError);
  py::register_exception<TransformFailed>(m, "TransformFailed", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("p"), py::arg("edges"))
      .def_readonly("p", &Graph::p)
      .def_readonly("edges", &Graph::edges)
      .def_property_readonly("q", &Graph::q)
      .def("degrees", &Graph::degrees)
      .def("is_tree", &Graph::is_tree)
      .def("__eq__", &Graph::operator==)
      .def("__repr__", [](const Graph &g) {
        return "Graph(p=" + std::to_string(g.p) + ", q=" + std::to_string(g.q()) + ")";
      });

  py::class_<Labeling>(m, "Labeling")
      .def(py::init([](std::vector<int> v, std::optional<std::vector<int>> e) {
             return Labeling{std::move(v), std::move(e)};
           }),
           py::arg("vertex"), py::arg("edge") = py::none())
      .def_readwrite("vertex", &Labeling::vertex)
      .def_readwrite("edge", &Labeling::edge)
      .def("__eq__", &Labeling::operator==);

  m.def("parse_graph", &parse_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("star_graph", &star_graph);
  m.def("kinds", [] {
    std::vector<std::string> out;
    for (Kind k : all_kinds()) out.push_back(kind_name(k));
    return out;
  });

  m.def(
      "verify",
      [](const Graph &g, const Labeling &f, const std::string &kind, std::optional<int> k, int d,
         int lambda, bool treeException, bool coloring, std::optional<int> bound,
         std::vector<int> targetEdges) {
        return report_dict(verify(g, f,
                                  make_spec(kind, k, d, lambda, treeException, coloring, bound,
                                            std::move(targetEdges))));
      },
      py::arg("graph"), py::arg("labeling"), py::arg("kind"), py::arg("k") = py::none(),
      py::arg("d") = 1, py::arg("lam") = 0, py::arg("tree_exception") = false,
      py::arg("coloring") = false, py::arg("bound") = py::none(),
      py::arg("target_edges") = std::vector<int>{});

  m.def(
      "search",
      [](const Graph &g, const std::string &kind, std::optional<int> k, int d,
         std::optional<std::uint64_t> limit, bool symmetryBreak) {
        SearchOptions o;
        o.limit = limit;
        o.symmetryBreak = symmetryBreak;
        py::gil_scoped_release release;
        return search_all(g, make_spec(kind, k, d, 0, false, false, std::nullopt, {}), o);
      },
      py::arg("graph"), py::arg("kind"), py::arg("k") = py::none(), py::arg("d") = 1,
      py::arg("limit") = py::none(), py::arg("symmetry_break") = false);
  m.def(
      "count",
      [](const Graph &g, const std::string &kind, std::optional<int> k, int d) {
        py::gil_scoped_release release;
        return count_labelings(g, make_spec(kind, k, d, 0, false, false, std::nullopt, {}));
      },
      py::arg("graph"), py::arg("kind"), py::arg("k") = py::none(), py::arg("d") = 1);

  m.def("dual", [](const Graph &g, const Labeling &f) { return dual(f, all_vertices(g)); });
  m.def(
      "harmonious_family",
      [](const Graph &t, const Labeling &f, int member, int k, int d) {
        if (member < 1 || member > 7) throw PreconditionError("member must be 1..7");
        return harmonious_family(t, f, static_cast<Member>(member), k, d).labeling;
      },
      py::arg("tree"), py::arg("labeling"), py::arg("member"), py::arg("k") = 1,
      py::arg("d") = 1);
  m.def("equivalent_transform", [](const Graph &t, const Labeling &f, const std::string &target) {
    static const std::map<std::string, Equivalence> names{
        {"odd-graceful", Equivalence::OddGraceful},
        {"edge-magic-total", Equivalence::EdgeMagicTotal},
        {"odd-even-separable-emt", Equivalence::OddEvenSeparableEmt},
        {"odd-elegant", Equivalence::OddElegant}};
    auto it = names.find(target);
    if (it == names.end()) throw PreconditionError("unknown target '" + target + "'");
    return equivalent_transform(t, f, it->second).labeling;
  });
  m.def("kd_graceful", [](const Graph &g, const Labeling &f, int k, int d) {
    return kd_graceful_from_graceful(g, f, k, d).labeling;
  });

  py::class_<TopcodeMatrix>(m, "TopcodeMatrix")
      .def(py::init([](std::vector<int> X, std::vector<int> E, std::vector<int> Y) {
             return make_matrix(std::move(X), std::move(E), std::move(Y));
           }),
           py::arg("X"), py::arg("E"), py::arg("Y"))
      .def_readonly("X", &TopcodeMatrix::X)
      .def_readonly("E", &TopcodeMatrix::E)
      .def_readonly("Y", &TopcodeMatrix::Y)
      .def_property_readonly("q", &TopcodeMatrix::q)
      .def("__eq__", &TopcodeMatrix::operator==);

  m.def("topcode", [](const Graph &g, const Labeling &f) { return from_labeled_graph(g, f); });
  m.def("classify", [](const TopcodeMatrix &t) {
    std::vector<std::string> out;
    for (auto &tag : classify(t)) out.push_back(tag_string(tag));
    return out;
  });
  m.def(
      "emit_string",
      [](const TopcodeMatrix &t, const std::string &route) { return emit_string(t, route_of(route)); },
      py::arg("matrix"), py::arg("route") = "o1");
  m.def(
      "partition_string",
      [](const std::string &s, int q, std::optional<std::string> tag, std::optional<int> maxEntry) {
        PartitionOptions o;
        o.tag = std::move(tag);
        o.maxEntry = maxEntry;
        return partition_string(s, q, o);
      },
      py::arg("s"), py::arg("q"), py::arg("tag") = py::none(), py::arg("max_entry") = py::none());

  m.def("is_graphical", [](std::vector<int> d) { return is_graphical(DegreeSequence(d)); });
  m.def("realize", [](std::vector<int> d) { return realize(DegreeSequence(d)); });

  py::class_<GraphicGroup>(m, "GraphicGroup")
      .def_readonly("n", &GraphicGroup::n)
      .def_readonly("elements", &GraphicGroup::elements)
      .def("add", [](const GraphicGroup &g, int i, int j, int zero) { return group_add(g, i, j, zero); })
      .def("subtract",
           [](const GraphicGroup &g, int i, int j, int zero) { return group_subtract(g, i, j, zero); })
      .def("axioms_hold", [](const GraphicGroup &g) { return check_axioms(g).pass(); });
  m.def("build_group", [](const Graph &g, const Labeling &f, int n) { return build_group(g, f, n); });
  m.def(
      "tree_group_coloring",
      [](const Graph &t, const GraphicGroup &g, const std::vector<int> &edges, int zero) {
        return tree_group_coloring(t, g, edges, zero);
      },
      py::arg("tree"), py::arg("group"), py::arg("edge_elements"), py::arg("zero") = 1);
}
