#include "topsnut/io.hpp"

#include <fstream>
#include <sstream>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

std::vector<int> int_array(const json &j, const char *what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (auto &x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

template <class T> std::optional<T> opt(const json &j, const char *key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  try {
    return j[key].get<T>();
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad field ") + key + ": " + e.what());
  }
}

} // namespace

json to_json(const Graph &g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  json j{{"p", g.p}, {"q", g.q()}, {"edges", edges}};
  if (!g.names.empty()) j["names"] = g.names;
  return j;
}

json to_json(const Labeling &f) {
  json j{{"vertex", f.vertex}};
  j["edge"] = f.edge ? json(*f.edge) : json(nullptr);
  return j;
}

json to_json(const VerifyReport &r) {
  json failures = json::array();
  for (auto &x : r.failures) failures.push_back({{"condition", x.condition}, {"witness", x.witness}});
  json j{{"pass", r.pass}, {"failures", failures}};
  j["derivedConstant"] = r.derivedConstant ? json(*r.derivedConstant) : json(nullptr);
  return j;
}

json to_json(const TopcodeMatrix &t) { return {{"X", t.X}, {"E", t.E}, {"Y", t.Y}}; }

json to_json(const VerifierSpec &s) {
  json j{{"kind", kind_name(s.kind)}, {"d", s.d}, {"lambda", s.lambda},
         {"treeException", s.treeException}, {"coloring", s.coloring}};
  if (s.k) j["k"] = *s.k;
  if (s.bound) j["bound"] = *s.bound;
  if (s.kind == Kind::Custom) {
    j["targetEdges"] = s.targetEdges;
    j["injective"] = s.injective;
  }
  return j;
}

json to_json(const Structure &s) {
  json j{{"values", s.values},
         {"connected", s.connected},
         {"euler", s.euler},
         {"perfectMatching", s.perfectMatching}};
  j["hamilton"] = s.hamilton ? json(*s.hamilton) : json(nullptr);
  return j;
}

json to_json(const AxiomReport &r) {
  return {{"pass", r.pass()},
          {"closure", r.closure},
          {"zeroLaw", r.zeroLaw},
          {"inverse", r.inverse},
          {"associative", r.associative},
          {"commutative", r.commutative},
          {"labelIdentity", r.labelIdentity},
          {"labelFailures", r.labelFailures},
          {"literalMismatches", r.literalMismatches}};
}

json to_json(const Encryption &e) {
  return {{"vertex", e.vertex},
          {"edge", e.edge},
          {"graceful", e.graceful},
          {"oddGraceful", e.oddGraceful}};
}

Graph graph_from_json(const json &j) {
  if (!j.is_object() || !j.contains("edges")) throw ParseError("graph needs an edges array");
  std::vector<Edge> edges;
  int top = -1;
  for (auto &e : j["edges"]) {
    auto uv = int_array(e, "edge");
    if (uv.size() != 2) throw ParseError("edge must have two endpoints");
    edges.push_back({uv[0], uv[1]});
    top = std::max({top, uv[0], uv[1]});
  }
  int p = opt<int>(j, "p").value_or(top + 1);
  try {
    Graph g = make_graph(p, edges);
    if (auto names = opt<std::vector<std::string>>(j, "names")) g.names = *names;
    return g;
  } catch (const PreconditionError &e) {
    throw ParseError(e.what());
  }
}

Labeling labeling_from_json(const json &j) {
  if (j.is_array()) return {int_array(j, "labeling"), std::nullopt};
  if (!j.is_object() || !j.contains("vertex"))
    throw ParseError("labeling needs a vertex array");
  Labeling f{int_array(j["vertex"], "vertex"), std::nullopt};
  if (j.contains("edge") && !j["edge"].is_null()) f.edge = int_array(j["edge"], "edge");
  return f;
}

TopcodeMatrix matrix_from_json(const json &j) {
  if (!j.is_object() || !j.contains("X") || !j.contains("E") || !j.contains("Y"))
    throw ParseError("matrix needs X, E and Y rows");
  try {
    return make_matrix(int_array(j["X"], "X"), int_array(j["E"], "E"), int_array(j["Y"], "Y"));
  } catch (const PreconditionError &e) {
    throw ParseError(e.what());
  }
}

VerifierSpec spec_from_json(const json &j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("spec needs a kind");
  auto kind = kind_from_name(j["kind"].get<std::string>());
  if (!kind) throw ParseError("unknown kind " + j["kind"].dump());
  VerifierSpec s = VerifierSpec::of(*kind);
  s.k = opt<int>(j, "k");
  s.d = opt<int>(j, "d").value_or(1);
  s.lambda = opt<int>(j, "lambda").value_or(0);
  s.treeException = opt<bool>(j, "treeException").value_or(false);
  s.coloring = opt<bool>(j, "coloring").value_or(false);
  s.bound = opt<int>(j, "bound");
  if (j.contains("targetEdges")) s.targetEdges = int_array(j["targetEdges"], "targetEdges");
  s.injective = opt<bool>(j, "injective").value_or(true);
  if (j.contains("matching") && !j["matching"].is_null())
    s.matching = int_array(j["matching"], "matching");
  return s;
}

json parse_json(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Graph read_graph_text(const std::string &text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return graph_from_json(parse_json(text));
  return parse_graph(text);
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace topsnut
