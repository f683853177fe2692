#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "topsnut/error.hpp"
#include "topsnut/io.hpp"
#include "topsnut/solver.hpp"
#include "topsnut/transforms.hpp"

using namespace topsnut;

namespace {

struct Exit {
  int code;
};

bool pretty = false;

void print_pretty(const json &j, const std::string &indent = "") {
  if (j.is_object()) {
    for (auto &[k, v] : j.items()) {
      bool flat = v.is_array() && std::none_of(v.begin(), v.end(),
                                               [](const json &x) { return x.is_object(); });
      if (v.is_structured() && !flat) {
        std::cout << indent << k << ":\n";
        print_pretty(v, indent + "  ");
      } else {
        std::cout << indent << k << "  " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (auto &v : j) {
      if (v.is_structured()) {
        print_pretty(v, indent + "- ");
      } else {
        std::cout << indent << v.dump() << "\n";
      }
    }
  } else {
    std::cout << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void out(const json &j) {
  if (pretty) print_pretty(j);
  else std::cout << j.dump() << "\n";
}

std::vector<int> int_list(const std::string &text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("bad integer " + item);
    } catch (const std::logic_error &) {
      throw ParseError("bad integer list " + text);
    }
  }
  return v;
}

Graph load_graph(const std::string &path) { return read_graph_text(read_file(path)); }
Labeling load_labeling(const std::string &path) {
  return labeling_from_json(parse_json(read_file(path)));
}
TopcodeMatrix load_matrix(const std::string &path) {
  return matrix_from_json(parse_json(read_file(path)));
}

Kind parse_kind(const std::string &name) {
  auto k = kind_from_name(name);
  if (!k) throw ParseError("unknown kind " + name);
  return *k;
}

struct SpecFlags {
  std::string kind = "graceful";
  std::optional<int> k;
  int d = 1;
  int lambda = 0;
  bool treeException = false;
  bool coloring = false;
  std::optional<int> bound;
  std::string targets;
  std::string rule = "abs-diff";
  int m = 1;

  void attach(CLI::App *app) {
    app->add_option("--kind", kind, "labeling kind")->required();
    app->add_option("--k", k, "magic constant or family parameter");
    app->add_option("--d", d, "common difference");
    app->add_option("--lambda", lambda, "lambda for k-lambda-magic");
    app->add_flag("--tree-exception", treeException, "tree relaxation");
    app->add_flag("--coloring", coloring, "drop the bijection requirement");
    app->add_option("--bound", bound, "largest label (gcd, custom)");
    app->add_option("--target-edges", targets, "custom edge colors, comma separated");
    app->add_option("--rule", rule, "custom rule: abs-diff|sum|sum-mod|gcd|sum-plus-mod");
    app->add_option("--m", m, "modulus for custom rules");
  }

  VerifierSpec spec() const {
    VerifierSpec s = VerifierSpec::of(parse_kind(kind));
    s.k = k;
    s.d = d;
    s.lambda = lambda;
    s.treeException = treeException;
    s.coloring = coloring;
    s.bound = bound;
    if (!targets.empty()) s.targetEdges = int_list(targets);
    static const std::map<std::string, Rule> rules = {{"abs-diff", Rule::AbsDiff},
                                                      {"sum", Rule::Sum},
                                                      {"sum-mod", Rule::SumMod},
                                                      {"gcd", Rule::Gcd},
                                                      {"sum-plus-mod", Rule::SumPlusModStar}};
    auto it = rules.find(rule);
    if (it == rules.end()) throw ParseError("unknown rule " + rule);
    s.rule = {it->second, m, k.value_or(0)};
    return s;
  }
};

std::optional<Side> side_of(const std::string &target, const std::string &prefix) {
  if (target == prefix + "-x") return Side::X;
  if (target == prefix + "-y") return Side::Y;
  return std::nullopt;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"topsnut: graph labelings, Topcode matrices, graphic groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "human readable output");

  // verify
  auto *verifyCmd = app.add_subcommand("verify", "check a labeling against a kind");
  std::string graphPath, labelingPath;
  SpecFlags vflags;
  verifyCmd->add_option("--graph", graphPath)->required();
  verifyCmd->add_option("--labeling", labelingPath)->required();
  vflags.attach(verifyCmd);
  verifyCmd->callback([&] {
    Graph g = load_graph(graphPath);
    Labeling f = load_labeling(labelingPath);
    auto spec = vflags.spec();
    json j;
    int code;
    if (spec.kind == Kind::SixC) {
      auto r = verify_6C(g, f);
      j = to_json(r.report);
      j["flags"] = r.flags;
      code = r.report.pass ? 0 : 1;
    } else {
      auto r = verify(g, f, spec);
      j = to_json(r);
      code = r.pass ? 0 : 1;
    }
    out(j);
    throw Exit{code};
  });

  // search
  auto *searchCmd = app.add_subcommand("search", "enumerate labelings");
  SpecFlags sflags;
  std::uint64_t limit = 1;
  bool all = false, symmetry = false, countOnly = false;
  searchCmd->add_option("--graph", graphPath)->required();
  sflags.attach(searchCmd);
  searchCmd->add_option("--limit", limit, "stop after this many labelings");
  searchCmd->add_flag("--all", all, "emit every labeling");
  searchCmd->add_flag("--symmetry-break", symmetry, "one labeling per dual pair");
  searchCmd->add_flag("--count", countOnly, "print only the count of all labelings");
  searchCmd->callback([&] {
    Graph g = load_graph(graphPath);
    SearchOptions opt;
    // --count tallies everything unless a limit is given explicitly
    if (!all && !(countOnly && searchCmd->count("--limit") == 0)) opt.limit = limit;
    opt.symmetryBreak = symmetry;
    std::uint64_t n = search(g, sflags.spec(), opt, [&](const Labeling &f) {
      if (!countOnly) out(to_json(f));
      return true;
    });
    if (countOnly) out(json{{"count", n}});
    throw Exit{n > 0 ? 0 : 1};
  });

  // transform
  auto *transformCmd = app.add_subcommand("transform", "derive a labeling from another");
  std::string target;
  int tk = 1, td = 1, ta = 1, tb = 0;
  std::string leaves;
  transformCmd->add_option("--graph", graphPath)->required();
  transformCmd->add_option("--from", labelingPath)->required();
  transformCmd->add_option("--target", target,
                           "dual|partial-dual-x|partial-dual-y|reciprocal-x|reciprocal-y|"
                           "linear|g1..g7|odd-graceful|edge-magic-total|"
                           "odd-even-separable-emt|odd-elegant|kd-graceful|image|leaf-add")
      ->required();
  transformCmd->add_option("--k", tk);
  transformCmd->add_option("--d", td);
  transformCmd->add_option("--a", ta);
  transformCmd->add_option("--b", tb);
  transformCmd->add_option("--leaves", leaves, "leaf count per vertex, comma separated");
  transformCmd->callback([&] {
    Graph g = load_graph(graphPath);
    Labeling f = load_labeling(labelingPath);
    auto result = [&](const TransformResult &r) {
      out({{"labeling", to_json(r.labeling)},
           {"target", to_json(r.target)},
           {"report", to_json(r.report)}});
    };
    if (target == "dual") {
      out({{"labeling", to_json(dual(f, all_vertices(g)))}});
    } else if (auto s = side_of(target, "partial-dual")) {
      out({{"labeling", to_json(partial_dual(g, f, *s))}});
    } else if (auto s2 = side_of(target, "reciprocal")) {
      out({{"labeling", to_json(reciprocal(g, f, *s2))}});
    } else if (target == "linear") {
      out({{"labeling", to_json(linear(g, f, ta, tb))}});
    } else if (target.size() == 2 && target[0] == 'g' && target[1] >= '1' &&
               target[1] <= '7') {
      result(harmonious_family(g, f, static_cast<Member>(target[1] - '0'), tk, td));
    } else if (target == "odd-graceful") {
      result(equivalent_transform(g, f, Equivalence::OddGraceful));
    } else if (target == "edge-magic-total") {
      result(equivalent_transform(g, f, Equivalence::EdgeMagicTotal));
    } else if (target == "odd-even-separable-emt") {
      result(equivalent_transform(g, f, Equivalence::OddEvenSeparableEmt));
    } else if (target == "odd-elegant") {
      result(equivalent_transform(g, f, Equivalence::OddElegant));
    } else if (target == "kd-graceful") {
      result(kd_graceful_from_graceful(g, f, tk, td));
    } else if (target == "image") {
      result(image_pair(g, f, tk));
    } else if (target == "leaf-add") {
      auto r = leaf_add_kd(g, f, int_list(leaves), tk, td);
      out({{"graph", to_json(r.graph)},
           {"labeling", to_json(r.labeling)},
           {"report", to_json(r.report)}});
    } else {
      throw ParseError("unknown target " + target);
    }
  });

  // topcode
  auto *topcode = app.add_subcommand("topcode", "Topcode matrices and strings");
  topcode->require_subcommand(1);
  topcode->fallthrough();
  std::string matrixPath, route = "o1", variant = "base", perm, text, tag, edgeRule = "abs-diff";
  int q = 0;
  std::optional<int> maxEntry;
  auto *build = topcode->add_subcommand("build", "matrix of a labeled graph");
  build->add_option("--graph", graphPath)->required();
  build->add_option("--labeling", labelingPath)->required();
  build->add_option("--rule", edgeRule, "induced edge rule: abs-diff|sum");
  build->callback([&] {
    Graph g = load_graph(graphPath);
    Labeling f = load_labeling(labelingPath);
    if (edgeRule != "abs-diff" && edgeRule != "sum") throw ParseError("unknown rule " + edgeRule);
    out(to_json(from_labeled_graph(g, f, {edgeRule == "sum" ? Rule::Sum : Rule::AbsDiff})));
  });
  auto parse_route = [&] {
    auto r = route_from_name(route);
    auto v = variant_from_name(variant);
    if (!r) throw ParseError("unknown route " + route);
    if (!v) throw ParseError("unknown variant " + variant);
    return std::make_pair(*r, *v);
  };
  auto *emit = topcode->add_subcommand("emit", "number-based string of a matrix");
  emit->add_option("--matrix", matrixPath)->required();
  emit->add_option("--route", route, "o1|o2|o3|o4|perm");
  emit->add_option("--variant", variant, "base|reciprocal|inverse");
  emit->add_option("--perm", perm, "cell order for --route perm, comma separated");
  emit->callback([&] {
    auto [r, v] = parse_route();
    std::vector<int> pi = perm.empty() ? std::vector<int>{} : int_list(perm);
    std::cout << emit_string(load_matrix(matrixPath), r, v, pi) << "\n";
  });
  auto *partition = topcode->add_subcommand("partition", "matrices emitting a string");
  partition->add_option("--string", text)->required();
  partition->add_option("--q", q)->required();
  partition->add_option("--class", tag, "keep matrices with this class tag");
  partition->add_option("--route", route);
  partition->add_option("--variant", variant);
  partition->add_option("--max-entry", maxEntry);
  partition->callback([&] {
    auto [r, v] = parse_route();
    PartitionOptions opt;
    opt.route = r;
    opt.variant = v;
    if (!tag.empty()) opt.tag = tag;
    opt.maxEntry = maxEntry;
    json arr = json::array();
    for (auto &t : partition_string(text, q, opt)) arr.push_back(to_json(t));
    out(arr);
    throw Exit{arr.empty() ? 1 : 0};
  });
  auto *classifyCmd = topcode->add_subcommand("classify", "class tags of a matrix");
  classifyCmd->add_option("--matrix", matrixPath)->required();
  classifyCmd->callback([&] {
    json arr = json::array();
    for (auto &t : classify(load_matrix(matrixPath))) arr.push_back(tag_string(t));
    out(arr);
  });
  auto *analyzeCmd = topcode->add_subcommand("analyze", "structure of a matrix");
  analyzeCmd->add_option("--matrix", matrixPath)->required();
  analyzeCmd->callback([&] { out(to_json(analyze(load_matrix(matrixPath)))); });

  // group
  auto *group = app.add_subcommand("group", "every-zero graphic groups");
  group->require_subcommand(1);
  group->fallthrough();
  int n = 0, gi = 1, gj = 1, zero = 1, pmod = 0, qmod = 0;
  std::string mode = "vertex", mapText;
  std::uint64_t seed = 0;
  bool subtract = false;
  auto load_group = [&] {
    Graph g = load_graph(graphPath);
    Labeling f = load_labeling(labelingPath);
    if (mode == "mixed") return build_mixed_group(g, f, pmod, qmod);
    if (mode != "vertex" && mode != "edge") throw ParseError("unknown mode " + mode);
    return build_group(g, f, n, mode == "edge" ? GroupMode::Edge : GroupMode::Vertex);
  };
  auto group_inputs = [&](CLI::App *c) {
    c->add_option("--graph", graphPath)->required();
    c->add_option("--labeling", labelingPath)->required();
    c->add_option("--n", n, "number of elements");
    c->add_option("--mode", mode, "vertex|edge|mixed");
    c->add_option("--pmod", pmod, "vertex modulus (mixed)");
    c->add_option("--qmod", qmod, "edge modulus (mixed)");
  };
  auto *gbuild = group->add_subcommand("build", "list the group elements");
  group_inputs(gbuild);
  gbuild->callback([&] {
    auto G = load_group();
    json arr = json::array();
    for (auto &e : G.elements) arr.push_back(to_json(e));
    out({{"n", G.n}, {"elements", arr}});
  });
  auto *gop = group->add_subcommand("op", "index arithmetic under a zero");
  gop->add_option("--n", n)->required();
  gop->add_option("--i", gi)->required();
  gop->add_option("--j", gj)->required();
  gop->add_option("--zero", zero);
  gop->add_flag("--subtract", subtract);
  gop->callback([&] {
    Graph k1 = make_graph(1, {});
    auto G = build_group(k1, {{0}, std::nullopt}, n);
    int r = subtract ? group_subtract(G, gi, gj, zero) : group_add(G, gi, gj, zero);
    out({{"result", r}});
  });
  auto *gencrypt = group->add_subcommand("encrypt", "color a graph with group elements");
  std::string targetGraph;
  group_inputs(gencrypt);
  gencrypt->add_option("--target", targetGraph, "graph to encrypt (defaults to the base)");
  gencrypt->add_option("--seed", seed);
  gencrypt->add_option("--map", mapText, "vertex elements, comma separated");
  gencrypt->add_option("--zero", zero);
  gencrypt->callback([&] {
    auto G = load_group();
    Graph h = targetGraph.empty() ? G.base : load_graph(targetGraph);
    Seed s = mapText.empty() ? Seed{seed} : Seed{int_list(mapText)};
    out(to_json(encrypt_graph(h, G, s, zero)));
  });
  auto *gcheck = group->add_subcommand("check", "exhaustive axiom check");
  group_inputs(gcheck);
  gcheck->callback([&] {
    auto r = check_axioms(load_group());
    out(to_json(r));
    throw Exit{r.pass() ? 0 : 1};
  });

  // degseq
  auto *degseq = app.add_subcommand("degseq", "degree-sequence algebra");
  degseq->require_subcommand(1);
  degseq->fallthrough();
  std::string s1, s2, pairs;
  int di = 0, dj = 0;
  std::optional<int> cn;
  auto *dcheck = degseq->add_subcommand("check", "Erdos-Gallai test");
  dcheck->add_option("sequence", s1)->required();
  dcheck->callback([&] {
    auto d = parse_sequence(s1);
    bool ok = is_graphical(d);
    json j{{"sequence", d.entries()}, {"graphical", ok}};
    if (ok) j["realization"] = to_json(*realize(d));
    out(j);
    throw Exit{ok ? 0 : 1};
  });
  auto *dco = degseq->add_subcommand("coincide", "merge paired entries");
  dco->add_option("first", s1)->required();
  dco->add_option("second", s2)->required();
  dco->add_option("--pairs", pairs, "i:j pairs of positions, comma separated")->required();
  dco->callback([&] {
    std::vector<std::pair<int, int>> ps;
    std::stringstream ss(pairs);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw ParseError("pair must be i:j");
      auto a = int_list(item.substr(0, colon)), b = int_list(item.substr(colon + 1));
      if (a.size() != 1 || b.size() != 1) throw ParseError("pair must be i:j");
      ps.push_back({a[0], b[0]});
    }
    auto d = coincide(parse_sequence(s1), parse_sequence(s2), ps);
    out({{"sequence", d.entries()}, {"graphical", is_graphical(d)}});
  });
  auto *djoin = degseq->add_subcommand("join", "bump one entry of each and concatenate");
  djoin->add_option("first", s1)->required();
  djoin->add_option("second", s2)->required();
  djoin->add_option("--i", di);
  djoin->add_option("--j", dj);
  djoin->callback([&] {
    auto d = join(parse_sequence(s1), parse_sequence(s2), di, dj);
    out({{"sequence", d.entries()}, {"graphical", is_graphical(d)}});
  });
  auto *dcomp = degseq->add_subcommand("complement", "complementary sequence");
  dcomp->add_option("sequence", s1)->required();
  dcomp->add_option("--n", cn);
  dcomp->callback([&] {
    auto d = parse_sequence(s1);
    auto c = cn ? complement(d, *cn) : complement(d);
    out({{"sequence", c.entries()}, {"graphical", is_graphical(c)}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  } catch (const Exit &e) {
    return e.code;
  } catch (const SearchTooLarge &e) {
    std::cerr << "error: " << e.what() << " (raise TOPSNUT_MAX_NODES to allow it)\n";
    return 2;
  } catch (const TransformFailed &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
