#include "topsnut/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

bool total_forced_abs(Kind k) {
  return k == Kind::TotalGraceful || k == Kind::KdGracefulTotal;
}

bool magic_kind(Kind k) {
  switch (k) {
  case Kind::EdgeMagicTotal:
  case Kind::SuperEdgeMagicTotal:
  case Kind::EdgeMagicGraceful:
  case Kind::EdgeMagicTotalGraceful:
  case Kind::KLambdaMagic:
  case Kind::EdgeDifference:
  case Kind::GracefulDifference:
  case Kind::FelicitousDifference:
    return true;
  default:
    return false;
  }
}

int magic_value(Kind kind, int fu, int fe, int fv, int lambda) {
  switch (kind) {
  case Kind::EdgeMagicTotal:
  case Kind::SuperEdgeMagicTotal:
    return fu + fe + fv;
  case Kind::EdgeMagicGraceful:
  case Kind::FelicitousDifference:
    return std::abs(fu + fv - fe);
  case Kind::EdgeMagicTotalGraceful:
  case Kind::EdgeDifference:
    return fe + std::abs(fu - fv);
  case Kind::GracefulDifference:
    return std::abs(std::abs(fu - fv) - fe);
  case Kind::KLambdaMagic:
    return fu + fv - lambda * fe;
  default:
    return 0;
  }
}

class Searcher {
public:
  Searcher(const Graph &g, const VerifierSpec &spec, const SearchOptions &opt,
           const std::function<bool(const Labeling &)> &emit)
      : g_(g), spec_(spec), opt_(opt), emit_(emit), t_(kind_traits(g, spec)) {
    const int p = g.p;
    closing_.assign(p, {});
    for (int i = 0; i < g.q(); ++i) {
      auto [u, v] = g.edges[i];
      closing_[std::max(u, v)].push_back(i);
    }
    f_.vertex.assign(p, 0);
    if (t_.total) f_.edge = std::vector<int>(g.q(), 0);
    if (t_.edges)
      for (int c : *t_.edges) ++remaining_[c];
    if (spec.kind == Kind::KdEdgeAntimagicTotal)
      for (int i = 0; i < g.q(); ++i) ++remaining_[spec.k.value_or(1) + i * spec.d];
    repeatsAllowed_ = t_.injective ? 0 : -1;
    if (spec.kind == Kind::Harmonious && !t_.injective) repeatsAllowed_ = 1;
    superTop_ = spec.kind == Kind::SuperEdgeMagicTotal ? p : t_.hi;
  }

  std::uint64_t run() {
    vertex(0);
    return emitted_;
  }

private:
  const Graph &g_;
  const VerifierSpec &spec_;
  const SearchOptions &opt_;
  const std::function<bool(const Labeling &)> &emit_;
  KindTraits t_;
  std::vector<std::vector<int>> closing_;
  Labeling f_;
  std::map<int, int> remaining_; // edge colors still available
  std::map<int, int> used_;      // label use counts
  std::map<int, int> sums_;      // strongly c-harmonious edge sums
  int repeats_ = 0;
  int repeatsAllowed_ = 0;       // -1: unlimited
  int superTop_ = 0;
  std::optional<int> constant_;
  int constantOwner_ = -1;
  std::uint64_t emitted_ = 0;
  bool stop_ = false;

  bool take_label(int c) {
    int &n = used_[c];
    if (n > 0) {
      if (t_.bijective) return false;
      if (repeatsAllowed_ == 0) return false;
      if (repeatsAllowed_ > 0 && (n >= 2 || repeats_ >= repeatsAllowed_)) return false;
      ++repeats_;
    }
    ++n;
    return true;
  }
  void drop_label(int c) {
    int &n = used_[c];
    --n;
    if (n > 0) --repeats_;
  }

  // Pushes edge colors of edges closed by vertex v; false on conflict.
  // On failure every partial change is undone.
  bool close_vertex_kind(int v, std::vector<int> &taken) {
    for (int i : closing_[v]) {
      auto [a, b] = g_.edges[i];
      int c = t_.rule->apply(f_.vertex[a], f_.vertex[b]);
      if (t_.edges) {
        auto it = remaining_.find(c);
        if (it == remaining_.end() || it->second == 0) return false;
        --it->second;
      } else {
        // strongly c-harmonious: sums distinct and within a window of q
        if (sums_[c]++ > 0) {
          --sums_[c];
          return false;
        }
        int lo = sums_.begin()->first;
        for (auto it = sums_.begin(); it != sums_.end(); ++it)
          if (it->second > 0) {
            lo = it->first;
            break;
          }
        int hi = lo;
        for (auto it = sums_.rbegin(); it != sums_.rend(); ++it)
          if (it->second > 0) {
            hi = it->first;
            break;
          }
        if (hi - lo > g_.q() - 1) {
          --sums_[c];
          return false;
        }
      }
      taken.push_back(c);
    }
    return true;
  }
  void release_vertex_kind(const std::vector<int> &taken) {
    for (int c : taken) {
      if (t_.edges) ++remaining_[c];
      else --sums_[c];
    }
  }

  void vertex(int v) {
    if (stop_) return;
    if (v == g_.p) {
      if (t_.total) edge_step(0);
      else finish();
      return;
    }
    int hi = t_.hi;
    if (spec_.kind == Kind::SuperEdgeMagicTotal) hi = superTop_;
    for (int c = t_.lo; c <= hi && !stop_; ++c) {
      if (!take_label(c)) continue;
      f_.vertex[v] = c;
      if (!t_.total) {
        std::vector<int> taken;
        if (close_vertex_kind(v, taken)) vertex(v + 1);
        release_vertex_kind(taken);
      } else {
        vertex(v + 1);
      }
      drop_label(c);
    }
  }

  // Total kinds: edges are labeled after all vertices, in edge order.
  void edge_step(int i) {
    if (stop_) return;
    if (i == g_.q()) {
      finish();
      return;
    }
    auto [a, b] = g_.edges[i];
    int fa = f_.vertex[a], fb = f_.vertex[b];
    auto attempt = [&](int c) {
      if (c < t_.edgeLo || c > t_.edgeHi) return;
      if (t_.bijective && used_[c] > 0) return;
      if (total_forced_abs(spec_.kind) && c != std::abs(fa - fb)) return;
      std::optional<int> sumKey;
      if (spec_.kind == Kind::KdEdgeAntimagicTotal || spec_.kind == Kind::KdGracefulTotal) {
        int key = spec_.kind == Kind::KdGracefulTotal ? c : fa + c + fb;
        auto it = remaining_.find(key);
        if (it == remaining_.end() || it->second == 0) return;
        --it->second;
        sumKey = key;
      }
      bool setConstant = false;
      if (magic_kind(spec_.kind)) {
        int val = magic_value(spec_.kind, fa, c, fb, spec_.lambda);
        std::optional<int> want = spec_.k ? spec_.k : constant_;
        if (want && val != *want) {
          if (sumKey) ++remaining_[*sumKey];
          return;
        }
        if (!want) {
          constant_ = val;
          constantOwner_ = i;
          setConstant = true;
        }
      }
      if (t_.bijective) ++used_[c];
      (*f_.edge)[i] = c;
      edge_step(i + 1);
      if (t_.bijective) --used_[c];
      if (setConstant) {
        constant_.reset();
        constantOwner_ = -1;
      }
      if (sumKey) ++remaining_[*sumKey];
    };
    if (total_forced_abs(spec_.kind)) {
      attempt(std::abs(fa - fb));
      return;
    }
    for (int c = t_.edgeLo; c <= t_.edgeHi && !stop_; ++c) attempt(c);
  }

  void finish() {
    if (!verify(g_, f_, spec_).pass) return;
    if (opt_.symmetryBreak && t_.graceful_family && g_.p > 0) {
      auto [mn, mx] = std::minmax_element(f_.vertex.begin(), f_.vertex.end());
      int lo = *mn, hi = *mx;
      for (int v = 0; v < g_.p; ++v) {
        if (f_.vertex[v] == lo) break;
        if (f_.vertex[v] == hi) return;
      }
    }
    ++emitted_;
    if (!emit_(f_)) stop_ = true;
    if (opt_.limit && emitted_ >= *opt_.limit) stop_ = true;
  }
};

} // namespace

double default_max_nodes() {
  if (const char *env = std::getenv("TOPSNUT_MAX_NODES")) {
    char *end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e9;
}

double search_estimate(const Graph &g, const VerifierSpec &spec) {
  auto t = kind_traits(g, spec);
  int hi = spec.kind == Kind::SuperEdgeMagicTotal ? g.p : t.hi;
  double universe = std::max(0, hi - t.lo + 1);
  return std::pow(universe, g.p);
}

std::uint64_t search(const Graph &g, const VerifierSpec &spec,
                     const SearchOptions &options,
                     const std::function<bool(const Labeling &)> &emit) {
  if (spec.kind == Kind::KLambdaMagic && spec.lambda == 0)
    throw PreconditionError("k-lambda-magic needs lambda != 0");
  double cap = options.maxNodes.value_or(default_max_nodes());
  double estimate = search_estimate(g, spec);
  if (estimate > cap) throw SearchTooLarge(estimate, cap);
  return Searcher(g, spec, options, emit).run();
}

std::vector<Labeling> search_all(const Graph &g, const VerifierSpec &spec,
                                 const SearchOptions &options) {
  std::vector<Labeling> out;
  search(g, spec, options, [&](const Labeling &f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::optional<Labeling> find_labeling(const Graph &g, const VerifierSpec &spec) {
  std::optional<Labeling> out;
  search(g, spec, {}, [&](const Labeling &f) {
    out = f;
    return false;
  });
  return out;
}

bool exists_labeling(const Graph &g, const VerifierSpec &spec) {
  return find_labeling(g, spec).has_value();
}

std::uint64_t count_labelings(const Graph &g, const VerifierSpec &spec,
                              const SearchOptions &options) {
  return search(g, spec, options, [](const Labeling &) { return true; });
}

std::optional<Graph> realize(const DegreeSequence &d) {
  const int n = d.size();
  std::vector<int> left(d.entries());
  std::vector<Edge> edges;
  while (true) {
    int u = -1;
    for (int i = 0; i < n; ++i)
      if (left[i] > 0 && (u < 0 || left[i] > left[u])) u = i;
    if (u < 0) break;
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
      if (i != u && left[i] > 0) others.push_back(i);
    std::stable_sort(others.begin(), others.end(),
                     [&](int a, int b) { return left[a] > left[b]; });
    if (static_cast<int>(others.size()) < left[u]) return std::nullopt;
    for (int k = 0; k < left[u]; ++k) {
      int w = others[k];
      --left[w];
      edges.push_back({std::min(u, w), std::max(u, w)});
    }
    left[u] = 0;
  }
  return make_graph(n, edges);
}

} // namespace topsnut
