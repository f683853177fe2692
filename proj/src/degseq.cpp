#include "topsnut/degseq.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

void check_positions(const DegreeSequence &d, const std::vector<int> &pos,
                     const char *what) {
  std::set<int> seen;
  for (int i : pos) {
    if (i < 0 || i >= d.size())
      throw PreconditionError(std::string(what) + ": position " +
                              std::to_string(i) + " out of range");
    if (!seen.insert(i).second)
      throw PreconditionError(std::string(what) + ": position " +
                              std::to_string(i) + " used twice");
  }
}

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> entries) : a_(std::move(entries)) {
  for (int x : a_)
    if (x < 0) throw PreconditionError("degree sequence entry is negative");
  std::sort(a_.begin(), a_.end(), std::greater<>());
}

long long DegreeSequence::sum() const {
  return std::accumulate(a_.begin(), a_.end(), 0LL);
}

std::string DegreeSequence::str() const {
  std::string s = "(";
  for (size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a_[i]);
  }
  return s + ")";
}

DegreeSequence parse_sequence(const std::string &text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t()"));
    item.erase(item.find_last_not_of(" \t()") + 1);
    if (item.empty()) continue;
    size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != item.size() || v < 0 || v > 1000000)
      throw ParseError("bad degree entry '" + item + "'");
    out.push_back(static_cast<int>(v));
  }
  return DegreeSequence(out);
}

// Erdos-Gallai over the sorted entries.
bool is_graphical(const DegreeSequence &d) {
  const auto &m = d.entries();
  int n = d.size();
  if (d.sum() % 2 != 0) return false;
  long long left = 0;
  for (int k = 1; k <= n; ++k) {
    left += m[k - 1];
    long long right = 1LL * k * (k - 1);
    for (int j = k; j < n; ++j) right += std::min(k, m[j]);
    if (left > right) return false;
  }
  return true;
}

DegreeSequence increase_component(const DegreeSequence &d, int k,
                                  const std::vector<int> &bumped) {
  if (k < 0 || k > d.size())
    throw PreconditionError("increase_component: k exceeds the length");
  if (static_cast<int>(bumped.size()) != k)
    throw PreconditionError("increase_component: need exactly k bumped positions");
  check_positions(d, bumped, "increase_component");
  std::vector<int> a = d.entries();
  for (int i : bumped) ++a[i];
  a.push_back(k);
  return DegreeSequence(a);
}

Decrease decrease_component(const DegreeSequence &d, int position,
                            const std::vector<int> &reduced) {
  if (position < 0 || position >= d.size())
    throw PreconditionError("decrease_component: position out of range");
  int a = d[position];
  if (static_cast<int>(reduced.size()) != a)
    throw PreconditionError("decrease_component: need exactly a reduced positions");
  check_positions(d, reduced, "decrease_component");
  std::vector<int> rest = d.entries();
  for (int i : reduced) {
    if (i == position)
      throw PreconditionError("decrease_component: cannot reduce the removed entry");
    if (rest[i] == 0)
      throw PreconditionError("decrease_component: entry would go negative");
    --rest[i];
  }
  rest.erase(rest.begin() + position);
  return {DegreeSequence(rest), reduced};
}

Decrease decrease_component(const DegreeSequence &d, int position) {
  if (position < 0 || position >= d.size())
    throw PreconditionError("decrease_component: position out of range");
  std::vector<int> pick;
  for (int i = 0; i < d.size() && static_cast<int>(pick.size()) < d[position]; ++i)
    if (i != position && d[i] > 0) pick.push_back(i);
  if (static_cast<int>(pick.size()) < d[position])
    throw PreconditionError("decrease_component: no valid subset to reduce");
  return decrease_component(d, position, pick);
}

DegreeSequence coincide(const DegreeSequence &d1, const DegreeSequence &d2,
                        const std::vector<std::pair<int, int>> &pairs) {
  if (pairs.empty())
    throw PreconditionError("coincide: at least one pair is required");
  std::vector<int> left, right;
  for (auto [i, j] : pairs) {
    left.push_back(i);
    right.push_back(j);
  }
  check_positions(d1, left, "coincide");
  check_positions(d2, right, "coincide");
  std::vector<bool> used1(d1.size(), false), used2(d2.size(), false);
  std::vector<int> out;
  for (auto [i, j] : pairs) {
    used1[i] = used2[j] = true;
    out.push_back(d1[i] + d2[j]);
  }
  for (int i = 0; i < d1.size(); ++i)
    if (!used1[i]) out.push_back(d1[i]);
  for (int j = 0; j < d2.size(); ++j)
    if (!used2[j]) out.push_back(d2[j]);
  return DegreeSequence(out);
}

DegreeSequence join(const DegreeSequence &d1, const DegreeSequence &d2, int i,
                    int j) {
  check_positions(d1, {i}, "join");
  check_positions(d2, {j}, "join");
  std::vector<int> out = d1.entries();
  out[i] += 1;
  for (int t = 0; t < d2.size(); ++t) out.push_back(d2[t] + (t == j ? 1 : 0));
  return DegreeSequence(out);
}

DegreeSequence complement(const DegreeSequence &d, int n) {
  if (n != d.size())
    throw PreconditionError("complement: n must equal the sequence length");
  std::vector<int> out;
  for (int a : d.entries()) {
    if (a > n - 1)
      throw PreconditionError("complement: entry " + std::to_string(a) +
                              " exceeds n-1");
    out.push_back(n - 1 - a);
  }
  return DegreeSequence(out);
}

DegreeSequence complement(const DegreeSequence &d) { return complement(d, d.size()); }

DegreeSequence sequence_union(const DegreeSequence &d1, const DegreeSequence &d2) {
  std::vector<int> out = d1.entries();
  out.insert(out.end(), d2.entries().begin(), d2.entries().end());
  return DegreeSequence(out);
}

} // namespace topsnut
