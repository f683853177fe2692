#pragma once

#include <string>
#include <utility>
#include <vector>

namespace topsnut {

// Multiset of degrees kept in non-increasing order.
class DegreeSequence {
public:
  DegreeSequence() = default;
  DegreeSequence(std::vector<int> entries);
  DegreeSequence(std::initializer_list<int> entries)
      : DegreeSequence(std::vector<int>(entries)) {}

  const std::vector<int> &entries() const { return a_; }
  int size() const { return static_cast<int>(a_.size()); }
  int operator[](int i) const { return a_[i]; }
  long long sum() const;
  std::string str() const;

  bool operator==(const DegreeSequence &o) const { return a_ == o.a_; }
  auto operator<=>(const DegreeSequence &o) const = default;

private:
  std::vector<int> a_;
};

DegreeSequence parse_sequence(const std::string &text);

bool is_graphical(const DegreeSequence &d);

// d plus a new entry k, bumping the k entries at the given positions.
DegreeSequence increase_component(const DegreeSequence &d, int k,
                                  const std::vector<int> &bumped);

struct Decrease {
  DegreeSequence result;
  std::vector<int> reduced; // positions in d that lost one
};
// Removes d[position] and subtracts one from each entry at `reduced`.
Decrease decrease_component(const DegreeSequence &d, int position,
                            const std::vector<int> &reduced);
// Same, reducing the largest remaining entries.
Decrease decrease_component(const DegreeSequence &d, int position);

DegreeSequence coincide(const DegreeSequence &d1, const DegreeSequence &d2,
                        const std::vector<std::pair<int, int>> &pairs);
DegreeSequence join(const DegreeSequence &d1, const DegreeSequence &d2, int i,
                    int j);
DegreeSequence complement(const DegreeSequence &d, int n);
DegreeSequence complement(const DegreeSequence &d);
DegreeSequence sequence_union(const DegreeSequence &d1,
                              const DegreeSequence &d2);

} // namespace topsnut
