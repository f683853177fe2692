#pragma once

#include <stdexcept>
#include <string>

namespace topsnut {

// Malformed input documents (edge lists, JSON, digit strings).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The solver refused a search whose estimated size exceeds the node cap.
class SearchTooLarge : public std::runtime_error {
public:
  SearchTooLarge(double estimate, double cap);
  double estimate() const { return estimate_; }
  double cap() const { return cap_; }

private:
  double estimate_;
  double cap_;
};

} // namespace topsnut

namespace topsnut {

// A transform produced a labeling that fails its target predicate.
class TransformFailed : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace topsnut
