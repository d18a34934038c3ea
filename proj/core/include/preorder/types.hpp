#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace preorder {

using Element = std::size_t;

/// Ordered pair pq of distinct elements.
struct Pair {
  Element p = 0;
  Element q = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Malformed or invalid input data (files, edge lists, value matrices).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a set of fixations contradicts itself. Every condition in this
/// library is supposed to be sound, so this signals a bug, never bad input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Subset of the ground set {0, ..., n-1} as a membership mask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : in_(n, false) {}
  ElementSet(std::size_t n, const std::vector<Element>& members);

  static ElementSet all(std::size_t n);

  std::size_t universe() const { return in_.size(); }
  bool contains(Element e) const { return in_[e]; }
  void insert(Element e) { in_[e] = true; }
  void erase(Element e) { in_[e] = false; }
  std::size_t size() const;
  std::vector<Element> members() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<bool> in_;
};

}  // namespace preorder
