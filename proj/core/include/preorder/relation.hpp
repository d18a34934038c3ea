#pragma once

#include <cstddef>
#include <vector>

#include "preorder/bit_matrix.hpp"
#include "preorder/types.hpp"

namespace preorder {

/// A 0/1 assignment on all ordered pairs of distinct elements. When the
/// assignment is transitive it is a feasible point of the preordering problem.
/// The diagonal is never stored; `reaches` applies the x_pp = 1 convention.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : bits_(n) {}
  explicit Relation(BitMatrix bits);
  Relation(std::size_t n, const std::vector<Pair>& arcs);

  static Relation complete(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool get(Element p, Element q) const { return p != q && bits_.get(p, q); }
  bool reaches(Element p, Element q) const { return p == q || bits_.get(p, q); }
  void set(Element p, Element q, bool v);

  const BitMatrix& bits() const { return bits_; }
  std::size_t arc_count() const { return bits_.count(); }
  std::vector<Pair> arcs() const;

  /// x_pq + x_qr - x_pr <= 1 for all triples of distinct elements.
  bool is_transitive() const;
  /// Pointwise x <= other.
  bool leq(const Relation& other) const { return bits_.subset_of(other.bits_); }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  BitMatrix bits_;
};

/// All pairs pq such that a directed p->q path exists in (V, arcs).
/// Throws std::out_of_range for indices >= n and std::invalid_argument for
/// diagonal pairs.
std::vector<Pair> transitive_closure(const std::vector<Pair>& arcs, std::size_t n);

/// Closure of a relation as a Relation (diagonal dropped).
Relation transitive_closure(const Relation& rel);

}  // namespace preorder
