#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "preorder/relation.hpp"
#include "preorder/types.hpp"

namespace preorder {

/// An instance of the maximum-value preordering problem: n elements and a
/// value c_pq for every ordered pair of distinct elements. Values are stored
/// as a dense row-major n x n matrix whose diagonal is fixed at 0.
class Instance {
 public:
  Instance() = default;
  /// All-zero instance on n >= 1 elements.
  explicit Instance(std::size_t n);
  /// `values` is row-major n*n; diagonal entries must be 0 and all entries
  /// finite (DataError otherwise).
  Instance(std::size_t n, std::vector<double> values);

  std::size_t size() const { return n_; }
  std::size_t pair_count() const { return n_ * (n_ - 1); }

  double value(Element p, Element q) const { return values_[p * n_ + q]; }
  /// c+ = max(c, 0)
  double positive(Element p, Element q) const {
    const double c = value(p, q);
    return c > 0.0 ? c : 0.0;
  }
  /// c- = max(-c, 0)
  double negative(Element p, Element q) const {
    const double c = value(p, q);
    return c < 0.0 ? -c : 0.0;
  }

  /// Sets c_pq; p != q and v finite.
  void set_value(Element p, Element q, double v);

  const std::vector<double>& values() const { return values_; }
  /// Sum of |c_pq| over all pairs.
  double absolute_mass() const;
  /// Tolerance for floating-point condition checks: 1e-9 * max(1, sum |c|).
  double tolerance() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

/// phi_c(x) = sum over pairs of c_pq x_pq. Throws std::invalid_argument on a
/// size mismatch. Summation runs in row-major pair order.
double evaluate(const Instance& instance, const Relation& x);

/// Instance of a follower network: c_ij = +1 if (i, j) is an edge, -1
/// otherwise. `nodes` fixes the element order; self-loops are dropped and
/// duplicate edges collapse. Throws DataError for an empty node list, a
/// duplicate node id, or an edge endpoint outside `nodes`.
Instance ingest_ego_network(const std::vector<std::pair<std::string, std::string>>& edges,
                            const std::vector<std::string>& nodes);

/// Instance restricted to the members of `subset`, in increasing order.
Instance restrict_instance(const Instance& instance, const std::vector<Element>& subset);

}  // namespace preorder
