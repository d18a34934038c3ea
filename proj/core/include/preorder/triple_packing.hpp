#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "preorder/types.hpp"

namespace preorder {

/// Ordered triple of distinct elements with arcs E(pqr) = {pq, qr, pr}.
struct Triple {
  Element p = 0;
  Element q = 0;
  Element r = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TriplePacking {
  /// Pairwise arc-disjoint triples in selection order.
  std::vector<Triple> triples;
};

/// Greedy arc-disjoint packing: all ordered triples of distinct elements of
/// {0..n-1} not touching an element with skip[v] set, sorted by descending
/// weight (ties lexicographic in (p, q, r)); a triple is taken if its weight
/// is strictly positive and none of its arcs is used yet.
TriplePacking greedy_triple_packing(std::size_t n, const std::function<double(const Triple&)>& weight,
                                    const std::vector<bool>& skip = {});

}  // namespace preorder
