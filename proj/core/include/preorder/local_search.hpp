#pragma once

#include <optional>

#include "preorder/instance.hpp"
#include "preorder/partial.hpp"
#include "preorder/relation.hpp"

namespace preorder {

/// x_pq = value
struct PairConstraint {
  Pair pair;
  bool value = true;
};

struct LocalSearchResult {
  double value = 0.0;
  Relation witness;
};

/// Greedy arc fixation: visit undecided pairs by descending |c| (ties in
/// row-major order) and fix each to 1 if c > 0, else 0, re-closing after
/// every step. Returns the resulting complete assignment.
Relation greedy_arc_fixation(const Instance& instance, ClosedPartial xhat);

/// Greedy arc insertion: repeatedly apply the join map for the pair pq with
/// c_pq > 0 whose join gains most, as long as the gain is positive and the
/// join avoids the zeros of xhat. x must be a completion of xhat.
Relation greedy_arc_insertion(const Instance& instance, const ClosedPartial& xhat, Relation x);

/// Feasible point of X_V[xhat] (with x_ij = b if constrained) found by arc
/// fixation followed by arc insertion; value = evaluate(witness).
/// Throws std::invalid_argument if the constraint contradicts xhat.
LocalSearchResult local_search_lower_bound(const Instance& instance, const ClosedPartial& xhat,
                                           std::optional<PairConstraint> constraint = std::nullopt);

}  // namespace preorder
