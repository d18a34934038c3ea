#pragma once

#include <cstddef>
#include <vector>

#include "preorder/instance.hpp"
#include "preorder/partial.hpp"
#include "preorder/types.hpp"

namespace preorder {

/// An instance with groups of elements contracted to single elements.
///
/// optimum(original under xhat) = offset + optimum(instance under partial).
struct Contraction {
  Instance instance;
  ClosedPartial partial;
  /// Sum of values on pairs inside merged groups.
  double offset = 0.0;
  /// element_map[v] = contracted element containing original element v.
  std::vector<Element> element_map;
  /// members[u] = original elements of contracted element u, increasing.
  std::vector<std::vector<Element>> members;
};

/// Contracts U (|U| >= 2, every pair inside U fixed to one) to a single
/// element placed at the position of min(U); other elements keep their
/// relative order. Throws std::invalid_argument when the precondition fails.
Contraction merge_classes(const Instance& instance, const ClosedPartial& xhat, const ElementSet& u);

/// Contracts every equivalence class of the ones of xhat (maximal sets with
/// all internal pairs fixed to one). Contracted elements are ordered by their
/// smallest member. Without non-trivial classes this is the identity.
Contraction contract_classes(const Instance& instance, const ClosedPartial& xhat);

/// Original pairs represented by contracted pair ab: members(a) x members(b).
std::vector<Pair> lift_pair(const Contraction& contraction, Pair ab);

}  // namespace preorder
