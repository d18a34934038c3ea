#pragma once

#include "preorder/bit_matrix.hpp"

namespace preorder {

/// Row u of the result is W_u = {q : a u -> q path exists in `arcs`},
/// including u itself. Breadth-first search from every node.
BitMatrix reachability_sets(const BitMatrix& arcs);

}  // namespace preorder
