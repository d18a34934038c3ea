#pragma once

#include <optional>
#include <variant>

#include "preorder/bit_matrix.hpp"
#include "preorder/partial.hpp"
#include "preorder/relation.hpp"
#include "preorder/types.hpp"

namespace preorder {

/// sigma_{delta(U, V\U)}: sets every pair leaving U to 0.
struct DicutMap {
  ElementSet source_side;
};

/// sigma_ij: x'_pq = 1 wherever x_pi = x_jq = 1 (diagonal counts as 1).
struct JoinMap {
  Element i = 0;
  Element j = 0;
};

/// sigma_ij o sigma_{delta(V\U, U)} o sigma_{delta(U', V\U')} for disjoint
/// U containing i and U' containing j.
struct GammaMap {
  ElementSet u;
  ElementSet u_prime;
  Element i = 0;
  Element j = 0;
};

/// Which part of the boundary of U a tau map cuts.
enum class TauVariant {
  Outgoing,  ///< cuts delta(U, V\U)
  Incoming,  ///< cuts delta(V\U, U)
  Both       ///< cuts delta(U)
};

const char* tau_variant_name(TauVariant v);

/// Replace the pairs inside U by y and repair the boundary of U.
/// y is a full-size relation of which only pairs inside U are read; those
/// must form a transitive relation on U.
struct TauMap {
  ElementSet u;
  Relation y;
  TauVariant variant = TauVariant::Both;
};

/// Apply the wrapped map only when x_ij != b, i.e. sigma^{ij|b}.
struct MapCondition {
  Pair pair;
  bool value = true;
};

struct MapSpec {
  std::variant<DicutMap, JoinMap, GammaMap, TauMap> map;
  std::optional<MapCondition> condition;
};

/// gamma^{ij|1}
MapSpec make_gamma(ElementSet u, ElementSet u_prime, Element i, Element j);
/// tau^{ij|b}
MapSpec make_tau(ElementSet u, Relation y, TauVariant variant, Pair ij, bool b);

Relation apply_dicut(const Relation& x, const ElementSet& u);
Relation apply_join(const Relation& x, Element i, Element j);
Relation apply_tau(const Relation& x, const TauMap& tau);
/// Dispatches and applies the conditional wrapper. Throws std::invalid_argument
/// for malformed map_specs (size mismatch, overlapping U/U', i not in U, ...).
Relation apply_map(const MapSpec& map_spec, const Relation& x);

/// Supersets of the pairs a map may switch 0->1 (p01) and 1->0 (p10).
/// For gamma only the primed sets are defined and the *_free members equal
/// them. For tau maps, the sets cover the boundary delta(U) only; `p01`/`p10`
/// use y, `p01_free`/`p10_free` hold for any y.
struct ChangeSets {
  BitMatrix p01;
  BitMatrix p10;
  BitMatrix p01_free;
  BitMatrix p10_free;
};

/// Defined for GammaMap and TauMap; throws std::invalid_argument otherwise.
ChangeSets change_sets(const MapSpec& map_spec, const ClosedPartial& xhat);

/// Sufficient check that the map keeps the completions of xhat inside
/// themselves. Dicut: no fixed-one pair leaves U. Join: the ij|1-conditioned
/// join only adds pairs, so no fixed-zero pair may be reachable through ij.
/// Gamma/Tau: primed change sets avoid the fixed pairs of opposite value.
bool is_true_to(const MapSpec& map_spec, const ClosedPartial& xhat);

}  // namespace preorder
