#pragma once

#include <cstdint>
#include <vector>

#include "preorder/energy.hpp"
#include "preorder/generator.hpp"
#include "preorder/instance.hpp"
#include "preorder/max_flow.hpp"
#include "preorder/partial.hpp"
#include "preorder/relation.hpp"

namespace preorder::testing {

/// Five-element instance over i, j, k, l, m = 0..4.
Instance worked_instance();
/// Arcs ij, ji, il, jl, kl, km.
Relation worked_solution();
/// Four-element instance over p, q, r, s = 0..3.
Instance subset_instance();

enum class ValueKind { Mixed, PlusMinusOne };

/// Values are multiples of 1/1024 in [-4, 4] (Mixed) or +-1, so all sums
/// over at most 30 pairs are exact.
Instance random_instance(Random& rng, std::size_t n, ValueKind kind = ValueKind::Mixed);

/// Uniform random preorder on n <= 6 elements.
Relation random_preorder(Random& rng, std::size_t n);

/// Fixes each pair of a random preorder with probability `density`.
PartialAssignment random_consistent_partial(Random& rng, std::size_t n, double density);

ElementSet random_subset(Random& rng, std::size_t n, double probability);

/// Independent oracles.
/// Transitive relations on n <= 5 by filtering all 2^(n(n-1)) 0/1 assignments.
std::vector<Relation> brute_force_preorders(std::size_t n);
/// Minimum source-sink cut by enumerating every source side.
double brute_force_min_cut(const FlowNetwork& network);
/// Minimum energy over all 3^n labelings.
double brute_force_min_energy(const EnergyModel& model);
/// Sum of c_pq over pairs with exactly one endpoint in u, weighted by x.
double boundary_value(const Instance& instance, const ElementSet& u, const Relation& x);

}  // namespace preorder::testing
