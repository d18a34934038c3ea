#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "preorder/instance.hpp"
#include "preorder/partial.hpp"
#include "preorder/relation.hpp"

namespace preorder {

/// Largest ground set the exhaustive routines accept.
inline constexpr std::size_t kOracleMaxSize = 6;

/// Bit position of pair pq in a pair mask: row-major over off-diagonal pairs.
constexpr std::size_t pair_bit(std::size_t n, Element p, Element q) {
  return p * (n - 1) + (q < p ? q : q - 1);
}

std::uint32_t relation_to_mask(const Relation& x);
Relation mask_to_relation(std::size_t n, std::uint32_t mask);

/// Every transitive relation on n <= 6 elements as a pair mask, computed
/// once per n and cached. Counts are 1, 4, 29, 355, 6942, 209527.
/// Throws std::invalid_argument for n == 0 or n > 6.
const std::vector<std::uint32_t>& preorder_masks(std::size_t n);

/// Materialized form of preorder_masks.
std::vector<Relation> enumerate_preorders(std::size_t n);

struct OptimumSet {
  double value = 0.0;
  std::vector<Relation> optima;
};

/// All maximizers of phi_c over the completions of x. Objective values are
/// summed in row-major pair order and compared exactly. Throws
/// std::invalid_argument for n > 6 and InconsistencyError if x has no
/// completion.
OptimumSet solve_exact(const Instance& instance, const PartialAssignment& x);
OptimumSet solve_exact(const Instance& instance);

/// Some optimum of the unconstrained problem that is a completion of x, if any.
std::optional<Relation> certify_witness(const Instance& instance, const PartialAssignment& x);
/// true iff some unconstrained optimum is a completion of x.
bool certify(const Instance& instance, const PartialAssignment& x);

/// pq is One (Zero) iff every completion of x has pq = 1 (0). Throws
/// std::invalid_argument for n > 6 and InconsistencyError without completions.
PartialAssignment decided_pairs_bruteforce(const PartialAssignment& x);

/// Calls f(mask) for every completion of x.
void for_each_completion(const PartialAssignment& x, const std::function<void(std::uint32_t)>& f);

}  // namespace preorder
