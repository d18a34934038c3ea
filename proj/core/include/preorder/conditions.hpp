#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "preorder/bounds.hpp"
#include "preorder/instance.hpp"
#include "preorder/partial.hpp"
#include "preorder/types.hpp"

namespace preorder {

enum class ConditionId { DirectedCut, EdgeCut, BoeckerStrong, EdgeJoin, SubsetFixation, BoeckerWeak };

/// Command-line names: directed-cut, edge-cut, boecker-strong, edge-join,
/// subset, boecker-weak.
const char* condition_name(ConditionId id);
std::optional<ConditionId> parse_condition(std::string_view name);
/// All six conditions: cut conditions first, then join, then fixation.
const std::vector<ConditionId>& default_conditions();

/// A proven fixation x_pq = value. margin is the slack of the inequality
/// that proved it.
struct Fixation {
  Pair pair;
  bool value = false;
  ConditionId condition = ConditionId::DirectedCut;
  double margin = 0.0;
};

struct ConditionOptions {
  /// Edge cut: test every pair crossing a found cut before the next max-flow.
  bool candidate_reuse = true;
  /// Edge join: sweep limit of the alpha-beta swap minimizer.
  std::size_t swap_sweeps = 20;
  /// Subset fixation: U = {i, j} plus this many elements with largest |c|
  /// mass towards i and j.
  std::size_t subset_neighbors = 4;
  /// Use exact bounds (x+ feasible) wherever they apply.
  bool use_tractable = true;
};

// Every decider reads a closed xhat and returns fixations of undecided
// pairs. Except for directed cut (which fixes all crossing pairs of one cut
// together), each fixation holds with margin >= instance.tolerance(), so
// every optimum of the problem restricted to xhat satisfies it and the whole
// batch can be applied jointly.

/// Zeros leaving the reachability sets W_u of the graph of positive or
/// fixed-one pairs (minus fixed zeros).
std::vector<Fixation> directed_cut_condition(const Instance& instance, const ClosedPartial& xhat);

/// x_ij = 0 when c_ij- exceeds the minimum ij-cut over c+ (fixed ones
/// uncuttable, fixed zeros free). Only pairs with c_ij < -tolerance are tried.
std::vector<Fixation> edge_cut_condition(const Instance& instance, const ClosedPartial& xhat,
                                         const ConditionOptions& options = {});

/// x_ij = 1 when c_ij exceeds the swap-minimized change-set cost of a gamma
/// map that is true to xhat. Only pairs with c_ij > tolerance are tried.
std::vector<Fixation> edge_join_condition(const Instance& instance, const ClosedPartial& xhat,
                                          const ConditionOptions& options = {});

/// Tests lb - ub - ub' >= tolerance for fixing ij to b via U.
std::optional<Fixation> subset_fixation_condition(const Instance& instance, const ClosedPartial& xhat, Pair ij,
                                                  bool b, const ElementSet& u, BoundMethod method);

/// {i, j} plus the k other elements w with largest |c_iw|+|c_wi|+|c_jw|+|c_wj|
/// (ties by index).
ElementSet nearest_subset(const Instance& instance, Pair ij, std::size_t k);

/// Subset fixation for every undecided pair and both values, with U from
/// nearest_subset; tractable bounds first when enabled, heuristic otherwise.
std::vector<Fixation> subset_fixation_pass(const Instance& instance, const ClosedPartial& xhat,
                                           const ConditionOptions& options = {});

/// strong: unconstrained local-search lb against the upper bound for
/// x_ij = 1 - b. weak: lb constrained to x_ij = b. Both use exact values
/// when x+ is feasible and c_ij >= 0.
std::vector<Fixation> boecker_conditions(const Instance& instance, const ClosedPartial& xhat, bool strong,
                                         const ConditionOptions& options = {});

std::vector<Fixation> run_condition(ConditionId id, const Instance& instance, const ClosedPartial& xhat,
                                    const ConditionOptions& options = {});

}  // namespace preorder
