#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "preorder/conditions.hpp"
#include "preorder/instance.hpp"
#include "preorder/partial.hpp"

namespace preorder {

struct PipelineConfig {
  std::vector<ConditionId> conditions = default_conditions();
  /// Upper limit on rounds over the condition list.
  std::size_t max_rounds = 100;
  /// Run the condition list once instead of until no condition fixes a pair.
  bool single_pass = false;
  ConditionOptions options;
  /// Throws std::invalid_argument on an empty condition list or zero rounds.
  void validate() const;
};

struct ConditionStats {
  ConditionId id = ConditionId::DirectedCut;
  std::size_t zeros = 0;
  std::size_t ones = 0;
  std::int64_t nanoseconds = 0;
};

struct PipelineStats {
  std::size_t size = 0;
  /// n(n-1): off-diagonal pairs.
  std::size_t pair_count = 0;
  std::size_t rounds = 0;
  std::size_t zeros = 0;
  std::size_t ones = 0;
  double percent_fixed = 0.0;
  std::int64_t total_nanoseconds = 0;
  /// One entry per configured condition, in configured order, summed over rounds.
  std::vector<ConditionStats> conditions;
};

struct PipelineResult {
  ClosedPartial partial;
  /// Fixations of originally undecided pairs, in application order. Pairs
  /// decided only by closure are not listed.
  std::vector<Fixation> fixations;
  PipelineStats stats;
};

/// Applies the configured conditions in order, each to the instance with
/// equivalence classes of fixed ones contracted, closing after every step.
/// Throws InconsistencyError if a batch contradicts the current assignment.
PipelineResult run_joint(const Instance& instance, const ClosedPartial& start, const PipelineConfig& config = {});
PipelineResult run_joint(const Instance& instance, const PipelineConfig& config = {});

}  // namespace preorder
