#include "preorder/pipeline.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "preorder/merge.hpp"

namespace preorder {

void PipelineConfig::validate() const {
  if (conditions.empty()) throw std::invalid_argument("pipeline: no conditions configured");
  if (max_rounds == 0) throw std::invalid_argument("pipeline: max_rounds must be positive");
}

PipelineResult run_joint(const Instance& instance, const ClosedPartial& start, const PipelineConfig& config) {
  config.validate();
  const std::size_t n = instance.size();
  if (start.size() != n) throw std::invalid_argument("run_joint: size mismatch");
  using Clock = std::chrono::steady_clock;
  const auto begin = Clock::now();

  PipelineResult result{start, {}, {}};
  PipelineStats& stats = result.stats;
  stats.size = n;
  stats.pair_count = n < 2 ? 0 : n * (n - 1);
  for (ConditionId id : config.conditions) stats.conditions.push_back({id, 0, 0, 0});

  const std::size_t rounds = config.single_pass ? 1 : config.max_rounds;
  for (std::size_t round = 0; round < rounds; ++round) {
    ++stats.rounds;
    bool changed = false;
    for (std::size_t c = 0; c < config.conditions.size(); ++c) {
      const ConditionId id = config.conditions[c];
      const auto t0 = Clock::now();
      const ClosedPartial& current = result.partial;
      const Contraction contraction = contract_classes(instance, current);
      const std::vector<Fixation> batch = run_condition(id, contraction.instance, contraction.partial, config.options);

      PartialAssignment x = current.assignment();
      std::vector<Fixation> applied;
      for (const Fixation& f : batch) {
        for (const Pair& pq : lift_pair(contraction, f.pair)) {
          if (x.is_decided(pq.p, pq.q)) {
            if (x.is_one(pq.p, pq.q) != f.value) {
              throw InconsistencyError(std::string(condition_name(id)) + " contradicts a fixed pair (" +
                                       std::to_string(pq.p) + "," + std::to_string(pq.q) + ")");
            }
            continue;
          }
          x.fix(pq.p, pq.q, f.value);
          applied.push_back({pq, f.value, id, f.margin});
        }
      }
      if (!applied.empty()) {
        if (!is_consistent(x)) {
          throw InconsistencyError(std::string(condition_name(id)) + " produced inconsistent fixations");
        }
        const std::size_t before_zeros = current.zeros().count();
        const std::size_t before_ones = current.ones().count();
        result.partial = close(x);
        stats.conditions[c].zeros += result.partial.zeros().count() - before_zeros;
        stats.conditions[c].ones += result.partial.ones().count() - before_ones;
        result.fixations.insert(result.fixations.end(), applied.begin(), applied.end());
        changed = true;
      }
      stats.conditions[c].nanoseconds +=
          std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
    }
    if (!changed || result.partial.decided_count() == stats.pair_count) break;
  }

  stats.zeros = result.partial.zeros().count();
  stats.ones = result.partial.ones().count();
  stats.percent_fixed =
      stats.pair_count == 0 ? 100.0 : 100.0 * static_cast<double>(stats.zeros + stats.ones) / stats.pair_count;
  stats.total_nanoseconds = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - begin).count();
  return result;
}

PipelineResult run_joint(const Instance& instance, const PipelineConfig& config) {
  return run_joint(instance, ClosedPartial(instance.size()), config);
}

}  // namespace preorder
