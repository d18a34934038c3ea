#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "preorder/instance.hpp"
#include "preorder/relation.hpp"

namespace preorder {

/// Parameters of a synthetic instance: a random ground-truth preorder of
/// arc density about `edge_density`, and values drawn around it with noise
/// controlled by `alpha` (0 = easy, 1 = pure noise).
struct GeneratorConfig {
  std::size_t n = 0;
  double edge_density = 0.0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  /// When set, the ground truth is drawn from `seed` and the values from
  /// `value_seed`, so several value vectors can share one ground truth.
  std::optional<std::uint64_t> value_seed;

  /// Throws std::invalid_argument unless n >= 1 and both densities lie in [0,1].
  void validate() const;
};

/// Portable random source: std::mt19937_64 (whose output sequence is fixed
/// by the standard) with hand-written uniform and Gaussian transforms.
/// Gaussians use the Box-Muller transform, one variate per call (the sine
/// branch is discarded so every draw consumes exactly two words).
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  double gaussian(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Ground truth: starting from the empty relation, while the arc fraction is
/// below `edge_density`, draw a non-arc uniformly and apply the join map for
/// it. The result may overshoot the target since one join adds a whole
/// closure's worth of arcs.
Relation generate_ground_truth(std::size_t n, double edge_density, Random& rng);

/// c_pq ~ Normal(+1 - alpha, 0.1 + 0.3 alpha) where truth_pq = 1 and
/// Normal(-1 + alpha, 0.1 + 0.3 alpha) elsewhere, drawn in row-major order.
Instance draw_values(const Relation& truth, double alpha, Random& rng);

/// (instance, ground truth), deterministic for a fixed config.
std::pair<Instance, Relation> generate_synthetic(const GeneratorConfig& cfg);

}  // namespace preorder
