#include "preorder/generator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "preorder/maps.hpp"

namespace preorder {

void GeneratorConfig::validate() const {
  if (n == 0) throw std::invalid_argument("generator: n must be >= 1");
  if (!(edge_density >= 0.0 && edge_density <= 1.0)) {
    throw std::invalid_argument("generator: edge density must lie in [0, 1]");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("generator: alpha must lie in [0, 1]");
  }
}

double Random::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Random::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Random::below: bound must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return v % bound;
}

double Random::gaussian(double mean, double stddev) {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Relation generate_ground_truth(std::size_t n, double edge_density, Random& rng) {
  Relation x(n);
  const double total = static_cast<double>(n * (n - 1));
  std::vector<Pair> free_pairs;
  while (total > 0 && static_cast<double>(x.arc_count()) / total < edge_density) {
    free_pairs.clear();
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q && !x.get(p, q)) free_pairs.push_back({p, q});
      }
    }
    const Pair e = free_pairs[rng.below(free_pairs.size())];
    x = apply_join(x, e.p, e.q);
  }
  return x;
}

Instance draw_values(const Relation& truth, double alpha, Random& rng) {
  const std::size_t n = truth.size();
  const double sd = 0.1 + 0.3 * alpha;
  std::vector<double> values(n * n, 0.0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const double mean = truth.get(p, q) ? 1.0 - alpha : -1.0 + alpha;
      values[p * n + q] = rng.gaussian(mean, sd);
    }
  }
  return Instance(n, std::move(values));
}

std::pair<Instance, Relation> generate_synthetic(const GeneratorConfig& cfg) {
  cfg.validate();
  Random truth_rng(cfg.seed);
  Relation truth = generate_ground_truth(cfg.n, cfg.edge_density, truth_rng);
  if (cfg.value_seed) {
    Random value_rng(*cfg.value_seed);
    return {draw_values(truth, cfg.alpha, value_rng), std::move(truth)};
  }
  return {draw_values(truth, cfg.alpha, truth_rng), std::move(truth)};
}

}  // namespace preorder
