#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "preorder/instance.hpp"
#include "preorder/partial.hpp"

namespace preorder {

using Label = std::uint8_t;

/// Labels of the join energy: U (contains i), U' (contains j), the rest U''.
inline constexpr Label kLabelU = 0;
inline constexpr Label kLabelUPrime = 1;
inline constexpr Label kLabelRest = 2;
inline constexpr std::size_t kLabelCount = 3;

/// Three-label energy sum_pq H_pq(x_p, x_q) + sum_p H_p(x_p) over ordered
/// pairs of distinct nodes. Forbidden combinations cost +inf. H_pq(l, l) is
/// assumed to be 0.
class EnergyModel {
 public:
  static constexpr double kForbidden = std::numeric_limits<double>::infinity();

  EnergyModel() = default;
  explicit EnergyModel(std::size_t n);

  std::size_t size() const { return n_; }
  double unary(std::size_t p, Label l) const { return unary_[p][l]; }
  double pairwise(std::size_t p, std::size_t q, Label a, Label b) const {
    return pairwise_[p * n_ + q][a * kLabelCount + b];
  }
  /// Throws std::invalid_argument for negative or NaN costs and for a
  /// nonzero cost on equal labels.
  void set_unary(std::size_t p, Label l, double cost);
  void set_pairwise(std::size_t p, std::size_t q, Label a, Label b, double cost);

  double energy(const std::vector<Label>& labeling) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::array<double, kLabelCount>> unary_;
  std::vector<std::array<double, kLabelCount * kLabelCount>> pairwise_;
};

/// Energy whose minimum over labelings with i in U and j in U' equals the
/// minimum over disjoint (U, U') of sum_{P01'} c- + sum_{P10'} c+ for the
/// gamma map of ij; costs that would break trueness to xhat are forbidden.
EnergyModel build_join_energy(const Instance& instance, const ClosedPartial& xhat, Element i, Element j);

/// Labeling i -> U, j -> U', everything else -> U''.
std::vector<Label> join_initial_labeling(std::size_t n, Element i, Element j);

struct SwapResult {
  std::vector<Label> labeling;
  double energy = 0.0;
  /// energy after each sweep, starting with the initial energy
  std::vector<double> history;
  std::size_t sweeps = 0;
};

/// Optimal alpha-beta swaps for the label pairs (U,U'), (U,U''), (U',U'')
/// in round-robin order, each solved by one minimum cut. A swap is accepted
/// only if it strictly lowers the energy. Stops after a sweep without
/// improvement or after max_sweeps sweeps. Throws std::invalid_argument if
/// init has a forbidden unary cost.
SwapResult alpha_beta_swap_minimize(const EnergyModel& model, std::vector<Label> init, std::size_t max_sweeps = 20);

}  // namespace preorder
