#include "preorder/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "preorder/max_flow.hpp"

namespace preorder {

EnergyModel::EnergyModel(std::size_t n) : n_(n), unary_(n), pairwise_(n * n) {
  for (auto& u : unary_) u.fill(0.0);
  for (auto& h : pairwise_) h.fill(0.0);
}

void EnergyModel::set_unary(std::size_t p, Label l, double cost) {
  if (p >= n_ || l >= kLabelCount) throw std::invalid_argument("EnergyModel: index out of range");
  if (std::isnan(cost) || cost < 0.0) throw std::invalid_argument("EnergyModel: costs must be nonnegative");
  unary_[p][l] = cost;
}

void EnergyModel::set_pairwise(std::size_t p, std::size_t q, Label a, Label b, double cost) {
  if (p >= n_ || q >= n_ || p == q || a >= kLabelCount || b >= kLabelCount) {
    throw std::invalid_argument("EnergyModel: index out of range");
  }
  if (std::isnan(cost) || cost < 0.0) throw std::invalid_argument("EnergyModel: costs must be nonnegative");
  if (a == b && cost != 0.0) throw std::invalid_argument("EnergyModel: equal labels must cost 0");
  pairwise_[p * n_ + q][a * kLabelCount + b] = cost;
}

double EnergyModel::energy(const std::vector<Label>& x) const {
  if (x.size() != n_) throw std::invalid_argument("EnergyModel::energy: labeling size mismatch");
  double total = 0.0;
  for (std::size_t p = 0; p < n_; ++p) {
    total += unary_[p][x[p]];
    for (std::size_t q = 0; q < n_; ++q) {
      if (p != q) total += pairwise(p, q, x[p], x[q]);
    }
  }
  return total;
}

EnergyModel build_join_energy(const Instance& instance, const ClosedPartial& xhat, Element i, Element j) {
  const std::size_t n = instance.size();
  if (i >= n || j >= n || i == j) throw std::invalid_argument("build_join_energy: invalid pair");
  EnergyModel model(n);
  const double inf = EnergyModel::kForbidden;
  model.set_unary(i, kLabelUPrime, inf);
  model.set_unary(i, kLabelRest, inf);
  model.set_unary(j, kLabelU, inf);
  model.set_unary(j, kLabelRest, inf);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p == q) continue;
      // pairs that gamma may switch off
      const double off = xhat.is_one(p, q) ? inf : (xhat.is_zero(p, q) ? 0.0 : instance.positive(p, q));
      model.set_pairwise(p, q, kLabelUPrime, kLabelU, off);
      model.set_pairwise(p, q, kLabelRest, kLabelU, off);
      model.set_pairwise(p, q, kLabelUPrime, kLabelRest, off);
      // pairs that gamma may switch on
      double on = 0.0;
      if (!xhat.is_zero(p, i) && !xhat.is_zero(j, q)) {
        on = xhat.is_zero(p, q) ? inf : (xhat.is_one(p, q) ? 0.0 : instance.negative(p, q));
      }
      model.set_pairwise(p, q, kLabelU, kLabelUPrime, on);
    }
  }
  return model;
}

std::vector<Label> join_initial_labeling(std::size_t n, Element i, Element j) {
  std::vector<Label> x(n, kLabelRest);
  x[i] = kLabelU;
  x[j] = kLabelUPrime;
  return x;
}

namespace {

/// Optimal swap of the nodes labelled alpha or beta. Returns true and
/// updates x if the energy strictly decreases.
bool swap_move(const EnergyModel& model, std::vector<Label>& x, Label alpha, Label beta, double& energy) {
  const std::size_t n = model.size();
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> index(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (x[p] == alpha || x[p] == beta) {
      index[p] = nodes.size();
      nodes.push_back(p);
    }
  }
  if (nodes.empty()) return false;
  const std::size_t k = nodes.size();
  const std::size_t source = k;
  const std::size_t sink = k + 1;
  FlowNetwork net(k + 2, source, sink);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t p = nodes[a];
    // cost of p ending with label beta (source arc cut) or alpha (sink arc cut)
    double to_beta = model.unary(p, beta);
    double to_alpha = model.unary(p, alpha);
    for (std::size_t q = 0; q < n; ++q) {
      if (q == p || index[q] != n) continue;
      to_beta += model.pairwise(p, q, beta, x[q]) + model.pairwise(q, p, x[q], beta);
      to_alpha += model.pairwise(p, q, alpha, x[q]) + model.pairwise(q, p, x[q], alpha);
    }
    net.add_arc(source, a, to_beta);
    net.add_arc(a, sink, to_alpha);
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const std::size_t q = nodes[b];
      net.add_arc(a, b, model.pairwise(p, q, alpha, beta) + model.pairwise(q, p, beta, alpha));
    }
  }
  const CutResult cut = min_st_cut(net);
  if (cut.infinite) return false;
  std::vector<Label> next = x;
  for (std::size_t a = 0; a < k; ++a) next[nodes[a]] = cut.source_side[a] ? alpha : beta;
  const double e = model.energy(next);
  if (!(e < energy)) return false;
  x = std::move(next);
  energy = e;
  return true;
}

}  // namespace

SwapResult alpha_beta_swap_minimize(const EnergyModel& model, std::vector<Label> init, std::size_t max_sweeps) {
  if (init.size() != model.size()) throw std::invalid_argument("alpha_beta_swap: labeling size mismatch");
  for (std::size_t p = 0; p < init.size(); ++p) {
    if (init[p] >= kLabelCount) throw std::invalid_argument("alpha_beta_swap: invalid label");
    if (std::isinf(model.unary(p, init[p]))) {
      throw std::invalid_argument("alpha_beta_swap: initial labeling has a forbidden unary cost at node " +
                                  std::to_string(p));
    }
  }
  SwapResult r;
  r.labeling = std::move(init);
  r.energy = model.energy(r.labeling);
  r.history.push_back(r.energy);
  constexpr std::array<std::pair<Label, Label>, 3> kPairs{
      {{kLabelU, kLabelUPrime}, {kLabelU, kLabelRest}, {kLabelUPrime, kLabelRest}}};
  while (r.sweeps < max_sweeps) {
    bool improved = false;
    for (const auto& [alpha, beta] : kPairs) {
      improved = swap_move(model, r.labeling, alpha, beta, r.energy) || improved;
    }
    ++r.sweeps;
    r.history.push_back(r.energy);
    if (!improved) break;
  }
  return r;
}

}  // namespace preorder
