#include "preorder/conditions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "preorder/energy.hpp"
#include "preorder/local_search.hpp"
#include "preorder/maps.hpp"
#include "preorder/max_flow.hpp"
#include "preorder/reachability.hpp"

namespace preorder {

namespace {

constexpr std::array<std::pair<ConditionId, const char*>, 6> kNames{{
    {ConditionId::DirectedCut, "directed-cut"},
    {ConditionId::EdgeCut, "edge-cut"},
    {ConditionId::BoeckerStrong, "boecker-strong"},
    {ConditionId::EdgeJoin, "edge-join"},
    {ConditionId::SubsetFixation, "subset"},
    {ConditionId::BoeckerWeak, "boecker-weak"},
}};

}  // namespace

const char* condition_name(ConditionId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "unknown";
}

std::optional<ConditionId> parse_condition(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

const std::vector<ConditionId>& default_conditions() {
  static const std::vector<ConditionId> all = [] {
    std::vector<ConditionId> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

std::vector<Fixation> directed_cut_condition(const Instance& instance, const ClosedPartial& xhat) {
  const std::size_t n = instance.size();
  BitMatrix arcs(n);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p == q || xhat.is_zero(p, q)) continue;
      if (xhat.is_one(p, q) || instance.value(p, q) > 0.0) arcs.set(p, q);
    }
  }
  const BitMatrix w = reachability_sets(arcs);
  BitMatrix fixed(n);
  std::vector<Fixation> out;
  for (Element u = 0; u < n; ++u) {
    for (Element p = 0; p < n; ++p) {
      if (!w.get(u, p)) continue;
      for (Element q = 0; q < n; ++q) {
        if (w.get(u, q) || xhat.is_decided(p, q) || fixed.get(p, q)) continue;
        fixed.set(p, q);
        out.push_back({{p, q}, false, ConditionId::DirectedCut, -instance.value(p, q)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Fixation& a, const Fixation& b) { return a.pair < b.pair; });
  return out;
}

std::vector<Fixation> edge_cut_condition(const Instance& instance, const ClosedPartial& xhat,
                                         const ConditionOptions& options) {
  const std::size_t n = instance.size();
  const double tol = instance.tolerance();
  BitMatrix fixed(n);
  std::vector<Fixation> out;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i == j || xhat.is_decided(i, j) || fixed.get(i, j)) continue;
      if (!(instance.value(i, j) < -tol)) continue;
      FlowNetwork net(n, i, j);
      for (Element p = 0; p < n; ++p) {
        for (Element q = 0; q < n; ++q) {
          if (p == q || xhat.is_zero(p, q)) continue;
          net.add_arc(p, q, xhat.is_one(p, q) ? FlowNetwork::kInfinite : instance.positive(p, q));
        }
      }
      const CutResult cut = min_st_cut(net);
      if (cut.infinite) continue;
      const double margin = instance.negative(i, j) - cut.value;
      if (margin >= tol) {
        fixed.set(i, j);
        out.push_back({{i, j}, false, ConditionId::EdgeCut, margin});
      }
      if (!options.candidate_reuse) continue;
      for (Element p = 0; p < n; ++p) {
        if (!cut.source_side[p]) continue;
        for (Element q = 0; q < n; ++q) {
          if (cut.source_side[q] || xhat.is_decided(p, q) || fixed.get(p, q)) continue;
          const double m = instance.negative(p, q) - cut.value;
          if (instance.value(p, q) < -tol && m >= tol) {
            fixed.set(p, q);
            out.push_back({{p, q}, false, ConditionId::EdgeCut, m});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Fixation& a, const Fixation& b) { return a.pair < b.pair; });
  return out;
}

std::vector<Fixation> edge_join_condition(const Instance& instance, const ClosedPartial& xhat,
                                          const ConditionOptions& options) {
  const std::size_t n = instance.size();
  const double tol = instance.tolerance();
  std::vector<Fixation> out;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i == j || xhat.is_decided(i, j) || !(instance.value(i, j) > tol)) continue;
      const EnergyModel model = build_join_energy(instance, xhat, i, j);
      const SwapResult r = alpha_beta_swap_minimize(model, join_initial_labeling(n, i, j), options.swap_sweeps);
      const double margin = instance.value(i, j) - r.energy;
      if (!(margin >= tol)) continue;
      ElementSet u(n);
      ElementSet u_prime(n);
      for (Element v = 0; v < n; ++v) {
        if (r.labeling[v] == kLabelU) u.insert(v);
        if (r.labeling[v] == kLabelUPrime) u_prime.insert(v);
      }
      if (!is_true_to(make_gamma(u, u_prime, i, j), xhat)) continue;
      out.push_back({{i, j}, true, ConditionId::EdgeJoin, margin});
    }
  }
  return out;
}

std::optional<Fixation> subset_fixation_condition(const Instance& instance, const ClosedPartial& xhat, Pair ij,
                                                  bool b, const ElementSet& u, BoundMethod method) {
  const auto report = subset_bounds(instance, xhat, ij, b, u, method);
  if (!report) return std::nullopt;
  const double margin = report->lb - report->ub - report->ub_prime;
  if (!(margin >= instance.tolerance())) return std::nullopt;
  return Fixation{ij, b, ConditionId::SubsetFixation, margin};
}

ElementSet nearest_subset(const Instance& instance, Pair ij, std::size_t k) {
  const std::size_t n = instance.size();
  std::vector<std::pair<double, Element>> mass;
  for (Element w = 0; w < n; ++w) {
    if (w == ij.p || w == ij.q) continue;
    const double m = std::fabs(instance.value(ij.p, w)) + std::fabs(instance.value(w, ij.p)) +
                     std::fabs(instance.value(ij.q, w)) + std::fabs(instance.value(w, ij.q));
    mass.emplace_back(m, w);
  }
  std::stable_sort(mass.begin(), mass.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  ElementSet u(n);
  u.insert(ij.p);
  u.insert(ij.q);
  for (std::size_t t = 0; t < std::min(k, mass.size()); ++t) u.insert(mass[t].second);
  return u;
}

std::vector<Fixation> subset_fixation_pass(const Instance& instance, const ClosedPartial& xhat,
                                           const ConditionOptions& options) {
  const std::size_t n = instance.size();
  std::vector<Fixation> out;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i == j || xhat.is_decided(i, j)) continue;
      const ElementSet u = nearest_subset(instance, {i, j}, options.subset_neighbors);
      std::optional<Fixation> f;
      for (bool b : {true, false}) {
        if (options.use_tractable && b) f = subset_fixation_condition(instance, xhat, {i, j}, b, u, BoundMethod::Tractable);
        if (!f) f = subset_fixation_condition(instance, xhat, {i, j}, b, u, BoundMethod::Heuristic);
        if (f) break;
      }
      if (f) out.push_back(*f);
    }
  }
  return out;
}

std::vector<Fixation> boecker_conditions(const Instance& instance, const ClosedPartial& xhat, bool strong,
                                         const ConditionOptions& options) {
  const std::size_t n = instance.size();
  const double tol = instance.tolerance();
  const ConditionId id = strong ? ConditionId::BoeckerStrong : ConditionId::BoeckerWeak;
  std::vector<Fixation> out;
  std::optional<Relation> x_plus;
  double x_plus_value = 0.0;
  if (options.use_tractable) {
    x_plus = tractable_point(instance, xhat);
    if (x_plus) x_plus_value = evaluate(instance, *x_plus);
  }
  const ConstrainedUpperBound ub(instance, xhat);
  const LocalSearchResult global = local_search_lower_bound(instance, xhat);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i == j || xhat.is_decided(i, j)) continue;
      const Pair ij{i, j};
      if (x_plus && instance.value(i, j) >= 0.0) {
        const double margin = x_plus_value - tractable_cut_value(instance, xhat, *x_plus, ij);
        if (margin >= tol) out.push_back({ij, true, id, margin});
        continue;
      }
      for (bool b : {true, false}) {
        const double other = ub(ij, !b);
        double lb = global.value;
        if (!strong && global.witness.get(i, j) != b) {
          if (ub(ij, b) - other < tol) continue;
          lb = local_search_lower_bound(instance, xhat, PairConstraint{ij, b}).value;
        }
        const double margin = lb - other;
        if (margin >= tol) {
          out.push_back({ij, b, id, margin});
          break;
        }
      }
    }
  }
  return out;
}

std::vector<Fixation> run_condition(ConditionId id, const Instance& instance, const ClosedPartial& xhat,
                                    const ConditionOptions& options) {
  if (xhat.size() != instance.size()) throw std::invalid_argument("run_condition: size mismatch");
  switch (id) {
    case ConditionId::DirectedCut:
      return directed_cut_condition(instance, xhat);
    case ConditionId::EdgeCut:
      return edge_cut_condition(instance, xhat, options);
    case ConditionId::EdgeJoin:
      return edge_join_condition(instance, xhat, options);
    case ConditionId::SubsetFixation:
      return subset_fixation_pass(instance, xhat, options);
    case ConditionId::BoeckerStrong:
      return boecker_conditions(instance, xhat, true, options);
    case ConditionId::BoeckerWeak:
      return boecker_conditions(instance, xhat, false, options);
  }
  throw std::invalid_argument("run_condition: unknown condition");
}

}  // namespace preorder
