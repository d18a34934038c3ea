#include "preorder/bounds.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "preorder/local_search.hpp"
#include "preorder/max_flow.hpp"

namespace preorder {

namespace {

/// Admissible values of pq under xhat: bit 0 = value 0 allowed, bit 1 = value 1.
unsigned allowed(const ClosedPartial& xhat, Element p, Element q) {
  if (xhat.is_one(p, q)) return 2U;
  if (xhat.is_zero(p, q)) return 1U;
  return 3U;
}

enum class Coupling { None, NotBoth, FirstImpliesSecond };

double pair_max(const Instance& c, const ClosedPartial& xhat, Pair e1, Pair e2, Coupling coupling) {
  const unsigned a1 = allowed(xhat, e1.p, e1.q);
  const unsigned a2 = allowed(xhat, e2.p, e2.q);
  double best = -std::numeric_limits<double>::infinity();
  for (unsigned v1 = 0; v1 < 2; ++v1) {
    if (!((a1 >> v1) & 1U)) continue;
    for (unsigned v2 = 0; v2 < 2; ++v2) {
      if (!((a2 >> v2) & 1U)) continue;
      if (coupling == Coupling::NotBoth && v1 == 1 && v2 == 1) continue;
      if (coupling == Coupling::FirstImpliesSecond && v1 == 1 && v2 == 0) continue;
      best = std::max(best, c.value(e1.p, e1.q) * v1 + c.value(e2.p, e2.q) * v2);
    }
  }
  return best;
}

}  // namespace

double single_max(const Instance& instance, const ClosedPartial& xhat, Element p, Element q) {
  if (xhat.is_one(p, q)) return instance.value(p, q);
  if (xhat.is_zero(p, q)) return 0.0;
  return instance.positive(p, q);
}

double induced_value(const Instance& instance, const ClosedPartial& xhat, Pair ij, bool b) {
  const std::size_t n = instance.size();
  const Element i = ij.p;
  const Element j = ij.q;
  if (i >= n || j >= n || i == j) throw std::invalid_argument("induced_value: invalid pair");
  if (xhat.is_decided(i, j)) throw std::invalid_argument("induced_value: pair already decided");
  const auto fixed = close_with(xhat, ij, b);
  const ClosedPartial& xb = *fixed;  // undecided pairs of a closed assignment admit both values
  double total = single_max(instance, xb, j, i);
  if (b) total += instance.value(i, j);
  for (Element w = 0; w < n; ++w) {
    if (w == i || w == j) continue;
    if (!b) {
      // x_iw = x_wj = 1 would force x_ij = 1
      total += pair_max(instance, xb, {i, w}, {w, j}, Coupling::NotBoth);
      total += single_max(instance, xb, w, i) + single_max(instance, xb, j, w);
    } else {
      // with x_ij = 1: x_jw implies x_iw, and x_wi implies x_wj
      total += pair_max(instance, xb, {j, w}, {i, w}, Coupling::FirstImpliesSecond);
      total += pair_max(instance, xb, {w, i}, {w, j}, Coupling::FirstImpliesSecond);
    }
  }
  return total;
}

double triple_max(const Instance& instance, const ClosedPartial& xhat, const Triple& t) {
  const unsigned a = allowed(xhat, t.p, t.q);
  const unsigned b = allowed(xhat, t.q, t.r);
  const unsigned c = allowed(xhat, t.p, t.r);
  double best = -std::numeric_limits<double>::infinity();
  for (unsigned va = 0; va < 2; ++va) {
    if (!((a >> va) & 1U)) continue;
    for (unsigned vb = 0; vb < 2; ++vb) {
      if (!((b >> vb) & 1U)) continue;
      for (unsigned vc = 0; vc < 2; ++vc) {
        if (!((c >> vc) & 1U)) continue;
        if (va + vb > 1 + vc) continue;
        best = std::max(best, instance.value(t.p, t.q) * va + instance.value(t.q, t.r) * vb +
                                  instance.value(t.p, t.r) * vc);
      }
    }
  }
  return best;
}

namespace {

double triple_gain(const Instance& instance, const ClosedPartial& xhat, const Triple& t) {
  return single_max(instance, xhat, t.p, t.q) + single_max(instance, xhat, t.q, t.r) +
         single_max(instance, xhat, t.p, t.r) - triple_max(instance, xhat, t);
}

}  // namespace

TriplePacking bound_packing(const Instance& instance, const ClosedPartial& xhat,
                            const std::vector<bool>& excluded) {
  return greedy_triple_packing(
      instance.size(), [&](const Triple& t) { return triple_gain(instance, xhat, t); }, excluded);
}

double triple_packing_upper_bound(const Instance& instance, const ClosedPartial& xhat,
                                  const TriplePacking& packing, const std::vector<bool>& excluded) {
  const std::size_t n = instance.size();
  const auto out = [&](Element v) { return !excluded.empty() && excluded[v]; };
  double total = 0.0;
  for (Element p = 0; p < n; ++p) {
    if (out(p)) continue;
    for (Element q = 0; q < n; ++q) {
      if (q != p && !out(q)) total += single_max(instance, xhat, p, q);
    }
  }
  for (const Triple& t : packing.triples) {
    if (out(t.p) || out(t.q) || out(t.r)) continue;
    total -= triple_gain(instance, xhat, t);
  }
  return total;
}

ConstrainedUpperBound::ConstrainedUpperBound(const Instance& instance, const ClosedPartial& xhat)
    : instance_(&instance),
      xhat_(&xhat),
      n_(instance.size()),
      singles_touching_(n_, 0.0),
      gain_element_(n_, 0.0),
      gain_pair_(n_ * n_, 0.0) {
  for (Element p = 0; p < n_; ++p) {
    for (Element q = 0; q < n_; ++q) {
      if (p == q) continue;
      const double s = single_max(instance, xhat, p, q);
      singles_total_ += s;
      singles_touching_[p] += s;
      singles_touching_[q] += s;
    }
  }
  for (const Triple& t : bound_packing(instance, xhat).triples) {
    const double g = triple_gain(instance, xhat, t);
    gain_total_ += g;
    gain_element_[t.p] += g;
    gain_element_[t.q] += g;
    gain_element_[t.r] += g;
    const std::array<std::pair<Element, Element>, 3> pairs{{{t.p, t.q}, {t.q, t.r}, {t.p, t.r}}};
    for (const auto& [a, b] : pairs) {
      gain_pair_[a * n_ + b] += g;
      gain_pair_[b * n_ + a] += g;
    }
  }
}

double ConstrainedUpperBound::rest(Element i, Element j) const {
  const double singles = singles_total_ - singles_touching_[i] - singles_touching_[j] +
                         single_max(*instance_, *xhat_, i, j) + single_max(*instance_, *xhat_, j, i);
  const double gains = gain_total_ - gain_element_[i] - gain_element_[j] + gain_pair_[i * n_ + j];
  return singles - gains;
}

double ConstrainedUpperBound::operator()(Pair ij, bool b) const {
  return induced_value(*instance_, *xhat_, ij, b) + rest(ij.p, ij.q);
}

std::optional<Relation> tractable_point(const Instance& instance, const ClosedPartial& xhat) {
  const std::size_t n = instance.size();
  BitMatrix bits(n);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p == q) continue;
      const PairState s = xhat.state(p, q);
      if (s == PairState::One || (s == PairState::Undecided && instance.value(p, q) >= 0.0)) bits.set(p, q);
    }
  }
  Relation x(std::move(bits));
  if (!x.is_transitive()) return std::nullopt;
  return x;
}

double tractable_cut_value(const Instance& instance, const ClosedPartial& xhat, const Relation& x_plus,
                           Pair ij) {
  const std::size_t n = instance.size();
  FlowNetwork net(n, ij.p, ij.q);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p == q || xhat.is_zero(p, q)) continue;
      net.add_arc(p, q, xhat.is_one(p, q) ? FlowNetwork::kInfinite : instance.positive(p, q));
    }
  }
  const CutResult cut = min_st_cut(net);
  return evaluate(instance, x_plus) - cut.value;
}

std::optional<TractableBounds> exact_bounds_tractable(const Instance& instance, const ClosedPartial& xhat,
                                                      Pair ij) {
  if (ij.p == ij.q || xhat.is_decided(ij.p, ij.q) || instance.value(ij.p, ij.q) < 0.0) return std::nullopt;
  auto x_plus = tractable_point(instance, xhat);
  if (!x_plus) return std::nullopt;
  TractableBounds out;
  out.opt = evaluate(instance, *x_plus);
  out.opt_cut = tractable_cut_value(instance, xhat, *x_plus, ij);
  out.x_plus = std::move(*x_plus);
  return out;
}

double boundary_bound(const Instance& instance, const ClosedPartial& xhat, const ElementSet& u,
                      const Relation& y, TauVariant variant, bool exact) {
  const ChangeSets cs = change_sets(MapSpec{TauMap{u, y, variant}, std::nullopt}, xhat);
  const BitMatrix& p01 = exact ? cs.p01 : cs.p01_free;
  const BitMatrix& p10 = exact ? cs.p10 : cs.p10_free;
  const std::size_t n = instance.size();
  double total = 0.0;
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p == q) continue;
      if (p01.get(p, q)) total += instance.negative(p, q);
      if (p10.get(p, q)) total += instance.positive(p, q);
    }
  }
  return total;
}

std::optional<BoundReport> subset_bounds(const Instance& instance, const ClosedPartial& xhat, Pair ij, bool b,
                                         const ElementSet& u, BoundMethod method) {
  const std::size_t n = instance.size();
  if (u.universe() != n || !u.contains(ij.p) || !u.contains(ij.q) || ij.p == ij.q) {
    throw std::invalid_argument("subset_bounds: U must contain both elements of ij");
  }
  if (xhat.is_decided(ij.p, ij.q)) throw std::invalid_argument("subset_bounds: pair already decided");
  const std::vector<Element> sub = u.members();
  const std::size_t m = sub.size();
  Element li = 0;
  Element lj = 0;
  for (std::size_t a = 0; a < m; ++a) {
    if (sub[a] == ij.p) li = a;
    if (sub[a] == ij.q) lj = a;
  }
  const Instance cu = restrict_instance(instance, sub);
  const ClosedPartial xu = restrict_partial(xhat, sub);

  BoundReport report;
  Relation y_local(m);
  switch (method) {
    case BoundMethod::Elementary: {
      const auto xb = close_with(xu, {li, lj}, b);
      y_local = minimal_completion(*xb);
      report.lb = evaluate(cu, y_local);
      double ub = b ? 0.0 : cu.value(li, lj);
      for (Element p = 0; p < m; ++p) {
        for (Element q = 0; q < m; ++q) {
          if (p != q && !(p == li && q == lj)) ub += single_max(cu, xu, p, q);
        }
      }
      report.ub = ub;
      report.lb_source = "minimal-completion";
      report.ub_source = "single-maxima";
      break;
    }
    case BoundMethod::Heuristic: {
      auto ls = local_search_lower_bound(cu, xu, PairConstraint{{li, lj}, b});
      report.lb = ls.value;
      y_local = std::move(ls.witness);
      report.ub = ConstrainedUpperBound(cu, xu)({li, lj}, !b);
      report.lb_source = "local-search";
      report.ub_source = "induced-value+packing";
      break;
    }
    case BoundMethod::Tractable: {
      if (!b) return std::nullopt;
      auto tb = exact_bounds_tractable(cu, xu, {li, lj});
      if (!tb) return std::nullopt;
      report.lb = tb->opt;
      report.ub = tb->opt_cut;
      y_local = std::move(tb->x_plus);
      report.lb_source = "tractable";
      report.ub_source = "tractable-cut";
      break;
    }
  }

  Relation y(n);
  for (Element a = 0; a < m; ++a) {
    for (Element c = 0; c < m; ++c) {
      if (a != c && y_local.get(a, c)) y.set(sub[a], sub[c], true);
    }
  }
  report.y = y;

  if (method == BoundMethod::Elementary) {
    if (!is_true_to(make_tau(u, y, TauVariant::Both, ij, b), xhat)) return std::nullopt;
    report.variant = TauVariant::Both;
    report.ub_prime = boundary_bound(instance, xhat, u, y, TauVariant::Both, false);
    report.ub_prime_source = "boundary-both-free";
    return report;
  }
  bool any = false;
  for (TauVariant v : {TauVariant::Both, TauVariant::Outgoing, TauVariant::Incoming}) {
    if (!is_true_to(make_tau(u, y, v, ij, b), xhat)) continue;
    const double bound = boundary_bound(instance, xhat, u, y, v, true);
    if (!any || bound < report.ub_prime) {
      report.ub_prime = bound;
      report.variant = v;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  report.ub_prime_source = std::string("boundary-") + tau_variant_name(report.variant);
  return report;
}

}  // namespace preorder
