#include "preorder/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace preorder {

Relation greedy_arc_fixation(const Instance& instance, ClosedPartial xhat) {
  const std::size_t n = instance.size();
  std::vector<Pair> order;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q && !xhat.is_decided(p, q)) order.push_back({p, q});
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](const Pair& a, const Pair& b) {
    return std::fabs(instance.value(a.p, a.q)) > std::fabs(instance.value(b.p, b.q));
  });
  for (const Pair& e : order) {
    if (!xhat.is_decided(e.p, e.q)) xhat.decide(e, instance.value(e.p, e.q) > 0.0);
  }
  return minimal_completion(xhat);
}

Relation greedy_arc_insertion(const Instance& instance, const ClosedPartial& xhat, Relation x) {
  const std::size_t n = instance.size();
  std::vector<Element> into;
  std::vector<Element> out;
  for (;;) {
    double best_gain = 0.0;
    Pair best{0, 0};
    bool found = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p == q || x.get(p, q) || xhat.is_zero(p, q) || instance.value(p, q) <= 0.0) continue;
        into.clear();
        out.clear();
        for (std::size_t a = 0; a < n; ++a) {
          if (x.reaches(a, p)) into.push_back(a);
          if (x.reaches(q, a)) out.push_back(a);
        }
        double gain = 0.0;
        bool blocked = false;
        for (Element a : into) {
          for (Element b : out) {
            if (a == b || x.get(a, b)) continue;
            if (xhat.is_zero(a, b)) {
              blocked = true;
              break;
            }
            gain += instance.value(a, b);
          }
          if (blocked) break;
        }
        if (!blocked && gain > best_gain) {
          best_gain = gain;
          best = {p, q};
          found = true;
        }
      }
    }
    if (!found) return x;
    BitMatrix bits = x.bits();
    BitMatrix from_q(n);
    from_q.or_row(0, bits, best.q);
    from_q.set(0, best.q);
    for (std::size_t a = 0; a < n; ++a) {
      if (x.reaches(a, best.p)) bits.or_row(a, from_q, 0);
    }
    x = Relation(std::move(bits));
  }
}

LocalSearchResult local_search_lower_bound(const Instance& instance, const ClosedPartial& xhat,
                                           std::optional<PairConstraint> constraint) {
  if (xhat.size() != instance.size()) throw std::invalid_argument("local search: size mismatch");
  ClosedPartial start = xhat;
  if (constraint) {
    auto fixed = close_with(xhat, constraint->pair, constraint->value);
    if (!fixed) throw std::invalid_argument("local search: constraint contradicts the partial assignment");
    start = std::move(*fixed);
  }
  Relation x = greedy_arc_fixation(instance, start);
  x = greedy_arc_insertion(instance, start, std::move(x));
  LocalSearchResult r;
  r.value = evaluate(instance, x);
  r.witness = std::move(x);
  return r;
}

}  // namespace preorder
