#include "preorder/maps.hpp"

#include <stdexcept>
#include <type_traits>

namespace preorder {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_set(const ElementSet& u, std::size_t n) {
  require(u.universe() == n, "map: element set has wrong universe size");
}

bool transitive_on(const Relation& y, const ElementSet& u) {
  const auto m = u.members();
  for (Element p : m) {
    for (Element q : m) {
      if (p == q || !y.get(p, q)) continue;
      for (Element r : m) {
        if (r != p && r != q && y.get(q, r) && !y.get(p, r)) return false;
      }
    }
  }
  return true;
}

void validate(const GammaMap& g, std::size_t n) {
  check_set(g.u, n);
  check_set(g.u_prime, n);
  require(g.i < n && g.j < n && g.i != g.j, "gamma: invalid pair ij");
  require(g.u.contains(g.i), "gamma: i must lie in U");
  require(g.u_prime.contains(g.j), "gamma: j must lie in U'");
  for (std::size_t v = 0; v < n; ++v) {
    require(!(g.u.contains(v) && g.u_prime.contains(v)), "gamma: U and U' must be disjoint");
  }
}

void validate(const TauMap& t, std::size_t n) {
  check_set(t.u, n);
  require(t.y.size() == n, "tau: y has wrong size");
  require(transitive_on(t.y, t.u), "tau: y must be transitive on U");
}

}  // namespace

const char* tau_variant_name(TauVariant v) {
  switch (v) {
    case TauVariant::Outgoing:
      return "out";
    case TauVariant::Incoming:
      return "in";
    case TauVariant::Both:
      break;
  }
  return "both";
}

MapSpec make_gamma(ElementSet u, ElementSet u_prime, Element i, Element j) {
  return MapSpec{GammaMap{std::move(u), std::move(u_prime), i, j}, MapCondition{{i, j}, true}};
}

MapSpec make_tau(ElementSet u, Relation y, TauVariant variant, Pair ij, bool b) {
  return MapSpec{TauMap{std::move(u), std::move(y), variant}, MapCondition{ij, b}};
}

Relation apply_dicut(const Relation& x, const ElementSet& u) {
  check_set(u, x.size());
  BitMatrix bits = x.bits();
  const std::size_t n = x.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (!u.contains(p)) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (!u.contains(q)) bits.reset(p, q);
    }
  }
  return Relation(std::move(bits));
}

Relation apply_join(const Relation& x, Element i, Element j) {
  const std::size_t n = x.size();
  require(i < n && j < n && i != j, "join: invalid pair ij");
  BitMatrix bits = x.bits();
  BitMatrix out_of_j(n);
  out_of_j.or_row(0, x.bits(), j);
  out_of_j.set(0, j);
  for (std::size_t p = 0; p < n; ++p) {
    if (x.reaches(p, i)) bits.or_row(p, out_of_j, 0);
  }
  return Relation(std::move(bits));
}

Relation apply_tau(const Relation& x, const TauMap& tau) {
  validate(tau, x.size());
  const std::size_t n = x.size();
  const ElementSet& u = tau.u;
  const auto inside = u.members();
  Relation out(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const bool pu = u.contains(p);
      const bool qu = u.contains(q);
      bool v = false;
      if (pu && qu) {
        v = tau.y.get(p, q);
      } else if (!pu && !qu) {
        v = x.get(p, q);
      } else if (!pu && qu) {
        // entering U
        if (tau.variant == TauVariant::Outgoing) {
          for (Element r : inside) {
            if (x.get(p, r) && tau.y.reaches(r, q)) {
              v = true;
              break;
            }
          }
        }
      } else {
        // leaving U
        if (tau.variant == TauVariant::Incoming) {
          for (Element r : inside) {
            if (tau.y.reaches(p, r) && x.get(r, q)) {
              v = true;
              break;
            }
          }
        }
      }
      if (v) out.set(p, q, true);
    }
  }
  return out;
}

Relation apply_map(const MapSpec& map_spec, const Relation& x) {
  const std::size_t n = x.size();
  if (map_spec.condition) {
    const Pair ij = map_spec.condition->pair;
    require(ij.p < n && ij.q < n && ij.p != ij.q, "map condition: invalid pair");
    if (x.get(ij.p, ij.q) == map_spec.condition->value) return x;
  }
  return std::visit(
      [&](const auto& m) -> Relation {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DicutMap>) {
          return apply_dicut(x, m.source_side);
        } else if constexpr (std::is_same_v<T, JoinMap>) {
          return apply_join(x, m.i, m.j);
        } else if constexpr (std::is_same_v<T, GammaMap>) {
          validate(m, n);
          ElementSet rest(n);
          for (std::size_t v = 0; v < n; ++v) {
            if (!m.u.contains(v)) rest.insert(v);
          }
          const Relation a = apply_dicut(x, m.u_prime);
          const Relation b = apply_dicut(a, rest);
          return apply_join(b, m.i, m.j);
        } else {
          return apply_tau(x, m);
        }
      },
      map_spec.map);
}

namespace {

ChangeSets gamma_sets(const GammaMap& g, const ClosedPartial& xhat) {
  const std::size_t n = xhat.size();
  validate(g, n);
  ChangeSets cs{BitMatrix(n), BitMatrix(n), BitMatrix(n), BitMatrix(n)};
  auto label = [&](Element v) { return g.u.contains(v) ? 0 : (g.u_prime.contains(v) ? 1 : 2); };
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const int lp = label(p);
      const int lq = label(q);
      if (lp == 0 && lq == 1) {
        if (!xhat.is_zero(p, g.i) && !xhat.is_zero(g.j, q) && !xhat.is_one(p, q)) cs.p01.set(p, q);
      } else if ((lq == 0 && lp != 0) || (lp == 1 && lq == 2)) {
        if (!xhat.is_zero(p, q)) cs.p10.set(p, q);
      }
    }
  }
  cs.p01_free = cs.p01;
  cs.p10_free = cs.p10;
  return cs;
}

ChangeSets tau_sets(const TauMap& t, const ClosedPartial& xhat) {
  const std::size_t n = xhat.size();
  validate(t, n);
  ChangeSets cs{BitMatrix(n), BitMatrix(n), BitMatrix(n), BitMatrix(n)};
  const auto inside = t.u.members();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const bool pu = t.u.contains(p);
      const bool qu = t.u.contains(q);
      if (pu == qu) continue;
      const bool leaving = pu;
      bool cut = false;
      bool repair = false;
      switch (t.variant) {
        case TauVariant::Outgoing:
          cut = leaving;
          repair = !leaving;
          break;
        case TauVariant::Incoming:
          cut = !leaving;
          repair = leaving;
          break;
        case TauVariant::Both:
          cut = true;
          break;
      }
      if (cut && !xhat.is_zero(p, q)) {
        cs.p10.set(p, q);
        cs.p10_free.set(p, q);
      }
      if (repair && !xhat.is_one(p, q)) {
        cs.p01_free.set(p, q);
        bool hit = false;
        for (Element r : inside) {
          if (t.variant == TauVariant::Outgoing) {
            hit = !xhat.is_zero(p, r) && t.y.reaches(r, q);
          } else {
            hit = t.y.reaches(p, r) && !xhat.is_zero(r, q);
          }
          if (hit) break;
        }
        if (hit) cs.p01.set(p, q);
      }
    }
  }
  return cs;
}

}  // namespace

ChangeSets change_sets(const MapSpec& map_spec, const ClosedPartial& xhat) {
  if (const auto* g = std::get_if<GammaMap>(&map_spec.map)) return gamma_sets(*g, xhat);
  if (const auto* t = std::get_if<TauMap>(&map_spec.map)) return tau_sets(*t, xhat);
  throw std::invalid_argument("change_sets: defined only for gamma and tau maps");
}

bool is_true_to(const MapSpec& map_spec, const ClosedPartial& xhat) {
  const std::size_t n = xhat.size();
  if (const auto* d = std::get_if<DicutMap>(&map_spec.map)) {
    check_set(d->source_side, n);
    for (std::size_t p = 0; p < n; ++p) {
      if (!d->source_side.contains(p)) continue;
      for (std::size_t q = 0; q < n; ++q) {
        if (!d->source_side.contains(q) && xhat.is_one(p, q)) return false;
      }
    }
    return true;
  }
  if (const auto* j = std::get_if<JoinMap>(&map_spec.map)) {
    require(j->i < n && j->j < n && j->i != j->j, "join: invalid pair ij");
    for (std::size_t p = 0; p < n; ++p) {
      if (xhat.is_zero(p, j->i)) continue;
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q && xhat.is_zero(p, q) && !xhat.is_zero(j->j, q)) return false;
      }
    }
    return true;
  }
  if (const auto* t = std::get_if<TauMap>(&map_spec.map)) {
    // y itself must be a completion of xhat on U
    const auto inside = t->u.members();
    for (Element p : inside) {
      for (Element q : inside) {
        if (p == q) continue;
        if (xhat.is_one(p, q) && !t->y.get(p, q)) return false;
        if (xhat.is_zero(p, q) && t->y.get(p, q)) return false;
      }
    }
  }
  const ChangeSets cs = change_sets(map_spec, xhat);
  return !cs.p10.intersects(xhat.ones()) && !cs.p01.intersects(xhat.zeros());
}

}  // namespace preorder
