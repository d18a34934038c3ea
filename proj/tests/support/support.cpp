#include "support.hpp"

#include <cmath>
#include <limits>

#include "preorder/oracle.hpp"

namespace preorder::testing {

Instance worked_instance() {
  const double v[5][5] = {
      {0, 2, -1, -1, -1},
      {2, 0, -1, 2, -1},
      {-4, -4, 0, 3, 2},
      {1, 1, -1, 0, -1},
      {-1, -1, 1, -2, 0},
  };
  Instance inst(5);
  for (Element p = 0; p < 5; ++p) {
    for (Element q = 0; q < 5; ++q) {
      if (p != q) inst.set_value(p, q, v[p][q]);
    }
  }
  return inst;
}

Relation worked_solution() { return Relation(5, {{0, 1}, {1, 0}, {0, 3}, {1, 3}, {2, 3}, {2, 4}}); }

Instance subset_instance() {
  Instance inst(4);
  inst.set_value(0, 1, 5);
  inst.set_value(0, 2, 1);
  inst.set_value(0, 3, 1);
  inst.set_value(1, 2, 1);
  inst.set_value(1, 3, 1);
  inst.set_value(2, 3, 2);
  return inst;
}

Instance random_instance(Random& rng, std::size_t n, ValueKind kind) {
  Instance inst(n);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p == q) continue;
      if (kind == ValueKind::PlusMinusOne) {
        inst.set_value(p, q, rng.below(2) == 0 ? 1.0 : -1.0);
      } else {
        inst.set_value(p, q, (static_cast<double>(rng.below(8193)) - 4096.0) / 1024.0);
      }
    }
  }
  return inst;
}

Relation random_preorder(Random& rng, std::size_t n) {
  const auto& masks = preorder_masks(n);
  return mask_to_relation(n, masks[rng.below(masks.size())]);
}

PartialAssignment random_consistent_partial(Random& rng, std::size_t n, double density) {
  const Relation z = random_preorder(rng, n);
  PartialAssignment x(n);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p != q && rng.uniform() < density) x.fix(p, q, z.get(p, q));
    }
  }
  return x;
}

ElementSet random_subset(Random& rng, std::size_t n, double probability) {
  ElementSet u(n);
  for (Element v = 0; v < n; ++v) {
    if (rng.uniform() < probability) u.insert(v);
  }
  return u;
}

std::vector<Relation> brute_force_preorders(std::size_t n) {
  std::vector<Pair> pairs;
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p != q) pairs.push_back({p, q});
    }
  }
  std::vector<Relation> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    Relation x(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) x.set(pairs[k].p, pairs[k].q, ((m >> k) & 1U) != 0);
    bool ok = true;
    for (Element p = 0; p < n && ok; ++p) {
      for (Element q = 0; q < n && ok; ++q) {
        for (Element r = 0; r < n && ok; ++r) {
          if (p == q || q == r || p == r) continue;
          if (x.get(p, q) && x.get(q, r) && !x.get(p, r)) ok = false;
        }
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

double brute_force_min_cut(const FlowNetwork& network) {
  const std::size_t n = network.node_count();
  double best = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (((m >> network.source()) & 1U) == 0 || ((m >> network.sink()) & 1U) != 0) continue;
    double value = 0.0;
    for (const auto& arc : network.arcs()) {
      if (((m >> arc.from) & 1U) != 0 && ((m >> arc.to) & 1U) == 0) value += arc.capacity;
    }
    if (!found || value < best) best = value;
    found = true;
  }
  return best;
}

double brute_force_min_energy(const EnergyModel& model) {
  const std::size_t n = model.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 3;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Label> labels(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t k = 0; k < n; ++k) {
      labels[k] = static_cast<Label>(c % 3);
      c /= 3;
    }
    best = std::min(best, model.energy(labels));
  }
  return best;
}

double boundary_value(const Instance& instance, const ElementSet& u, const Relation& x) {
  double total = 0.0;
  for (Element p = 0; p < instance.size(); ++p) {
    for (Element q = 0; q < instance.size(); ++q) {
      if (p != q && u.contains(p) != u.contains(q) && x.get(p, q)) total += instance.value(p, q);
    }
  }
  return total;
}

}  // namespace preorder::testing
