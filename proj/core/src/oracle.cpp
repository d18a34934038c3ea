#include "preorder/oracle.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

namespace preorder {

namespace {

void check_size(std::size_t n) {
  if (n == 0 || n > kOracleMaxSize) {
    throw std::invalid_argument("oracle: n must lie in [1, " + std::to_string(kOracleMaxSize) +
                                "], got " + std::to_string(n));
  }
}

using Succ = std::array<std::uint8_t, kOracleMaxSize>;

// Extends a preorder on {0..k-1} (succ[r] = successor bitmask of r) by
// element k, choosing its successor set `out` and predecessor set `in`.
void extend(std::size_t n, std::size_t k, Succ& succ, std::vector<std::uint32_t>& result) {
  if (k == n) {
    std::uint32_t mask = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q && ((succ[p] >> q) & 1U)) mask |= std::uint32_t{1} << pair_bit(n, p, q);
      }
    }
    result.push_back(mask);
    return;
  }
  if (k >= succ.size()) return;
  const unsigned full = (1U << k) - 1U;
  for (unsigned out = 0; out <= full; ++out) {
    // out must be closed under successors
    bool ok = true;
    for (std::size_t r = 0; r < k && ok; ++r) {
      if (((out >> r) & 1U) && (succ[r] & ~out & full)) ok = false;
    }
    if (!ok) continue;
    for (unsigned in = 0; in <= full; ++in) {
      bool good = true;
      for (std::size_t r = 0; r < k && good; ++r) {
        if (!((in >> r) & 1U)) continue;
        // in must be closed under predecessors: s -> r implies s in `in`
        for (std::size_t s = 0; s < k; ++s) {
          if (s != r && ((succ[s] >> r) & 1U) && !((in >> s) & 1U)) {
            good = false;
            break;
          }
        }
        // r -> k -> s implies r -> s
        if (good && ((out & ~succ[r] & ~(1U << r)) & full)) good = false;
      }
      if (!good) continue;
      Succ next = succ;
      next[k] = static_cast<std::uint8_t>(out);
      for (std::size_t r = 0; r < k; ++r) {
        if ((in >> r) & 1U) next[r] = static_cast<std::uint8_t>(next[r] | (1U << k));
      }
      extend(n, k + 1, next, result);
    }
  }
}

std::vector<std::uint32_t> build_masks(std::size_t n) {
  std::vector<std::uint32_t> result;
  Succ succ{};
  extend(n, 0, succ, result);
  return result;
}

struct MaskCache {
  std::array<std::once_flag, kOracleMaxSize + 1> once;
  std::array<std::vector<std::uint32_t>, kOracleMaxSize + 1> masks;
};

MaskCache& cache() {
  static MaskCache c;
  return c;
}

std::pair<std::uint32_t, std::uint32_t> fixed_masks(const PartialAssignment& x) {
  const std::size_t n = x.size();
  std::uint32_t ones = 0;
  std::uint32_t zeros = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      if (x.is_one(p, q)) ones |= std::uint32_t{1} << pair_bit(n, p, q);
      if (x.is_zero(p, q)) zeros |= std::uint32_t{1} << pair_bit(n, p, q);
    }
  }
  return {ones, zeros};
}

double mask_value(const std::vector<double>& c, std::uint32_t mask) {
  double total = 0.0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) total += c[static_cast<std::size_t>(__builtin_ctz(m))];
  return total;
}

std::vector<double> pair_values(const Instance& instance) {
  const std::size_t n = instance.size();
  std::vector<double> c(n * (n - 1), 0.0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q) c[pair_bit(n, p, q)] = instance.value(p, q);
    }
  }
  return c;
}

}  // namespace

std::uint32_t relation_to_mask(const Relation& x) {
  const std::size_t n = x.size();
  check_size(n);
  std::uint32_t mask = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (x.get(p, q)) mask |= std::uint32_t{1} << pair_bit(n, p, q);
    }
  }
  return mask;
}

Relation mask_to_relation(std::size_t n, std::uint32_t mask) {
  check_size(n);
  Relation x(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q && ((mask >> pair_bit(n, p, q)) & 1U)) x.set(p, q, true);
    }
  }
  return x;
}

const std::vector<std::uint32_t>& preorder_masks(std::size_t n) {
  check_size(n);
  MaskCache& c = cache();
  std::call_once(c.once[n], [&] { c.masks[n] = build_masks(n); });
  return c.masks[n];
}

std::vector<Relation> enumerate_preorders(std::size_t n) {
  std::vector<Relation> out;
  for (std::uint32_t m : preorder_masks(n)) out.push_back(mask_to_relation(n, m));
  return out;
}

void for_each_completion(const PartialAssignment& x, const std::function<void(std::uint32_t)>& f) {
  const auto [ones, zeros] = fixed_masks(x);
  for (std::uint32_t m : preorder_masks(x.size())) {
    if ((m & ones) == ones && (m & zeros) == 0) f(m);
  }
}

OptimumSet solve_exact(const Instance& instance, const PartialAssignment& x) {
  const std::size_t n = instance.size();
  check_size(n);
  if (x.size() != n) throw std::invalid_argument("solve_exact: size mismatch");
  const std::vector<double> c = pair_values(instance);
  bool found = false;
  double best = 0.0;
  std::vector<std::uint32_t> argmax;
  for_each_completion(x, [&](std::uint32_t m) {
    const double v = mask_value(c, m);
    if (!found || v > best) {
      found = true;
      best = v;
      argmax.assign(1, m);
    } else if (v == best) {
      argmax.push_back(m);
    }
  });
  if (!found) throw InconsistencyError("solve_exact: partial assignment has no completion");
  OptimumSet out;
  out.value = best;
  for (std::uint32_t m : argmax) out.optima.push_back(mask_to_relation(n, m));
  return out;
}

OptimumSet solve_exact(const Instance& instance) {
  return solve_exact(instance, PartialAssignment(instance.size()));
}

std::optional<Relation> certify_witness(const Instance& instance, const PartialAssignment& x) {
  if (x.size() != instance.size()) throw std::invalid_argument("certify: size mismatch");
  const OptimumSet opt = solve_exact(instance);
  for (const Relation& r : opt.optima) {
    if (is_completion(r, x)) return r;
  }
  return std::nullopt;
}

bool certify(const Instance& instance, const PartialAssignment& x) {
  return certify_witness(instance, x).has_value();
}

PartialAssignment decided_pairs_bruteforce(const PartialAssignment& x) {
  const std::size_t n = x.size();
  check_size(n);
  std::uint32_t all = ~std::uint32_t{0};
  std::uint32_t any = 0;
  bool found = false;
  for_each_completion(x, [&](std::uint32_t m) {
    found = true;
    all &= m;
    any |= m;
  });
  if (!found) throw InconsistencyError("decided_pairs_bruteforce: no completion");
  PartialAssignment out(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const std::size_t b = pair_bit(n, p, q);
      if ((all >> b) & 1U) {
        out.fix(p, q, true);
      } else if (!((any >> b) & 1U)) {
        out.fix(p, q, false);
      }
    }
  }
  return out;
}

}  // namespace preorder
