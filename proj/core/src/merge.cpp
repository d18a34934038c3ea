#include "preorder/merge.hpp"

#include <stdexcept>

namespace preorder {

namespace {

/// `group[v]` is the contracted index of v; groups are numbered by first
/// occurrence in increasing v.
Contraction contract(const Instance& instance, const ClosedPartial& xhat, std::vector<Element> group,
                     std::size_t m) {
  const std::size_t n = instance.size();
  Contraction out;
  out.element_map = std::move(group);
  out.members.assign(m, {});
  for (std::size_t v = 0; v < n; ++v) out.members[out.element_map[v]].push_back(v);

  std::vector<double> values(m * m, 0.0);
  double offset = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const Element a = out.element_map[p];
      const Element b = out.element_map[q];
      if (a == b) {
        offset += instance.value(p, q);
      } else {
        values[a * m + b] += instance.value(p, q);
      }
    }
  }
  out.instance = Instance(m, std::move(values));
  out.offset = offset;

  PartialAssignment x(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      bool all_one = true;
      bool all_zero = true;
      for (Element p : out.members[a]) {
        for (Element q : out.members[b]) {
          all_one = all_one && xhat.is_one(p, q);
          all_zero = all_zero && xhat.is_zero(p, q);
        }
      }
      if (all_one) {
        x.fix(a, b, true);
      } else if (all_zero) {
        x.fix(a, b, false);
      }
    }
  }
  out.partial = close(x);
  return out;
}

}  // namespace

Contraction merge_classes(const Instance& instance, const ClosedPartial& xhat, const ElementSet& u) {
  const std::size_t n = instance.size();
  if (xhat.size() != n || u.universe() != n) throw std::invalid_argument("merge_classes: size mismatch");
  const auto inside = u.members();
  if (inside.size() < 2) throw std::invalid_argument("merge_classes: U needs at least two elements");
  for (Element p : inside) {
    for (Element q : inside) {
      if (p != q && !xhat.is_one(p, q)) {
        throw std::invalid_argument("merge_classes: pairs inside U must be fixed to one");
      }
    }
  }
  std::vector<Element> group(n);
  std::size_t next = 0;
  std::size_t merged = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (u.contains(v)) {
      if (merged == n) merged = next++;
      group[v] = merged;
    } else {
      group[v] = next++;
    }
  }
  return contract(instance, xhat, std::move(group), next);
}

Contraction contract_classes(const Instance& instance, const ClosedPartial& xhat) {
  const std::size_t n = instance.size();
  if (xhat.size() != n) throw std::invalid_argument("contract_classes: size mismatch");
  std::vector<Element> group(n, n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (group[v] != n) continue;
    group[v] = next;
    for (std::size_t w = v + 1; w < n; ++w) {
      if (group[w] == n && xhat.is_one(v, w) && xhat.is_one(w, v)) group[w] = next;
    }
    ++next;
  }
  return contract(instance, xhat, std::move(group), next);
}

std::vector<Pair> lift_pair(const Contraction& contraction, Pair ab) {
  std::vector<Pair> out;
  for (Element p : contraction.members.at(ab.p)) {
    for (Element q : contraction.members.at(ab.q)) out.push_back({p, q});
  }
  return out;
}

}  // namespace preorder
