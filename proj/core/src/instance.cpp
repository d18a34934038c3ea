#include "preorder/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace preorder {

Instance::Instance(std::size_t n) : n_(n), values_(n * n, 0.0) {
  if (n == 0) throw DataError("instance must have at least one element");
}

Instance::Instance(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (n == 0) throw DataError("instance must have at least one element");
  if (values_.size() != n * n) {
    throw DataError("value matrix has " + std::to_string(values_.size()) + " entries, expected " +
                    std::to_string(n * n));
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const double v = values_[p * n + q];
      if (!std::isfinite(v)) {
        throw DataError("non-finite value at (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
      if (p == q && v != 0.0) {
        throw DataError("diagonal value at " + std::to_string(p) + " must be 0");
      }
    }
  }
}

void Instance::set_value(Element p, Element q, double v) {
  if (p >= n_ || q >= n_) throw std::out_of_range("Instance::set_value: index out of range");
  if (p == q) throw DataError("Instance::set_value: diagonal pair");
  if (!std::isfinite(v)) throw DataError("Instance::set_value: non-finite value");
  values_[p * n_ + q] = v;
}

double Instance::absolute_mass() const {
  double s = 0.0;
  for (double v : values_) s += std::fabs(v);
  return s;
}

double Instance::tolerance() const { return 1e-9 * std::max(1.0, absolute_mass()); }

double evaluate(const Instance& instance, const Relation& x) {
  if (x.size() != instance.size()) {
    throw std::invalid_argument("evaluate: relation has " + std::to_string(x.size()) +
                                " elements, instance has " + std::to_string(instance.size()));
  }
  const std::size_t n = instance.size();
  double total = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (x.get(p, q)) total += instance.value(p, q);
    }
  }
  return total;
}

Instance ingest_ego_network(const std::vector<std::pair<std::string, std::string>>& edges,
                            const std::vector<std::string>& nodes) {
  if (nodes.empty()) throw DataError("ego network: empty node list");
  std::unordered_map<std::string, Element> index;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!index.emplace(nodes[k], k).second) {
      throw DataError("ego network: duplicate node id '" + nodes[k] + "'");
    }
  }
  const std::size_t n = nodes.size();
  std::vector<double> values(n * n, -1.0);
  for (std::size_t p = 0; p < n; ++p) values[p * n + p] = 0.0;
  for (const auto& [src, dst] : edges) {
    const auto a = index.find(src);
    const auto b = index.find(dst);
    if (a == index.end()) throw DataError("ego network: unknown node id '" + src + "'");
    if (b == index.end()) throw DataError("ego network: unknown node id '" + dst + "'");
    if (a->second == b->second) continue;
    values[a->second * n + b->second] = 1.0;
  }
  return Instance(n, std::move(values));
}

Instance restrict_instance(const Instance& instance, const std::vector<Element>& subset) {
  const std::size_t m = subset.size();
  std::vector<double> values(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b) values[a * m + b] = instance.value(subset[a], subset[b]);
    }
  }
  return Instance(m, std::move(values));
}

}  // namespace preorder
