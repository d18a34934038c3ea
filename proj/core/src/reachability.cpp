#include "preorder/reachability.hpp"

#include <vector>

namespace preorder {

BitMatrix reachability_sets(const BitMatrix& arcs) {
  const std::size_t n = arcs.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q && arcs.get(p, q)) out[p].push_back(q);
    }
  }
  BitMatrix w(n);
  std::vector<std::size_t> queue;
  for (std::size_t u = 0; u < n; ++u) {
    queue.assign(1, u);
    w.set(u, u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t q : out[queue[head]]) {
        if (!w.get(u, q)) {
          w.set(u, q);
          queue.push_back(q);
        }
      }
    }
  }
  return w;
}

}  // namespace preorder
