#include "preorder/triple_packing.hpp"

#include <algorithm>

namespace preorder {

TriplePacking greedy_triple_packing(std::size_t n, const std::function<double(const Triple&)>& weight,
                                    const std::vector<bool>& skip) {
  const auto skipped = [&](Element v) { return !skip.empty() && skip[v]; };
  struct Scored {
    double w;
    Triple t;
  };
  std::vector<Scored> candidates;
  for (Element p = 0; p < n; ++p) {
    if (skipped(p)) continue;
    for (Element q = 0; q < n; ++q) {
      if (q == p || skipped(q)) continue;
      for (Element r = 0; r < n; ++r) {
        if (r == p || r == q || skipped(r)) continue;
        const Triple t{p, q, r};
        const double w = weight(t);
        if (w > 0.0) candidates.push_back({w, t});
      }
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Scored& a, const Scored& b) { return a.w > b.w; });
  std::vector<bool> used(n * n, false);
  TriplePacking out;
  for (const auto& [w, t] : candidates) {
    const std::size_t a = t.p * n + t.q;
    const std::size_t b = t.q * n + t.r;
    const std::size_t c = t.p * n + t.r;
    if (used[a] || used[b] || used[c]) continue;
    used[a] = used[b] = used[c] = true;
    out.triples.push_back(t);
  }
  return out;
}

}  // namespace preorder
