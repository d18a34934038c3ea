#include "preorder/max_flow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace preorder {

FlowNetwork::FlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink)
    : nodes_(nodes), source_(source), sink_(sink) {
  if (source >= nodes || sink >= nodes) throw std::invalid_argument("FlowNetwork: terminal out of range");
  if (source == sink) throw std::invalid_argument("FlowNetwork: source equals sink");
}

void FlowNetwork::add_arc(std::size_t from, std::size_t to, double capacity) {
  if (from >= nodes_ || to >= nodes_) throw std::invalid_argument("FlowNetwork: arc endpoint out of range");
  if (from == to) throw std::invalid_argument("FlowNetwork: self-loop");
  if (std::isnan(capacity) || capacity < 0.0) throw std::invalid_argument("FlowNetwork: negative capacity");
  if (capacity == 0.0) return;
  arcs_.push_back({from, to, capacity});
}

double cut_capacity(const FlowNetwork& network, const std::vector<bool>& source_side) {
  double total = 0.0;
  for (const auto& a : network.arcs()) {
    if (source_side[a.from] && !source_side[a.to]) {
      if (std::isinf(a.capacity)) return FlowNetwork::kInfinite;
      total += a.capacity;
    }
  }
  return total;
}

namespace {

class PushRelabel {
 public:
  explicit PushRelabel(const FlowNetwork& net)
      : n_(net.node_count()), s_(net.source()), t_(net.sink()), adj_(n_) {
    double finite = 0.0;
    for (const auto& a : net.arcs()) {
      if (!std::isinf(a.capacity)) finite += a.capacity;
    }
    const double sentinel = finite + 1.0;
    eps_ = 1e-12 * std::max(1.0, sentinel);
    for (const auto& a : net.arcs()) {
      const double cap = std::isinf(a.capacity) ? sentinel : a.capacity;
      adj_[a.from].push_back({a.to, adj_[a.to].size(), cap});
      adj_[a.to].push_back({a.from, adj_[a.from].size() - 1, 0.0});
    }
  }

  std::vector<bool> run() {
    height_.assign(n_, 0);
    excess_.assign(n_, 0.0);
    current_.assign(n_, 0);
    buckets_.assign(2 * n_ + 1, {});
    count_.assign(2 * n_ + 1, 0);

    global_relabel();
    for (auto& e : adj_[s_]) {
      if (e.cap > 0.0) push(s_, e, e.cap);
    }
    std::size_t relabels = 0;
    while (true) {
      while (top_ > 0 && buckets_[top_].empty()) --top_;
      if (buckets_[top_].empty()) break;
      const std::size_t u = buckets_[top_].back();
      buckets_[top_].pop_back();
      if (height_[u] != top_ || excess_[u] <= eps_) continue;
      discharge(u, relabels);
      if (relabels >= n_) {
        relabels = 0;
        global_relabel();
      }
    }
    return sink_unreachable();
  }

 private:
  struct Edge {
    std::size_t to;
    std::size_t rev;
    double cap;
  };

  void activate(std::size_t v) {
    if (v == s_ || v == t_ || height_[v] >= n_ || excess_[v] <= eps_) return;
    buckets_[height_[v]].push_back(v);
    top_ = std::max(top_, height_[v]);
  }

  void push(std::size_t u, Edge& e, double amount) {
    e.cap -= amount;
    adj_[e.to][e.rev].cap += amount;
    excess_[u] -= amount;
    const bool was_active = excess_[e.to] > eps_;
    excess_[e.to] += amount;
    if (!was_active) activate(e.to);
  }

  void discharge(std::size_t u, std::size_t& relabels) {
    while (excess_[u] > eps_ && height_[u] < n_) {
      auto& edges = adj_[u];
      if (current_[u] == edges.size()) {
        relabel(u);
        ++relabels;
        continue;
      }
      Edge& e = edges[current_[u]];
      if (e.cap > eps_ && height_[u] == height_[e.to] + 1) {
        push(u, e, std::min(excess_[u], e.cap));
      } else {
        ++current_[u];
      }
    }
    if (excess_[u] > eps_ && height_[u] < n_) activate(u);
  }

  void relabel(std::size_t u) {
    const std::size_t old = height_[u];
    std::size_t best = 2 * n_;
    for (const auto& e : adj_[u]) {
      if (e.cap > eps_) best = std::min(best, height_[e.to] + 1);
    }
    current_[u] = 0;
    --count_[old];
    if (count_[old] == 0 && old < n_) {
      // gap: nothing at height `old` can reach the sink any more
      for (std::size_t v = 0; v < n_; ++v) {
        if (v != s_ && height_[v] > old && height_[v] < n_) {
          --count_[height_[v]];
          height_[v] = n_;
          ++count_[n_];
        }
      }
      best = std::max(best, n_);
    }
    height_[u] = std::min(best, 2 * n_);
    ++count_[height_[u]];
  }

  void global_relabel() {
    std::fill(height_.begin(), height_.end(), n_);
    height_[t_] = 0;
    std::deque<std::size_t> queue{t_};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& e : adj_[v]) {
        // residual arc e.to -> v exists iff reverse edge has capacity
        const std::size_t w = e.to;
        if (w != s_ && height_[w] == n_ && adj_[w][e.rev].cap > eps_) {
          height_[w] = height_[v] + 1;
          queue.push_back(w);
        }
      }
    }
    height_[s_] = n_;
    std::fill(count_.begin(), count_.end(), 0);
    for (auto& b : buckets_) b.clear();
    top_ = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      ++count_[height_[v]];
      current_[v] = 0;
      activate(v);
    }
  }

  std::vector<bool> sink_unreachable() const {
    std::vector<bool> reach(n_, false);
    reach[t_] = true;
    std::deque<std::size_t> queue{t_};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& e : adj_[v]) {
        const std::size_t w = e.to;
        if (!reach[w] && adj_[w][e.rev].cap > eps_) {
          reach[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::vector<bool> side(n_);
    for (std::size_t v = 0; v < n_; ++v) side[v] = !reach[v];
    return side;
  }

  std::size_t n_;
  std::size_t s_;
  std::size_t t_;
  std::vector<std::vector<Edge>> adj_;
  double eps_ = 0.0;
  std::vector<std::size_t> height_;
  std::vector<double> excess_;
  std::vector<std::size_t> current_;
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<std::size_t> count_;
  std::size_t top_ = 0;
};

}  // namespace

CutResult min_st_cut(const FlowNetwork& network) {
  PushRelabel solver(network);
  CutResult out;
  out.source_side = solver.run();
  out.value = cut_capacity(network, out.source_side);
  out.infinite = std::isinf(out.value);
  return out;
}

}  // namespace preorder
