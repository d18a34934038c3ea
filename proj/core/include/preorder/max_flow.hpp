#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace preorder {

/// Directed network with nonnegative capacities. Capacity `kInfinite` marks
/// arcs that no finite cut may cross.
class FlowNetwork {
 public:
  static constexpr double kInfinite = std::numeric_limits<double>::infinity();

  struct Arc {
    std::size_t from;
    std::size_t to;
    double capacity;
  };

  FlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink);

  std::size_t node_count() const { return nodes_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  /// Throws std::invalid_argument for out-of-range endpoints, self-loops, or
  /// capacities that are negative or NaN. Zero-capacity arcs are dropped.
  void add_arc(std::size_t from, std::size_t to, double capacity);
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::size_t nodes_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Arc> arcs_;
};

struct CutResult {
  /// Maximum flow value = capacity of the returned cut; +inf when every
  /// source-sink cut crosses an infinite arc.
  double value = 0.0;
  bool infinite = false;
  /// source_side[v] is true iff v is on the source side. This is the largest
  /// minimum cut source side: all nodes that cannot reach the sink in the
  /// final residual network.
  std::vector<bool> source_side;
};

/// Push-relabel (highest label first, gap heuristic, periodic global
/// relabelling). Infinite capacities are replaced by a sentinel exceeding
/// the sum of all finite capacities.
CutResult min_st_cut(const FlowNetwork& network);

/// Sum of capacities of arcs leaving `source_side` (+inf if one is infinite).
double cut_capacity(const FlowNetwork& network, const std::vector<bool>& source_side);

}  // namespace preorder
