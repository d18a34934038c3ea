#pragma once

#include <optional>
#include <string>
#include <vector>

#include "preorder/instance.hpp"
#include "preorder/maps.hpp"
#include "preorder/partial.hpp"
#include "preorder/relation.hpp"
#include "preorder/triple_packing.hpp"

namespace preorder {

/// max over X_V[xhat] of c_pq x_pq: c+ if undecided, c if fixed to one, 0 if
/// fixed to zero.
double single_max(const Instance& instance, const ClosedPartial& xhat, Element p, Element q);

/// ive(ij) for b = 0, ivi(ij) for b = 1: an upper bound on the value of
/// pairs touching i or j over completions with x_ij = b. Each term is
/// maximized over its one or two variables under the fixings of
/// close(xhat, ij = b) and the transitivity coupling with x_ij = b.
/// Throws std::invalid_argument if ij is decided in xhat.
double induced_value(const Instance& instance, const ClosedPartial& xhat, Pair ij, bool b);

/// Max of c_pq x_pq + c_qr x_qr + c_pr x_pr over the assignments that
/// respect the fixings of xhat and x_pq + x_qr - x_pr <= 1.
double triple_max(const Instance& instance, const ClosedPartial& xhat, const Triple& t);

/// Greedy packing scored by sum of single maxima minus triple_max.
TriplePacking bound_packing(const Instance& instance, const ClosedPartial& xhat,
                            const std::vector<bool>& excluded = {});

/// Single maxima over unpacked pairs plus triple maxima over packed triples,
/// restricted to pairs with no endpoint in `excluded`. Valid for any
/// arc-disjoint packing avoiding excluded elements.
double triple_packing_upper_bound(const Instance& instance, const ClosedPartial& xhat,
                                  const TriplePacking& packing, const std::vector<bool>& excluded = {});

/// Upper bounds on max phi over completions with x_ij = b, as
/// induced_value(ij, b) + packing bound on V minus {i, j}. The packing is
/// computed once for the whole ground set and restricted per pair by
/// dropping triples touching i or j.
class ConstrainedUpperBound {
 public:
  ConstrainedUpperBound(const Instance& instance, const ClosedPartial& xhat);
  double operator()(Pair ij, bool b) const;
  /// Packing bound on the pairs avoiding i and j.
  double rest(Element i, Element j) const;

 private:
  const Instance* instance_;
  const ClosedPartial* xhat_;
  std::size_t n_;
  double singles_total_ = 0.0;
  std::vector<double> singles_touching_;  // per element
  double gain_total_ = 0.0;
  std::vector<double> gain_element_;  // per element
  std::vector<double> gain_pair_;     // per unordered pair, n*n symmetric
};

/// Exact constrained optima when x+ (undecided pairs set to 1 iff c >= 0) is
/// a completion of xhat.
struct TractableBounds {
  /// max phi with x_ij = 1, equals phi(x+)
  double opt = 0.0;
  /// max phi with x_ij = 0
  double opt_cut = 0.0;
  Relation x_plus;
};

/// x+ for xhat, or nullopt if it is not transitive.
std::optional<Relation> tractable_point(const Instance& instance, const ClosedPartial& xhat);
/// nullopt unless ij undecided, c_ij >= 0 and x+ transitive.
std::optional<TractableBounds> exact_bounds_tractable(const Instance& instance, const ClosedPartial& xhat,
                                                      Pair ij);
/// opt_cut given a precomputed x+ (skips the transitivity check).
double tractable_cut_value(const Instance& instance, const ClosedPartial& xhat, const Relation& x_plus,
                           Pair ij);

/// sum over P01 of c- plus sum over P10 of c+ for tau over U. With
/// exact = true the primed sets for the given y are used, otherwise the
/// y-independent double-primed sets. y is full-size; only pairs inside U are
/// read.
double boundary_bound(const Instance& instance, const ClosedPartial& xhat, const ElementSet& u,
                      const Relation& y, TauVariant variant, bool exact);

/// How the three quantities of the subset fixation test are bounded.
enum class BoundMethod {
  /// lb = value of the minimal completion of close(xhat, ij = b) on U;
  /// ub = c_ij (1 - b) plus single maxima of the other pairs in U.
  Elementary,
  /// lb by local search on U; ub by induced values and triple packing on U.
  Heuristic,
  /// exact lb and ub on U when b = 1, c_ij >= 0 and y+ is transitive on U;
  /// not applicable otherwise.
  Tractable
};

struct BoundReport {
  double lb = 0.0;
  double ub = 0.0;
  double ub_prime = 0.0;
  /// witness of lb on U (full-size relation, only pairs inside U meaningful)
  Relation y;
  TauVariant variant = TauVariant::Both;
  std::string lb_source;
  std::string ub_source;
  std::string ub_prime_source;
};

/// Bounds for fixing ij to b via the tau map over U (i, j in U). ub_prime is
/// the smallest boundary bound over the tau variants that are true to xhat;
/// nullopt if no variant is true or the method is not applicable.
std::optional<BoundReport> subset_bounds(const Instance& instance, const ClosedPartial& xhat, Pair ij, bool b,
                                         const ElementSet& u, BoundMethod method);

}  // namespace preorder
