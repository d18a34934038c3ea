#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "preorder/bit_matrix.hpp"
#include "preorder/relation.hpp"
#include "preorder/types.hpp"

namespace preorder {

enum class PairState { Zero, One, Undecided };

/// Partial 0/1 assignment on ordered pairs. Pairs absent from both the ones
/// and the zeros set are undecided. The diagonal is implicitly one.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(std::size_t n) : ones_(n), zeros_(n) {}
  /// From explicit ones/zeros matrices; throws std::invalid_argument if they
  /// differ in size, overlap, or touch the diagonal.
  PartialAssignment(BitMatrix ones, BitMatrix zeros);

  std::size_t size() const { return ones_.size(); }
  PairState state(Element p, Element q) const;
  bool is_one(Element p, Element q) const { return p == q || ones_.get(p, q); }
  bool is_zero(Element p, Element q) const { return p != q && zeros_.get(p, q); }
  bool is_decided(Element p, Element q) const { return is_one(p, q) || is_zero(p, q); }

  /// Fixes pq to v (overwriting any previous state). Throws on diagonal or
  /// out-of-range pairs.
  void fix(Element p, Element q, bool v);
  void unfix(Element p, Element q);

  const BitMatrix& ones() const { return ones_; }
  const BitMatrix& zeros() const { return zeros_; }
  std::size_t decided_count() const { return ones_.count() + zeros_.count(); }

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

 private:
  BitMatrix ones_;
  BitMatrix zeros_;
};

/// A consistent, maximally specific partial assignment. Only obtainable from
/// close(); every undecided pair takes both values among the completions.
class ClosedPartial {
 public:
  ClosedPartial() = default;
  /// The empty assignment on n elements (trivially closed).
  explicit ClosedPartial(std::size_t n) : x_(n) {}

  std::size_t size() const { return x_.size(); }
  PairState state(Element p, Element q) const { return x_.state(p, q); }
  bool is_one(Element p, Element q) const { return x_.is_one(p, q); }
  bool is_zero(Element p, Element q) const { return x_.is_zero(p, q); }
  bool is_decided(Element p, Element q) const { return x_.is_decided(p, q); }
  const BitMatrix& ones() const { return x_.ones(); }
  const BitMatrix& zeros() const { return x_.zeros(); }
  std::size_t decided_count() const { return x_.decided_count(); }
  const PartialAssignment& assignment() const { return x_; }

  /// Fixes the undecided pair pq to v and restores maximal specificity in
  /// O(n^2 / 64) word operations. In a closed assignment both values of an
  /// undecided pair are consistent, so this cannot fail. Throws
  /// std::invalid_argument if pq is diagonal or already decided.
  void decide(Pair pq, bool v);

  friend bool operator==(const ClosedPartial&, const ClosedPartial&) = default;

 private:
  friend ClosedPartial close(const PartialAssignment&);
  explicit ClosedPartial(PartialAssignment x) : x_(std::move(x)) {}

  PartialAssignment x_;
};

/// true iff some transitive completion exists, i.e. no zero pair lies in the
/// transitive closure of the ones.
bool is_consistent(const PartialAssignment& x);

/// Ones become their transitive closure; pq becomes zero when some zero pair
/// p'q' has p' ->* p and q ->* q' along ones (reflexively). Throws
/// InconsistencyError if x has no completion.
ClosedPartial close(const PartialAssignment& x);

/// close(xhat with pq fixed to v), or nullopt if that is inconsistent.
std::optional<ClosedPartial> close_with(const ClosedPartial& xhat, Pair pq, bool v);

/// x is a completion of xhat: transitive and agrees on every decided pair.
bool is_completion(const Relation& x, const PartialAssignment& xhat);

/// Restriction to the pairs inside `subset`, relabelled 0..|subset|-1 in
/// increasing order.
ClosedPartial restrict_partial(const ClosedPartial& xhat, const std::vector<Element>& subset);

/// Smallest completion of a closed assignment: its ones.
Relation minimal_completion(const ClosedPartial& xhat);

}  // namespace preorder
