#include "preorder/partial.hpp"

#include <stdexcept>
#include <string>

namespace preorder {

namespace {

void check_pair(std::size_t n, Element p, Element q) {
  if (p >= n || q >= n) throw std::out_of_range("pair index out of range");
  if (p == q) throw std::invalid_argument("diagonal pair " + std::to_string(p));
}

}  // namespace

PartialAssignment::PartialAssignment(BitMatrix ones, BitMatrix zeros)
    : ones_(std::move(ones)), zeros_(std::move(zeros)) {
  if (ones_.size() != zeros_.size()) throw std::invalid_argument("PartialAssignment: size mismatch");
  if (ones_.intersects(zeros_)) throw std::invalid_argument("PartialAssignment: pair fixed to both values");
  for (std::size_t p = 0; p < ones_.size(); ++p) {
    if (ones_.get(p, p) || zeros_.get(p, p)) throw std::invalid_argument("PartialAssignment: diagonal pair");
  }
}

PairState PartialAssignment::state(Element p, Element q) const {
  if (is_one(p, q)) return PairState::One;
  if (is_zero(p, q)) return PairState::Zero;
  return PairState::Undecided;
}

void PartialAssignment::fix(Element p, Element q, bool v) {
  check_pair(size(), p, q);
  ones_.assign(p, q, v);
  zeros_.assign(p, q, !v);
}

void PartialAssignment::unfix(Element p, Element q) {
  check_pair(size(), p, q);
  ones_.reset(p, q);
  zeros_.reset(p, q);
}

bool is_consistent(const PartialAssignment& x) {
  BitMatrix reach = x.ones();
  close_transitively(reach);
  return !reach.intersects(x.zeros());
}

ClosedPartial close(const PartialAssignment& x) {
  const std::size_t n = x.size();
  BitMatrix reach = x.ones();
  close_transitively(reach);
  if (reach.intersects(x.zeros())) {
    throw InconsistencyError("partial assignment has no transitive completion");
  }
  BitMatrix ones = reach;
  ones.clear_diagonal();

  reach.set_diagonal();
  const BitMatrix back = reach.transposed();
  // from[p] = union of zero rows Z[p'] over p' ->* p
  BitMatrix from(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto row = back.row(p);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (BitMatrix::Word bits = row[w]; bits != 0; bits &= bits - 1) {
        const std::size_t src = w * BitMatrix::kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits));
        from.or_row(p, x.zeros(), src);
      }
    }
  }
  // zeros[p] = union of back[q'] over q' in from[p]
  BitMatrix zeros(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto row = from.row(p);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (BitMatrix::Word bits = row[w]; bits != 0; bits &= bits - 1) {
        const std::size_t dst = w * BitMatrix::kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits));
        zeros.or_row(p, back, dst);
      }
    }
  }

  zeros.clear_diagonal();
  return ClosedPartial(PartialAssignment(std::move(ones), std::move(zeros)));
}

void ClosedPartial::decide(Pair pq, bool v) {
  const std::size_t n = size();
  check_pair(n, pq.p, pq.q);
  if (is_decided(pq.p, pq.q)) throw std::invalid_argument("ClosedPartial::decide: pair already decided");
  BitMatrix ones = x_.ones();
  BitMatrix zeros = x_.zeros();
  // into_p = {a : a ->* p}, from_q = {b : q ->* b}, reflexive
  BitMatrix aux(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (a == pq.p || ones.get(a, pq.p)) aux.set(0, a);
  }
  if (n > 1) {
    aux.or_row(1, ones, pq.q);
    aux.set(1, pq.q);
  }
  if (v) {
    // new ones: into_p x from_q; new zeros: from_q x Z[p] and {a : Z[a][q]} x into_p
    const BitMatrix before = zeros;
    for (std::size_t a = 0; a < n; ++a) {
      if (aux.get(0, a)) ones.or_row(a, aux, 1);
      if (aux.get(1, a)) zeros.or_row(a, before, pq.p);
      if (before.get(a, pq.q)) zeros.or_row(a, aux, 0);
    }
  } else {
    // new zeros: {a : p ->* a} x {b : b ->* q}
    BitMatrix col(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (b == pq.q || ones.get(b, pq.q)) col.set(0, b);
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (a == pq.p || ones.get(pq.p, a)) zeros.or_row(a, col, 0);
    }
  }
  ones.clear_diagonal();
  zeros.clear_diagonal();
  x_ = PartialAssignment(std::move(ones), std::move(zeros));
}

std::optional<ClosedPartial> close_with(const ClosedPartial& xhat, Pair pq, bool v) {
  if (xhat.is_decided(pq.p, pq.q)) {
    if (xhat.is_one(pq.p, pq.q) == v) return xhat;
    return std::nullopt;
  }
  PartialAssignment x = xhat.assignment();
  x.fix(pq.p, pq.q, v);
  if (!is_consistent(x)) return std::nullopt;
  return close(x);
}

bool is_completion(const Relation& x, const PartialAssignment& xhat) {
  if (x.size() != xhat.size()) return false;
  if (!xhat.ones().subset_of(x.bits())) return false;
  if (x.bits().intersects(xhat.zeros())) return false;
  return x.is_transitive();
}

ClosedPartial restrict_partial(const ClosedPartial& xhat, const std::vector<Element>& subset) {
  PartialAssignment out(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      if (a == b) continue;
      const PairState s = xhat.state(subset[a], subset[b]);
      if (s != PairState::Undecided) out.fix(a, b, s == PairState::One);
    }
  }
  return close(out);
}

Relation minimal_completion(const ClosedPartial& xhat) { return Relation(xhat.ones()); }

}  // namespace preorder
