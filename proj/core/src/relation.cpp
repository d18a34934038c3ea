#include "preorder/relation.hpp"

#include <stdexcept>
#include <string>

namespace preorder {

Relation::Relation(BitMatrix bits) : bits_(std::move(bits)) { bits_.clear_diagonal(); }

Relation::Relation(std::size_t n, const std::vector<Pair>& arcs) : bits_(n) {
  for (const Pair& a : arcs) {
    if (a.p >= n || a.q >= n) throw std::out_of_range("Relation: arc index out of range");
    if (a.p == a.q) throw std::invalid_argument("Relation: diagonal arc");
    bits_.set(a.p, a.q);
  }
}

Relation Relation::complete(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q) m.set(p, q);
    }
  }
  return Relation(std::move(m));
}

void Relation::set(Element p, Element q, bool v) {
  if (p == q) throw std::invalid_argument("Relation::set: diagonal pair");
  bits_.assign(p, q, v);
}

std::vector<Pair> Relation::arcs() const {
  std::vector<Pair> out;
  for (std::size_t p = 0; p < size(); ++p) {
    for (std::size_t q = 0; q < size(); ++q) {
      if (get(p, q)) out.push_back({p, q});
    }
  }
  return out;
}

bool Relation::is_transitive() const {
  const std::size_t n = size();
  // Row p must contain the rows of all its successors (ignoring p itself).
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!get(p, q)) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (r != p && get(q, r) && !get(p, r)) return false;
      }
    }
  }
  return true;
}

std::vector<Pair> transitive_closure(const std::vector<Pair>& arcs, std::size_t n) {
  for (const Pair& a : arcs) {
    if (a.p >= n || a.q >= n) {
      throw std::out_of_range("transitive_closure: index out of range (n=" + std::to_string(n) +
                              ")");
    }
  }
  return transitive_closure(Relation(n, arcs)).arcs();
}

Relation transitive_closure(const Relation& rel) {
  BitMatrix m = rel.bits();
  close_transitively(m);
  return Relation(std::move(m));
}

}  // namespace preorder
