#include "preorder/bit_matrix.hpp"

#include <bit>

#include "preorder/types.hpp"

namespace preorder {

ElementSet::ElementSet(std::size_t n, const std::vector<Element>& members) : in_(n, false) {
  for (Element e : members) {
    if (e >= n) {
      throw std::out_of_range("ElementSet: element " + std::to_string(e) + " out of range");
    }
    in_[e] = true;
  }
}

ElementSet ElementSet::all(std::size_t n) {
  ElementSet s(n);
  s.in_.assign(n, true);
  return s;
}

std::size_t ElementSet::size() const {
  std::size_t k = 0;
  for (bool b : in_) k += b ? 1 : 0;
  return k;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  for (std::size_t e = 0; e < in_.size(); ++e) {
    if (in_[e]) out.push_back(e);
  }
  return out;
}

BitMatrix::BitMatrix(std::size_t n)
    : n_(n), words_((n + kWordBits - 1) / kWordBits), data_(n * words_, 0) {}

void BitMatrix::or_row(std::size_t dst, const BitMatrix& other, std::size_t src) {
  Word* d = data_.data() + dst * words_;
  const Word* s = other.data_.data() + src * words_;
  for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
}

bool BitMatrix::rows_intersect(std::size_t r, const BitMatrix& other, std::size_t s) const {
  const Word* a = data_.data() + r * words_;
  const Word* b = other.data_.data() + s * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

bool BitMatrix::row_empty(std::size_t r) const {
  for (Word w : row(r)) {
    if (w) return false;
  }
  return true;
}

void BitMatrix::clear_diagonal() {
  for (std::size_t i = 0; i < n_; ++i) reset(i, i);
}

void BitMatrix::set_diagonal() {
  for (std::size_t i = 0; i < n_; ++i) set(i, i);
}

std::size_t BitMatrix::count() const {
  std::size_t c = 0;
  for (Word w : data_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitMatrix::any() const {
  for (Word w : data_) {
    if (w) return true;
  }
  return false;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = data_[r * words_ + w];
      while (bits) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        t.set(w * kWordBits + b, r);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

bool BitMatrix::intersects(const BitMatrix& other) const {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] & other.data_[i]) return true;
  }
  return false;
}

BitMatrix& BitMatrix::operator|=(const BitMatrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] |= other.data_[i];
  return *this;
}

BitMatrix& BitMatrix::operator&=(const BitMatrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] &= other.data_[i];
  return *this;
}

BitMatrix& BitMatrix::subtract(const BitMatrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] &= ~other.data_[i];
  return *this;
}

bool BitMatrix::subset_of(const BitMatrix& other) const {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] & ~other.data_[i]) return false;
  }
  return true;
}

void close_transitively(BitMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < n; ++p) {
      if (p != k && m.get(p, k)) m.or_row(p, m, k);
    }
  }
}

}  // namespace preorder
