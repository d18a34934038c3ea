#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace preorder {

/// Square 0/1 matrix stored row-wise in 64-bit words.
///
/// Rows are padded to whole words and padding bits are kept at zero, so
/// row-level operations (or, and-not, popcount) can work on raw words.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c) {
    data_[r * words_ + c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  void reset(std::size_t r, std::size_t c) {
    data_[r * words_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }
  void assign(std::size_t r, std::size_t c, bool v) {
    if (v) {
      set(r, c);
    } else {
      reset(r, c);
    }
  }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
  std::span<const Word> row(std::size_t r) const {
    return {data_.data() + r * words_, words_};
  }

  /// row(dst) |= other.row(src)
  void or_row(std::size_t dst, const BitMatrix& other, std::size_t src);
  /// true iff row r of this and row s of other share a set bit
  bool rows_intersect(std::size_t r, const BitMatrix& other, std::size_t s) const;
  bool row_empty(std::size_t r) const;

  void clear_diagonal();
  void set_diagonal();
  std::size_t count() const;
  bool any() const;

  BitMatrix transposed() const;
  bool intersects(const BitMatrix& other) const;
  BitMatrix& operator|=(const BitMatrix& other);
  BitMatrix& operator&=(const BitMatrix& other);
  /// this &= ~other
  BitMatrix& subtract(const BitMatrix& other);
  /// true iff every set bit of this is set in other
  bool subset_of(const BitMatrix& other) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> data_;
};

/// Warshall-style closure by row-OR; diagonal bits are left as produced.
void close_transitively(BitMatrix& m);

}  // namespace preorder
