#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gubin {

/// Dense bit matrix stored as packed 64-bit row words. Indices are 0-based.
class BitMatrix {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + kWordBits - 1) / kWordBits),
        data_(rows * words_per_row_, 0) {}

  /// Each string is one row of '0'/'1' characters; all rows equal length.
  static BitMatrix from_rows(const std::vector<std::string> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool test(std::size_t r, std::size_t c) const {
    return ((data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1U) != 0;
  }
  void set(std::size_t r, std::size_t c) {
    data_[r * words_per_row_ + c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  void reset(std::size_t r, std::size_t c) {
    data_[r * words_per_row_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }

  std::span<const Word> row_words(std::size_t r) const {
    return {data_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<Word> row_words(std::size_t r) {
    return {data_.data() + r * words_per_row_, words_per_row_};
  }

  bool none() const;
  bool any() const { return !none(); }
  std::size_t count() const;

  BitMatrix transposed() const;
  /// Copy with rows reordered: row k of the result is row `perm[k]` here.
  BitMatrix with_rows_permuted(std::span<const std::size_t> perm) const;
  BitMatrix with_cols_permuted(std::span<const std::size_t> perm) const;

  std::vector<std::string> to_rows() const;

  friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> data_;
};

/// True iff the two equal-length word spans share a set bit.
inline bool intersects(std::span<const BitMatrix::Word> a,
                       std::span<const BitMatrix::Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & b[i]) != 0)
      return true;
  return false;
}

} // namespace gubin
