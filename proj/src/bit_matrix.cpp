#include "gubin/bit_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gubin {

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged bit matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] == '1')
        m.set(r, c);
      else if (rows[r][c] != '0')
        throw std::invalid_argument("bit matrix rows must be 0/1");
    }
  }
  return m;
}

bool BitMatrix::none() const {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::size_t BitMatrix::count() const {
  std::size_t n = 0;
  for (Word w : data_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto words = row_words(r);
    for (std::size_t w = 0; w < words.size(); ++w) {
      Word bits = words[w];
      while (bits != 0) {
        const auto c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        t.set(c, r);
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::with_rows_permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != rows_)
    throw std::invalid_argument("row permutation size mismatch");
  BitMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < rows_; ++k) {
    auto src = row_words(perm[k]);
    std::copy(src.begin(), src.end(), out.row_words(k).begin());
  }
  return out;
}

BitMatrix BitMatrix::with_cols_permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != cols_)
    throw std::invalid_argument("column permutation size mismatch");
  BitMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (test(r, perm[k]))
        out.set(r, k);
  return out;
}

std::vector<std::string> BitMatrix::to_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (test(r, c))
        out[r][c] = '1';
  return out;
}

} // namespace gubin
