#include <bit>
#include <stdexcept>
#include <string>

#include "gubin/engine.hpp"

namespace gubin {

namespace {

void check_round(const TriangularArray &t, std::size_t r) {
  const std::size_t m = t.clause_count();
  if (r < 1 || r + 2 > m)
    throw std::out_of_range("depletion round " + std::to_string(r) + " outside 1.." +
                            (m >= 2 ? std::to_string(m - 2) : std::string("0")));
}

struct PairWork {
  std::size_t p;
  std::size_t q;
  std::vector<Elimination> eliminated;
  Counters counters;
};

} // namespace

DepletionRound deplete_round_reference(TriangularArray &t, std::size_t r) {
  check_round(t, r);
  const std::size_t m = t.clause_count();
  DepletionRound out;
  out.depleting_clause = r;

  for (std::size_t p = r + 1; p <= m; ++p) {
    for (std::size_t q = p + 1; q <= m; ++q) {
      const BitMatrix &left = t.at(r, p);
      const BitMatrix &right = t.at(r, q);
      BitMatrix &target = t.at(p, q);
      ++out.counters.matrices_depleted;
      for (std::size_t a = 0; a < target.rows(); ++a) {
        for (std::size_t b = 0; b < target.cols(); ++b) {
          if (!target.test(a, b))
            continue;
          ++out.counters.column_pair_tests;
          bool common_row = false;
          for (std::size_t x = 0; x < left.rows() && !common_row; ++x)
            common_row = left.test(x, a) && right.test(x, b);
          if (!common_row) {
            target.reset(a, b);
            ++out.counters.entry_eliminations;
            out.eliminated.push_back({static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q),
                                      static_cast<std::uint32_t>(a + 1),
                                      static_cast<std::uint32_t>(b + 1)});
          }
        }
      }
    }
  }
  return out;
}

DepletionRound deplete_round(TriangularArray &t, std::size_t r) {
  check_round(t, r);
  const std::size_t m = t.clause_count();

  // Column a of C(r,p) becomes row a of the transpose: a bitset over c_r's rows.
  std::vector<BitMatrix> columns(m + 1);
  for (std::size_t p = r + 1; p <= m; ++p)
    columns[p] = t.at(r, p).transposed();

  std::vector<PairWork> work;
  for (std::size_t p = r + 1; p <= m; ++p)
    for (std::size_t q = p + 1; q <= m; ++q)
      work.push_back({p, q, {}, {}});

  const auto n = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic) if (n >= 16)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    PairWork &w = work[static_cast<std::size_t>(k)];
    const BitMatrix &left = columns[w.p];
    const BitMatrix &right = columns[w.q];
    BitMatrix &target = t.at(w.p, w.q);
    w.counters.matrices_depleted = 1;
    for (std::size_t a = 0; a < target.rows(); ++a) {
      auto row = target.row_words(a);
      for (std::size_t wi = 0; wi < row.size(); ++wi) {
        BitMatrix::Word bits = row[wi];
        while (bits != 0) {
          const std::size_t b =
              wi * BitMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          ++w.counters.column_pair_tests;
          if (!intersects(left.row_words(a), right.row_words(b))) {
            row[wi] &= ~(BitMatrix::Word{1} << (b % BitMatrix::kWordBits));
            ++w.counters.entry_eliminations;
            w.eliminated.push_back({static_cast<std::uint32_t>(w.p),
                                    static_cast<std::uint32_t>(w.q),
                                    static_cast<std::uint32_t>(a + 1),
                                    static_cast<std::uint32_t>(b + 1)});
          }
        }
      }
    }
  }

  DepletionRound out;
  out.depleting_clause = r;
  for (PairWork &w : work) {
    out.counters += w.counters;
    out.eliminated.insert(out.eliminated.end(), w.eliminated.begin(), w.eliminated.end());
  }
  return out;
}

} // namespace gubin
