#pragma once

// Compatibility-matrix satisfiability procedure.
//
// For an ordered formula c_1..c_m the engine builds a matrix C(i,j) for every
// clause pair i < j. Entry (a,b) is set when row a of c_i's truth table and
// row b of c_j's truth table are both true and agree on every shared variable.
// Round r (r = 1..m-2) then depletes every C(p,q) with r < p < q: entry (a,b)
// is cleared when column a of C(r,p) and column b of C(r,q) have no set bit in
// a common row. The formula is declared unsatisfiable when some matrix is all
// zero. The procedure is sound for UNSAT but can report SAT for unsatisfiable
// formulas; the rest of the library exists to exhibit that.
//
// All clause numbers and matrix coordinates in the public types are 1-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gubin/bit_matrix.hpp"
#include "gubin/cnf.hpp"

namespace gubin {

enum class GubinVerdict { Sat, Unsat };
enum class RunMode { EarlyExit, Full };
/// Depletion kernel: OpenMP parallel over matrix pairs, or the serial
/// reference written directly from the definition.
enum class Kernel { Parallel, Reference };

const char *to_string(GubinVerdict v);

inline constexpr std::size_t kMaxEngineClauseWidth = 12;

struct MatrixIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const MatrixIndex &, const MatrixIndex &) = default;
};

/// Rows follow `row_clause`'s truth table, columns follow `col_clause`'s.
BitMatrix build_compatibility_matrix(const TruthTable &row_clause, const TruthTable &col_clause);

/// All C(i,j), 1 <= i < j <= m.
class TriangularArray {
public:
  TriangularArray() = default;
  explicit TriangularArray(std::size_t clause_count);

  std::size_t clause_count() const { return m_; }
  std::size_t matrix_count() const { return matrices_.size(); }

  BitMatrix &at(std::size_t i, std::size_t j) { return matrices_[offset(i, j)]; }
  const BitMatrix &at(std::size_t i, std::size_t j) const { return matrices_[offset(i, j)]; }

  /// Every index pair in row-major (i, then j) order.
  std::vector<MatrixIndex> indices() const;

  friend bool operator==(const TriangularArray &, const TriangularArray &) = default;

private:
  std::size_t offset(std::size_t i, std::size_t j) const;

  std::size_t m_ = 0;
  std::vector<BitMatrix> matrices_;
};

/// Throws std::length_error for clauses wider than kMaxEngineClauseWidth.
TriangularArray build_triangle(const Formula &f);

struct Elimination {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend auto operator<=>(const Elimination &, const Elimination &) = default;
};

struct Counters {
  /// Entries visited while nonzero, each costing one column-pair intersection.
  std::uint64_t column_pair_tests = 0;
  std::uint64_t entry_eliminations = 0;
  std::uint64_t matrices_depleted = 0;

  Counters &operator+=(const Counters &o) {
    column_pair_tests += o.column_pair_tests;
    entry_eliminations += o.entry_eliminations;
    matrices_depleted += o.matrices_depleted;
    return *this;
  }
  friend bool operator==(const Counters &, const Counters &) = default;
};

struct DepletionRound {
  std::size_t depleting_clause = 0;
  /// Sorted by (i, j, a, b).
  std::vector<Elimination> eliminated;
  Counters counters;
  friend bool operator==(const DepletionRound &, const DepletionRound &) = default;
};

/// Runs round `r` (1 <= r <= m-2) in place. Matrices in triangle rows <= r
/// are read but never written. Throws std::out_of_range for a bad `r`.
DepletionRound deplete_round(TriangularArray &t, std::size_t r);
DepletionRound deplete_round_reference(TriangularArray &t, std::size_t r);

struct DepletionTrace {
  std::vector<DepletionRound> rounds;
  std::optional<MatrixIndex> first_zero_matrix;
  GubinVerdict verdict = GubinVerdict::Sat;
  Counters counters;
  /// Whether C(m-1,m) is all zero when the run stops.
  bool bottom_right_zero = false;
  friend bool operator==(const DepletionTrace &, const DepletionTrace &) = default;
};

struct RunResult {
  TriangularArray initial;
  TriangularArray final;
  DepletionTrace trace;

  GubinVerdict verdict() const { return trace.verdict; }
};

/// Runs the full procedure. EarlyExit stops at the first all-zero matrix
/// (including one in the initial array); Full executes every round and then
/// reports UNSAT iff some matrix is all zero.
RunResult run(const Formula &f, RunMode mode = RunMode::EarlyExit,
              Kernel kernel = Kernel::Parallel);
/// Same, starting from a prebuilt triangle.
RunResult run_triangle(TriangularArray t, RunMode mode = RunMode::EarlyExit,
                       Kernel kernel = Kernel::Parallel);

inline const Counters &operation_counter(const RunResult &r) { return r.trace.counters; }

} // namespace gubin
