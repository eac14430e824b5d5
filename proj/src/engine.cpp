#include "gubin/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gubin {

const char *to_string(GubinVerdict v) { return v == GubinVerdict::Sat ? "SAT" : "UNSAT"; }

BitMatrix build_compatibility_matrix(const TruthTable &row_clause, const TruthTable &col_clause) {
  std::vector<std::pair<std::size_t, std::size_t>> shared;
  for (std::size_t p = 0; p < row_clause.width(); ++p)
    for (std::size_t q = 0; q < col_clause.width(); ++q)
      if (row_clause.vars()[p] == col_clause.vars()[q])
        shared.emplace_back(p, q);

  BitMatrix m(row_clause.row_count(), col_clause.row_count());
  for (std::size_t a = 0; a < row_clause.row_count(); ++a) {
    if (!row_clause.value(a))
      continue;
    for (std::size_t b = 0; b < col_clause.row_count(); ++b) {
      if (!col_clause.value(b))
        continue;
      const bool agree = std::all_of(shared.begin(), shared.end(), [&](auto pq) {
        return row_clause.bit(a, pq.first) == col_clause.bit(b, pq.second);
      });
      if (agree)
        m.set(a, b);
    }
  }
  return m;
}

TriangularArray::TriangularArray(std::size_t clause_count)
    : m_(clause_count), matrices_(clause_count < 2 ? 0 : clause_count * (clause_count - 1) / 2) {}

std::size_t TriangularArray::offset(std::size_t i, std::size_t j) const {
  if (i < 1 || i >= j || j > m_)
    throw std::out_of_range("no matrix C(" + std::to_string(i) + "," + std::to_string(j) + ")");
  // Rows 1..i-1 hold (m-1) + (m-2) + ... + (m-i+1) matrices.
  return (i - 1) * (2 * m_ - i) / 2 + (j - i - 1);
}

std::vector<MatrixIndex> TriangularArray::indices() const {
  std::vector<MatrixIndex> out;
  out.reserve(matrices_.size());
  for (std::size_t i = 1; i <= m_; ++i)
    for (std::size_t j = i + 1; j <= m_; ++j)
      out.push_back({i, j});
  return out;
}

TriangularArray build_triangle(const Formula &f) {
  std::vector<TruthTable> tables;
  tables.reserve(f.size());
  for (const Clause &c : f.clauses()) {
    if (c.width() > kMaxEngineClauseWidth)
      throw std::length_error("clause has " + std::to_string(c.width()) +
                              " variables; engine limit is " +
                              std::to_string(kMaxEngineClauseWidth));
    tables.emplace_back(c);
  }
  TriangularArray t(f.size());
  for (auto [i, j] : t.indices())
    t.at(i, j) = build_compatibility_matrix(tables[i - 1], tables[j - 1]);
  return t;
}

namespace {

std::optional<MatrixIndex> first_zero(const TriangularArray &t, std::size_t min_row) {
  for (auto idx : t.indices())
    if (idx.i >= min_row && t.at(idx.i, idx.j).none())
      return idx;
  return std::nullopt;
}

} // namespace

RunResult run_triangle(TriangularArray t, RunMode mode, Kernel kernel) {
  RunResult result;
  result.initial = t;
  DepletionTrace &trace = result.trace;
  const std::size_t m = t.clause_count();

  trace.first_zero_matrix = first_zero(t, 1);
  const bool stop_now = mode == RunMode::EarlyExit && trace.first_zero_matrix;
  for (std::size_t r = 1; !stop_now && r + 2 <= m; ++r) {
    DepletionRound round =
        kernel == Kernel::Parallel ? deplete_round(t, r) : deplete_round_reference(t, r);
    trace.counters += round.counters;
    trace.rounds.push_back(std::move(round));
    if (!trace.first_zero_matrix)
      trace.first_zero_matrix = first_zero(t, r + 1);
    if (mode == RunMode::EarlyExit && trace.first_zero_matrix)
      break;
  }

  trace.verdict = trace.first_zero_matrix ? GubinVerdict::Unsat : GubinVerdict::Sat;
  trace.bottom_right_zero = m >= 2 && t.at(m - 1, m).none();
  result.final = std::move(t);
  return result;
}

RunResult run(const Formula &f, RunMode mode, Kernel kernel) {
  return run_triangle(build_triangle(f), mode, kernel);
}

} // namespace gubin
