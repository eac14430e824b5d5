#include "gubin/reduction.hpp"

#include <stdexcept>

namespace gubin {

Formula OneSatInstance::to_formula() const {
  std::vector<Clause> clauses;
  clauses.reserve(units.size());
  for (const Literal &l : units)
    clauses.emplace_back(std::vector<Literal>{l});
  return Formula(std::move(clauses), static_cast<std::uint32_t>(units.size()));
}

OneSatInstance emit_one_sat(const BitMatrix &m) {
  OneSatInstance inst;
  inst.units.reserve(m.rows() * m.cols());
  std::uint32_t k = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      inst.units.push_back(Literal{VarId(++k), !m.test(r, c)});
  return inst;
}

Assignment one_sat_satisfy(const OneSatInstance &inst) {
  Assignment a(static_cast<std::uint32_t>(inst.units.size()));
  for (const Literal &l : inst.units)
    a.set(l.var, !l.negated);
  return a;
}

BitMatrix decode_one_sat(const Assignment &a, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  std::uint32_t k = 0;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (a.at(VarId(++k)))
        m.set(r, c);
  return m;
}

ReductionReport reduction_refutation(const Formula &f) {
  if (f.size() < 2)
    throw std::invalid_argument("reduction needs at least two clauses");
  const std::size_t m = f.size();
  const RunResult result = run(f, RunMode::Full);

  ReductionReport report;
  report.gubin_verdict = result.verdict();
  report.oracle_sat = dpll(f).sat;
  report.bottom_right = result.final.at(m - 1, m);
  report.emitted = emit_one_sat(report.bottom_right);
  const Formula emitted = report.emitted.to_formula();
  report.one_sat_satisfiable = evaluate(emitted, one_sat_satisfy(report.emitted));
  report.reduction_sound =
      !(!report.oracle_sat && report.one_sat_satisfiable && report.bottom_right.any());
  return report;
}

} // namespace gubin
