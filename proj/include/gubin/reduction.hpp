#pragma once

#include <vector>

#include "gubin/bit_matrix.hpp"
#include "gubin/cnf.hpp"
#include "gubin/engine.hpp"
#include "gubin/oracle.hpp"

namespace gubin {

/// Unit clauses over fresh variables b_1..b_n, one per matrix entry in
/// row-major order: (b_k) when entry k is 1, (~b_k) otherwise.
struct OneSatInstance {
  std::vector<Literal> units;

  Formula to_formula() const;
};

OneSatInstance emit_one_sat(const BitMatrix &m);

/// The forced assignment b_k = polarity of its only occurrence.
Assignment one_sat_satisfy(const OneSatInstance &inst);

/// Rebuilds the source matrix from a satisfying assignment of the emission.
BitMatrix decode_one_sat(const Assignment &a, std::size_t rows, std::size_t cols);

struct ReductionReport {
  GubinVerdict gubin_verdict = GubinVerdict::Sat;
  bool oracle_sat = false;
  BitMatrix bottom_right;
  OneSatInstance emitted;
  bool one_sat_satisfiable = true;
  /// False when the input is unsatisfiable but the emission from a nonzero
  /// bottom-right matrix is satisfiable.
  bool reduction_sound = true;
};

/// Runs every depletion round, emits from C(m-1,m) and compares with DPLL.
/// Requires at least two clauses.
ReductionReport reduction_refutation(const Formula &f);

} // namespace gubin
