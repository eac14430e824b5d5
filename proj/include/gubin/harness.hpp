#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gubin/cnf.hpp"
#include "gubin/engine.hpp"
#include "gubin/oracle.hpp"

namespace gubin {

struct GenConfig {
  std::uint32_t n_vars = 3;
  std::size_t n_clauses = 4;
  std::uint32_t max_width = 3;
  std::uint64_t seed = 0;
  bool allow_duplicate_clauses = true;

  /// Throws std::invalid_argument unless n_vars >= 1, n_clauses >= 1 and
  /// 1 <= max_width <= n_vars.
  void validate() const;
};

/// Each clause: width uniform in 1..max_width, distinct variables, uniform
/// polarity. Deterministic in the config.
Formula random_formula(const GenConfig &cfg);

/// Clauses over width `width` satisfied by a planted assignment drawn from
/// `seed`. planted_formula(n, m, w, s) is a prefix of planted_formula(n, m', w, s)
/// for m <= m', giving a nested satisfiable family.
Formula planted_formula(std::uint32_t n_vars, std::size_t n_clauses, std::uint32_t width,
                        std::uint64_t seed);

/// (x1+o | x2+o | x3+o) & ~x1+o & ~x2+o & ~x3+o, the 3-clause first.
Formula known_bad_family(std::uint32_t var_offset);

struct DiffOptions {
  RunMode mode = RunMode::EarlyExit;
  OracleMethod oracle = OracleMethod::BruteForce;
  std::size_t cap = kDefaultBruteForceCap;
};

struct Mismatch {
  Formula formula;
  GubinVerdict gubin_verdict = GubinVerdict::Sat;
  bool oracle_sat = false;
  DepletionTrace trace;
  std::uint64_t seed = 0;
  std::string provenance;
};

/// Engine vs oracle. Oracle cap errors propagate.
std::optional<Mismatch> diff_check(const Formula &f, const DiffOptions &opts = {});

struct MineReport {
  std::size_t tested = 0;
  std::vector<Mismatch> mismatches;
  /// Mismatches shaped (UNSAT, SAT); any nonzero value is an engine bug.
  std::size_t soundness_violations = 0;
  /// EarlyExit and Full verdicts differ.
  std::size_t mode_divergences = 0;
  /// UNSAT verdict while C(m-1,m) stayed nonzero after every round.
  std::size_t bottom_right_divergences = 0;
};

/// Candidate k uses seed cfg.seed + k. Candidates may be checked in parallel;
/// results are reported in seed order.
MineReport mine(const GenConfig &cfg, std::size_t count, const DiffOptions &opts = {});

/// Greedy delta debugging: drop clauses, then literals, lowest index first,
/// repeating until neither pass changes anything. Throws std::invalid_argument
/// if the input is not a mismatch.
Formula minimize(const Mismatch &mm, const DiffOptions &opts = {});

struct PermutationStrategy {
  enum class Kind { All, Sample };
  Kind kind = Kind::All;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static PermutationStrategy all() { return {}; }
  static PermutationStrategy sample(std::size_t n, std::uint64_t seed) {
    return {Kind::Sample, n, seed};
  }
};

inline constexpr std::size_t kMaxExhaustivePermutationClauses = 8;

struct OrderingResult {
  std::vector<std::size_t> order; // 0-based source clause indices
  GubinVerdict verdict = GubinVerdict::Sat;
  bool correct = false;
};

struct PermutationStats {
  bool oracle_sat = false;
  std::size_t orderings_tested = 0;
  std::size_t gubin_correct = 0;
  double gubin_correct_fraction = 0.0;
  std::vector<OrderingResult> orderings;
};

/// All: every ordering in lexicographic order (at most 8 clauses).
/// Sample: `samples` independent uniform shuffles.
PermutationStats permutation_experiment(const Formula &f, const PermutationStrategy &strategy,
                                        const DiffOptions &opts = {});

struct ProbeRow {
  std::size_t m = 0;
  Counters counters;
};

/// Runs the engine in Full mode on family(m) for each m in increasing `sizes`.
std::vector<ProbeRow> complexity_probe(const std::function<Formula(std::size_t)> &family,
                                       const std::vector<std::size_t> &sizes);

} // namespace gubin
