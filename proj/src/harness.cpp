#include "gubin/harness.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gubin/rng.hpp"

namespace gubin {

void GenConfig::validate() const {
  if (n_vars < 1 || n_clauses < 1 || max_width < 1 || max_width > n_vars)
    throw std::invalid_argument("GenConfig needs n_vars >= 1, n_clauses >= 1, "
                                "1 <= max_width <= n_vars");
}

namespace {

Clause random_clause(Rng &rng, std::uint32_t n_vars, std::uint32_t width) {
  std::vector<std::uint32_t> pool(n_vars);
  std::iota(pool.begin(), pool.end(), 1U);
  std::vector<Literal> lits;
  lits.reserve(width);
  // Partial Fisher-Yates: the first `width` slots become the sample.
  for (std::uint32_t k = 0; k < width; ++k) {
    const auto pick = k + static_cast<std::uint32_t>(rng.below(n_vars - k));
    std::swap(pool[k], pool[pick]);
    lits.push_back(Literal{VarId(pool[k]), rng.coin()});
  }
  return Clause(std::move(lits));
}

std::vector<int> sorted_literals(const Clause &c) {
  std::vector<int> s;
  for (const Literal &l : c.literals())
    s.push_back(l.to_dimacs());
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace

Formula random_formula(const GenConfig &cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  std::vector<Clause> clauses;
  std::set<std::vector<int>> seen;
  clauses.reserve(cfg.n_clauses);
  for (std::size_t k = 0; k < cfg.n_clauses; ++k) {
    for (int attempt = 0;; ++attempt) {
      const auto width = 1 + static_cast<std::uint32_t>(rng.below(cfg.max_width));
      Clause c = random_clause(rng, cfg.n_vars, width);
      if (cfg.allow_duplicate_clauses || seen.insert(sorted_literals(c)).second) {
        clauses.push_back(std::move(c));
        break;
      }
      if (attempt == 1000)
        throw std::invalid_argument("cannot draw enough distinct clauses");
    }
  }
  return Formula(std::move(clauses), cfg.n_vars);
}

Formula planted_formula(std::uint32_t n_vars, std::size_t n_clauses, std::uint32_t width,
                        std::uint64_t seed) {
  if (width < 1 || width > n_vars)
    throw std::invalid_argument("planted_formula needs 1 <= width <= n_vars");
  Rng rng(seed);
  std::vector<bool> planted(n_vars + 1);
  for (std::uint32_t v = 1; v <= n_vars; ++v)
    planted[v] = rng.coin();

  std::vector<Clause> clauses;
  clauses.reserve(n_clauses);
  while (clauses.size() < n_clauses) {
    Clause c = random_clause(rng, n_vars, width);
    const bool satisfied = std::any_of(c.literals().begin(), c.literals().end(),
                                       [&](const Literal &l) {
                                         return planted[l.var.value()] != l.negated;
                                       });
    if (satisfied)
      clauses.push_back(std::move(c));
  }
  return Formula(std::move(clauses), n_vars);
}

Formula known_bad_family(std::uint32_t var_offset) {
  const int a = static_cast<int>(var_offset) + 1;
  return Formula::from_dimacs({{a, a + 1, a + 2}, {-a}, {-(a + 1)}, {-(a + 2)}});
}

std::optional<Mismatch> diff_check(const Formula &f, const DiffOptions &opts) {
  const OracleVerdict oracle = decide(f, opts.oracle, opts.cap);
  RunResult result = run(f, opts.mode);
  const bool gubin_sat = result.verdict() == GubinVerdict::Sat;
  if (gubin_sat == oracle.sat)
    return std::nullopt;
  Mismatch mm;
  mm.formula = f;
  mm.gubin_verdict = result.verdict();
  mm.oracle_sat = oracle.sat;
  mm.trace = std::move(result.trace);
  return mm;
}

MineReport mine(const GenConfig &cfg, std::size_t count, const DiffOptions &opts) {
  cfg.validate();
  struct Slot {
    std::optional<Mismatch> mismatch;
    bool mode_divergence = false;
    bool bottom_right_divergence = false;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(count);

  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    Slot &slot = slots[static_cast<std::size_t>(k)];
    try {
      GenConfig c = cfg;
      c.seed = cfg.seed + static_cast<std::uint64_t>(k);
      const Formula f = random_formula(c);
      slot.mismatch = diff_check(f, opts);
      if (slot.mismatch) {
        slot.mismatch->seed = c.seed;
        slot.mismatch->provenance = "random n=" + std::to_string(c.n_vars) +
                                    " m=" + std::to_string(c.n_clauses) +
                                    " k=" + std::to_string(c.max_width) +
                                    " seed=" + std::to_string(c.seed);
      }
      const RunResult early = run(f, RunMode::EarlyExit);
      const RunResult full = run(f, RunMode::Full);
      slot.mode_divergence = early.verdict() != full.verdict();
      slot.bottom_right_divergence =
          full.verdict() == GubinVerdict::Unsat && !full.trace.bottom_right_zero;
    } catch (...) {
      slot.error = std::current_exception();
    }
  }

  MineReport report;
  report.tested = count;
  for (Slot &slot : slots) {
    if (slot.error)
      std::rethrow_exception(slot.error);
    report.mode_divergences += slot.mode_divergence ? 1 : 0;
    report.bottom_right_divergences += slot.bottom_right_divergence ? 1 : 0;
    if (slot.mismatch) {
      if (slot.mismatch->gubin_verdict == GubinVerdict::Unsat)
        ++report.soundness_violations;
      report.mismatches.push_back(std::move(*slot.mismatch));
    }
  }
  return report;
}

Formula minimize(const Mismatch &mm, const DiffOptions &opts) {
  auto still_mismatch = [&](const std::vector<Clause> &clauses) {
    return diff_check(Formula(clauses), opts).has_value();
  };

  std::vector<Clause> current(mm.formula.clauses().begin(), mm.formula.clauses().end());
  if (!still_mismatch(current))
    throw std::invalid_argument("minimize: input is not a mismatch");

  bool changed = true;
  while (changed) {
    changed = false;

    for (std::size_t i = 0; i < current.size();) {
      std::vector<Clause> candidate = current;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
      if (still_mismatch(candidate)) {
        current = std::move(candidate);
        changed = true;
      } else {
        ++i;
      }
    }

    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t l = 0; l < current[i].literals().size();) {
        auto lits = current[i].literals();
        if (lits.size() == 1)
          break;
        std::vector<Literal> fewer(lits.begin(), lits.end());
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(l));
        std::vector<Clause> candidate = current;
        candidate[i] = Clause(std::move(fewer));
        if (still_mismatch(candidate)) {
          current = std::move(candidate);
          changed = true;
        } else {
          ++l;
        }
      }
    }
  }
  return Formula(std::move(current));
}

PermutationStats permutation_experiment(const Formula &f, const PermutationStrategy &strategy,
                                        const DiffOptions &opts) {
  const std::size_t m = f.size();
  if (strategy.kind == PermutationStrategy::Kind::All && m > kMaxExhaustivePermutationClauses)
    throw std::invalid_argument("exhaustive permutation experiment limited to " +
                                std::to_string(kMaxExhaustivePermutationClauses) + " clauses");

  PermutationStats stats;
  stats.oracle_sat = decide(f, opts.oracle, opts.cap).sat;

  auto record = [&](std::vector<std::size_t> order) {
    OrderingResult r;
    r.verdict = run(f.reordered(order), opts.mode).verdict();
    r.correct = (r.verdict == GubinVerdict::Sat) == stats.oracle_sat;
    r.order = std::move(order);
    stats.gubin_correct += r.correct ? 1 : 0;
    stats.orderings.push_back(std::move(r));
  };

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (strategy.kind == PermutationStrategy::Kind::All) {
    do {
      record(order);
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    Rng rng(strategy.seed);
    for (std::size_t s = 0; s < strategy.samples; ++s) {
      std::vector<std::size_t> shuffled = order;
      rng.shuffle(std::span<std::size_t>(shuffled));
      record(std::move(shuffled));
    }
  }

  stats.orderings_tested = stats.orderings.size();
  stats.gubin_correct_fraction =
      stats.orderings_tested == 0
          ? 1.0
          : static_cast<double>(stats.gubin_correct) / static_cast<double>(stats.orderings_tested);
  return stats;
}

std::vector<ProbeRow> complexity_probe(const std::function<Formula(std::size_t)> &family,
                                       const std::vector<std::size_t> &sizes) {
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
    throw std::invalid_argument("complexity_probe sizes must be strictly increasing");
  std::vector<ProbeRow> rows;
  rows.reserve(sizes.size());
  for (std::size_t m : sizes)
    rows.push_back({m, run(family(m), RunMode::Full).trace.counters});
  return rows;
}

} // namespace gubin
