#pragma once

#include <optional>
#include <vector>

#include "gubin/cnf.hpp"
#include "gubin/engine.hpp"

namespace gubin {

/// Witnesses for the three clause-set shapes once conjectured to be exactly
/// the formulas the engine rejects:
///   1. units {x} and {~x};
///   2. all four 2-literal clauses over {x, y};
///   3. all eight 3-literal clauses over {x, y, z}.
/// A clause matches only when its literal set covers exactly those variables.
struct PatternReport {
  std::optional<VarId> pattern1;
  std::optional<std::vector<VarId>> pattern2;
  std::optional<std::vector<VarId>> pattern3;

  bool any_pattern() const { return pattern1 || pattern2 || pattern3; }
};

/// Reports the lexicographically smallest witness of each pattern.
PatternReport detect_patterns(const Formula &f);

/// True iff every sign combination over `vars` appears as a clause of `f`.
bool has_full_cube(const Formula &f, const std::vector<VarId> &vars);

struct ClaimCheck {
  GubinVerdict gubin_verdict = GubinVerdict::Sat;
  bool any_pattern = false;
  /// (engine says UNSAT) == any_pattern. False is a counterexample to the
  /// "if and only if" characterisation.
  bool consistent_with_claim = true;
};

ClaimCheck check_hegerle_claim(const Formula &f);

} // namespace gubin
