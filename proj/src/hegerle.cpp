#include "gubin/hegerle.hpp"

#include <algorithm>
#include <set>

namespace gubin {

namespace {

using LiteralSet = std::vector<int>;

// Sorted distinct DIMACS literals; nullopt for tautologies.
std::optional<LiteralSet> literal_set(const Clause &c) {
  LiteralSet s;
  for (const Literal &l : c.literals())
    s.push_back(l.to_dimacs());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() != c.width())
    return std::nullopt;
  return s;
}

std::set<LiteralSet> clause_sets(const Formula &f) {
  std::set<LiteralSet> out;
  for (const Clause &c : f.clauses())
    if (auto s = literal_set(c))
      out.insert(std::move(*s));
  return out;
}

bool full_cube(const std::set<LiteralSet> &clauses, const std::vector<VarId> &vars) {
  const std::size_t k = vars.size();
  for (std::size_t signs = 0; signs < (std::size_t{1} << k); ++signs) {
    LiteralSet s;
    for (std::size_t pos = 0; pos < k; ++pos) {
      const int v = static_cast<int>(vars[pos].value());
      s.push_back(((signs >> pos) & 1U) != 0 ? -v : v);
    }
    std::sort(s.begin(), s.end());
    if (!clauses.contains(s))
      return false;
  }
  return true;
}

std::optional<std::vector<VarId>> find_cube(const std::set<LiteralSet> &clauses, std::size_t k) {
  std::set<std::vector<VarId>> candidates;
  for (const LiteralSet &s : clauses) {
    if (s.size() != k)
      continue;
    std::vector<VarId> vars;
    for (int lit : s)
      vars.emplace_back(static_cast<std::uint32_t>(std::abs(lit)));
    std::sort(vars.begin(), vars.end());
    candidates.insert(std::move(vars));
  }
  for (const auto &vars : candidates)
    if (full_cube(clauses, vars))
      return vars;
  return std::nullopt;
}

} // namespace

bool has_full_cube(const Formula &f, const std::vector<VarId> &vars) {
  return full_cube(clause_sets(f), vars);
}

PatternReport detect_patterns(const Formula &f) {
  const auto clauses = clause_sets(f);
  PatternReport report;
  if (auto unit = find_cube(clauses, 1))
    report.pattern1 = unit->front();
  report.pattern2 = find_cube(clauses, 2);
  report.pattern3 = find_cube(clauses, 3);
  return report;
}

ClaimCheck check_hegerle_claim(const Formula &f) {
  ClaimCheck check;
  check.gubin_verdict = run(f).verdict();
  check.any_pattern = detect_patterns(f).any_pattern();
  check.consistent_with_claim = (check.gubin_verdict == GubinVerdict::Unsat) == check.any_pattern;
  return check;
}

} // namespace gubin
