#include <gtest/gtest.h>

#include "gubin/fixtures.hpp"
#include "gubin/harness.hpp"
#include "gubin/hegerle.hpp"
#include "gubin/oracle.hpp"

using namespace gubin;

TEST(DetectPatterns, ComplementaryUnits) {
  const PatternReport r = detect_patterns(Formula::from_dimacs({{2, 3}, {1}, {-1}}));
  ASSERT_TRUE(r.pattern1);
  EXPECT_EQ(r.pattern1->value(), 1U);
  EXPECT_FALSE(r.pattern2);
  EXPECT_TRUE(r.any_pattern());
}

TEST(DetectPatterns, TwoVariableCube) {
  const PatternReport r = detect_patterns(two_variable_cube());
  ASSERT_TRUE(r.pattern2);
  EXPECT_EQ(*r.pattern2, (std::vector<VarId>{VarId(1), VarId(2)}));
  EXPECT_FALSE(r.pattern1);
  EXPECT_FALSE(r.pattern3);
}

TEST(DetectPatterns, KnownBadHasNone) {
  EXPECT_FALSE(detect_patterns(known_bad_family(0)).any_pattern());
}

TEST(DetectPatterns, ThreeVariableCubeIgnoresLiteralOrder) {
  std::vector<Clause> clauses;
  for (int s = 0; s < 8; ++s) {
    const int a = (s & 1) ? -4 : 4, b = (s & 2) ? -2 : 2, c = (s & 4) ? -7 : 7;
    clauses.push_back(s % 2 ? Clause{c, a, b} : Clause{a, b, c});
  }
  const PatternReport r = detect_patterns(Formula(clauses));
  ASSERT_TRUE(r.pattern3);
  EXPECT_EQ(*r.pattern3, (std::vector<VarId>{VarId(2), VarId(4), VarId(7)}));
  clauses.pop_back();
  EXPECT_FALSE(detect_patterns(Formula(clauses)).pattern3);
}

TEST(DetectPatterns, ExtraVariablesDoNotMatch) {
  // Each 2-clause carries a third variable, and one unit is a duplicate literal clause.
  const Formula f = Formula::from_dimacs({{1, 2, 3}, {1, -2, 3}, {-1, 2, 3}, {-1, -2, 3}, {4, 4}});
  const PatternReport r = detect_patterns(f);
  EXPECT_FALSE(r.pattern2);
  EXPECT_FALSE(r.pattern1);
  // Duplicate literals collapse: (4|4) is the unit {4}.
  EXPECT_TRUE(detect_patterns(f.with_clause(Clause{-4})).pattern1);
  // A tautology is not a unit.
  EXPECT_FALSE(detect_patterns(Formula::from_dimacs({{5, -5}, {-5}})).pattern1);
}

TEST(DetectPatterns, WitnessesSoundAndForceUnsat) {
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const GenConfig cfg{3, 4 + seed % 12, 3, seed, true};
    const Formula f = random_formula(cfg);
    const PatternReport r = detect_patterns(f);
    if (r.pattern1)
      EXPECT_TRUE(has_full_cube(f, {*r.pattern1}));
    if (r.pattern2)
      EXPECT_TRUE(has_full_cube(f, *r.pattern2));
    if (r.pattern3)
      EXPECT_TRUE(has_full_cube(f, *r.pattern3));
    if (r.any_pattern())
      EXPECT_FALSE(brute_force(f).sat) << "seed " << seed;
  }
}

TEST(HegerleClaim, UnitChainRefutes) {
  const Formula f = unit_chain();
  const ClaimCheck c = check_hegerle_claim(f);
  EXPECT_EQ(c.gubin_verdict, GubinVerdict::Unsat);
  EXPECT_FALSE(c.any_pattern);
  EXPECT_FALSE(c.consistent_with_claim);
  EXPECT_FALSE(brute_force(f).sat);
}

TEST(HegerleClaim, ConsistentCases) {
  const ClaimCheck cube = check_hegerle_claim(two_variable_cube());
  EXPECT_EQ(cube.gubin_verdict, GubinVerdict::Unsat);
  EXPECT_TRUE(cube.any_pattern);
  EXPECT_TRUE(cube.consistent_with_claim);

  const ClaimCheck unit = check_hegerle_claim(Formula::from_dimacs({{1}}));
  EXPECT_EQ(unit.gubin_verdict, GubinVerdict::Sat);
  EXPECT_FALSE(unit.any_pattern);
  EXPECT_TRUE(unit.consistent_with_claim);
}
