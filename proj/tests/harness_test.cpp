#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gubin/corpus.hpp"
#include "gubin/dimacs.hpp"
#include "gubin/fixtures.hpp"
#include "gubin/harness.hpp"
#include "test_oracles.hpp"

using namespace gubin;

namespace {

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST(RandomFormula, GoldenSeed42) {
  const Formula f = random_formula({3, 4, 3, 42, true});
  EXPECT_EQ(serialize_dimacs(f), "p cnf 3 4\n-3 0\n3 0\n1 3 0\n-1 0\n");
  EXPECT_EQ(random_formula({3, 4, 3, 42, true}), f);
}

TEST(RandomFormula, OnlyShapeForSingleVariableUnits) {
  const Formula f = random_formula({1, 2, 1, 5, true});
  ASSERT_EQ(f.size(), 2U);
  for (const Clause &c : f.clauses()) {
    ASSERT_EQ(c.literals().size(), 1U);
    EXPECT_EQ(c.literals()[0].var.value(), 1U);
  }
}

TEST(RandomFormula, SeedsDiffer) {
  EXPECT_NE(random_formula({8, 10, 3, 1, true}), random_formula({8, 10, 3, 2, true}));
}

TEST(RandomFormula, ShapeInvariants) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GenConfig cfg{6, 9, 3, seed, false};
    const Formula f = random_formula(cfg);
    ASSERT_EQ(f.size(), 9U);
    std::set<std::vector<int>> seen;
    for (const Clause &c : f.clauses()) {
      EXPECT_GE(c.width(), 1U);
      EXPECT_LE(c.width(), 3U);
      EXPECT_EQ(c.width(), c.literals().size());
      std::vector<int> key;
      for (const Literal &l : c.literals())
        key.push_back(l.to_dimacs());
      std::sort(key.begin(), key.end());
      EXPECT_TRUE(seen.insert(key).second);
    }
  }
}

TEST(RandomFormula, InvalidConfig) {
  EXPECT_THROW(random_formula({0, 1, 1, 0, true}), std::invalid_argument);
  EXPECT_THROW(random_formula({2, 0, 1, 0, true}), std::invalid_argument);
  EXPECT_THROW(random_formula({2, 1, 3, 0, true}), std::invalid_argument);
  EXPECT_THROW(random_formula({1, 3, 1, 0, false}), std::invalid_argument);
}

TEST(PlantedFormula, NestedAndSatisfiable) {
  const Formula big = planted_formula(12, 30, 3, 4);
  const Formula small = planted_formula(12, 10, 3, 4);
  for (std::size_t k = 0; k < small.size(); ++k)
    EXPECT_EQ(small.clause(k), big.clause(k));
  EXPECT_TRUE(reference::enumerate_sat(big));
}

TEST(KnownBadFamily, OffsetZeroAndShifted) {
  EXPECT_EQ(known_bad_family(0), Formula::from_dimacs({{1, 2, 3}, {-1}, {-2}, {-3}}));
  for (std::uint32_t offset : {0U, 1U, 5U, 40U}) {
    const auto mm = diff_check(known_bad_family(offset), {RunMode::EarlyExit, OracleMethod::Dpll});
    ASSERT_TRUE(mm);
    EXPECT_EQ(mm->gubin_verdict, GubinVerdict::Sat);
    EXPECT_FALSE(mm->oracle_sat);
  }
  const std::size_t units_first[] = {1, 2, 3, 0};
  EXPECT_FALSE(diff_check(known_bad_family(0).reordered(units_first)));
}

TEST(DiffCheck, Examples) {
  const auto mm = diff_check(known_bad_family(0));
  ASSERT_TRUE(mm);
  EXPECT_EQ(mm->gubin_verdict, GubinVerdict::Sat);
  EXPECT_FALSE(mm->oracle_sat);
  EXPECT_EQ(mm->trace.rounds.size(), 2U);
  EXPECT_FALSE(diff_check(two_variable_cube()));
  EXPECT_FALSE(diff_check(sample_3sat()));
  EXPECT_THROW(diff_check(Formula::from_dimacs({{1}}, 30)), OracleCapError);
}

TEST(Mine, DeterministicAndOneSided) {
  const GenConfig cfg{5, 8, 3, 1000, true};
  const MineReport a = mine(cfg, 600);
  const MineReport b = mine(cfg, 600);
  ASSERT_EQ(a.mismatches.size(), b.mismatches.size());
  for (std::size_t k = 0; k < a.mismatches.size(); ++k) {
    EXPECT_EQ(a.mismatches[k].formula, b.mismatches[k].formula);
    EXPECT_EQ(a.mismatches[k].seed, b.mismatches[k].seed);
    EXPECT_EQ(a.mismatches[k].gubin_verdict, GubinVerdict::Sat);
    EXPECT_EQ(random_formula({5, 8, 3, a.mismatches[k].seed, true}), a.mismatches[k].formula);
  }
  EXPECT_EQ(a.soundness_violations, 0U);
  EXPECT_EQ(a.mode_divergences, 0U);
  EXPECT_EQ(a.tested, 600U);
}

TEST(Mine, NoMismatchesUpToThreeClauses) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const MineReport r = mine({4, m, 3, 77, true}, 500);
    EXPECT_TRUE(r.mismatches.empty()) << "m=" << m;
  }
}

TEST(Minimize, PaddedKnownBadShrinksBack) {
  const Formula padded = known_bad_family(0).with_clause(Clause{4, 5});
  const auto mm = diff_check(padded);
  ASSERT_TRUE(mm);
  const Formula min = minimize(*mm);
  EXPECT_EQ(min.size(), 4U);
  EXPECT_TRUE(reference::isomorphic(min, known_bad_family(0)));
  EXPECT_TRUE(diff_check(min));
}

TEST(Minimize, AlreadyMinimalUnchanged) {
  const Formula f = known_bad_family(0);
  for (std::size_t k = 0; k < f.size(); ++k)
    EXPECT_FALSE(diff_check(f.without_clause(k))) << "dropping clause " << k + 1;
  EXPECT_EQ(minimize(*diff_check(f)), f);
}

TEST(Minimize, RejectsNonMismatch) {
  Mismatch fake;
  fake.formula = two_variable_cube();
  EXPECT_THROW(minimize(fake), std::invalid_argument);
}

TEST(Minimize, MinedOutputsAreOneMinimal) {
  const MineReport r = mine({5, 9, 3, 0, true}, 1500);
  ASSERT_FALSE(r.mismatches.empty());
  for (const Mismatch &mm : r.mismatches) {
    const Formula min = minimize(mm);
    ASSERT_TRUE(diff_check(min));
    for (std::size_t k = 0; k < min.size(); ++k)
      EXPECT_FALSE(diff_check(min.without_clause(k)));
  }
}

TEST(Permutation, KnownBadAllOrderings) {
  const PermutationStats s = permutation_experiment(known_bad_family(0), PermutationStrategy::all());
  EXPECT_EQ(s.orderings_tested, 24U);
  EXPECT_FALSE(s.oracle_sat);
  std::size_t correct = 0;
  for (const OrderingResult &o : s.orderings) {
    if (o.order.front() == 0)
      EXPECT_FALSE(o.correct);
    if (o.order.back() == 0)
      EXPECT_TRUE(o.correct);
    correct += o.correct ? 1 : 0;
  }
  EXPECT_EQ(correct, s.gubin_correct);
  EXPECT_EQ(s.gubin_correct, 18U);
  EXPECT_DOUBLE_EQ(s.gubin_correct_fraction, 0.75);
}

TEST(Permutation, CubeAlwaysCorrect) {
  const PermutationStats s = permutation_experiment(two_variable_cube(), PermutationStrategy::all());
  EXPECT_EQ(s.orderings_tested, 24U);
  EXPECT_DOUBLE_EQ(s.gubin_correct_fraction, 1.0);
}

TEST(Permutation, SingleClauseAndLimits) {
  const PermutationStats one =
      permutation_experiment(Formula::from_dimacs({{1}}), PermutationStrategy::all());
  EXPECT_EQ(one.orderings_tested, 1U);
  EXPECT_DOUBLE_EQ(one.gubin_correct_fraction, 1.0);

  const Formula nine = random_formula({4, 9, 3, 3, true});
  EXPECT_THROW(permutation_experiment(nine, PermutationStrategy::all()), std::invalid_argument);
  const PermutationStats sampled = permutation_experiment(nine, PermutationStrategy::sample(30, 5));
  EXPECT_EQ(sampled.orderings_tested, 30U);
  const PermutationStats again = permutation_experiment(nine, PermutationStrategy::sample(30, 5));
  for (std::size_t k = 0; k < 30; ++k)
    EXPECT_EQ(sampled.orderings[k].order, again.orderings[k].order);
}

TEST(ComplexityProbe, SmallAndMonotone) {
  auto family = [](std::size_t m) { return planted_formula(16, m, 3, 11); };
  const auto rows = complexity_probe(family, {2, 4, 8, 16});
  EXPECT_EQ(rows[0].counters.column_pair_tests, 0U);
  EXPECT_EQ(rows[1].counters.matrices_depleted, 4U);
  for (std::size_t k = 1; k < rows.size(); ++k)
    EXPECT_GT(rows[k].counters.column_pair_tests, rows[k - 1].counters.column_pair_tests);
  EXPECT_THROW(complexity_probe(family, {4, 4}), std::invalid_argument);
}

TEST(Corpus, LayoutAndDeterminism) {
  const GenConfig cfg{5, 9, 3, 0, true};
  const MineReport r = mine(cfg, 1500);
  ASSERT_FALSE(r.mismatches.empty());
  const auto entries = corpus_from_mine(cfg, r, true);

  const auto base = std::filesystem::temp_directory_path() / "gubin_corpus_test";
  std::filesystem::remove_all(base);
  write_corpus(base / "a", entries);
  write_corpus(base / "b", corpus_from_mine(cfg, mine(cfg, 1500), true));

  const auto index = nlohmann::json::parse(slurp(base / "a" / "index.json"));
  ASSERT_EQ(index.size(), entries.size());
  for (const auto &e : index) {
    const std::string hash = e.at("hash");
    const auto cnf = base / "a" / (hash + ".cnf");
    ASSERT_TRUE(std::filesystem::exists(cnf));
    EXPECT_EQ(content_hash(parse_dimacs(slurp(cnf))), hash);
    EXPECT_TRUE(std::filesystem::exists(base / "a" / (e.at("minimized_hash").get<std::string>() + ".cnf")));
    EXPECT_EQ(e.at("gubin"), "SAT");
    EXPECT_EQ(e.at("oracle"), "UNSAT");
  }
  for (const auto &file : std::filesystem::directory_iterator(base / "a"))
    EXPECT_EQ(slurp(file.path()), slurp(base / "b" / file.path().filename()));
  std::filesystem::remove_all(base);
}
