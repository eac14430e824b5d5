#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gubin/cnf.hpp"

namespace gubin {

/// (p|q|r) & (~p|q|~r) & (p|~q|s), with p,q,r,s = 1..4.
Formula depletion_pair_example();
/// (~p|q) & (p|~q) & (p|q) & (~p|~q): unsatisfiable 2-SAT, all four clauses.
Formula two_variable_cube();
/// (q|p|r) & (~q|p|~r) & (q|~p|r) & (~q|~p|~r) with p,q,r = 1,2,3.
Formula sample_3sat();
/// (p) & (~p|q) & (~q): unsatisfiable, rejected by the engine, no pattern.
Formula unit_chain();

/// Rows of the published 3-variable tables in the order
/// 000,001,010,100,011,101,110,111; entry k is the canonical row index.
inline constexpr std::size_t kPublishedRowOrder[8] = {0, 1, 2, 4, 3, 5, 6, 7};

struct Fixture {
  std::string name;
  std::string locus;
  std::string expected;
  std::function<std::string()> actual;
};

struct FixtureResult {
  std::string name;
  std::string locus;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Every golden artifact of the worked examples: truth tables, matrices,
/// depletion snapshots and verdicts. Matrices are encoded as '/'-joined rows.
std::vector<Fixture> golden_fixtures();

std::vector<FixtureResult> replay(const std::vector<Fixture> &fixtures);
nlohmann::json to_json(const std::vector<FixtureResult> &results);

} // namespace gubin
