#include "gubin/trace_json.hpp"

#include <string>

namespace gubin {

namespace {

std::string key(std::size_t i, std::size_t j) {
  return std::to_string(i) + "," + std::to_string(j);
}

} // namespace

nlohmann::json triangle_to_json(const TriangularArray &t) {
  nlohmann::json out = nlohmann::json::object();
  for (auto [i, j] : t.indices())
    out[key(i, j)] = t.at(i, j).to_rows();
  return out;
}

TriangularArray triangle_from_json(const nlohmann::json &j, std::size_t clause_count) {
  TriangularArray t(clause_count);
  for (auto idx : t.indices())
    t.at(idx.i, idx.j) =
        BitMatrix::from_rows(j.at(key(idx.i, idx.j)).get<std::vector<std::string>>());
  return t;
}

nlohmann::json trace_to_json(const Formula &f, const RunResult &result) {
  const DepletionTrace &trace = result.trace;
  nlohmann::json rounds = nlohmann::json::array();
  for (const DepletionRound &round : trace.rounds) {
    nlohmann::json elim = nlohmann::json::array();
    for (const Elimination &e : round.eliminated)
      elim.push_back({e.i, e.j, e.a, e.b});
    rounds.push_back({{"depleting_clause", round.depleting_clause}, {"eliminated", elim}});
  }

  nlohmann::json first_zero = nullptr;
  if (trace.first_zero_matrix)
    first_zero = {trace.first_zero_matrix->i, trace.first_zero_matrix->j};

  return {
      {"clauses", f.to_int_lists()},
      {"row_order", "binary-msb-first"},
      {"initial_matrices", triangle_to_json(result.initial)},
      {"rounds", rounds},
      {"final_matrices", triangle_to_json(result.final)},
      {"verdict", to_string(trace.verdict)},
      {"first_zero_matrix", first_zero},
      {"counters",
       {{"column_pair_tests", trace.counters.column_pair_tests},
        {"entry_eliminations", trace.counters.entry_eliminations},
        {"matrices_depleted", trace.counters.matrices_depleted}}},
  };
}

} // namespace gubin
