#pragma once

#include <json.hpp>

#include "gubin/cnf.hpp"
#include "gubin/engine.hpp"

namespace gubin {

/// Matrices keyed "i,j", each a list of row bitstrings such as "11000000".
nlohmann::json triangle_to_json(const TriangularArray &t);
TriangularArray triangle_from_json(const nlohmann::json &j, std::size_t clause_count);

/// Single trace document: clauses, row_order, initial_matrices, rounds,
/// final_matrices, verdict, first_zero_matrix, counters. Coordinates 1-based.
nlohmann::json trace_to_json(const Formula &f, const RunResult &result);

} // namespace gubin
