#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "gubin/cnf.hpp"

namespace gubin {

struct OracleVerdict {
  bool sat = false;
  /// Present iff sat; total over 1..var_count, unconstrained variables false.
  std::optional<Assignment> witness;

  friend bool operator==(const OracleVerdict &, const OracleVerdict &) = default;
};

inline constexpr std::size_t kDefaultBruteForceCap = 24;
inline constexpr std::size_t kMaxBruteForceCap = 40;

class OracleCapError : public std::runtime_error {
public:
  OracleCapError(std::size_t vars, std::size_t cap);
};

/// Reads GUBIN_ORACLE_CAP, falling back to kDefaultBruteForceCap.
std::size_t brute_force_cap_from_env();

/// Tries assignments in index order (variable 1 is the most significant bit)
/// and returns the first witness. Throws OracleCapError above `cap` variables.
OracleVerdict brute_force(const Formula &f, std::size_t cap = kDefaultBruteForceCap);

/// Complete DPLL with unit propagation and pure-literal elimination.
/// Branches on the lowest unassigned variable, false first.
OracleVerdict dpll(const Formula &f);

enum class OracleMethod { BruteForce, Dpll };

OracleVerdict decide(const Formula &f, OracleMethod method,
                     std::size_t cap = kDefaultBruteForceCap);

} // namespace gubin
