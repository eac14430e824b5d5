#pragma once

// Independent reference computations for the unit and acceptance tests. None
// of these call into the engine, the truth-table bit layout or the oracle
// module; they work from the definitions by plain enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gubin/bit_matrix.hpp"
#include "gubin/cnf.hpp"

namespace gubin::reference {

/// Assignment over 1..n from the bits of x, variable v at bit (v - 1).
inline Assignment assignment_from_bits(std::uint32_t n, std::uint64_t x) {
  Assignment a(n);
  for (std::uint32_t v = 1; v <= n; ++v)
    a.set(VarId(v), ((x >> (v - 1)) & 1U) != 0);
  return a;
}

/// Satisfiability by evaluating every total assignment.
inline bool enumerate_sat(const Formula &f) {
  const std::uint32_t n = f.var_count();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    if (evaluate(f, assignment_from_bits(n, x)))
      return true;
  return false;
}

/// Decodes a 0-based row index of a clause table into a partial assignment:
/// the clause's k-th distinct variable takes bit (w-1-k) of the index.
inline std::map<std::uint32_t, bool> decode_row(const Clause &c, std::size_t row) {
  std::map<std::uint32_t, bool> out;
  const std::size_t w = c.vars().size();
  for (std::size_t k = 0; k < w; ++k)
    out[c.vars()[k].value()] = ((row >> (w - 1 - k)) & 1U) != 0;
  return out;
}

inline bool clause_true_on(const Clause &c, const std::map<std::uint32_t, bool> &vals) {
  for (const Literal &l : c.literals())
    if (vals.at(l.var.value()) != l.negated)
      return true;
  return false;
}

/// Entry (a,b) = the two decoded rows agree on every shared variable and both
/// make their clause true.
inline BitMatrix reference_compatibility(const Clause &ci, const Clause &cj) {
  const std::size_t rows = std::size_t{1} << ci.vars().size();
  const std::size_t cols = std::size_t{1} << cj.vars().size();
  BitMatrix m(rows, cols);
  for (std::size_t a = 0; a < rows; ++a) {
    const auto ra = decode_row(ci, a);
    if (!clause_true_on(ci, ra))
      continue;
    for (std::size_t b = 0; b < cols; ++b) {
      const auto rb = decode_row(cj, b);
      if (!clause_true_on(cj, rb))
        continue;
      bool agree = true;
      for (auto [v, val] : ra)
        if (auto it = rb.find(v); it != rb.end() && it->second != val)
          agree = false;
      if (agree)
        m.set(a, b);
    }
  }
  return m;
}

/// Renames variables in order of first appearance (literal polarity kept), so
/// two formulas are isomorphic up to renaming iff their canonical forms match.
inline std::vector<std::vector<int>> canonical_renaming(const Formula &f) {
  std::map<std::uint32_t, int> rename;
  std::vector<std::vector<int>> out;
  for (const Clause &c : f.clauses()) {
    std::vector<int> row;
    for (const Literal &l : c.literals()) {
      auto [it, fresh] = rename.try_emplace(l.var.value(), static_cast<int>(rename.size()) + 1);
      row.push_back(l.negated ? -it->second : it->second);
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// Isomorphism up to variable renaming and clause order, by trying every
/// clause ordering of `b` (small formulas only).
inline bool isomorphic(const Formula &a, const Formula &b) {
  if (a.size() != b.size())
    return false;
  const auto target = canonical_renaming(a);
  std::vector<std::size_t> order(b.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    order[k] = k;
  do {
    if (canonical_renaming(b.reordered(order)) == target)
      return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

} // namespace gubin::reference
