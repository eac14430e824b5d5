#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gubin {

/// 1-based Boolean variable index.
class VarId {
public:
  constexpr VarId() = default;
  explicit VarId(std::uint32_t id) : id_(id) {
    if (id == 0)
      throw std::invalid_argument("VarId must be >= 1");
  }

  constexpr std::uint32_t value() const { return id_; }

  friend constexpr auto operator<=>(VarId, VarId) = default;

private:
  std::uint32_t id_ = 1;
};

struct Literal {
  VarId var;
  bool negated = false;

  /// Builds a literal from a nonzero DIMACS integer (negative = negated).
  static Literal from_dimacs(int lit);
  int to_dimacs() const;

  Literal operator~() const { return Literal{var, !negated}; }

  friend auto operator<=>(const Literal &, const Literal &) = default;
};

class Assignment;

/// A nonempty disjunction. Literal order is kept verbatim; `vars()` lists the
/// distinct variables in order of first appearance and defines the row order
/// of the clause's truth table.
class Clause {
public:
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<int> dimacs);

  std::span<const Literal> literals() const { return literals_; }
  std::span<const VarId> vars() const { return vars_; }
  std::size_t width() const { return vars_.size(); }

  /// True when the clause contains some x together with its negation.
  bool is_tautology() const;

  /// Throws PartialAssignmentError if a variable of the clause is unset.
  bool satisfied_by(const Assignment &a) const;

  friend bool operator==(const Clause &, const Clause &) = default;

private:
  std::vector<Literal> literals_;
  std::vector<VarId> vars_;
};

/// Ordered conjunction of clauses. Clause order is significant to the
/// compatibility-matrix engine and is never changed implicitly.
class Formula {
public:
  Formula() = default;
  /// `var_count` is raised to the largest referenced variable if smaller.
  explicit Formula(std::vector<Clause> clauses, std::uint32_t var_count = 0);
  static Formula from_dimacs(std::initializer_list<std::initializer_list<int>> clauses,
                             std::uint32_t var_count = 0);

  std::span<const Clause> clauses() const { return clauses_; }
  const Clause &clause(std::size_t index) const { return clauses_.at(index); }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  std::uint32_t var_count() const { return var_count_; }

  /// Clause `k` of the result is clause `order[k]` of this formula (0-based).
  Formula reordered(std::span<const std::size_t> order) const;
  Formula without_clause(std::size_t index) const;
  Formula with_clause(Clause c) const;

  /// DIMACS integer lists, one per clause.
  std::vector<std::vector<int>> to_int_lists() const;

  friend bool operator==(const Formula &, const Formula &) = default;

private:
  std::vector<Clause> clauses_;
  std::uint32_t var_count_ = 0;
};

class PartialAssignmentError : public std::runtime_error {
public:
  explicit PartialAssignmentError(VarId v);
  VarId var() const { return var_; }

private:
  VarId var_;
};

/// Values for variables 1..size(); entries may be unset.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::uint32_t var_count) : values_(var_count, kUnset) {}

  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }
  void set(VarId v, bool value);
  std::optional<bool> get(VarId v) const;
  /// Throws PartialAssignmentError when unset or out of range.
  bool at(VarId v) const;
  bool is_total() const;

  /// "v 1 -2 3 0" style listing, unset variables omitted.
  std::string to_dimacs_line() const;

  friend bool operator==(const Assignment &, const Assignment &) = default;

private:
  static constexpr std::int8_t kUnset = -1;
  std::vector<std::int8_t> values_;
};

/// True iff every clause has a literal satisfied by `a`.
bool evaluate(const Formula &f, const Assignment &a);

inline constexpr std::size_t kMaxTruthTableWidth = 24;

/// Truth table of a clause over its distinct variables. Row order is binary
/// counting with the first variable as the most significant bit. Row indices
/// here are 0-based; external reporting adds one.
class TruthTable {
public:
  explicit TruthTable(const Clause &c);

  std::span<const VarId> vars() const { return vars_; }
  std::size_t width() const { return vars_.size(); }
  std::size_t row_count() const { return values_.size(); }

  bool value(std::size_t row) const { return values_.at(row) != 0; }
  /// Value of the clause variable at `var_pos` in row `row`.
  bool bit(std::size_t row, std::size_t var_pos) const {
    return ((row >> (width() - 1 - var_pos)) & 1U) != 0;
  }
  std::size_t false_row_count() const;

  /// Row index whose bits agree with `a` on the clause's variables.
  std::size_t row_of(const Assignment &a) const;

  /// Values as a '0'/'1' string in row order.
  std::string value_string() const;

private:
  std::vector<VarId> vars_;
  std::vector<std::uint8_t> values_;
};

} // namespace gubin
