#include "gubin/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace gubin {

Literal Literal::from_dimacs(int lit) {
  if (lit == 0)
    throw std::invalid_argument("literal 0 is not a variable");
  return Literal{VarId(static_cast<std::uint32_t>(std::abs(lit))), lit < 0};
}

int Literal::to_dimacs() const {
  const int v = static_cast<int>(var.value());
  return negated ? -v : v;
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty())
    throw std::invalid_argument("empty clause");
  for (const Literal &l : literals_)
    if (std::find(vars_.begin(), vars_.end(), l.var) == vars_.end())
      vars_.push_back(l.var);
}

Clause::Clause(std::initializer_list<int> dimacs)
    : Clause([&] {
        std::vector<Literal> lits;
        lits.reserve(dimacs.size());
        for (int x : dimacs)
          lits.push_back(Literal::from_dimacs(x));
        return lits;
      }()) {}

bool Clause::is_tautology() const {
  for (const Literal &l : literals_)
    if (std::find(literals_.begin(), literals_.end(), ~l) != literals_.end())
      return true;
  return false;
}

bool Clause::satisfied_by(const Assignment &a) const {
  bool sat = false;
  for (const Literal &l : literals_)
    sat = (a.at(l.var) != l.negated) || sat;
  return sat;
}

Formula::Formula(std::vector<Clause> clauses, std::uint32_t var_count)
    : clauses_(std::move(clauses)), var_count_(var_count) {
  for (const Clause &c : clauses_)
    for (VarId v : c.vars())
      var_count_ = std::max(var_count_, v.value());
}

Formula Formula::from_dimacs(std::initializer_list<std::initializer_list<int>> clauses,
                             std::uint32_t var_count) {
  std::vector<Clause> cs;
  cs.reserve(clauses.size());
  for (auto c : clauses)
    cs.emplace_back(c);
  return Formula(std::move(cs), var_count);
}

Formula Formula::reordered(std::span<const std::size_t> order) const {
  if (order.size() != clauses_.size())
    throw std::invalid_argument("reordering must list every clause once");
  std::vector<bool> seen(clauses_.size(), false);
  std::vector<Clause> out;
  out.reserve(order.size());
  for (std::size_t k : order) {
    if (k >= clauses_.size() || seen[k])
      throw std::invalid_argument("reordering is not a permutation");
    seen[k] = true;
    out.push_back(clauses_[k]);
  }
  return Formula(std::move(out), var_count_);
}

Formula Formula::without_clause(std::size_t index) const {
  std::vector<Clause> out = clauses_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return Formula(std::move(out), var_count_);
}

Formula Formula::with_clause(Clause c) const {
  std::vector<Clause> out = clauses_;
  out.push_back(std::move(c));
  return Formula(std::move(out), var_count_);
}

std::vector<std::vector<int>> Formula::to_int_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(clauses_.size());
  for (const Clause &c : clauses_) {
    std::vector<int> row;
    for (const Literal &l : c.literals())
      row.push_back(l.to_dimacs());
    out.push_back(std::move(row));
  }
  return out;
}

PartialAssignmentError::PartialAssignmentError(VarId v)
    : std::runtime_error("assignment has no value for variable " +
                         std::to_string(v.value())),
      var_(v) {}

void Assignment::set(VarId v, bool value) {
  if (v.value() > values_.size())
    values_.resize(v.value(), kUnset);
  values_[v.value() - 1] = value ? 1 : 0;
}

std::optional<bool> Assignment::get(VarId v) const {
  if (v.value() > values_.size() || values_[v.value() - 1] == kUnset)
    return std::nullopt;
  return values_[v.value() - 1] == 1;
}

bool Assignment::at(VarId v) const {
  auto value = get(v);
  if (!value)
    throw PartialAssignmentError(v);
  return *value;
}

bool Assignment::is_total() const {
  return std::none_of(values_.begin(), values_.end(),
                      [](std::int8_t x) { return x == kUnset; });
}

std::string Assignment::to_dimacs_line() const {
  std::ostringstream os;
  os << "v";
  for (std::uint32_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == kUnset)
      continue;
    os << ' ' << (values_[i] == 1 ? "" : "-") << (i + 1);
  }
  os << " 0";
  return os.str();
}

bool evaluate(const Formula &f, const Assignment &a) {
  bool all = true;
  // Every clause is visited so a partial assignment is always reported.
  for (const Clause &c : f.clauses())
    all = c.satisfied_by(a) && all;
  return all;
}

TruthTable::TruthTable(const Clause &c) : vars_(c.vars().begin(), c.vars().end()) {
  if (vars_.size() > kMaxTruthTableWidth)
    throw std::length_error("clause too wide for a truth table");
  const std::size_t rows = std::size_t{1} << vars_.size();
  values_.assign(rows, 0);
  for (std::size_t row = 0; row < rows; ++row) {
    bool sat = false;
    for (const Literal &l : c.literals()) {
      const auto pos = static_cast<std::size_t>(
          std::find(vars_.begin(), vars_.end(), l.var) - vars_.begin());
      if (bit(row, pos) != l.negated) {
        sat = true;
        break;
      }
    }
    values_[row] = sat ? 1 : 0;
  }
}

std::size_t TruthTable::false_row_count() const {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), 0));
}

std::size_t TruthTable::row_of(const Assignment &a) const {
  std::size_t row = 0;
  for (VarId v : vars_)
    row = (row << 1) | (a.at(v) ? 1U : 0U);
  return row;
}

std::string TruthTable::value_string() const {
  std::string s;
  s.reserve(values_.size());
  for (auto v : values_)
    s.push_back(v ? '1' : '0');
  return s;
}

} // namespace gubin
