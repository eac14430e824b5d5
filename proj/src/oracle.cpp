#include "gubin/oracle.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace gubin {

OracleCapError::OracleCapError(std::size_t vars, std::size_t cap)
    : std::runtime_error("brute force limited to " + std::to_string(cap) + " variables, formula has " +
                         std::to_string(vars) + "; use dpll") {}

std::size_t brute_force_cap_from_env() {
  const char *raw = std::getenv("GUBIN_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0')
    return kDefaultBruteForceCap;
  char *end = nullptr;
  const unsigned long cap = std::strtoul(raw, &end, 10);
  if (*end != '\0' || cap > kMaxBruteForceCap)
    throw std::invalid_argument("GUBIN_ORACLE_CAP must be an integer in 0.." +
                                std::to_string(kMaxBruteForceCap));
  return cap;
}

namespace {

Assignment complete(const std::vector<std::int8_t> &values, std::uint32_t n) {
  Assignment a(n);
  for (std::uint32_t v = 1; v <= n; ++v)
    a.set(VarId(v), values[v] == 1);
  return a;
}

class Dpll {
public:
  explicit Dpll(const Formula &f) : n_(f.var_count()), clauses_(f.to_int_lists()) {}

  OracleVerdict solve() {
    std::vector<std::int8_t> values(n_ + 1, kUnset);
    if (!search(values))
      return {};
    return {true, complete(values, n_)};
  }

private:
  static constexpr std::int8_t kUnset = -1;

  static int value_of(const std::vector<std::int8_t> &values, int lit) {
    const std::int8_t v = values[static_cast<std::size_t>(std::abs(lit))];
    if (v == kUnset)
      return kUnset;
    return (v == 1) == (lit > 0) ? 1 : 0;
  }

  static void assign(std::vector<std::int8_t> &values, int lit) {
    values[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : 0;
  }

  // Returns false on conflict.
  bool propagate(std::vector<std::int8_t> &values) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto &clause : clauses_) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int lit : clause) {
          const int v = value_of(values, lit);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v == kUnset) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat)
          continue;
        if (unassigned == 0)
          return false;
        if (unassigned == 1) {
          assign(values, last);
          changed = true;
        }
      }
      if (changed)
        continue;

      // Pure literals among the still-unsatisfied clauses.
      std::vector<std::uint8_t> polarity(n_ + 1, 0); // bit 0: positive, bit 1: negative
      for (const auto &clause : clauses_) {
        if (satisfied(values, clause))
          continue;
        for (int lit : clause)
          if (value_of(values, lit) == kUnset)
            polarity[static_cast<std::size_t>(std::abs(lit))] |= lit > 0 ? 1 : 2;
      }
      for (std::uint32_t v = 1; v <= n_; ++v) {
        if (polarity[v] == 1 || polarity[v] == 2) {
          values[v] = polarity[v] == 1 ? 1 : 0;
          changed = true;
        }
      }
    }
    return true;
  }

  static bool satisfied(const std::vector<std::int8_t> &values, const std::vector<int> &clause) {
    for (int lit : clause)
      if (value_of(values, lit) == 1)
        return true;
    return false;
  }

  bool search(std::vector<std::int8_t> &values) const {
    if (!propagate(values))
      return false;
    int branch = 0;
    for (const auto &clause : clauses_) {
      if (satisfied(values, clause))
        continue;
      for (int lit : clause) {
        const int var = std::abs(lit);
        if (values[static_cast<std::size_t>(var)] == kUnset && (branch == 0 || var < branch))
          branch = var;
      }
    }
    if (branch == 0)
      return true; // every clause satisfied
    for (const int lit : {-branch, branch}) {
      std::vector<std::int8_t> child = values;
      assign(child, lit);
      if (search(child)) {
        values = std::move(child);
        return true;
      }
    }
    return false;
  }

  std::uint32_t n_;
  std::vector<std::vector<int>> clauses_;
};

} // namespace

OracleVerdict brute_force(const Formula &f, std::size_t cap) {
  const std::uint32_t n = f.var_count();
  if (cap > kMaxBruteForceCap)
    cap = kMaxBruteForceCap;
  if (n > cap)
    throw OracleCapError(n, cap);

  // Variable v sits at bit n - v so that index order is lexicographic in 1..n.
  struct Masks {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
  };
  std::vector<Masks> masks;
  masks.reserve(f.size());
  for (const Clause &c : f.clauses()) {
    Masks m;
    for (const Literal &l : c.literals())
      (l.negated ? m.neg : m.pos) |= std::uint64_t{1} << (n - l.var.value());
    masks.push_back(m);
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (const Masks &m : masks) {
      if (((x & m.pos) | (~x & m.neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a(n);
      for (std::uint32_t v = 1; v <= n; ++v)
        a.set(VarId(v), ((x >> (n - v)) & 1U) != 0);
      return {true, std::move(a)};
    }
  }
  return {};
}

OracleVerdict dpll(const Formula &f) { return Dpll(f).solve(); }

OracleVerdict decide(const Formula &f, OracleMethod method, std::size_t cap) {
  return method == OracleMethod::BruteForce ? brute_force(f, cap) : dpll(f);
}

} // namespace gubin
