#include "gubin/fixtures.hpp"

#include <span>

#include "gubin/engine.hpp"
#include "gubin/harness.hpp"
#include "gubin/oracle.hpp"

namespace gubin {

Formula depletion_pair_example() {
  return Formula::from_dimacs({{1, 2, 3}, {-1, 2, -3}, {1, -2, 4}});
}

Formula two_variable_cube() { return Formula::from_dimacs({{-1, 2}, {1, -2}, {1, 2}, {-1, -2}}); }

Formula sample_3sat() {
  return Formula::from_dimacs({{2, 1, 3}, {-2, 1, -3}, {2, -1, 3}, {-2, -1, -3}});
}

Formula unit_chain() { return Formula::from_dimacs({{1}, {-1, 2}, {-2}}); }

namespace {

std::string join(const std::vector<std::string> &rows) {
  std::string s;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k != 0)
      s += '/';
    s += rows[k];
  }
  return s;
}

std::string encode(const BitMatrix &m) { return join(m.to_rows()); }

std::string encode(const TriangularArray &t) {
  std::string s;
  for (auto [i, j] : t.indices()) {
    if (!s.empty())
      s += ' ';
    s += std::to_string(i) + "," + std::to_string(j) + ":" + encode(t.at(i, j));
  }
  return s;
}

std::string table(const Formula &f, std::size_t clause) {
  return TruthTable(f.clause(clause)).value_string();
}

// Canonical 8-row matrix viewed in the published row order.
BitMatrix published_rows(const BitMatrix &canonical) {
  return canonical.with_rows_permuted(std::span<const std::size_t>(kPublishedRowOrder));
}

std::string published_table(const TruthTable &t) {
  std::string s;
  for (std::size_t k : kPublishedRowOrder)
    s.push_back(t.value(k) ? '1' : '0');
  return s;
}

const char *kPairC23 = "11000000/11000000/00010000/00010000/00001100/00000000/00000011/00000011";
const char *kPairC12 = "00000000/01000000/00100000/00010000/00001000/00000000/00000010/00000001";
const char *kPairC13 = "00000000/11000000/00010000/00010000/00001100/00001100/00000011/00000011";
const char *kPairC23Depleted =
    "00000000/11000000/00010000/00010000/00001100/00000000/00000011/00000011";

const char *kCubeInitial = "1,2:1000/0000/0000/0001 1,3:0000/0100/0000/0001 "
                           "1,4:1000/0100/0000/0000 2,3:0000/0000/0010/0001 "
                           "2,4:1000/0000/0010/0000 3,4:0000/0100/0010/0000";
const char *kCubeRound1 = "1,2:1000/0000/0000/0001 1,3:0000/0100/0000/0001 "
                          "1,4:1000/0100/0000/0000 2,3:0000/0000/0000/0001 "
                          "2,4:1000/0000/0000/0000 3,4:0000/0100/0000/0000";
const char *kCubeRound2 = "1,2:1000/0000/0000/0001 1,3:0000/0100/0000/0001 "
                          "1,4:1000/0100/0000/0000 2,3:0000/0000/0000/0001 "
                          "2,4:1000/0000/0000/0000 3,4:0000/0000/0000/0000";

// Known-bad triple, rows of c1 in the published order.
const char *kTripleC12 = "00/10/10/00/10/00/00/00";
const char *kTripleC13 = "00/10/00/10/00/10/00/00";
const char *kTripleC14 = "00/00/10/10/00/00/10/00";

TriangularArray after_rounds(const Formula &f, std::size_t rounds) {
  TriangularArray t = build_triangle(f);
  for (std::size_t r = 1; r <= rounds; ++r)
    deplete_round(t, r);
  return t;
}

std::string eliminations(const DepletionRound &round) {
  std::string s;
  for (const Elimination &e : round.eliminated) {
    if (!s.empty())
      s += ' ';
    s += "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")[" + std::to_string(e.a) +
         "," + std::to_string(e.b) + "]";
  }
  return s;
}

} // namespace

std::vector<Fixture> golden_fixtures() {
  std::vector<Fixture> fx;
  auto add = [&](std::string name, std::string locus, std::string expected,
                 std::function<std::string()> actual) {
    fx.push_back({std::move(name), std::move(locus), std::move(expected), std::move(actual)});
  };

  // Three-clause pair example.
  const Formula pair = depletion_pair_example();
  add("pair.truth_table.c1", "truth table of p|q|r", "01111111", [=] { return table(pair, 0); });
  add("pair.truth_table.c2", "truth table of ~p|q|~r", "11111011", [=] { return table(pair, 1); });
  add("pair.truth_table.c3", "truth table of p|~q|s", "11011111", [=] { return table(pair, 2); });
  add("pair.C23.initial", "compatibility matrix C(2,3)", kPairC23,
      [=] { return encode(build_triangle(pair).at(2, 3)); });
  add("pair.C12.initial", "compatibility matrix C(1,2)", kPairC12,
      [=] { return encode(build_triangle(pair).at(1, 2)); });
  add("pair.C13.initial", "compatibility matrix C(1,3)", kPairC13,
      [=] { return encode(build_triangle(pair).at(1, 3)); });
  add("pair.C23.depleted", "C(2,3) after depletion by c1", kPairC23Depleted,
      [=] { return encode(after_rounds(pair, 1).at(2, 3)); });
  add("pair.eliminations", "entries removed from C(2,3) by c1", "(2,3)[1,1] (2,3)[1,2]", [=] {
    TriangularArray t = build_triangle(pair);
    return eliminations(deplete_round(t, 1));
  });

  // Unsatisfiable 2-SAT walkthrough.
  const Formula cube = two_variable_cube();
  add("cube2.truth_tables", "truth tables of the four 2-clauses", "1101 1011 0111 1110", [=] {
    return table(cube, 0) + " " + table(cube, 1) + " " + table(cube, 2) + " " + table(cube, 3);
  });
  add("cube2.initial", "initial triangular array", kCubeInitial,
      [=] { return encode(build_triangle(cube)); });
  add("cube2.round1", "array after depletion by c1", kCubeRound1,
      [=] { return encode(after_rounds(cube, 1)); });
  add("cube2.round2", "array after depletion by c2", kCubeRound2,
      [=] { return encode(after_rounds(cube, 2)); });
  add("cube2.verdict", "bottom-right matrix all zero", "UNSAT first_zero=3,4", [=] {
    const RunResult r = run(cube);
    return std::string(to_string(r.verdict())) + " first_zero=" +
           std::to_string(r.trace.first_zero_matrix->i) + "," +
           std::to_string(r.trace.first_zero_matrix->j);
  });

  // Unsatisfiable formula the engine accepts.
  const Formula triple = known_bad_family(0);
  add("triple.truth_tables", "truth tables, c1 rows in published order", "01111111 10 10 10", [=] {
    return published_table(TruthTable(triple.clause(0))) + " " + table(triple, 1) + " " +
           table(triple, 2) + " " + table(triple, 3);
  });
  add("triple.C1x", "C(1,2) C(1,3) C(1,4), c1 rows in published order",
      std::string(kTripleC12) + " " + kTripleC13 + " " + kTripleC14, [=] {
        const TriangularArray t = build_triangle(triple);
        return encode(published_rows(t.at(1, 2))) + " " + encode(published_rows(t.at(1, 3))) +
               " " + encode(published_rows(t.at(1, 4)));
      });
  add("triple.C2x", "C(2,3) C(2,4) C(3,4)", "10/00 10/00 10/00", [=] {
    const TriangularArray t = build_triangle(triple);
    return encode(t.at(2, 3)) + " " + encode(t.at(2, 4)) + " " + encode(t.at(3, 4));
  });
  add("triple.unchanged", "matrices unchanged by every depletion round", "eliminated=0 unchanged",
      [=] {
        const RunResult r = run(triple, RunMode::Full);
        return "eliminated=" + std::to_string(r.trace.counters.entry_eliminations) +
               (r.initial == r.final ? " unchanged" : " changed");
      });
  add("triple.verdict", "engine verdict", "SAT", [=] { return to_string(run(triple).verdict()); });
  add("triple.oracle", "true satisfiability", "UNSAT",
      [=] { return std::string(brute_force(triple).sat ? "SAT" : "UNSAT"); });
  add("triple.reordered.verdict", "3-clause moved last", "UNSAT", [=] {
    const std::size_t order[] = {1, 2, 3, 0};
    return to_string(run(triple.reordered(order)).verdict());
  });
  return fx;
}

std::vector<FixtureResult> replay(const std::vector<Fixture> &fixtures) {
  std::vector<FixtureResult> out;
  out.reserve(fixtures.size());
  for (const Fixture &f : fixtures) {
    FixtureResult r{f.name, f.locus, f.expected, "", false};
    try {
      r.actual = f.actual();
    } catch (const std::exception &e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.pass = r.actual == r.expected;
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json to_json(const std::vector<FixtureResult> &results) {
  nlohmann::json out = nlohmann::json::array();
  for (const FixtureResult &r : results)
    out.push_back({{"name", r.name},
                   {"locus", r.locus},
                   {"expected", r.expected},
                   {"actual", r.actual},
                   {"pass", r.pass}});
  return out;
}

} // namespace gubin
