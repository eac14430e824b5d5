// gubin: command-line front end for the compatibility-matrix engine, the
// oracles and the differential harness.
//
// Exit codes: 10 = SAT, 20 = UNSAT (gubin, oracle); 0 = success for every
// other command; 1 = a golden fixture failed (replay); 2 = error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gubin/corpus.hpp"
#include "gubin/dimacs.hpp"
#include "gubin/engine.hpp"
#include "gubin/fixtures.hpp"
#include "gubin/harness.hpp"
#include "gubin/hegerle.hpp"
#include "gubin/oracle.hpp"
#include "gubin/reduction.hpp"
#include "gubin/trace_json.hpp"

using namespace gubin;
using nlohmann::json;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitError = 2;

int verdict_code(bool sat) { return sat ? kExitSat : kExitUnsat; }

RunMode parse_mode(const std::string &mode) {
  return mode == "full" ? RunMode::Full : RunMode::EarlyExit;
}

OracleMethod parse_method(const std::string &method) {
  return method == "dpll" ? OracleMethod::Dpll : OracleMethod::BruteForce;
}

DiffOptions diff_options(const std::string &mode, const std::string &method) {
  return {parse_mode(mode), parse_method(method), brute_force_cap_from_env()};
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string verdict_word(bool sat) { return sat ? "SAT" : "UNSAT"; }

json mismatch_json(const Mismatch &mm) {
  return {{"clauses", mm.formula.to_int_lists()},
          {"gubin", to_string(mm.gubin_verdict)},
          {"oracle", verdict_word(mm.oracle_sat)},
          {"seed", mm.seed},
          {"provenance", mm.provenance}};
}

json vars_json(const std::vector<VarId> &vars) {
  json out = json::array();
  for (VarId v : vars)
    out.push_back(v.value());
  return out;
}

std::string vars_text(const std::vector<VarId> &vars) {
  std::string s = "(";
  for (std::size_t k = 0; k < vars.size(); ++k)
    s += (k ? "," : "") + std::to_string(vars[k].value());
  return s + ")";
}

std::vector<std::size_t> parse_sizes(const std::string &csv) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    sizes.push_back(std::stoul(item));
  return sizes;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Compatibility-matrix SAT engine, oracles and differential harness"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string file;
  std::string mode = "early";
  std::string method = "brute";

  auto *gubin_cmd = app.add_subcommand("gubin", "Run the compatibility-matrix engine");
  std::string trace_path;
  gubin_cmd->add_option("file", file, "DIMACS CNF file")->required();
  gubin_cmd->add_option("--mode", mode, "early|full")->check(CLI::IsMember({"early", "full"}));
  gubin_cmd->add_option("--trace", trace_path, "Write the depletion trace as JSON");

  auto *oracle_cmd = app.add_subcommand("oracle", "Decide satisfiability exactly");
  bool witness = false;
  oracle_cmd->add_option("file", file, "DIMACS CNF file")->required();
  oracle_cmd->add_option("--method", method, "brute|dpll")->check(CLI::IsMember({"brute", "dpll"}));
  oracle_cmd->add_flag("--witness", witness, "Print a satisfying assignment");

  auto *diff_cmd = app.add_subcommand("diff", "Compare engine and oracle verdicts");
  diff_cmd->add_option("file", file, "DIMACS CNF file")->required();
  diff_cmd->add_option("--mode", mode, "early|full")->check(CLI::IsMember({"early", "full"}));
  diff_cmd->add_option("--method", method, "brute|dpll")->check(CLI::IsMember({"brute", "dpll"}));

  auto *mine_cmd = app.add_subcommand("mine", "Search random formulas for mismatches");
  GenConfig cfg;
  std::size_t count = 1000;
  bool no_duplicates = false;
  bool with_minimized = false;
  std::string corpus_dir;
  mine_cmd->add_option("--vars", cfg.n_vars, "Variables per formula");
  mine_cmd->add_option("--clauses", cfg.n_clauses, "Clauses per formula");
  mine_cmd->add_option("--width", cfg.max_width, "Maximum clause width");
  mine_cmd->add_option("--seed", cfg.seed, "First seed");
  mine_cmd->add_option("--count", count, "Number of formulas");
  mine_cmd->add_flag("--no-duplicates", no_duplicates, "Forbid repeated clauses");
  mine_cmd->add_flag("--minimize", with_minimized, "Minimize every mismatch");
  mine_cmd->add_option("--corpus", corpus_dir, "Write <hash>.cnf files and index.json here");
  mine_cmd->add_option("--method", method, "brute|dpll")->check(CLI::IsMember({"brute", "dpll"}));

  auto *min_cmd = app.add_subcommand("minimize", "Shrink a mismatching formula");
  std::string out_path;
  min_cmd->add_option("file", file, "DIMACS CNF file")->required();
  min_cmd->add_option("--out", out_path, "Write the minimized DIMACS here");

  auto *perm_cmd = app.add_subcommand("perm", "Run the engine on clause reorderings");
  std::size_t samples = 0;
  std::uint64_t perm_seed = 0;
  perm_cmd->add_option("file", file, "DIMACS CNF file")->required();
  perm_cmd->add_option("--sample", samples, "Random orderings instead of all (0 = all)");
  perm_cmd->add_option("--seed", perm_seed, "Seed for --sample");

  auto *patterns_cmd = app.add_subcommand("patterns", "Detect the three cube patterns");
  patterns_cmd->add_option("file", file, "DIMACS CNF file")->required();

  auto *reduce_cmd = app.add_subcommand("reduce", "Emit the 1-SAT instance of C(m-1,m)");
  reduce_cmd->add_option("file", file, "DIMACS CNF file")->required();
  reduce_cmd->add_option("--out", out_path, "Write the emitted DIMACS here");

  auto *replay_cmd = app.add_subcommand("replay", "Check every golden worked example");

  auto *probe_cmd = app.add_subcommand("probe", "Count depletion work on a nested satisfiable family");
  std::string sizes_csv = "8,16,32,64";
  std::uint32_t probe_vars = 20;
  std::uint64_t probe_seed = 7;
  probe_cmd->add_option("--sizes", sizes_csv, "Comma-separated clause counts");
  probe_cmd->add_option("--vars", probe_vars, "Variables in the family");
  probe_cmd->add_option("--seed", probe_seed, "Family seed");

  for (auto *sub : {gubin_cmd, oracle_cmd, diff_cmd, mine_cmd, min_cmd, perm_cmd, patterns_cmd,
                    reduce_cmd, replay_cmd, probe_cmd})
    sub->add_flag("--json", as_json, "Print a single JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (gubin_cmd->parsed()) {
      const Formula f = read_dimacs_file(file);
      const RunResult r = run(f, parse_mode(mode));
      const json trace = trace_to_json(f, r);
      if (!trace_path.empty())
        write_text(trace_path, trace.dump(2) + "\n");
      const bool sat = r.verdict() == GubinVerdict::Sat;
      if (as_json)
        std::cout << trace.dump() << "\n";
      else
        std::cout << to_string(r.verdict()) << "\n";
      return verdict_code(sat);
    }

    if (oracle_cmd->parsed()) {
      const Formula f = read_dimacs_file(file);
      const OracleVerdict v = decide(f, parse_method(method), brute_force_cap_from_env());
      if (as_json) {
        json out = {{"verdict", verdict_word(v.sat)}, {"witness", nullptr}};
        if (v.sat)
          out["witness"] = v.witness->to_dimacs_line();
        std::cout << out.dump() << "\n";
      } else {
        std::cout << verdict_word(v.sat) << "\n";
        if (v.sat && witness)
          std::cout << v.witness->to_dimacs_line() << "\n";
      }
      return verdict_code(v.sat);
    }

    if (diff_cmd->parsed()) {
      const Formula f = read_dimacs_file(file);
      const DiffOptions opts = diff_options(mode, method);
      const auto mm = diff_check(f, opts);
      const std::string gubin_word =
          mm ? to_string(mm->gubin_verdict) : to_string(run(f, opts.mode).verdict());
      const std::string oracle_word =
          mm ? verdict_word(mm->oracle_sat) : gubin_word; // agreement
      if (as_json)
        std::cout << json{{"mismatch", mm.has_value()}, {"gubin", gubin_word}, {"oracle", oracle_word}}.dump()
                  << "\n";
      else
        std::cout << (mm ? "MISMATCH" : "AGREE") << " gubin=" << gubin_word
                  << " oracle=" << oracle_word << "\n";
      return 0;
    }

    if (mine_cmd->parsed()) {
      cfg.allow_duplicate_clauses = !no_duplicates;
      const DiffOptions opts = diff_options("early", method);
      const MineReport report = mine(cfg, count, opts);
      const auto entries = corpus_from_mine(cfg, report, with_minimized, opts);
      if (!corpus_dir.empty())
        write_corpus(corpus_dir, entries);
      if (as_json) {
        json mismatches = json::array();
        for (const Mismatch &mm : report.mismatches)
          mismatches.push_back(mismatch_json(mm));
        std::cout << json{{"tested", report.tested},
                          {"mismatch_count", report.mismatches.size()},
                          {"soundness_violations", report.soundness_violations},
                          {"mode_divergences", report.mode_divergences},
                          {"bottom_right_divergences", report.bottom_right_divergences},
                          {"mismatches", mismatches},
                          {"index", corpus_index(entries)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "tested " << report.tested << " mismatches " << report.mismatches.size()
                  << " soundness_violations " << report.soundness_violations
                  << " mode_divergences " << report.mode_divergences
                  << " bottom_right_divergences " << report.bottom_right_divergences << "\n";
        for (const CorpusEntry &e : entries)
          std::cout << "seed " << e.seed << " " << content_hash(e.formula)
                    << (e.minimized ? " minimized " + content_hash(*e.minimized) : "") << "\n";
      }
      return report.soundness_violations == 0 ? 0 : kExitError;
    }

    if (min_cmd->parsed()) {
      const Formula f = read_dimacs_file(file);
      const DiffOptions opts = diff_options("early", "brute");
      const auto mm = diff_check(f, opts);
      if (!mm)
        throw std::invalid_argument("engine and oracle agree on " + file + "; nothing to minimize");
      const Formula min = minimize(*mm, opts);
      if (!out_path.empty())
        write_dimacs_file(out_path, min);
      if (as_json)
        std::cout << json{{"clauses", min.to_int_lists()}, {"hash", content_hash(min)}}.dump() << "\n";
      else
        std::cout << serialize_dimacs(min);
      return 0;
    }

    if (perm_cmd->parsed()) {
      const Formula f = read_dimacs_file(file);
      const PermutationStrategy strategy = samples == 0
                                               ? PermutationStrategy::all()
                                               : PermutationStrategy::sample(samples, perm_seed);
      const PermutationStats s = permutation_experiment(f, strategy, diff_options("early", "brute"));
      if (as_json) {
        json rows = json::array();
        for (const OrderingResult &o : s.orderings) {
          json order = json::array();
          for (std::size_t k : o.order)
            order.push_back(k + 1);
          rows.push_back({{"order", order}, {"gubin", to_string(o.verdict)}, {"correct", o.correct}});
        }
        std::cout << json{{"oracle", verdict_word(s.oracle_sat)},
                          {"orderings_tested", s.orderings_tested},
                          {"gubin_correct", s.gubin_correct},
                          {"gubin_correct_fraction", s.gubin_correct_fraction},
                          {"orderings", rows}}
                         .dump()
                  << "\n";
      } else {
        for (const OrderingResult &o : s.orderings) {
          for (std::size_t k : o.order)
            std::cout << k + 1 << ' ';
          std::cout << to_string(o.verdict) << (o.correct ? " correct" : " wrong") << "\n";
        }
        std::cout << "oracle=" << verdict_word(s.oracle_sat) << " orderings=" << s.orderings_tested
                  << " correct=" << s.gubin_correct << " fraction=" << s.gubin_correct_fraction
                  << "\n";
      }
      return 0;
    }

    if (patterns_cmd->parsed()) {
      const Formula f = read_dimacs_file(file);
      const PatternReport p = detect_patterns(f);
      const ClaimCheck c = check_hegerle_claim(f);
      if (as_json) {
        json out = {{"pattern1", nullptr},
                    {"pattern2", nullptr},
                    {"pattern3", nullptr},
                    {"any_pattern", p.any_pattern()},
                    {"gubin", to_string(c.gubin_verdict)},
                    {"consistent_with_claim", c.consistent_with_claim}};
        if (p.pattern1)
          out["pattern1"] = vars_json({*p.pattern1});
        if (p.pattern2)
          out["pattern2"] = vars_json(*p.pattern2);
        if (p.pattern3)
          out["pattern3"] = vars_json(*p.pattern3);
        std::cout << out.dump() << "\n";
      } else {
        if (p.pattern1)
          std::cout << "pattern1 " << vars_text({*p.pattern1}) << "\n";
        if (p.pattern2)
          std::cout << "pattern2 " << vars_text(*p.pattern2) << "\n";
        if (p.pattern3)
          std::cout << "pattern3 " << vars_text(*p.pattern3) << "\n";
        if (!p.any_pattern())
          std::cout << "no pattern\n";
        std::cout << "gubin=" << to_string(c.gubin_verdict)
                  << " consistent_with_claim=" << (c.consistent_with_claim ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (reduce_cmd->parsed()) {
      const Formula f = read_dimacs_file(file);
      const ReductionReport r = reduction_refutation(f);
      const Formula emitted = r.emitted.to_formula();
      if (!out_path.empty())
        write_dimacs_file(out_path, emitted);
      if (as_json)
        std::cout << json{{"gubin", to_string(r.gubin_verdict)},
                          {"oracle", verdict_word(r.oracle_sat)},
                          {"bottom_right", r.bottom_right.to_rows()},
                          {"emitted", emitted.to_int_lists()},
                          {"one_sat_satisfiable", r.one_sat_satisfiable},
                          {"reduction_sound", r.reduction_sound}}
                         .dump()
                  << "\n";
      else
        std::cout << "gubin=" << to_string(r.gubin_verdict) << " oracle=" << verdict_word(r.oracle_sat)
                  << " one_sat_satisfiable=" << (r.one_sat_satisfiable ? "true" : "false")
                  << " reduction_sound=" << (r.reduction_sound ? "true" : "false") << "\n";
      return 0;
    }

    if (replay_cmd->parsed()) {
      const auto results = replay(golden_fixtures());
      const bool ok = std::all_of(results.begin(), results.end(),
                                  [](const FixtureResult &r) { return r.pass; });
      if (as_json) {
        std::cout << to_json(results).dump() << "\n";
      } else {
        for (const FixtureResult &r : results) {
          std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " - " << r.locus << "\n";
          if (!r.pass)
            std::cout << "  expected " << r.expected << "\n  actual   " << r.actual << "\n";
        }
      }
      return ok ? 0 : 1;
    }

    if (probe_cmd->parsed()) {
      auto family = [&](std::size_t m) { return planted_formula(probe_vars, m, 3, probe_seed); };
      const auto rows = complexity_probe(family, parse_sizes(sizes_csv));
      json out = json::array();
      for (const ProbeRow &row : rows) {
        if (as_json)
          out.push_back({{"m", row.m},
                         {"column_pair_tests", row.counters.column_pair_tests},
                         {"entry_eliminations", row.counters.entry_eliminations},
                         {"matrices_depleted", row.counters.matrices_depleted}});
        else
          std::cout << "m=" << row.m << " column_pair_tests=" << row.counters.column_pair_tests
                    << " matrices_depleted=" << row.counters.matrices_depleted << "\n";
      }
      if (as_json)
        std::cout << out.dump() << "\n";
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
