#include "gubin/corpus.hpp"

#include <cstdio>
#include <fstream>

#include "gubin/dimacs.hpp"

namespace gubin {

std::string content_hash(const Formula &f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_dimacs(f)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<CorpusEntry> corpus_from_mine(const GenConfig &cfg, const MineReport &report,
                                          bool with_minimized, const DiffOptions &opts) {
  std::vector<CorpusEntry> out;
  out.reserve(report.mismatches.size());
  for (const Mismatch &mm : report.mismatches) {
    CorpusEntry e;
    e.formula = mm.formula;
    e.seed = mm.seed;
    e.cfg = cfg;
    e.cfg.seed = mm.seed;
    e.gubin_verdict = mm.gubin_verdict;
    e.oracle_sat = mm.oracle_sat;
    if (with_minimized)
      e.minimized = minimize(mm, opts);
    out.push_back(std::move(e));
  }
  return out;
}

nlohmann::json corpus_index(const std::vector<CorpusEntry> &entries) {
  nlohmann::json index = nlohmann::json::array();
  for (const CorpusEntry &e : entries) {
    index.push_back({
        {"hash", content_hash(e.formula)},
        {"seed", e.seed},
        {"cfg",
         {{"n_vars", e.cfg.n_vars},
          {"n_clauses", e.cfg.n_clauses},
          {"max_width", e.cfg.max_width},
          {"seed", e.cfg.seed},
          {"allow_duplicate_clauses", e.cfg.allow_duplicate_clauses}}},
        {"gubin", to_string(e.gubin_verdict)},
        {"oracle", e.oracle_sat ? "SAT" : "UNSAT"},
        {"minimized_hash",
         e.minimized ? nlohmann::json(content_hash(*e.minimized)) : nlohmann::json(nullptr)},
    });
  }
  return index;
}

void write_corpus(const std::filesystem::path &dir, const std::vector<CorpusEntry> &entries) {
  std::filesystem::create_directories(dir);
  auto write = [&](const Formula &f) {
    write_dimacs_file((dir / (content_hash(f) + ".cnf")).string(), f);
  };
  for (const CorpusEntry &e : entries) {
    write(e.formula);
    if (e.minimized)
      write(*e.minimized);
  }
  std::ofstream out(dir / "index.json", std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + (dir / "index.json").string());
  out << corpus_index(entries).dump(2) << '\n';
}

} // namespace gubin
