#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gubin/harness.hpp"

namespace gubin {

struct CorpusEntry {
  Formula formula;
  std::uint64_t seed = 0;
  GenConfig cfg;
  GubinVerdict gubin_verdict = GubinVerdict::Sat;
  bool oracle_sat = false;
  std::optional<Formula> minimized;
};

/// 16 hex digits of FNV-1a 64 over the formula's DIMACS text.
std::string content_hash(const Formula &f);

std::vector<CorpusEntry> corpus_from_mine(const GenConfig &cfg, const MineReport &report,
                                          bool with_minimized, const DiffOptions &opts = {});

/// [{hash, seed, cfg, gubin, oracle, minimized_hash}, ...] in entry order.
nlohmann::json corpus_index(const std::vector<CorpusEntry> &entries);

/// Writes <dir>/<hash>.cnf for every formula and minimized form, plus
/// <dir>/index.json. Creates `dir` if needed.
void write_corpus(const std::filesystem::path &dir, const std::vector<CorpusEntry> &entries);

} // namespace gubin
