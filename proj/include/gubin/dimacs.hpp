#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gubin/cnf.hpp"

namespace gubin {

enum class DimacsErrorKind {
  MissingHeader,
  MalformedHeader,
  BadToken,
  LiteralOutOfRange,
  EmptyClause,
  UnterminatedClause,
  ClauseCountMismatch,
};

const char *to_string(DimacsErrorKind kind);

class DimacsError : public std::runtime_error {
public:
  DimacsError(DimacsErrorKind kind, std::size_t line, const std::string &detail);

  DimacsErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

private:
  DimacsErrorKind kind_;
  std::size_t line_;
};

/// Parses DIMACS CNF. Clause order follows the file. A line beginning with
/// '%' ends the clause section (legacy SATLIB trailer).
Formula parse_dimacs(std::string_view text);
Formula read_dimacs_file(const std::string &path);

/// Header uses the formula's var_count; one clause per line.
std::string serialize_dimacs(const Formula &f);
void write_dimacs_file(const std::string &path, const Formula &f);

} // namespace gubin
