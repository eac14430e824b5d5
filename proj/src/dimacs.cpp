#include "gubin/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gubin {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int> bool parse_int(std::string_view tok, Int &out) {
  const char *first = tok.data();
  const char *last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

} // namespace

const char *to_string(DimacsErrorKind kind) {
  switch (kind) {
  case DimacsErrorKind::MissingHeader:
    return "missing header";
  case DimacsErrorKind::MalformedHeader:
    return "malformed header";
  case DimacsErrorKind::BadToken:
    return "bad token";
  case DimacsErrorKind::LiteralOutOfRange:
    return "literal out of range";
  case DimacsErrorKind::EmptyClause:
    return "empty clause";
  case DimacsErrorKind::UnterminatedClause:
    return "unterminated clause";
  case DimacsErrorKind::ClauseCountMismatch:
    return "clause count mismatch";
  }
  return "unknown";
}

DimacsError::DimacsError(DimacsErrorKind kind, std::size_t line, const std::string &detail)
    : std::runtime_error("dimacs line " + std::to_string(line) + ": " + to_string(kind) +
                         (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind), line_(line) {}

Formula parse_dimacs(std::string_view text) {
  bool have_header = false;
  std::uint32_t nvars = 0;
  std::size_t nclauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> current;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty())
      continue;
    if (toks[0][0] == 'c')
      continue;
    if (toks[0][0] == '%')
      break;
    if (toks[0] == "p") {
      if (have_header)
        throw DimacsError(DimacsErrorKind::MalformedHeader, line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf" || !parse_int(toks[2], nvars) ||
          !parse_int(toks[3], nclauses))
        throw DimacsError(DimacsErrorKind::MalformedHeader, line_no, std::string(line));
      have_header = true;
      continue;
    }
    if (!have_header)
      throw DimacsError(DimacsErrorKind::MissingHeader, line_no, "");
    // Trailing "0"-only lines after the last declared clause.
    if (toks.size() == 1 && toks[0] == "0" && current.empty() && clauses.size() == nclauses)
      continue;

    for (std::string_view tok : toks) {
      long long lit = 0;
      if (!parse_int(tok, lit))
        throw DimacsError(DimacsErrorKind::BadToken, line_no, std::string(tok));
      if (lit == 0) {
        if (current.empty())
          throw DimacsError(DimacsErrorKind::EmptyClause, line_no,
                            "clause " + std::to_string(clauses.size() + 1));
        clauses.emplace_back(std::move(current));
        current.clear();
        continue;
      }
      const long long mag = lit < 0 ? -lit : lit;
      if (mag > static_cast<long long>(nvars))
        throw DimacsError(DimacsErrorKind::LiteralOutOfRange, line_no, std::string(tok));
      current.push_back(Literal::from_dimacs(static_cast<int>(lit)));
    }
  }

  if (!have_header)
    throw DimacsError(DimacsErrorKind::MissingHeader, line_no, "");
  if (!current.empty())
    throw DimacsError(DimacsErrorKind::UnterminatedClause, line_no, "");
  if (clauses.size() != nclauses)
    throw DimacsError(DimacsErrorKind::ClauseCountMismatch, line_no,
                      "header says " + std::to_string(nclauses) + ", found " +
                          std::to_string(clauses.size()));
  return Formula(std::move(clauses), nvars);
}

Formula read_dimacs_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dimacs(ss.str());
}

std::string serialize_dimacs(const Formula &f) {
  std::ostringstream os;
  os << "p cnf " << f.var_count() << ' ' << f.size() << '\n';
  for (const Clause &c : f.clauses()) {
    for (const Literal &l : c.literals())
      os << l.to_dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

void write_dimacs_file(const std::string &path, const Formula &f) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << serialize_dimacs(f);
}

} // namespace gubin
