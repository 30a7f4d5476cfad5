#include "hsk/schemes.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hsk {

namespace {

// Reads the next non-blank line with comments stripped; false at EOF.
bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    line = raw;
    return true;
  }
  return false;
}

long parse_long(const std::string& tok, int lineno) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", lineno);
  }
  if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", lineno);
  return v;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

}  // namespace

AssociationScheme read_scheme(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError("missing header `n d`", lineno + 1);
  auto head = tokens(line);
  if (head.size() != 2) throw ParseError("header must be `n d`", lineno);
  const long n = parse_long(head[0], lineno);
  const long d = parse_long(head[1], lineno);
  if (n < 1 || n > 4096) throw ParseError("point count out of range", lineno);
  if (d < 1) throw ParseError("class count must be positive", lineno);

  std::vector<std::vector<int>> rel;
  while (static_cast<long>(rel.size()) < n) {
    if (!next_data_line(in, line, lineno)) {
      throw ParseError("unexpected end of file after " + std::to_string(rel.size()) + " of " +
                           std::to_string(n) + " rows",
                       lineno + 1);
    }
    auto toks = tokens(line);
    if (static_cast<long>(toks.size()) != n) {
      throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected " +
                           std::to_string(n),
                       lineno);
    }
    std::vector<int> row;
    for (const auto& t : toks) {
      const long v = parse_long(t, lineno);
      if (v < 0 || v > d) throw ParseError("relation index " + t + " outside [0, " + std::to_string(d) + "]", lineno);
      row.push_back(static_cast<int>(v));
    }
    rel.push_back(std::move(row));
  }
  if (next_data_line(in, line, lineno)) throw ParseError("trailing data after the last row", lineno);
  try {
    return AssociationScheme(std::move(rel), static_cast<int>(d));
  } catch (const SchemeError& e) {
    throw ParseError(e.what(), lineno);
  }
}

void write_scheme(std::ostream& out, const AssociationScheme& s) {
  out << s.n() << ' ' << s.d() << '\n';
  for (std::size_t x = 0; x < s.n(); ++x) {
    for (std::size_t y = 0; y < s.n(); ++y) out << (y ? " " : "") << s.relation(x, y);
    out << '\n';
  }
}

AssociationScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_scheme(in);
}

void save_scheme(const AssociationScheme& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_scheme(out, s);
}

Matrix<int> read_hadamard_seed(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError("missing order line", lineno + 1);
  auto head = tokens(line);
  if (head.size() != 1) throw ParseError("first line must hold the order only", lineno);
  const long n = parse_long(head[0], lineno);
  if (n < 1 || n > 1024) throw ParseError("order out of range", lineno);
  Matrix<int> h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    if (!next_data_line(in, line, lineno)) throw ParseError("unexpected end of file", lineno + 1);
    std::vector<int> row;
    if (line.find_first_not_of("+- \t\r") == std::string::npos && line.find("-1") == std::string::npos) {
      for (char ch : line) {
        if (ch == '+') row.push_back(1);
        else if (ch == '-') row.push_back(-1);
      }
    } else {
      for (const auto& t : tokens(line)) {
        const long v = parse_long(t, lineno);
        if (v != 1 && v != -1) throw ParseError("entries must be +1 or -1", lineno);
        row.push_back(static_cast<int>(v));
      }
    }
    if (static_cast<long>(row.size()) != n) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n),
                       lineno);
    }
    for (long j = 0; j < n; ++j) h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = row[static_cast<std::size_t>(j)];
  }
  if (next_data_line(in, line, lineno)) throw ParseError("trailing data after the last row", lineno);
  return h;
}

Matrix<int> load_hadamard_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hadamard_seed(in);
}

}  // namespace hsk
