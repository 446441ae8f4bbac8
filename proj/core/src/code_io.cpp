#include "codedomain/code_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "codedomain/errors.hpp"

namespace codedomain {

namespace {

char symbol_char(Symbol s) {
  return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

Symbol char_symbol(char c) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(c - 'a' + 10);
  if (c >= 'A' && c <= 'Z') return static_cast<Symbol>(c - 'A' + 10);
  throw ContractViolation(std::string("invalid symbol character '") + c + "'");
}

}  // namespace

void write_code(std::ostream& out, const Code& c) {
  if (c.q() > 36) throw ContractViolation("code text format supports q <= 36");
  out << c.q() << ' ' << c.length() << ' ' << c.size() << '\n';
  std::string line(c.length(), '0');
  for (std::size_t w = 0; w < c.size(); ++w) {
    auto row = c.row(w);
    for (std::size_t i = 0; i < row.size(); ++i) line[i] = symbol_char(row[i]);
    out << line << '\n';
  }
}

Code read_code(std::istream& raw) {
  std::string body, line;
  while (std::getline(raw, line)) {
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    body += line;
    body += '\n';
  }
  std::istringstream in(body);
  unsigned q = 0;
  std::size_t n = 0, m = 0;
  if (!(in >> q >> n >> m)) throw ContractViolation("code file: malformed header, expected 'q n m'");
  if (q < 2 || q > 36) throw ContractViolation("code file: q must be in [2, 36]");
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(m);
  std::string token;
  for (std::size_t w = 0; w < m; ++w) {
    if (!(in >> token)) throw ContractViolation("code file: fewer words than declared");
    if (token.size() != n) throw ContractViolation("code file: word of wrong length");
    std::vector<Symbol> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = char_symbol(token[i]);
    rows.push_back(std::move(row));
  }
  if (in >> token) throw ContractViolation("code file: more words than declared");
  return Code::from_rows(q, rows);
}

std::string code_to_text(const Code& c) {
  std::ostringstream out;
  write_code(out, c);
  return out.str();
}

Code code_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_code(in);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

std::string point_csv_row(const CodeParams& p) {
  CodePoint pt = code_point(p);
  return std::to_string(p.n) + "," + p.m.get_str() + "," + std::to_string(p.d) + "," + to_string(pt.r) + "," +
         to_string(pt.delta) + "," + format_double(to_double(pt.r)) + "," + format_double(to_double(pt.delta));
}

}  // namespace codedomain
