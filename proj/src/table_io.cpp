#include "qpl/table_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace qpl {

TableParseError::TableParseError(int line, int column,
                                 const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

namespace {

struct Line {
  int number;
  std::string text;
};

// Content lines with comments and blanks removed; numbers are 1-based.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    out.push_back({number, raw});
  }
  return out;
}

std::vector<int> parse_int_line(const Line& line, int expected_count,
                                int max_value) {
  std::vector<int> values;
  std::size_t i = 0;
  const std::string& s = line.text;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    bool digits = true;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') {
      if (s[i] < '0' || s[i] > '9') digits = false;
      ++i;
    }
    if (!digits) {
      throw TableParseError(line.number, static_cast<int>(start) + 1,
                            "expected a non-negative integer");
    }
    int value = 0;
    try {
      value = std::stoi(s.substr(start, i - start));
    } catch (const std::out_of_range&) {
      throw TableParseError(line.number, static_cast<int>(start) + 1,
                            "integer out of range");
    }
    if (value >= max_value) {
      throw TableParseError(line.number, static_cast<int>(start) + 1,
                            "entry " + std::to_string(value) +
                                " out of range [0, " +
                                std::to_string(max_value) + ")");
    }
    values.push_back(value);
  }
  if (static_cast<int>(values.size()) != expected_count) {
    throw TableParseError(line.number, 1,
                          "expected " + std::to_string(expected_count) +
                              " entries, found " +
                              std::to_string(values.size()));
  }
  return values;
}

}  // namespace

Quasigroup read_table(std::istream& in) {
  const std::vector<Line> lines = content_lines(in);
  if (lines.empty()) {
    throw TableParseError(1, 1, "missing order line");
  }
  const std::vector<int> header = parse_int_line(lines[0], 1, 1 << 20);
  const int n = header[0];
  if (n < 1) throw TableParseError(lines[0].number, 1, "order must be >= 1");
  if (static_cast<int>(lines.size()) != n + 1) {
    throw TableParseError(lines.back().number, 1,
                          "expected " + std::to_string(n) +
                              " table rows after the order line, found " +
                              std::to_string(lines.size() - 1));
  }
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const std::vector<int> row = parse_int_line(lines[r + 1], n, n);
    table.insert(table.end(), row.begin(), row.end());
  }
  try {
    return Quasigroup(n, std::move(table));
  } catch (const std::invalid_argument& e) {
    throw TableParseError(lines[1].number, 1, e.what());
  }
}

Quasigroup read_table_text(const std::string& text) {
  std::istringstream in(text);
  return read_table(in);
}

Quasigroup read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw TableParseError(1, 1, "cannot open '" + path + "'");
  }
  return read_table(in);
}

std::string format_table(const Quasigroup& q) {
  std::string out = std::to_string(q.order());
  out += '\n';
  for (int x = 0; x < q.order(); ++x) {
    for (int y = 0; y < q.order(); ++y) {
      if (y > 0) out += ' ';
      out += std::to_string(q.mul(x, y));
    }
    out += '\n';
  }
  return out;
}

std::string format_perm(const Perm& p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

EvansWitness read_evans_witness(std::istream& in, int degree) {
  const std::vector<Line> lines = content_lines(in);
  if (lines.size() != 10) {
    throw TableParseError(lines.empty() ? 1 : lines.back().number, 1,
                          "expected 10 permutation lines (P1..P5, Q1..Q5), "
                          "found " +
                              std::to_string(lines.size()));
  }
  std::vector<Perm> perms;
  for (const Line& line : lines) {
    std::vector<int> images = parse_int_line(line, degree, degree);
    try {
      perms.push_back(Perm(std::move(images)));
    } catch (const std::invalid_argument& e) {
      throw TableParseError(line.number, 1, e.what());
    }
  }
  return EvansWitness{
      {perms[0], perms[1], perms[2], perms[3], perms[4]},
      {perms[5], perms[6], perms[7], perms[8], perms[9]},
  };
}

EvansWitness read_evans_witness_file(const std::string& path, int degree) {
  std::ifstream in(path);
  if (!in) {
    throw TableParseError(1, 1, "cannot open '" + path + "'");
  }
  return read_evans_witness(in, degree);
}

}  // namespace qpl
