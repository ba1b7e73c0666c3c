#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "assr/errors.hpp"
#include "assr/matrix.hpp"
#include "assr/rational.hpp"

namespace assr {

// Matrix file format:
//
//   # comment to end of line
//   m n
//   a11 a12 ... a1n
//   ...
//   am1 ... amn
//
// Blank lines are ignored. Each entry is an integer, a finite or scientific
// decimal, or a fraction p/q, with an optional sign; all are read exactly.

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::size_t parse_dimension(const Token& t, std::size_t line) {
  std::size_t value = 0;
  if (t.text.empty() || t.text.size() > 9) throw parse_error("bad dimension '" + std::string(t.text) + "'", line, t.column);
  for (char c : t.text) {
    if (c < '0' || c > '9') throw parse_error("bad dimension '" + std::string(t.text) + "'", line, t.column);
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  if (value == 0) throw parse_error("dimensions must be positive", line, t.column);
  return value;
}

}  // namespace detail

inline RationalMatrix parse_matrix(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t m = 0, n = 0;
  bool have_header = false;
  std::vector<Rational> entries;
  std::size_t rows_read = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = detail::tokenize_line(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 2) throw parse_error("header must be 'm n'", line_no, tokens.front().column);
      m = detail::parse_dimension(tokens[0], line_no);
      n = detail::parse_dimension(tokens[1], line_no);
      have_header = true;
      entries.reserve(m * n);
    } else {
      if (rows_read == m) throw parse_error("more than " + std::to_string(m) + " rows", line_no, tokens.front().column);
      if (tokens.size() != n)
        throw parse_error("expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()),
                          line_no, tokens.size() > n ? tokens[n].column : tokens.front().column);
      for (const auto& t : tokens) {
        try {
          entries.push_back(Rational::parse(t.text));
        } catch (const std::invalid_argument& e) {
          throw parse_error(e.what(), line_no, t.column);
        }
      }
      ++rows_read;
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw parse_error("empty matrix file", line_no, 1);
  if (rows_read != m)
    throw parse_error("expected " + std::to_string(m) + " rows, found " + std::to_string(rows_read), line_no, 1);
  return RationalMatrix(m, n, std::move(entries));
}

inline RationalMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

/// Header line, then one row per line with entries separated by single spaces.
inline std::string format_matrix(const RationalMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (j > 1) out += ' ';
      out += a(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace assr
