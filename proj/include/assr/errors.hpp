#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace assr {

/// A matrix was required to be type-I or type-II staircase and is not.
class not_staircase_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition (rank, staircase type, prior verdict) does not hold.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would visit more minors than the configured budget allows.
class budget_exceeded_error : public std::runtime_error {
 public:
  budget_exceeded_error(std::uint64_t required, std::uint64_t limit)
      : std::runtime_error("minor budget exceeded: " + std::to_string(required) +
                           " minors required, budget is " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// Modified Gram-Schmidt met a column that is numerically dependent on the previous ones.
class rank_deficiency_error : public std::runtime_error {
 public:
  explicit rank_deficiency_error(std::size_t column)
      : std::runtime_error("matrix is numerically rank deficient at column " +
                           std::to_string(column)),
        column_(column) {}

  /// 1-based column index.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Malformed matrix file or entry. Line and column are 1-based; 0 means unknown.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace assr
