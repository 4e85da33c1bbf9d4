#ifndef HOMOG_ERRORS_HPP
#define HOMOG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homog {

// Parse failure with input position (1-based line/column).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Raised when the oracle would enumerate more words than its budget allows.
// Carries the last degree that was fully computed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& msg, unsigned degree_reached)
      : std::runtime_error(msg + " (reached degree " +
                           std::to_string(degree_reached) + ")"),
        degree_reached_(degree_reached) {}

  unsigned degree_reached() const noexcept { return degree_reached_; }

 private:
  unsigned degree_reached_;
};

}  // namespace homog

#endif  // HOMOG_ERRORS_HPP
