#pragma once

#include <stdexcept>
#include <string>

namespace quadop {

// Malformed text: CLI arguments, presentation files, structure-constant
// files, monomial strings. Carries a 1-based line/column when known.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    std::string s = what + " (line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    return s + ")";
  }

  int line_;
  int column_;
};

// Well-formed input that violates a precondition (unknown operad name,
// arity out of range, non-bijective permutation, ...).
class invalid_input : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A violated internal invariant; indicates a bug, never bad user input.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace quadop
