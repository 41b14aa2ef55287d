#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tptl/formula.hpp"

namespace tptl {

/// Syntax error with a 1-based source position and the tokens that would
/// have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             std::string found, std::string detail = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Parse a TPTL formula.
///
///   formula := implies
///   implies := or ("->" implies)?
///   or      := and (("\/" | "|") and)*
///   and     := until (("/\" | "&") until)*
///   until   := unary (("U" | "R") until)?
///   unary   := ("!" | "~" | "X" | "F" | "G" | "<>" | "[]") unary
///            | IDENT "." unary | atom
///   atom    := "true" | "false" | IDENT | IDENT CMP NUMBER | "(" formula ")"
///   CMP     := "<=" | "<" | "=" | ">" | ">="
///
/// `false` becomes Not(True).  Constraint bounds must be non-negative
/// literals; comparing two variables is rejected.
Formula parse(std::string_view text);

}  // namespace tptl
