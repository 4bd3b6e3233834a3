#pragma once

// Expression front end.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' nat)?
//   atom   := 'A' | 'B' | 'C' | 'I' | 'q' | nat | '[' expr ',' expr ']' | '(' expr ')'
//
// '/' is only valid when the right operand elaborates to a scalar multiple
// of I. A rational literal a/b is the division of two naturals.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qheis/element.hpp"

namespace qheis::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Raised by elaborate() for semantically invalid input (e.g. division by a
// non-scalar); carries the source position of the offending node.
class ElaborationError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Exponents above this are rejected as overflow.
inline constexpr long kMaxExponent = 4096;

struct ExprAst {
  enum class Kind { Sum, Difference, Product, Quotient, Negate, Power, Bracket, LetterA, LetterB, LetterC, Identity, Q, Number };
  Kind kind;
  int line = 1;
  int column = 1;
  std::vector<std::unique_ptr<ExprAst>> children;
  std::string number;  // decimal digits, for Number
  long exponent = 0;   // for Power

  std::string to_string() const;
};

std::unique_ptr<ExprAst> parse_expression(const std::string& text);

Element elaborate(const ExprAst& ast, const ScalarContext& ctx);

// parse + elaborate
Element evaluate(const std::string& text, const ScalarContext& ctx);

}  // namespace qheis::cli
