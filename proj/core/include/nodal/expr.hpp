#pragma once

#include "nodal/poly.hpp"
#include "nodal/rational.hpp"
#include "nodal/weyl.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nodal {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Syntax tree for operator expressions such as "(t^2 - 1) d".
///
///   expr   := term (('+' | '-') term)*
///   term   := ['-' | '+'] factor factor*      juxtaposition, left to right
///   factor := atom ('^' nat)*
///   atom   := rational | 't' | 'd' | '(' expr ')'
///   rational := nat ['/' nat]
///
/// 'd' stands for the derivation d/dt. Products are noncommutative.
struct ExprAst {
  enum class Kind { Literal, SymbolT, SymbolD, Sum, Product, Power, Negate, Group };

  Kind kind = Kind::Literal;
  SourcePos pos;
  Rational value;                 // Literal
  unsigned exponent = 0;          // Power
  std::vector<ExprAst> children;  // Sum, Product: operands; Power, Negate, Group: one child

  friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(SourcePos pos, std::vector<std::string> expected, const std::string& message);

  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

/// Throws ParseError with position and expected-token set.
ExprAst parse_expr(std::string_view source);

/// Evaluates the tree in the Weyl algebra.
WeylOp lower(const ExprAst& ast);

/// parse_expr followed by lower.
WeylOp parse_operator(std::string_view source);

/// Parses a polynomial in t; any occurrence of 'd' is a ParseError.
Poly parse_polynomial(std::string_view source);

}  // namespace nodal
