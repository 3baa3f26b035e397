#include "nodal/expr.hpp"

#include <cctype>
#include <climits>
#include <optional>

namespace nodal {

namespace {

enum class Tok { Number, Slash, T, D, Plus, Minus, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& tok) {
  if (tok.kind == Tok::End) return "end of input";
  return "'" + tok.text + "'";
}

std::string format_message(SourcePos pos, const std::vector<std::string>& expected,
                           const std::string& message) {
  std::string out = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected one of:";
    for (const auto& e : expected) out += " " + e;
    out += ")";
  }
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token tok;
      tok.pos = {line_, column_};
      if (at_ == src_.size()) {
        out.push_back(tok);
        return out;
      }
      const char ch = src_[at_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        tok.kind = Tok::Number;
        while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]))) {
          tok.text += src_[at_];
          advance();
        }
        out.push_back(std::move(tok));
        continue;
      }
      switch (ch) {
        case '/': tok.kind = Tok::Slash; break;
        case 't': tok.kind = Tok::T; break;
        case 'd': tok.kind = Tok::D; break;
        case '+': tok.kind = Tok::Plus; break;
        case '-': tok.kind = Tok::Minus; break;
        case '^': tok.kind = Tok::Caret; break;
        case '(': tok.kind = Tok::LParen; break;
        case ')': tok.kind = Tok::RParen; break;
        default:
          throw ParseError(tok.pos, {"number", "'t'", "'d'", "'('", "'+'", "'-'", "'^'"},
                           std::string("unexpected character '") + ch + "'");
      }
      tok.text = std::string(1, ch);
      advance();
      out.push_back(std::move(tok));
    }
  }

 private:
  void advance() {
    if (src_[at_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++at_;
  }
  void skip_space() {
    while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_]))) advance();
  }

  std::string_view src_;
  std::size_t at_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprAst parse() {
    ExprAst ast = expr();
    if (peek().kind != Tok::End) {
      const char* closer = depth_ > 0 ? "')'" : "end of input";
      throw ParseError(peek().pos, {"'+'", "'-'", closer}, "unexpected " + describe(peek()));
    }
    return ast;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  Token take() { return tokens_[at_++]; }

  static bool starts_factor(Tok kind) {
    return kind == Tok::Number || kind == Tok::T || kind == Tok::D || kind == Tok::LParen;
  }

  ExprAst expr() {
    ExprAst sum{ExprAst::Kind::Sum, peek().pos, {}, 0, {}};
    sum.children.push_back(term());
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = take();
      ExprAst rhs = term();
      if (op.kind == Tok::Minus) rhs = ExprAst{ExprAst::Kind::Negate, op.pos, {}, 0, {std::move(rhs)}};
      sum.children.push_back(std::move(rhs));
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  ExprAst term() {
    const Token& first = peek();
    if (first.kind == Tok::Minus || first.kind == Tok::Plus) {
      const Token sign = take();
      ExprAst inner = product();
      if (sign.kind == Tok::Plus) return inner;
      return ExprAst{ExprAst::Kind::Negate, sign.pos, {}, 0, {std::move(inner)}};
    }
    return product();
  }

  ExprAst product() {
    ExprAst prod{ExprAst::Kind::Product, peek().pos, {}, 0, {}};
    prod.children.push_back(factor());
    while (starts_factor(peek().kind)) prod.children.push_back(factor());
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  ExprAst factor() {
    ExprAst base = atom();
    while (peek().kind == Tok::Caret) {
      const Token caret = take();
      const unsigned exponent = natural_exponent();
      base = ExprAst{ExprAst::Kind::Power, caret.pos, {}, exponent, {std::move(base)}};
    }
    return base;
  }

  unsigned natural_exponent() {
    const Token& tok = peek();
    if (tok.kind == Tok::Minus) {
      throw ParseError(tok.pos, {"nonnegative integer"}, "negative exponent");
    }
    if (tok.kind != Tok::Number) {
      throw ParseError(tok.pos, {"nonnegative integer"}, "unexpected " + describe(tok) + " after '^'");
    }
    const Token num = take();
    if (peek().kind == Tok::Slash) {
      throw ParseError(peek().pos, {"nonnegative integer"}, "fractional exponent");
    }
    if (num.text.size() > 9) throw ParseError(num.pos, {}, "exponent " + num.text + " too large");
    return static_cast<unsigned>(std::stoul(num.text));
  }

  ExprAst atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Number: {
        const Token num = take();
        std::string text = num.text;
        if (peek().kind == Tok::Slash) {
          take();
          if (peek().kind != Tok::Number) {
            throw ParseError(peek().pos, {"number"}, "unexpected " + describe(peek()) + " after '/'");
          }
          text += "/" + take().text;
        }
        try {
          return ExprAst{ExprAst::Kind::Literal, num.pos, Rational::parse(text), 0, {}};
        } catch (const std::invalid_argument& e) {
          throw ParseError(num.pos, {}, e.what());
        }
      }
      case Tok::T:
        return ExprAst{ExprAst::Kind::SymbolT, take().pos, {}, 0, {}};
      case Tok::D:
        return ExprAst{ExprAst::Kind::SymbolD, take().pos, {}, 0, {}};
      case Tok::LParen: {
        const Token open = take();
        ++depth_;
        ExprAst inner = expr();
        if (peek().kind != Tok::RParen) {
          throw ParseError(peek().pos, {"')'", "'+'", "'-'"}, "unexpected " + describe(peek()));
        }
        take();
        --depth_;
        return ExprAst{ExprAst::Kind::Group, open.pos, {}, 0, {std::move(inner)}};
      }
      default:
        throw ParseError(tok.pos, {"number", "'t'", "'d'", "'('"}, "unexpected " + describe(tok));
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  int depth_ = 0;
};

WeylOp power(const WeylOp& base, unsigned exponent) {
  WeylOp result(1);
  WeylOp square = base;
  while (exponent != 0) {
    if (exponent & 1U) result = weyl_mul(result, square);
    exponent >>= 1U;
    if (exponent != 0) square = weyl_mul(square, square);
  }
  return result;
}

std::optional<SourcePos> find_d(const ExprAst& ast) {
  if (ast.kind == ExprAst::Kind::SymbolD) return ast.pos;
  for (const auto& child : ast.children) {
    if (auto pos = find_d(child)) return pos;
  }
  return std::nullopt;
}

}  // namespace

ParseError::ParseError(SourcePos pos, std::vector<std::string> expected, const std::string& message)
    : std::invalid_argument(format_message(pos, expected, message)),
      pos_(pos),
      expected_(std::move(expected)) {}

ExprAst parse_expr(std::string_view source) { return Parser(Lexer(source).run()).parse(); }

WeylOp lower(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprAst::Kind::Literal: return WeylOp(ast.value);
    case ExprAst::Kind::SymbolT: return WeylOp::t();
    case ExprAst::Kind::SymbolD: return WeylOp::d();
    case ExprAst::Kind::Sum: {
      WeylOp out;
      for (const auto& child : ast.children) out += lower(child);
      return out;
    }
    case ExprAst::Kind::Product: {
      WeylOp out(1);
      for (const auto& child : ast.children) out = weyl_mul(out, lower(child));
      return out;
    }
    case ExprAst::Kind::Power: return power(lower(ast.children.front()), ast.exponent);
    case ExprAst::Kind::Negate: return -lower(ast.children.front());
    case ExprAst::Kind::Group: return lower(ast.children.front());
  }
  return {};
}

WeylOp parse_operator(std::string_view source) { return lower(parse_expr(source)); }

Poly parse_polynomial(std::string_view source) {
  const ExprAst ast = parse_expr(source);
  if (auto pos = find_d(ast)) {
    throw ParseError(*pos, {"number", "'t'", "'('"}, "'d' is not allowed in a polynomial");
  }
  return to_poly(lower(ast));
}

}  // namespace nodal
