#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccf/canonical_formula.hpp"
#include "ccf/quaternion.hpp"

namespace ccf::expr {

enum class TokenKind {
  Number, Basis, Sqrt2, Plus, Minus, Star, Slash, Caret, ConjStar,
  LBrace, RBrace, Colon, Comma, LParen, RParen, Ident, End
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t begin = 0; // byte offsets into the input
  std::size_t end = 0;
};

std::string_view token_kind_name(TokenKind k);

/// Maximal-munch lexer.  "sqrt2" and "√2" both lex to Sqrt2, "^*" is the
/// postfix conjugation.  Throws LexError with the byte offset.  The result
/// always ends with an End token.
std::vector<Token> tokenize(std::string_view text);

struct Ast {
  enum class Kind { Literal, Neg, Add, Sub, Mul, Div, LDiv, Pow, Conj, Jordan, Ratio, Phi, Lambda, Cf };

  Kind kind = Kind::Literal;
  Quat literal;           // Literal
  long long exponent = 0; // Pow
  std::vector<Ast> args;
  std::size_t begin = 0; // source span, ignored by ==
  std::size_t end = 0;

  friend bool operator==(const Ast& x, const Ast& y);
};

/// Recursive descent.  Precedence from loosest: + −, then * /, then ^ with a
/// literal integer exponent (negative ones parenthesized), then prefix −,
/// then postfix ^*.  {u : v} is a ratio, {u, v} a Jordan product.
/// Functions: phi(x,a), lambda(q), cf(x,a,y,b), ldiv(u,v), conj(u).
/// Throws ParseError with the expected-token set and byte position.
Ast parse(const std::vector<Token>& tokens);
Ast parse(std::string_view text);

/// Source text that parses back to an equal tree.
std::string format(const Ast& ast);

using Value = std::variant<Quat, CFCheck>;

/// Exact evaluation.  u/v is u·v⁻¹ and ldiv(u,v) is v⁻¹·u.  Throws
/// DomainError (phi/cf arguments outside Q, degenerate valences, cf used as a
/// quaternion) and DivisionByZeroAt.
Value eval(const Ast& ast, RatioConvention convention = RatioConvention::Plain);

} // namespace ccf::expr
