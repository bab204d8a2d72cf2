#include "ccf/expr.hpp"

#include <cctype>

#include "ccf/errors.hpp"

namespace ccf::expr {

namespace {

constexpr std::size_t kMaxDepth = 200;
constexpr long long kMaxExponent = 4096;
constexpr std::size_t kMaxBits = 1 << 16;
constexpr std::string_view kRootSign = "\xE2\x88\x9A"; // U+221A

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

// cpp_int reads a leading 0 as an octal prefix.
BigInt decimal_digits(const std::string& digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
}

Rat parse_decimal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rat(decimal_digits(text), BigInt(1));
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  BigInt scale = 1;
  for (std::size_t n = 0; n < frac.size(); ++n) scale *= 10;
  return Rat(decimal_digits(whole + frac), scale);
}

// Exact decimal text for a non-negative rational whose denominator is 2^a·5^b.
std::optional<std::string> decimal_text(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  BigInt den = r.den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return std::nullopt;
  const int places = std::max(twos, fives);
  BigInt scaled = r.num();
  for (int n = 0; n < places; ++n) scaled *= 10;
  scaled /= r.den();
  std::string digits = scaled.str();
  if (places == 0) return digits;
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits = std::string(places - digits.size() + 1, '0') + digits;
  }
  digits.insert(digits.size() - places, ".");
  return digits;
}

class Parser {
public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Ast parse_all() {
    Ast out = expression();
    expect(TokenKind::End, "end of input");
    return out;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokenKind k) const { return peek().kind == k; }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.begin, expected,
                     "expected " + expected + " but found " + found + " at offset " + std::to_string(t.begin));
  }

  const Token& expect(TokenKind k, const std::string& expected) {
    if (!at(k)) fail(expected);
    return advance();
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) {
        throw ParseError(p_.peek().begin, "shallower expression", "expression nested too deeply");
      }
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };

  static Ast node(Ast::Kind kind, std::vector<Ast> args, std::size_t begin, std::size_t end) {
    Ast a;
    a.kind = kind;
    a.args = std::move(args);
    a.begin = begin;
    a.end = end;
    return a;
  }

  Ast expression() {
    DepthGuard guard(*this);
    Ast lhs = term();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const auto kind = advance().kind == TokenKind::Plus ? Ast::Kind::Add : Ast::Kind::Sub;
      Ast rhs = term();
      const auto begin = lhs.begin, end = rhs.end;
      lhs = node(kind, {std::move(lhs), std::move(rhs)}, begin, end);
    }
    return lhs;
  }

  Ast term() {
    Ast lhs = power();
    while (at(TokenKind::Star) || at(TokenKind::Slash)) {
      const auto kind = advance().kind == TokenKind::Star ? Ast::Kind::Mul : Ast::Kind::Div;
      Ast rhs = power();
      const auto begin = lhs.begin, end = rhs.end;
      lhs = node(kind, {std::move(lhs), std::move(rhs)}, begin, end);
    }
    return lhs;
  }

  Ast power() {
    Ast base = prefix();
    while (at(TokenKind::Caret)) {
      advance();
      long long exponent = 0;
      std::size_t end = 0;
      auto integer = [&](bool negative) {
        const Token& t = peek();
        if (t.kind != TokenKind::Number || t.text.find('.') != std::string::npos) {
          fail("integer exponent");
        }
        advance();
        if (t.text.size() > 6 || std::stoll(t.text) > kMaxExponent) {
          throw ParseError(t.begin, "exponent up to " + std::to_string(kMaxExponent),
                           "exponent out of range at offset " + std::to_string(t.begin));
        }
        exponent = negative ? -std::stoll(t.text) : std::stoll(t.text);
        end = t.end;
      };
      if (at(TokenKind::LParen)) {
        advance();
        const bool negative = at(TokenKind::Minus);
        if (negative) advance();
        integer(negative);
        end = expect(TokenKind::RParen, "')'").end;
      } else if (at(TokenKind::Number)) {
        integer(false);
      } else {
        fail("integer exponent or '('");
      }
      const auto begin = base.begin;
      base = node(Ast::Kind::Pow, {std::move(base)}, begin, end);
      base.exponent = exponent;
    }
    return base;
  }

  Ast prefix() {
    DepthGuard guard(*this);
    if (at(TokenKind::Minus)) {
      const auto begin = advance().begin;
      Ast operand = prefix();
      const auto end = operand.end;
      return node(Ast::Kind::Neg, {std::move(operand)}, begin, end);
    }
    return postfix();
  }

  Ast postfix() {
    Ast operand = primary();
    while (at(TokenKind::ConjStar)) {
      const auto end = advance().end;
      const auto begin = operand.begin;
      operand = node(Ast::Kind::Conj, {std::move(operand)}, begin, end);
    }
    return operand;
  }

  Ast literal(Quat value, const Token& t) {
    Ast a;
    a.kind = Ast::Kind::Literal;
    a.literal = std::move(value);
    a.begin = t.begin;
    a.end = t.end;
    return a;
  }

  Ast primary() {
    const Token& t = peek();
    switch (t.kind) {
    case TokenKind::Number:
      advance();
      return literal(Quat(ScalarQ(parse_decimal(t.text))), t);
    case TokenKind::Basis:
      advance();
      return literal(t.text == "i" ? Quat::i() : t.text == "j" ? Quat::j() : Quat::k(), t);
    case TokenKind::Sqrt2:
      advance();
      return literal(Quat(ScalarQ::sqrt2()), t);
    case TokenKind::LParen: {
      advance();
      Ast inner = expression();
      expect(TokenKind::RParen, "')'");
      return inner;
    }
    case TokenKind::LBrace: {
      const auto begin = advance().begin;
      Ast u = expression();
      Ast::Kind kind;
      if (at(TokenKind::Colon)) {
        kind = Ast::Kind::Ratio;
      } else if (at(TokenKind::Comma)) {
        kind = Ast::Kind::Jordan;
      } else {
        fail("':' or ','");
      }
      advance();
      Ast v = expression();
      const auto end = expect(TokenKind::RBrace, "'}'").end;
      return node(kind, {std::move(u), std::move(v)}, begin, end);
    }
    case TokenKind::Ident: return call();
    default: fail("number, i, j, k, sqrt2, '(', '{' or a function name");
    }
  }

  Ast call() {
    const Token& name = advance();
    struct Signature {
      std::string_view name;
      Ast::Kind kind;
      std::size_t arity;
    };
    static constexpr Signature kFunctions[] = {
        {"phi", Ast::Kind::Phi, 2},   {"lambda", Ast::Kind::Lambda, 1}, {"cf", Ast::Kind::Cf, 4},
        {"ldiv", Ast::Kind::LDiv, 2}, {"conj", Ast::Kind::Conj, 1},
    };
    const Signature* sig = nullptr;
    for (const auto& s : kFunctions) {
      if (s.name == name.text) sig = &s;
    }
    if (!sig) {
      throw ParseError(name.begin, "phi, lambda, cf, ldiv or conj",
                       "unknown function '" + name.text + "' at offset " + std::to_string(name.begin));
    }
    expect(TokenKind::LParen, "'('");
    std::vector<Ast> args;
    args.push_back(expression());
    while (at(TokenKind::Comma)) {
      advance();
      args.push_back(expression());
    }
    const auto end = expect(TokenKind::RParen, "',' or ')'").end;
    if (args.size() != sig->arity) {
      throw ParseError(name.begin, std::to_string(sig->arity) + " arguments",
                       name.text + " takes " + std::to_string(sig->arity) + " arguments, got " +
                           std::to_string(args.size()));
    }
    return node(sig->kind, std::move(args), name.begin, end);
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

// ---- formatting -------------------------------------------------------------------

int level(const Ast& a) {
  switch (a.kind) {
  case Ast::Kind::Add:
  case Ast::Kind::Sub: return 1;
  case Ast::Kind::Mul:
  case Ast::Kind::Div: return 2;
  case Ast::Kind::Pow: return 3;
  case Ast::Kind::Neg: return 4;
  case Ast::Kind::Conj: return 5;
  default: return 6;
  }
}

std::string format_at(const Ast& a, int required) {
  std::string s = format(a);
  return level(a) >= required ? s : "(" + s + ")";
}

std::string literal_text(const Quat& q) {
  if (q == Quat::i()) return "i";
  if (q == Quat::j()) return "j";
  if (q == Quat::k()) return "k";
  if (q == Quat(ScalarQ::sqrt2())) return "√2";
  const bool real_rational = q[0].is_rational() && q[1].is_zero() && q[2].is_zero() && q[3].is_zero();
  if (real_rational) {
    if (auto d = decimal_text(q[0].a())) return *d;
  }
  return "(" + label(q) + ")";
}

// ---- evaluation ---------------------------------------------------------------------

std::size_t bits(const BigInt& n) { return n.is_zero() ? 0 : boost::multiprecision::msb(abs(n)) + 1; }

std::size_t size_bits(const Quat& q) {
  std::size_t out = 0;
  for (const auto& c : q.coords()) {
    out = std::max({out, bits(c.a().num()), bits(c.a().den()), bits(c.b().num()), bits(c.b().den())});
  }
  return out;
}

class Evaluator {
public:
  explicit Evaluator(RatioConvention c) : convention_(c) {}

  Value value(const Ast& a) {
    if (a.kind == Ast::Kind::Cf) return cf(a);
    return quat(a);
  }

private:
  Quat quat(const Ast& a) {
    using K = Ast::Kind;
    switch (a.kind) {
    case K::Literal: return a.literal;
    case K::Neg: return -quat(a.args[0]);
    case K::Add: return quat(a.args[0]) + quat(a.args[1]);
    case K::Sub: return quat(a.args[0]) - quat(a.args[1]);
    case K::Mul: return quat(a.args[0]) * quat(a.args[1]);
    case K::Div: return quat(a.args[0]) * inverse(quat(a.args[1]), a.args[1]);
    case K::LDiv: return inverse(quat(a.args[1]), a.args[1]) * quat(a.args[0]);
    case K::Pow: {
      Quat base = quat(a.args[0]);
      long long n = a.exponent;
      if (n < 0) {
        base = inverse(base, a.args[0]);
        n = -n;
      }
      Quat out = Quat::one();
      while (n > 0) {
        if (size_bits(base) > kMaxBits || size_bits(out) > kMaxBits) {
          throw DomainError(a.begin, "value too large in power at offset " + std::to_string(a.begin));
        }
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
      }
      return out;
    }
    case K::Conj: return quat_conj(quat(a.args[0]));
    case K::Jordan: return jordan_product(quat(a.args[0]), quat(a.args[1]));
    case K::Ratio: return jordan_ratio(quat(a.args[0]), quat(a.args[1]), convention_);
    case K::Phi: {
      const Quat x = unit(a.args[0]);
      const Quat y = unit(a.args[1]);
      try {
        return phi(x, y).value;
      } catch (const DegenerateValence& e) {
        throw DomainError(a.begin, std::string(e.what()) + " (offset " + std::to_string(a.begin) + ")");
      }
    }
    case K::Lambda: return lambda_map(quat(a.args[0]));
    case K::Cf:
      throw DomainError(a.begin, "cf(...) yields a truth value and cannot be used as a quaternion (offset " +
                                     std::to_string(a.begin) + ")");
    }
    return {};
  }

  Quat inverse(const Quat& q, const Ast& where) {
    if (q.is_zero()) {
      throw DivisionByZeroAt(where.begin, "division by zero at offset " + std::to_string(where.begin));
    }
    return quat_inv(q);
  }

  Quat unit(const Ast& a) {
    Quat q = quat(a);
    if (!in_q(q)) {
      throw DomainError(a.begin, "argument " + label(q) + " at offset " + std::to_string(a.begin) +
                                     " is not one of ±1, ±i, ±j, ±k");
    }
    return q;
  }

  CFCheck cf(const Ast& a) {
    const CFQuadruple q{unit(a.args[0]), unit(a.args[1]), unit(a.args[2]), unit(a.args[3])};
    if (auto pair = inadmissible_pair(q)) {
      throw DomainError(a.begin, "inadmissible quadruple: " + *pair + " are equal up to sign (offset " +
                                     std::to_string(a.begin) + ")");
    }
    return cf_check(q, convention_);
  }

  RatioConvention convention_;
};

} // namespace

std::string_view token_kind_name(TokenKind k) {
  switch (k) {
  case TokenKind::Number: return "number";
  case TokenKind::Basis: return "basis";
  case TokenKind::Sqrt2: return "sqrt2";
  case TokenKind::Plus: return "+";
  case TokenKind::Minus: return "-";
  case TokenKind::Star: return "*";
  case TokenKind::Slash: return "/";
  case TokenKind::Caret: return "^";
  case TokenKind::ConjStar: return "^*";
  case TokenKind::LBrace: return "{";
  case TokenKind::RBrace: return "}";
  case TokenKind::Colon: return ":";
  case TokenKind::Comma: return ",";
  case TokenKind::LParen: return "(";
  case TokenKind::RParen: return ")";
  case TokenKind::Ident: return "ident";
  case TokenKind::End: return "end";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  auto push = [&](TokenKind k, std::size_t begin, std::size_t end) {
    out.push_back(Token{k, std::string(text.substr(begin, end - begin)), begin, end});
  };
  while (pos < text.size()) {
    const char c = text[pos];
    const std::size_t begin = pos;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (digit(c)) {
      while (pos < text.size() && digit(text[pos])) ++pos;
      if (pos + 1 < text.size() && text[pos] == '.' && digit(text[pos + 1])) {
        ++pos;
        while (pos < text.size() && digit(text[pos])) ++pos;
      }
      push(TokenKind::Number, begin, pos);
      continue;
    }
    if (ident_start(c)) {
      while (pos < text.size() && ident_char(text[pos])) ++pos;
      const std::string_view word = text.substr(begin, pos - begin);
      if (word == "i" || word == "j" || word == "k") {
        push(TokenKind::Basis, begin, pos);
      } else if (word == "sqrt2") {
        push(TokenKind::Sqrt2, begin, pos);
      } else {
        push(TokenKind::Ident, begin, pos);
      }
      continue;
    }
    if (text.substr(pos, kRootSign.size()) == kRootSign) {
      pos += kRootSign.size();
      if (pos >= text.size() || text[pos] != '2') {
        throw LexError(begin, "'√' must be followed by 2 (offset " + std::to_string(begin) + ")");
      }
      ++pos;
      push(TokenKind::Sqrt2, begin, pos);
      continue;
    }
    TokenKind kind;
    std::size_t width = 1;
    switch (c) {
    case '+': kind = TokenKind::Plus; break;
    case '-': kind = TokenKind::Minus; break;
    case '*': kind = TokenKind::Star; break;
    case '/': kind = TokenKind::Slash; break;
    case '^':
      if (pos + 1 < text.size() && text[pos + 1] == '*') {
        kind = TokenKind::ConjStar;
        width = 2;
      } else {
        kind = TokenKind::Caret;
      }
      break;
    case '{': kind = TokenKind::LBrace; break;
    case '}': kind = TokenKind::RBrace; break;
    case ':': kind = TokenKind::Colon; break;
    case ',': kind = TokenKind::Comma; break;
    case '(': kind = TokenKind::LParen; break;
    case ')': kind = TokenKind::RParen; break;
    default:
      throw LexError(begin, "unexpected character at offset " + std::to_string(begin));
    }
    pos += width;
    push(kind, begin, pos);
  }
  out.push_back(Token{TokenKind::End, "", text.size(), text.size()});
  return out;
}

bool operator==(const Ast& x, const Ast& y) {
  return x.kind == y.kind && x.literal == y.literal && x.exponent == y.exponent && x.args == y.args;
}

Ast parse(const std::vector<Token>& tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::End) {
    throw ParseError(0, "token list ending in End", "malformed token list");
  }
  return Parser(tokens).parse_all();
}

Ast parse(std::string_view text) { return parse(tokenize(text)); }

std::string format(const Ast& a) {
  using K = Ast::Kind;
  switch (a.kind) {
  case K::Literal: return literal_text(a.literal);
  case K::Neg: return "-" + format_at(a.args[0], 4);
  case K::Add: return format_at(a.args[0], 1) + "+" + format_at(a.args[1], 2);
  case K::Sub: return format_at(a.args[0], 1) + "-" + format_at(a.args[1], 2);
  case K::Mul: return format_at(a.args[0], 2) + "*" + format_at(a.args[1], 3);
  case K::Div: return format_at(a.args[0], 2) + "/" + format_at(a.args[1], 3);
  case K::Pow: {
    const Ast& base = a.args[0];
    std::string b = base.kind == K::Pow ? format(base) : format_at(base, 4);
    return b + "^" + (a.exponent < 0 ? "(" + std::to_string(a.exponent) + ")" : std::to_string(a.exponent));
  }
  case K::Conj: return format_at(a.args[0], 5) + "^*";
  case K::Jordan: return "{" + format(a.args[0]) + ", " + format(a.args[1]) + "}";
  case K::Ratio: return "{" + format(a.args[0]) + " : " + format(a.args[1]) + "}";
  case K::LDiv: return "ldiv(" + format(a.args[0]) + ", " + format(a.args[1]) + ")";
  case K::Phi: return "phi(" + format(a.args[0]) + ", " + format(a.args[1]) + ")";
  case K::Lambda: return "lambda(" + format(a.args[0]) + ")";
  case K::Cf: {
    std::string out = "cf(";
    for (std::size_t n = 0; n < a.args.size(); ++n) out += (n ? ", " : "") + format(a.args[n]);
    return out + ")";
  }
  }
  return "?";
}

Value eval(const Ast& ast, RatioConvention convention) { return Evaluator(convention).value(ast); }

} // namespace ccf::expr
