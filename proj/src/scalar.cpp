#include "ccf/scalar.hpp"

#include <numeric>
#include <ostream>
#include <regex>
#include <tuple>
#include <sstream>

#include "ccf/errors.hpp"

namespace ccf {

namespace {

BigInt abs_big(const BigInt& v) { return v.sign() < 0 ? BigInt(-v) : v; }

constexpr std::int64_t kInline = std::int64_t{1} << 62;

unsigned __int128 gcd_wide(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    if (a <= UINT64_MAX && b <= UINT64_MAX) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    a %= b;
    std::swap(a, b);
  }
  return a;
}

BigInt big_from_wide(__int128 v) {
  const bool negative = v < 0;
  const auto magnitude = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(magnitude >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(magnitude);
  return negative ? BigInt(-out) : out;
}

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    static const std::regex canonical("-?(0|[1-9][0-9]*)");
    if (!std::regex_match(text, canonical)) throw std::invalid_argument("not a decimal integer: " + text);
    return BigInt(text);
  }
  return BigInt(j.get<std::int64_t>());
}

} // namespace

Rat::Rat(std::int64_t n) {
  if (n > -kInline && n < kInline) {
    n_ = n;
  } else {
    *this = reduce_big(BigInt(n), BigInt(1));
  }
}

Rat::Rat(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero();
  *this = reduce_wide(n, d);
}

Rat::Rat(BigInt n, BigInt d) {
  if (d.is_zero()) throw DivisionByZero();
  *this = reduce_big(std::move(n), std::move(d));
}

Rat Rat::reduce_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rat();
  const auto g = static_cast<__int128>(gcd_wide(static_cast<unsigned __int128>(n < 0 ? -n : n), static_cast<unsigned __int128>(d)));
  n /= g;
  d /= g;
  if (n > -kInline && n < kInline && d < kInline) {
    Rat out;
    out.n_ = static_cast<std::int64_t>(n);
    out.d_ = static_cast<std::int64_t>(d);
    return out;
  }
  Rat out;
  out.big_ = std::make_shared<const Big>(Big{big_from_wide(n), big_from_wide(d)});
  return out;
}

Rat Rat::reduce_big(BigInt n, BigInt d) {
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  if (n.is_zero()) return Rat();
  BigInt g = boost::multiprecision::gcd(abs_big(n), d);
  if (g != 1) {
    n /= g;
    d /= g;
  }
  Rat out;
  if (n > -kInline && n < kInline && d < kInline) {
    out.n_ = n.convert_to<std::int64_t>();
    out.d_ = d.convert_to<std::int64_t>();
  } else {
    out.big_ = std::make_shared<const Big>(Big{std::move(n), std::move(d)});
  }
  return out;
}

BigInt Rat::num() const { return big_ ? big_->num : BigInt(n_); }
BigInt Rat::den() const { return big_ ? big_->den : BigInt(d_); }

int Rat::sign() const noexcept {
  if (big_) return big_->num.sign();
  return (n_ > 0) - (n_ < 0);
}

Rat operator+(const Rat& x, const Rat& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (!x.big_ && !y.big_) {
    if (x.d_ == y.d_) return Rat::reduce_wide(static_cast<__int128>(x.n_) + y.n_, x.d_);
    return Rat::reduce_wide(static_cast<__int128>(x.n_) * y.d_ + static_cast<__int128>(y.n_) * x.d_,
                            static_cast<__int128>(x.d_) * y.d_);
  }
  return Rat::reduce_big(x.num() * y.den() + y.num() * x.den(), x.den() * y.den());
}

Rat operator-(const Rat& x, const Rat& y) { return x + (-y); }

Rat operator*(const Rat& x, const Rat& y) {
  if (x.is_zero() || y.is_zero()) return Rat();
  if (!x.big_ && !y.big_) {
    return Rat::reduce_wide(static_cast<__int128>(x.n_) * y.n_, static_cast<__int128>(x.d_) * y.d_);
  }
  return Rat::reduce_big(x.num() * y.num(), x.den() * y.den());
}

Rat operator/(const Rat& x, const Rat& y) {
  if (y.is_zero()) throw DivisionByZero();
  if (!x.big_ && !y.big_) {
    return Rat::reduce_wide(static_cast<__int128>(x.n_) * y.d_, static_cast<__int128>(x.d_) * y.n_);
  }
  return Rat::reduce_big(x.num() * y.den(), x.den() * y.num());
}

Rat Rat::operator-() const {
  if (!big_) {
    Rat out = *this;
    out.n_ = -n_;
    return out;
  }
  Rat out;
  out.big_ = std::make_shared<const Big>(Big{-big_->num, big_->den});
  return out;
}

bool operator==(const Rat& x, const Rat& y) {
  if (!x.big_ && !y.big_) return x.n_ == y.n_ && x.d_ == y.d_;
  if (x.big_ && y.big_) return x.big_->num == y.big_->num && x.big_->den == y.big_->den;
  return false;
}

std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
  if (!x.big_ && !y.big_) return static_cast<__int128>(x.n_) * y.d_ <=> static_cast<__int128>(y.n_) * x.d_;
  const BigInt lhs = x.num() * y.den();
  const BigInt rhs = y.num() * x.den();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool lex_less(const Rat& x, const Rat& y) {
  if (!x.big_ && !y.big_) return std::tie(x.n_, x.d_) < std::tie(y.n_, y.d_);
  const BigInt xn = x.num(), yn = y.num();
  if (xn != yn) return xn < yn;
  return x.den() < y.den();
}

std::string Rat::str() const {
  if (big_) return big_->den == 1 ? big_->num.str() : big_->num.str() + "/" + big_->den.str();
  return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

double Rat::to_double() const {
  if (!big_) return static_cast<double>(n_) / static_cast<double>(d_);
  return big_->num.convert_to<double>() / big_->den.convert_to<double>();
}

int ScalarQ::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: the larger of a² and 2b² wins
  return (a_ * a_ > Rat(2) * b_ * b_) ? sa : sb;
}

ScalarQ operator+(const ScalarQ& x, const ScalarQ& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
ScalarQ operator-(const ScalarQ& x, const ScalarQ& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }

ScalarQ operator*(const ScalarQ& x, const ScalarQ& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return {x.a_ * y.a_, Rat()};
  Rat bd = x.b_ * y.b_;
  return {x.a_ * y.a_ + bd + bd, x.a_ * y.b_ + x.b_ * y.a_};
}

ScalarQ ScalarQ::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // (a - b√2) / (a² - 2b²); the norm is nonzero because √2 is irrational
  Rat norm = a_ * a_ - Rat(2) * b_ * b_;
  return {a_ / norm, -b_ / norm};
}

ScalarQ operator/(const ScalarQ& x, const ScalarQ& y) { return x * y.inverse(); }

std::strong_ordering operator<=>(const ScalarQ& x, const ScalarQ& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ScalarQ::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out;
  if (!a_.is_zero()) out = a_.str();
  Rat b = b_;
  if (b.sign() < 0) {
    out += "-";
    b = -b;
  } else if (!out.empty()) {
    out += "+";
  }
  if (b == Rat(1)) {
    out += "√2";
  } else {
    out += b.str() + "*√2";
  }
  return out;
}

double ScalarQ::to_double() const { return a_.to_double() + b_.to_double() * 1.4142135623730951; }

ScalarQ scalar_arith(ArithOp op, const ScalarQ& x, const ScalarQ& y) {
  switch (op) {
  case ArithOp::Add: return x + y;
  case ArithOp::Sub: return x - y;
  case ArithOp::Mul: return x * y;
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const ScalarQ& s) { return os << s.str(); }

void to_json(nlohmann::json& j, const Rat& r) {
  j = nlohmann::json::array({big_to_json(r.num()), big_to_json(r.den())});
}

void from_json(const nlohmann::json& j, Rat& r) {
  r = Rat(big_from_json(j.at(0)), big_from_json(j.at(1)));
}

void to_json(nlohmann::json& j, const ScalarQ& s) { j = nlohmann::json{{"a", s.a()}, {"b", s.b()}}; }

void from_json(const nlohmann::json& j, ScalarQ& s) {
  s = ScalarQ(j.at("a").get<Rat>(), j.at("b").get<Rat>());
}

} // namespace ccf
