#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace ccf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced with a positive denominator.
/// Values with numerator and denominator below 2^62 are held inline.
class Rat {
public:
  Rat() = default;
  Rat(std::int64_t n); // NOLINT(implicit)
  Rat(std::int64_t n, std::int64_t d);
  Rat(BigInt n, BigInt d);

  BigInt num() const;
  BigInt den() const;

  bool is_zero() const noexcept { return !big_ && n_ == 0; }
  bool is_integer() const noexcept { return big_ ? big_->den == 1 : d_ == 1; }
  int sign() const noexcept;

  friend Rat operator+(const Rat& x, const Rat& y);
  friend Rat operator-(const Rat& x, const Rat& y);
  friend Rat operator*(const Rat& x, const Rat& y);
  friend Rat operator/(const Rat& x, const Rat& y);
  Rat operator-() const;

  Rat& operator+=(const Rat& y) { return *this = *this + y; }
  Rat& operator-=(const Rat& y) { return *this = *this - y; }
  Rat& operator*=(const Rat& y) { return *this = *this * y; }

  friend bool operator==(const Rat& x, const Rat& y);
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y);
  /// Lexicographic on (numerator, denominator); for ordered containers.
  friend bool lex_less(const Rat& x, const Rat& y);

  /// "p" or "p/q".
  std::string str() const;
  double to_double() const;

private:
  struct Big {
    BigInt num;
    BigInt den;
  };
  static Rat reduce_wide(__int128 n, __int128 d);
  static Rat reduce_big(BigInt n, BigInt d);

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::shared_ptr<const Big> big_;
};

/// Exact element a + b·√2 of the field Q(√2).
class ScalarQ {
public:
  ScalarQ() = default;
  ScalarQ(Rat a, Rat b = Rat()) : a_(std::move(a)), b_(std::move(b)) {} // NOLINT(implicit)
  ScalarQ(std::int64_t a) : a_(a) {} // NOLINT(implicit)

  static ScalarQ sqrt2() { return {Rat(0), Rat(1)}; }
  /// 2^{-1/2} = (1/2)√2.
  static ScalarQ inv_sqrt2() { return {Rat(0), Rat(1, 2)}; }

  const Rat& a() const noexcept { return a_; }
  const Rat& b() const noexcept { return b_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }
  /// -1, 0 or +1 according to the real value.
  int sign() const;

  friend ScalarQ operator+(const ScalarQ& x, const ScalarQ& y);
  friend ScalarQ operator-(const ScalarQ& x, const ScalarQ& y);
  friend ScalarQ operator*(const ScalarQ& x, const ScalarQ& y);
  friend ScalarQ operator/(const ScalarQ& x, const ScalarQ& y);
  ScalarQ operator-() const { return {-a_, -b_}; }

  ScalarQ& operator+=(const ScalarQ& y) { return *this = *this + y; }
  ScalarQ& operator-=(const ScalarQ& y) { return *this = *this - y; }
  ScalarQ& operator*=(const ScalarQ& y) { return *this = *this * y; }

  /// a - b√2.
  ScalarQ galois_conjugate() const { return {a_, -b_}; }
  /// Throws DivisionByZero for zero.
  ScalarQ inverse() const;

  friend bool operator==(const ScalarQ&, const ScalarQ&) = default;
  /// Order of the real embedding √2 > 0, decided without floating point.
  friend std::strong_ordering operator<=>(const ScalarQ& x, const ScalarQ& y);

  /// "a", "b*√2" or "a+b*√2"; parseable by the expression language.
  std::string str() const;
  double to_double() const;

private:
  Rat a_;
  Rat b_;
};

enum class ArithOp { Add, Sub, Mul };
ScalarQ scalar_arith(ArithOp op, const ScalarQ& x, const ScalarQ& y);
inline ScalarQ scalar_inv(const ScalarQ& x) { return x.inverse(); }
inline std::strong_ordering scalar_cmp(const ScalarQ& x, const ScalarQ& y) { return x <=> y; }

std::ostream& operator<<(std::ostream& os, const Rat& r);
std::ostream& operator<<(std::ostream& os, const ScalarQ& s);

// {"a":[num,den],"b":[num,den]}; integers beyond 64 bits are written as strings.
void to_json(nlohmann::json& j, const Rat& r);
void from_json(const nlohmann::json& j, Rat& r);
void to_json(nlohmann::json& j, const ScalarQ& s);
void from_json(const nlohmann::json& j, ScalarQ& s);

} // namespace ccf
