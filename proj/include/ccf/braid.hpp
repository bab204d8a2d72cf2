#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ccf/catalog.hpp"
#include "ccf/scalar.hpp"

namespace ccf {

/// Word in the generators a, b of the three-strand braid group.
class BraidWord {
public:
  enum class Letter : std::uint8_t { A, AInv, B, BInv };

  BraidWord() = default;
  /// Freely reduces the letters.
  explicit BraidWord(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  BraidWord inverse() const;
  BraidWord power(long long k) const;
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  /// "aAbB" notation; the empty word prints as "".
  std::string str() const;

private:
  std::vector<Letter> letters_;
};

/// Accepts "a", "A", "b", "B", "a^-1", "b^-1" tokens with optional
/// whitespace.  Throws SyntaxError with the 1-based token position.
BraidWord parse_braid(std::string_view text);

/// Finitely supported Laurent polynomial in t with integer coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) { if (c) coef_[0] = c; } // NOLINT(implicit)
  static LaurentPoly monomial(BigInt c, int exponent);

  const std::map<int, BigInt>& coefficients() const noexcept { return coef_; }
  bool is_zero() const noexcept { return coef_.empty(); }

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  BigInt evaluate_at_minus_one() const;
  std::string str() const;

private:
  std::map<int, BigInt> coef_; // no zero coefficients stored
};

using LaurentMat = std::array<LaurentPoly, 4>; // row-major 2x2
using IntMat = std::array<BigInt, 4>;          // row-major 2x2

LaurentMat operator*(const LaurentMat& x, const LaurentMat& y);
IntMat operator*(const IntMat& x, const IntMat& y);
LaurentMat laurent_identity();
IntMat int_identity();

/// Reduced Burau matrices: a ↦ [[−t, 1], [0, 1]], b ↦ [[1, 0], [t, −t]].
LaurentMat burau(const BraidWord& w);
/// Word equality through the (faithful for three strands) Burau image.
bool braid_equal(const BraidWord& u, const BraidWord& v);
/// burau(w) at t = −1: a ↦ [[1,1],[0,1]], b ↦ [[1,0],[−1,1]].
IntMat sl2_image(const BraidWord& w);
/// a ↦ (12), b ↦ (23), multiplied left to right as in the catalog Σ3.
Permutation braid_permutation(const BraidWord& w);
/// ((aba)²)^k.
BraidWord full_twist(long long k);

nlohmann::json matrix_json(const LaurentMat& m);
nlohmann::json matrix_json(const IntMat& m);

} // namespace ccf
