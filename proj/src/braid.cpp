#include "ccf/braid.hpp"

#include <cctype>

#include "ccf/errors.hpp"

namespace ccf {

namespace {

using Letter = BraidWord::Letter;

Letter inverse_letter(Letter l) {
  switch (l) {
  case Letter::A: return Letter::AInv;
  case Letter::AInv: return Letter::A;
  case Letter::B: return Letter::BInv;
  case Letter::BInv: return Letter::B;
  }
  return l;
}

LaurentMat generator_matrix(Letter l) {
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly minus_t = LaurentPoly::monomial(-1, 1);
  const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);
  const LaurentPoly minus_t_inv = LaurentPoly::monomial(-1, -1);
  switch (l) {
  case Letter::A: return {minus_t, 1, 0, 1};
  case Letter::AInv: return {minus_t_inv, t_inv, 0, 1};
  case Letter::B: return {1, 0, t, minus_t};
  case Letter::BInv: return {1, 0, 1, minus_t_inv};
  }
  return laurent_identity();
}

} // namespace

BraidWord::BraidWord(const std::vector<Letter>& letters) {
  for (Letter l : letters) {
    if (!letters_.empty() && letters_.back() == inverse_letter(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(inverse_letter(*it));
  return BraidWord(out);
}

BraidWord BraidWord::power(long long k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out;
  for (long long n = 0; n < (k < 0 ? -k : k); ++n) out = out * base;
  return out;
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  std::vector<Letter> joined = u.letters_;
  joined.insert(joined.end(), v.letters_.begin(), v.letters_.end());
  return BraidWord(joined);
}

std::string BraidWord::str() const {
  std::string out;
  for (Letter l : letters_) {
    switch (l) {
    case Letter::A: out += 'a'; break;
    case Letter::AInv: out += 'A'; break;
    case Letter::B: out += 'b'; break;
    case Letter::BInv: out += 'B'; break;
    }
  }
  return out;
}

BraidWord parse_braid(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  std::size_t token = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    ++token;
    const char c = text[pos];
    Letter l;
    if (c == 'a') {
      l = Letter::A;
    } else if (c == 'A') {
      l = Letter::AInv;
    } else if (c == 'b') {
      l = Letter::B;
    } else if (c == 'B') {
      l = Letter::BInv;
    } else {
      throw SyntaxError(token, "unexpected '" + std::string(1, c) + "' at token " + std::to_string(token));
    }
    ++pos;
    if (text.substr(pos, 3) == "^-1") {
      if (c == 'A' || c == 'B') {
        throw SyntaxError(token, "caret inverse applies to lowercase generators only (token " +
                                     std::to_string(token) + ")");
      }
      l = inverse_letter(l);
      pos += 3;
    } else if (pos < text.size() && text[pos] == '^') {
      throw SyntaxError(token, "expected '^-1' at token " + std::to_string(token));
    }
    letters.push_back(l);
  }
  return BraidWord(letters);
}

// ---- Laurent polynomials -----------------------------------------------------------

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent) {
  LaurentPoly p;
  if (!c.is_zero()) p.coef_[exponent] = std::move(c);
  return p;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out = p;
  for (const auto& [e, c] : q.coef_) {
    BigInt& slot = out.coef_[e];
    slot += c;
    if (slot.is_zero()) out.coef_.erase(e);
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly neg;
  for (const auto& [e, c] : q.coef_) neg.coef_[e] = -c;
  return p + neg;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  for (const auto& [e1, c1] : p.coef_) {
    for (const auto& [e2, c2] : q.coef_) {
      BigInt& slot = out.coef_[e1 + e2];
      slot += c1 * c2;
      if (slot.is_zero()) out.coef_.erase(e1 + e2);
    }
  }
  return out;
}

BigInt LaurentPoly::evaluate_at_minus_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : coef_) sum += (e % 2 == 0) ? c : BigInt(-c);
  return sum;
}

std::string LaurentPoly::str() const {
  if (coef_.empty()) return "0";
  std::string out;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c.sign() < 0 ? BigInt(-c) : c;
    if (c.sign() < 0) {
      out += out.empty() ? "-" : " - ";
    } else if (!out.empty()) {
      out += " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "t";
    if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return out;
}

// ---- matrices --------------------------------------------------------------------

LaurentMat operator*(const LaurentMat& x, const LaurentMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

LaurentMat laurent_identity() { return {1, 0, 0, 1}; }
IntMat int_identity() { return {1, 0, 0, 1}; }

LaurentMat burau(const BraidWord& w) {
  LaurentMat m = laurent_identity();
  for (Letter l : w.letters()) m = m * generator_matrix(l);
  return m;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) { return burau(u) == burau(v); }

IntMat sl2_image(const BraidWord& w) {
  const LaurentMat m = burau(w);
  return {m[0].evaluate_at_minus_one(), m[1].evaluate_at_minus_one(), m[2].evaluate_at_minus_one(),
          m[3].evaluate_at_minus_one()};
}

Permutation braid_permutation(const BraidWord& w) {
  Permutation p{{0, 1, 2}};
  for (Letter l : w.letters()) {
    // a and its inverse swap positions 1,2; b swaps 2,3
    const bool first_pair = l == Letter::A || l == Letter::AInv;
    const std::uint8_t lo = first_pair ? 0 : 1;
    const std::uint8_t hi = first_pair ? 1 : 2;
    for (auto& image : p.images) {
      if (image == lo) {
        image = hi;
      } else if (image == hi) {
        image = lo;
      }
    }
  }
  return p;
}

BraidWord full_twist(long long k) {
  const BraidWord aba({Letter::A, Letter::B, Letter::A});
  return (aba * aba).power(k);
}

nlohmann::json matrix_json(const LaurentMat& m) {
  using nlohmann::json;
  return json::array({json::array({m[0].str(), m[1].str()}), json::array({m[2].str(), m[3].str()})});
}

nlohmann::json matrix_json(const IntMat& m) {
  auto num = [](const BigInt& v) -> nlohmann::json {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
      return v.convert_to<std::int64_t>();
    }
    return v.str();
  };
  using nlohmann::json;
  return json::array({json::array({num(m[0]), num(m[1])}), json::array({num(m[2]), num(m[3])})});
}

} // namespace ccf
