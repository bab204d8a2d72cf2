#include "ccf/quaternion.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "ccf/errors.hpp"

namespace ccf {

namespace {

// e_p * e_q = kSign[p][q] * e_{kIndex[p][q]} for the basis 1, i, j, k.
constexpr int kIndex[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

constexpr const char* kBasisName[4] = {"", "i", "j", "k"};

std::string term(const BigInt& coef, int basis, bool first) {
  std::string out;
  BigInt mag = coef;
  if (coef.sign() < 0) {
    out += "-";
    mag = -coef;
  } else if (!first) {
    out += "+";
  }
  if (basis == 0) return out + mag.str();
  if (mag != 1) out += mag.str() + "*";
  return out + kBasisName[basis];
}

// Integer linear combination of the basis, e.g. "1-i-j-k".
std::string combination(const std::array<BigInt, 4>& coef) {
  std::string out;
  for (int n = 0; n < 4; ++n) {
    if (coef[n].is_zero()) continue;
    out += term(coef[n], n, out.empty());
  }
  return out;
}

int support_size(const std::array<BigInt, 4>& coef) {
  int count = 0;
  for (const auto& c : coef) count += c.is_zero() ? 0 : 1;
  return count;
}

bool leading_negative(const std::array<BigInt, 4>& coef) {
  for (const auto& c : coef) {
    if (!c.is_zero()) return c.sign() < 0;
  }
  return false;
}

std::array<BigInt, 4> negated(std::array<BigInt, 4> coef) {
  for (auto& c : coef) c = -c;
  return coef;
}

// numerator / divisor, factoring a leading minus sign out of sums.
std::string with_divisor(const std::array<BigInt, 4>& coef, const std::string& divisor) {
  if (support_size(coef) == 1) return combination(coef) + "/" + divisor;
  if (leading_negative(coef)) return "-(" + combination(negated(coef)) + ")/" + divisor;
  return "(" + combination(coef) + ")/" + divisor;
}

BigInt lcm_of_denominators(const std::array<Rat, 4>& r) {
  BigInt d = 1;
  for (const auto& x : r) d = boost::multiprecision::lcm(d, x.den());
  return d;
}

std::array<BigInt, 4> scaled_integers(const std::array<Rat, 4>& r, const BigInt& d) {
  std::array<BigInt, 4> out;
  for (int n = 0; n < 4; ++n) out[n] = r[n].num() * (d / r[n].den());
  return out;
}

std::string rational_label(const std::array<Rat, 4>& r) {
  const BigInt d = lcm_of_denominators(r);
  const auto ints = scaled_integers(r, d);
  if (d == 1) return combination(ints);
  return with_divisor(ints, d.str());
}

// q = b·√2 with rational b.
std::string sqrt2_label(const std::array<Rat, 4>& b) {
  std::array<Rat, 4> c;
  for (int n = 0; n < 4; ++n) c[n] = b[n] * Rat(2);
  const BigInt dc = lcm_of_denominators(c);
  bool some_odd = false;
  for (const auto& x : c) some_odd = some_odd || (x.is_integer() && (x.num() % 2) != 0);
  if (dc == 1 && some_odd) return with_divisor(scaled_integers(c, 1), "√2");
  if (lcm_of_denominators(b) == 1) {
    const auto ints = scaled_integers(b, 1);
    if (support_size(ints) == 1) {
      for (int n = 0; n < 4; ++n) {
        if (ints[n].is_zero()) continue;
        std::string sign = ints[n].sign() < 0 ? "-" : "";
        BigInt mag = ints[n].sign() < 0 ? BigInt(-ints[n]) : ints[n];
        std::string out = sign + (mag == 1 ? "" : mag.str() + "*") + "√2";
        return n == 0 ? out : out + "*" + kBasisName[n];
      }
    }
    if (leading_negative(ints)) return "-√2*(" + combination(negated(ints)) + ")";
    return "√2*(" + combination(ints) + ")";
  }
  return with_divisor(scaled_integers(c, dc), "(" + dc.str() + "*√2)");
}

} // namespace

Quat Quat::basis(int index) {
  switch (index) {
  case 0: return one();
  case 1: return i();
  case 2: return j();
  case 3: return k();
  default: throw std::out_of_range("quaternion basis index");
  }
}

bool Quat::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Quat operator+(const Quat& u, const Quat& v) {
  return {u.c_[0] + v.c_[0], u.c_[1] + v.c_[1], u.c_[2] + v.c_[2], u.c_[3] + v.c_[3]};
}

Quat operator-(const Quat& u, const Quat& v) {
  return {u.c_[0] - v.c_[0], u.c_[1] - v.c_[1], u.c_[2] - v.c_[2], u.c_[3] - v.c_[3]};
}

Quat Quat::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Quat operator*(const Quat& u, const Quat& v) {
  Quat out;
  for (int p = 0; p < 4; ++p) {
    if (u.c_[p].is_zero()) continue;
    for (int q = 0; q < 4; ++q) {
      if (v.c_[q].is_zero()) continue;
      ScalarQ prod = u.c_[p] * v.c_[q];
      ScalarQ& slot = out.c_[kIndex[p][q]];
      if (kSign[p][q] > 0) {
        slot += prod;
      } else {
        slot -= prod;
      }
    }
  }
  return out;
}

Quat operator*(const ScalarQ& s, const Quat& q) {
  return {s * q.c_[0], s * q.c_[1], s * q.c_[2], s * q.c_[3]};
}

bool QuatKeyLess::operator()(const Quat& u, const Quat& v) const {
  for (int n = 0; n < 4; ++n) {
    const auto& x = u[n];
    const auto& y = v[n];
    if (!(x.a() == y.a())) return lex_less(x.a(), y.a());
    if (!(x.b() == y.b())) return lex_less(x.b(), y.b());
  }
  return false;
}

Quat quat_linear(LinearOp op, const Quat& u, const Quat& v) {
  return op == LinearOp::Add ? u + v : u - v;
}

Quat quat_scale(const ScalarQ& s, const Quat& q) { return s * q; }

Quat quat_conj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

ScalarQ quat_norm2(const Quat& q) {
  ScalarQ sum;
  for (const auto& x : q.coords()) {
    if (!x.is_zero()) sum += x * x;
  }
  return sum;
}

Quat quat_inv(const Quat& q) {
  if (q.is_zero()) throw DivisionByZero();
  return quat_norm2(q).inverse() * quat_conj(q);
}

Quat jordan_product(const Quat& u, const Quat& v) {
  return ScalarQ(Rat(1, 2)) * (u * v + v * u);
}

Quat jordan_ratio(const Quat& u, const Quat& v, RatioConvention c) {
  return c == RatioConvention::Star ? jordan_product(u, quat_conj(v)) : jordan_product(u, v);
}

std::string_view convention_name(RatioConvention c) {
  return c == RatioConvention::Star ? "star" : "plain";
}

RatioConvention parse_convention(std::string_view name) {
  if (name == "plain") return RatioConvention::Plain;
  if (name == "star") return RatioConvention::Star;
  throw std::invalid_argument("unknown ratio convention: " + std::string(name));
}

std::string label(const Quat& q) {
  if (q.is_zero()) return "0";
  std::array<Rat, 4> a;
  std::array<Rat, 4> b;
  bool rational = true;
  bool pure_sqrt2 = true;
  for (int n = 0; n < 4; ++n) {
    a[n] = q[n].a();
    b[n] = q[n].b();
    rational = rational && b[n].is_zero();
    pure_sqrt2 = pure_sqrt2 && a[n].is_zero();
  }
  if (rational) return rational_label(a);
  if (pure_sqrt2) return sqrt2_label(b);

  std::string out;
  for (int n = 0; n < 4; ++n) {
    if (q[n].is_zero()) continue;
    if (!out.empty()) out += "+";
    out += "(" + q[n].str() + ")";
    if (n > 0) out += std::string("*") + kBasisName[n];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << label(q); }

void to_json(nlohmann::json& j, const Quat& q) {
  j = nlohmann::json::array();
  for (const auto& x : q.coords()) j.push_back(x);
}

void from_json(const nlohmann::json& j, Quat& q) {
  q = Quat(j.at(0).get<ScalarQ>(), j.at(1).get<ScalarQ>(), j.at(2).get<ScalarQ>(),
           j.at(3).get<ScalarQ>());
}

} // namespace ccf
