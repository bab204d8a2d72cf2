#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ccf/scalar.hpp"

namespace ccf {

/// Hamilton quaternion q0 + q1·i + q2·j + q3·k over Q(√2).
class Quat {
public:
  Quat() = default;
  Quat(ScalarQ q0, ScalarQ q1, ScalarQ q2, ScalarQ q3)
      : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}
  explicit Quat(ScalarQ real) : c_{std::move(real), {}, {}, {}} {}

  static Quat one() { return Quat(ScalarQ(1)); }
  static Quat i() { return {0, 1, 0, 0}; }
  static Quat j() { return {0, 0, 1, 0}; }
  static Quat k() { return {0, 0, 0, 1}; }
  /// Basis element 1, i, j, k by index 0..3.
  static Quat basis(int index);

  const ScalarQ& operator[](std::size_t n) const { return c_[n]; }
  const std::array<ScalarQ, 4>& coords() const noexcept { return c_; }

  bool is_zero() const;

  friend Quat operator+(const Quat& u, const Quat& v);
  friend Quat operator-(const Quat& u, const Quat& v);
  friend Quat operator*(const Quat& u, const Quat& v);
  friend Quat operator*(const ScalarQ& s, const Quat& q);
  Quat operator-() const;

  Quat& operator+=(const Quat& v) { return *this = *this + v; }

  friend bool operator==(const Quat&, const Quat&) = default;

private:
  std::array<ScalarQ, 4> c_;
};

/// Structural order for use as a map key; not related to any algebraic order.
struct QuatKeyLess {
  bool operator()(const Quat& u, const Quat& v) const;
};

enum class LinearOp { Add, Sub };
Quat quat_linear(LinearOp op, const Quat& u, const Quat& v);
Quat quat_scale(const ScalarQ& s, const Quat& q);
inline Quat quat_mul(const Quat& u, const Quat& v) { return u * v; }
Quat quat_conj(const Quat& q);
ScalarQ quat_norm2(const Quat& q);
/// |q|^{-2} q*; throws DivisionByZero for q = 0.
Quat quat_inv(const Quat& q);

/// {u,v} = (uv + vu)/2.
Quat jordan_product(const Quat& u, const Quat& v);

/// STAR: {u:v} = {u, v*}.  PLAIN: {u:v} = {u, v}.
enum class RatioConvention { Star, Plain };

Quat jordan_ratio(const Quat& u, const Quat& v, RatioConvention c = RatioConvention::Plain);

std::string_view convention_name(RatioConvention c);
/// Accepts "plain" / "star"; throws std::invalid_argument otherwise.
RatioConvention parse_convention(std::string_view name);

/// Canonical display label: "1", "-i", "(1+i)/√2", "(1-i-j-k)/2", "-(i+j)/2".
/// Every label parses back to the same value in the expression language.
std::string label(const Quat& q);

std::ostream& operator<<(std::ostream& os, const Quat& q);

// Serialized as a 4-array of ScalarQ objects.
void to_json(nlohmann::json& j, const Quat& q);
void from_json(const nlohmann::json& j, Quat& q);

} // namespace ccf
