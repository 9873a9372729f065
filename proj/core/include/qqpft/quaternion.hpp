#pragma once

#include <cmath>

namespace qqpft {

/// Imaginary-axis selector for one-sided exponentials and transform kernels.
enum class Axis { I, J };

/// One value of the real quaternion algebra, q = r0 + i*r1 + j*r2 + k*r3.
///
/// Multiplication follows the Hamilton rules
///   ij = k = -ji,  jk = i = -kj,  ki = j = -ik,  i^2 = j^2 = k^2 = -1.
/// Quaternions are plain values with copy semantics; arithmetic returns
/// fresh values and never aliases its operands.
struct Quaternion {
  double r0 = 0.0;  ///< scalar part
  double r1 = 0.0;  ///< i component
  double r2 = 0.0;  ///< j component
  double r3 = 0.0;  ///< k component

  constexpr Quaternion() = default;
  constexpr Quaternion(double scalar) : r0(scalar) {}
  constexpr Quaternion(double w, double x, double y, double z)
      : r0(w), r1(x), r2(y), r3(z) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quaternion operator-() const { return {-r0, -r1, -r2, -r3}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    r0 += o.r0; r1 += o.r1; r2 += o.r2; r3 += o.r3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    r0 -= o.r0; r1 -= o.r1; r2 -= o.r2; r3 -= o.r3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    r0 *= s; r1 *= s; r2 *= s; r3 *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

  /// Hamilton product; non-commutative.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.r0 * b.r0 - a.r1 * b.r1 - a.r2 * b.r2 - a.r3 * b.r3,
            a.r0 * b.r1 + a.r1 * b.r0 + a.r2 * b.r3 - a.r3 * b.r2,
            a.r0 * b.r2 - a.r1 * b.r3 + a.r2 * b.r0 + a.r3 * b.r1,
            a.r0 * b.r3 + a.r1 * b.r2 - a.r2 * b.r1 + a.r3 * b.r0};
  }

  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) = default;
};

/// Quaternion conjugate; satisfies conj(q*r) == conj(r)*conj(q).
constexpr Quaternion conj(const Quaternion& q) { return {q.r0, -q.r1, -q.r2, -q.r3}; }

/// Scalar part Sc(q) = r0. Cyclic: sc(p*q*r) == sc(q*r*p) == sc(r*p*q).
constexpr double sc(const Quaternion& q) { return q.r0; }

/// Squared modulus, r0^2 + r1^2 + r2^2 + r3^2.
constexpr double norm_sq(const Quaternion& q) {
  return q.r0 * q.r0 + q.r1 * q.r1 + q.r2 * q.r2 + q.r3 * q.r3;
}

/// Euclidean modulus |q|; multiplicative, |q*r| == |q|*|r|.
inline double modulus(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// cos(theta) + axis*sin(theta); always unit modulus.
inline Quaternion exp_axis(Axis axis, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return axis == Axis::I ? Quaternion{c, s, 0.0, 0.0} : Quaternion{c, 0.0, s, 0.0};
}

inline bool is_finite(const Quaternion& q) {
  return std::isfinite(q.r0) && std::isfinite(q.r1) && std::isfinite(q.r2) &&
         std::isfinite(q.r3);
}

}  // namespace qqpft
