#pragma once

#include <string>

#include "qqpft/quaternion.hpp"

namespace qqpft {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;  // 1/sqrt(2*pi)

/// Quadratic-phase parameter quintuple (A, B, C, D, E) for one transform axis.
/// B must be nonzero; |b| >= 1e-12 is enforced at construction.
struct ParamSet {
  double a;
  double b;
  double c;
  double d;
  double e;

  ParamSet(double a_, double b_, double c_, double d_, double e_);
};

/// Axis-1 (i-kernel) and axis-2 (j-kernel) parameter sets.
struct ParamPair {
  ParamSet l1;
  ParamSet l2;

  /// The Fourier specialization, (0,1,0,0,0) on both axes.
  static ParamPair fourier() { return {{0, 1, 0, 0, 0}, {0, 1, 0, 0, 0}}; }

  /// |B1 * B2|.
  double abs_b() const { return std::abs(l1.b * l2.b); }
};

/// Transform kernel (1/sqrt(2*pi)) * exp_axis(axis, -(A t^2 + B t xi + C xi^2 + D t + E xi)).
/// Modulus is always 1/sqrt(2*pi).
Quaternion kernel(Axis axis, const ParamSet& L, double t, double xi);

/// Conjugate kernel, used by the inversion integrals.
Quaternion conj_kernel(Axis axis, const ParamSet& L, double t, double xi);

/// Unit-modulus factor phi with
///   kernel(axis, L, t + r*k, xi) == kernel(axis, L, t, xi + 2*r*k*A/B) * phi
/// for all t. Computed by completing the square in the kernel phase; it does
/// not depend on t.
Quaternion shift_phase(Axis axis, const ParamSet& L, double r, double k, double xi);

/// Unit-modulus factor psi with
///   kernel(axis, L, 2*(t - x), xi) == kernel(axis, wvd_params(L), t, xi - 4*A*x/B) * psi
/// for all t. Computed from the same completed-square identity.
Quaternion wvd_phase(Axis axis, const ParamSet& L, double x, double xi);

/// (lambda^2 A, lambda B, C, lambda D, E); satisfies
/// kernel(L, lambda*t, xi) == kernel(scaled_params(L, lambda), t, xi).
ParamSet scaled_params(const ParamSet& L, double lambda);

/// (4A, 2B, C, 2D, E), the doubled parameter set of the Wigner-Ville identity.
ParamSet wvd_params(const ParamSet& L);

/// Parses "A,B,C,D,E" (five decimal literals).
ParamSet parse_param_set(const std::string& text);

/// Parses "A,B,C,D,E;A,B,C,D,E".
ParamPair parse_param_pair(const std::string& text);

std::string format_param_set(const ParamSet& L);
std::string format_param_pair(const ParamPair& P);

}  // namespace qqpft
