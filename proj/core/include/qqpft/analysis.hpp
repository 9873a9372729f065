#pragma once

#include <string>

#include "qqpft/time_frequency.hpp"

namespace qqpft {

/// Nonnegative weights on a uniform lattice with a fixed cell measure. Total
/// mass is whatever the weights sum to; normalization is explicit.
struct DensityGrid {
  double cell = 0.0;
  std::vector<double> weights;

  double mass() const;
};

/// |f(t)|^2 with cell dt^2.
DensityGrid density_from_signal(const QSignal2D& f);

/// |sqrt(|B1 B2|) * F(xi)|^2 with cell dxi1 * dxi2.
DensityGrid density_from_spectrum(const QQPFTResult& F);

/// Scales the weights so the mass becomes 1. Rejects zero mass.
void normalize(DensityGrid& P);

/// Renyi entropy (1/(1-alpha)) * log(sum P^alpha * cell). Requires
/// alpha > 0, alpha != 1 and mass within 1e-9 of 1.
double renyi_entropy(const DensityGrid& P, double alpha);

/// Shannon entropy -sum P log(P) * cell with 0*log(0) = 0. Requires
/// mass within 1e-9 of 1.
double shannon_entropy(const DensityGrid& P);

/// Result of checking one inequality: the two computed sides, the margin
/// oriented so that margin >= -slack means pass, and a digest of the inputs.
struct VerificationReport {
  std::string inequality_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double slack = 0.0;
  bool passed = false;
  std::string inputs_digest;
};

/// Which 4D transform a field came from.
enum class TFKind { Stqqpft, Qqpaf, Qqpwvd };

/// ||Qf||_q <= (2*pi)^(1/q - 1/p) * A_p^2 * ||f||_p / |B1 B2|^(1/q) with
/// A_p = (p^(1/p) / q^(1/q))^(1/2), 1/p + 1/q = 1, for p in [1, 2]
/// (q = infinity when p = 1). Relative slack 1e-3.
VerificationReport check_hausdorff_young(const QSignal2D& f, const ParamPair& P, double p);

/// Renyi entropy bound: H_alpha(|f|^2) + H_beta(||B|^(1/2) Qf|^2) >=
/// -log|B1 B2| - 2 log(2 pi) - [(1/(1-alpha)) log(2 alpha) +
/// (1/(1-beta)) log(2 beta)], beta = alpha/(2 alpha - 1), alpha in (1/2, 1).
/// Requires ||f||_2 = 1 within 1e-9. Absolute slack 1e-9.
VerificationReport check_renyi_up(const QSignal2D& f, const ParamPair& P, double alpha);

/// Shannon entropy bound: E(|f|^2) + E(||B|^(1/2) Qf|^2) >=
/// log(e^2 / (16 pi^2 |B1 B2|)). Requires ||f||_2 = 1. Absolute slack 1e-9.
VerificationReport check_shannon_up(const QSignal2D& f, const ParamPair& P);

/// Windowed-transform norm bound for q >= 2:
/// ||S||_q <= (2*pi)^(1/q - 1/p) * (2/q)^(2/q) * ||g||_2 ||f||_2 / |B|^(1/q).
/// q = 2 is the energy identity (relative slack 1e-3); q > 2 uses absolute
/// slack 1e-9.
VerificationReport check_lieb_inequality(const QSignal2D& f, const QSignal2D& g,
                                         const ParamPair& P, double q);
VerificationReport check_lieb_from_field(const TFGrid4D& S, double f_norm, double g_norm,
                                         double q);

/// Minimal lattice measure of a set holding all but an epsilon fraction of
/// the energy: cells are taken in decreasing |F| order until the excluded
/// energy is <= eps^2 * total. Rejects F == 0 and eps outside [0, 1).
double essential_support_measure(const TFGrid4D& F, double eps);

/// Support bound: essential_support_measure(F, eps) >=
/// (2*pi)^2 (1 - eps^2)^(q/(q-2)) (q/2)^(4/(q-2)) / |B| for the windowed and
/// ambiguity transforms, the same divided by 16 for the Wigner-Ville
/// transform; the eps = 0 limit uses (2*pi*e)^2 / |B| (resp. /16). q > 2.
VerificationReport check_concentration_up(const TFGrid4D& F, TFKind kind, double eps, double q);

/// Entropy bound for the 4D fields: -sum |F|^2 log |F|^2 * cell >= 2/|B|
/// (windowed, ambiguity) or (2 - log 16)/|B| (Wigner-Ville). Requires
/// ||f||_2 * ||g||_2 = 1 within 1e-9.
VerificationReport check_entropy_up_tf(const QSignal2D& f, const QSignal2D& g,
                                       const ParamPair& P, TFKind kind);
VerificationReport check_entropy_up_from_field(const TFGrid4D& F, TFKind kind);

/// -sum |F|^2 log |F|^2 * cell over the 4D lattice.
double tf_entropy(const TFGrid4D& F);

/// FNV-1a digest of a sample buffer, for the inputs_digest fields.
std::string digest_signal(const QSignal2D& f);

}  // namespace qqpft
