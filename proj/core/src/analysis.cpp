#include "qqpft/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace qqpft {

namespace {

constexpr double kMassTol = 1e-9;
constexpr double kStrictSlack = 1e-9;   // absolute, strict inequalities
constexpr double kEqRelSlack = 1e-3;    // relative, quadrature-bound equalities

void require_mass_one(const DensityGrid& P, const char* who) {
  const double m = P.mass();
  if (std::abs(m - 1.0) > kMassTol)
    throw std::invalid_argument(std::string(who) + ": density mass " + std::to_string(m) +
                                " not within 1e-9 of 1; normalize explicitly");
}

double require_unit_l2(const QSignal2D& f, const char* who) {
  const double nrm = lp_norm(f, 2.0);
  if (std::abs(nrm - 1.0) > kMassTol)
    throw std::invalid_argument(std::string(who) + ": ||f||_2 must be 1 within 1e-9");
  return nrm;
}

double conjugate_exponent(double p) { return p == 1.0 ? std::numeric_limits<double>::infinity() : p / (p - 1.0); }

// Babenko constant A_p = (p^(1/p) / q^(1/q))^(1/2); the q -> infinity factor
// tends to 1.
double babenko(double p, double q) {
  const double pn = std::pow(p, 1.0 / p);
  const double qn = std::isinf(q) ? 1.0 : std::pow(q, 1.0 / q);
  return std::sqrt(pn / qn);
}

VerificationReport make_upper_bound_report(std::string id, double lhs, double rhs, double slack,
                                           std::string digest) {
  VerificationReport r;
  r.inequality_id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  r.margin = rhs - lhs;
  r.passed = r.margin >= -slack;
  r.inputs_digest = std::move(digest);
  return r;
}

VerificationReport make_lower_bound_report(std::string id, double lhs, double rhs, double slack,
                                           std::string digest) {
  VerificationReport r;
  r.inequality_id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  r.margin = lhs - rhs;
  r.passed = r.margin >= -slack;
  r.inputs_digest = std::move(digest);
  return r;
}

}  // namespace

double DensityGrid::mass() const {
  double acc = 0.0;
  for (double w : weights) acc += w;
  return acc * cell;
}

DensityGrid density_from_signal(const QSignal2D& f) {
  DensityGrid P;
  const double d = f.spec().spacing();
  P.cell = d * d;
  P.weights.reserve(f.samples().size());
  for (const auto& q : f.samples()) P.weights.push_back(norm_sq(q));
  return P;
}

DensityGrid density_from_spectrum(const QQPFTResult& F) {
  DensityGrid P;
  P.cell = F.freq.dxi1 * F.freq.dxi2;
  const double absb = F.params.abs_b();
  P.weights.reserve(F.values.size());
  for (const auto& q : F.values) P.weights.push_back(absb * norm_sq(q));
  return P;
}

void normalize(DensityGrid& P) {
  const double m = P.mass();
  if (!(m > 0.0)) throw std::invalid_argument("normalize: density has zero mass");
  const double inv = 1.0 / m;
  for (double& w : P.weights) w *= inv;
}

double renyi_entropy(const DensityGrid& P, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0)
    throw std::invalid_argument("renyi_entropy: alpha must be positive and != 1");
  require_mass_one(P, "renyi_entropy");
  double acc = 0.0;
  for (double w : P.weights)
    if (w > 0.0) acc += std::pow(w, alpha);
  acc *= P.cell;
  return std::log(acc) / (1.0 - alpha);
}

double shannon_entropy(const DensityGrid& P) {
  require_mass_one(P, "shannon_entropy");
  double acc = 0.0;
  for (double w : P.weights)
    if (w > 0.0) acc += w * std::log(w);
  return -acc * P.cell;
}

VerificationReport check_hausdorff_young(const QSignal2D& f, const ParamPair& P, double p) {
  if (!(p >= 1.0 && p <= 2.0))
    throw std::invalid_argument("check_hausdorff_young: p must lie in [1, 2]");
  const double q = conjugate_exponent(p);
  QQPFTResult F = qqpft_fast(f, P);
  const double lhs = lp_norm(F, q);
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  const double ap = babenko(p, q);
  const double rhs = std::pow(kTwoPi, inv_q - 1.0 / p) * ap * ap * lp_norm(f, p) /
                     std::pow(P.abs_b(), inv_q);
  char id[32];
  std::snprintf(id, sizeof(id), "hy.p=%g", p);
  return make_upper_bound_report(id, lhs, rhs, kEqRelSlack * std::abs(rhs), digest_signal(f));
}

VerificationReport check_renyi_up(const QSignal2D& f, const ParamPair& P, double alpha) {
  if (!(alpha > 0.5 && alpha < 1.0))
    throw std::invalid_argument("check_renyi_up: alpha must lie in (1/2, 1)");
  require_unit_l2(f, "check_renyi_up");
  const double beta = alpha / (2.0 * alpha - 1.0);
  DensityGrid Pt = density_from_signal(f);
  DensityGrid Pf = density_from_spectrum(qqpft_fast(f, P));
  const double lhs = renyi_entropy(Pt, alpha) + renyi_entropy(Pf, beta);
  const double rhs = -std::log(P.abs_b()) - 2.0 * std::log(kTwoPi) -
                     (std::log(2.0 * alpha) / (1.0 - alpha) + std::log(2.0 * beta) / (1.0 - beta));
  char id[32];
  std::snprintf(id, sizeof(id), "renyi.alpha=%g", alpha);
  return make_lower_bound_report(id, lhs, rhs, kStrictSlack, digest_signal(f));
}

VerificationReport check_shannon_up(const QSignal2D& f, const ParamPair& P) {
  require_unit_l2(f, "check_shannon_up");
  DensityGrid Pt = density_from_signal(f);
  DensityGrid Pf = density_from_spectrum(qqpft_fast(f, P));
  const double lhs = shannon_entropy(Pt) + shannon_entropy(Pf);
  const double e = std::exp(1.0);
  const double rhs = std::log(e * e / (16.0 * kPi * kPi * P.abs_b()));
  return make_lower_bound_report("shannon", lhs, rhs, kStrictSlack, digest_signal(f));
}

VerificationReport check_lieb_from_field(const TFGrid4D& S, double f_norm, double g_norm,
                                         double q) {
  if (!(q >= 2.0)) throw std::invalid_argument("check_lieb_inequality: q must be >= 2");
  const double p = conjugate_exponent(q);
  const double absb = S.params().abs_b();
  const double lhs = lp_norm_4d(S, q);
  const double rhs = std::pow(kTwoPi, 1.0 / q - 1.0 / p) * std::pow(2.0 / q, 2.0 / q) * g_norm *
                     f_norm / std::pow(absb, 1.0 / q);
  const double slack = q == 2.0 ? kEqRelSlack * std::abs(rhs) : kStrictSlack;
  char id[32];
  std::snprintf(id, sizeof(id), "lieb.q=%g", q);
  VerificationReport r = make_upper_bound_report(id, lhs, rhs, slack, "");
  return r;
}

VerificationReport check_lieb_inequality(const QSignal2D& f, const QSignal2D& g,
                                         const ParamPair& P, double q) {
  if (!(q >= 2.0)) throw std::invalid_argument("check_lieb_inequality: q must be >= 2");
  WindowedPair wp(f, g, P);
  TFGrid4D S = stqqpft(wp);
  VerificationReport r = check_lieb_from_field(S, lp_norm(f, 2.0), lp_norm(g, 2.0), q);
  r.inputs_digest = digest_signal(f) + "/" + digest_signal(g);
  return r;
}

double essential_support_measure(const TFGrid4D& F, double eps) {
  if (!(eps >= 0.0 && eps < 1.0))
    throw std::invalid_argument("essential_support_measure: eps must lie in [0, 1)");
  std::vector<double> e;
  e.reserve(F.values().size());
  double total = 0.0;
  for (const auto& q : F.values()) {
    const double w = norm_sq(q);
    e.push_back(w);
    total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("essential_support_measure: field is zero");

  const double cell = F.cell_measure();
  if (eps == 0.0) {
    std::size_t nz = 0;
    for (double w : e)
      if (w > 0.0) ++nz;
    return static_cast<double>(nz) * cell;
  }
  std::sort(e.begin(), e.end(), std::greater<double>());
  const double needed = (1.0 - eps * eps) * total;
  double cum = 0.0;
  std::size_t count = 0;
  while (count < e.size() && cum < needed) {
    cum += e[count];
    ++count;
  }
  return static_cast<double>(count) * cell;
}

VerificationReport check_concentration_up(const TFGrid4D& F, TFKind kind, double eps, double q) {
  if (!(q > 2.0)) throw std::invalid_argument("check_concentration_up: q must be > 2");
  const double lhs = essential_support_measure(F, eps);
  const double e = std::exp(1.0);
  double base;
  if (eps == 0.0) {
    base = kTwoPi * kTwoPi * e * e;  // the q -> 2+ limit of the bound below
  } else {
    base = kTwoPi * kTwoPi * std::pow(1.0 - eps * eps, q / (q - 2.0)) *
           std::pow(0.5 * q, 4.0 / (q - 2.0));
  }
  double rhs = base / F.params().abs_b();
  if (kind == TFKind::Qqpwvd) rhs /= 16.0;
  const char* k = kind == TFKind::Stqqpft ? "stqqpft" : (kind == TFKind::Qqpaf ? "qqpaf" : "qqpwvd");
  char id[64];
  std::snprintf(id, sizeof(id), "concentration.%s.eps=%g.q=%g", k, eps, q);
  return make_lower_bound_report(id, lhs, rhs, kStrictSlack, "");
}

double tf_entropy(const TFGrid4D& F) {
  double acc = 0.0;
  for (const auto& q : F.values()) {
    const double w = norm_sq(q);
    if (w > 0.0) acc += w * std::log(w);
  }
  return -acc * F.cell_measure();
}

VerificationReport check_entropy_up_from_field(const TFGrid4D& F, TFKind kind) {
  const double absb = F.params().abs_b();
  const double lhs = tf_entropy(F);
  const double rhs =
      (kind == TFKind::Qqpwvd ? 2.0 - std::log(16.0) : 2.0) / absb;
  const char* k = kind == TFKind::Stqqpft ? "stqqpft" : (kind == TFKind::Qqpaf ? "qqpaf" : "qqpwvd");
  char id[48];
  std::snprintf(id, sizeof(id), "entropy-tf.%s", k);
  return make_lower_bound_report(id, lhs, rhs, kStrictSlack, "");
}

VerificationReport check_entropy_up_tf(const QSignal2D& f, const QSignal2D& g,
                                       const ParamPair& P, TFKind kind) {
  const double prod = lp_norm(f, 2.0) * lp_norm(g, 2.0);
  if (std::abs(prod - 1.0) > kMassTol)
    throw std::invalid_argument("check_entropy_up_tf: ||f||_2 * ||g||_2 must be 1 within 1e-9");
  TFGrid4D F = kind == TFKind::Stqqpft ? stqqpft(WindowedPair(f, g, P))
               : kind == TFKind::Qqpaf ? qqpaf(f, g, P)
                                       : qqpwvd(f, g, P);
  VerificationReport r = check_entropy_up_from_field(F, kind);
  r.inputs_digest = digest_signal(f) + "/" + digest_signal(g);
  return r;
}

std::string digest_signal(const QSignal2D& f) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](double v) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    __builtin_memcpy(&bits, &v, sizeof(bits));
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<double>(f.n()));
  mix(f.spec().extent);
  for (const auto& q : f.samples()) {
    mix(q.r0);
    mix(q.r1);
    mix(q.r2);
    mix(q.r3);
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qqpft
