// Acceptance suite: runs every top-level correctness criterion end to end
// and prints one pass/fail line per criterion. Exits nonzero when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qqpft/battery.hpp"
#include "qqpft/io.hpp"

using namespace qqpft;

namespace {

struct Gate {
  int index = 0;
  int failures = 0;

  void report(const std::string& name, bool ok, const std::string& detail, double seconds) {
    ++index;
    std::printf("[%2d/10] %s %-38s (%s, %.2f s)\n", index, ok ? "PASS" : "FAIL", name.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

double max_comp(const Quaternion& q) {
  return std::max(std::max(std::abs(q.r0), std::abs(q.r1)),
                  std::max(std::abs(q.r2), std::abs(q.r3)));
}

std::string fmt_err(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "max err %.3g", v);
  return buf;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Quaternion random_quat(Rng& rng) {
  return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
          rng.uniform(-1.0, 1.0)};
}

ParamSet random_param_set(Rng& rng) {
  double b = rng.uniform(0.5, 2.0);
  if (rng.uniform() < 0.5) b = -b;
  return {rng.uniform(-0.5, 0.5), b, rng.uniform(-0.5, 0.5), rng.uniform(-1.0, 1.0),
          rng.uniform(-1.0, 1.0)};
}

double rel_l2_error(const QSignal2D& got, const QSignal2D& want) {
  return lp_norm(subtract(got, want), 2.0) / lp_norm(want, 2.0);
}

const ParamPair kGenPair = {{0.3, 1.1, 0.2, -0.4, 0.5}, {-0.2, 0.9, 0.1, 0.3, -0.6}};

// 1. Randomized algebra identities.
void criterion_algebra(Gate& gate) {
  Timer timer;
  Rng rng(101);
  double err = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const Quaternion a = random_quat(rng);
    const Quaternion b = random_quat(rng);
    const Quaternion c = random_quat(rng);
    err = std::max(err, max_comp((a * b) * c - a * (b * c)));
    err = std::max(err, max_comp(conj(a * b) - conj(b) * conj(a)));
    err = std::max(err, std::abs(modulus(a * b) - modulus(a) * modulus(b)));
    err = std::max(err, std::abs(sc(a * b * c) - sc(b * c * a)));
    err = std::max(err, std::abs(sc(a * b * c) - sc(c * a * b)));
  }
  const double sec = timer.seconds();
  gate.report("algebra identities", err <= 1e-10 && sec < 1.0, fmt_err(err), sec);
}

// 2. Fast path against the direct quadrature oracle.
void criterion_oracle(Gate& gate) {
  Timer timer;
  Rng rng(102);
  double err = 0.0;
  for (int it = 0; it < 10; ++it) {
    const ParamPair P{random_param_set(rng), random_param_set(rng)};
    const QSignal2D f = gen_quaternion_random(GridSpec{32, 16.0}, rng.next_u64());
    const QQPFTResult fast = qqpft_fast(f, P);
    const QQPFTResult direct = qqpft_direct(f, P, fast.freq);
    for (std::size_t i = 0; i < fast.values.size(); ++i)
      err = std::max(err, max_comp(fast.values[i] - direct.values[i]));
  }
  const double sec = timer.seconds();
  gate.report("fast path vs direct oracle", err <= 1e-8 && sec < 30.0, fmt_err(err), sec);
}

// 3. Fourier-specialized transform of the unit Gaussian.
void criterion_gaussian(Gate& gate) {
  Timer timer;
  const QSignal2D f = gen_gaussian(GridSpec{128, 20.0}, 1.0);
  const QQPFTResult F = qqpft_fast(f, ParamPair::fourier());
  double err = 0.0;
  for (int k1 = 0; k1 < F.n(); ++k1)
    for (int k2 = 0; k2 < F.n(); ++k2) {
      const double xi1 = F.freq.xi1[k1];
      const double xi2 = F.freq.xi2[k2];
      if (xi1 * xi1 + xi2 * xi2 > 16.0) continue;
      const Quaternion want(std::exp(-0.5 * (xi1 * xi1 + xi2 * xi2)));
      err = std::max(err, max_comp(F.at(k1, k2) - want));
    }
  gate.report("Gaussian analytic transform", err <= 1e-8, fmt_err(err), timer.seconds());
}

// 4. Parseval in both forms.
void criterion_parseval(Gate& gate) {
  Timer timer;
  Rng rng(104);
  double err_fast = 0.0, err_suite = 0.0, err_inner = 0.0;
  {
    const QSignal2D f = gen_gaussian(GridSpec{64, 16.0}, 1.0);
    const QQPFTResult F = qqpft_fast(f, kGenPair);
    const double lhs = kGenPair.abs_b() * lp_norm(F, 2.0) * lp_norm(F, 2.0);
    const double rhs = lp_norm(f, 2.0) * lp_norm(f, 2.0);
    err_fast = std::abs(lhs - rhs) / rhs;
  }
  for (int it = 0; it < 6; ++it) {
    const ParamPair P{random_param_set(rng), random_param_set(rng)};
    const GridSpec spec{32, 16.0};
    const QSignal2D f = gen_random_smooth(spec, rng.next_u64());
    const QSignal2D g = gen_random_smooth(spec, rng.next_u64());
    const QQPFTResult F = qqpft_fast(f, P);
    const QQPFTResult G = qqpft_fast(g, P);
    const double lhs = P.abs_b() * lp_norm(F, 2.0) * lp_norm(F, 2.0);
    const double rhs = lp_norm(f, 2.0) * lp_norm(f, 2.0);
    err_suite = std::max(err_suite, std::abs(lhs - rhs) / rhs);
    double acc = 0.0;
    for (std::size_t i = 0; i < F.values.size(); ++i) {
      const Quaternion& a = F.values[i];
      const Quaternion& b = G.values[i];
      acc += a.r0 * b.r0 + a.r1 * b.r1 + a.r2 * b.r2 + a.r3 * b.r3;
    }
    acc *= F.freq.dxi1 * F.freq.dxi2;
    const double inner_lhs = P.abs_b() * acc;
    const double inner_rhs = scalar_inner(f, g);
    err_inner = std::max(err_inner,
                         std::abs(inner_lhs - inner_rhs) /
                             std::max(1e-30, lp_norm(f, 2.0) * lp_norm(g, 2.0)));
  }
  const bool ok = err_fast <= 1e-6 && err_suite <= 1e-3 && err_inner <= 1e-3;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "fast %.2g suite %.2g inner %.2g", err_fast, err_suite,
                err_inner);
  gate.report("Parseval identities", ok, detail, timer.seconds());
}

// 5. Inversion round trips for the plain and windowed transforms.
void criterion_inversion(Gate& gate) {
  Timer timer;
  double e_ft, e_gen, e_wft, e_wgen;
  {
    const GridSpec spec{64, 16.0};
    const QSignal2D f = gen_bandlimited_random(spec, 105);
    e_ft = rel_l2_error(qqpft_inverse(qft_fast(f), spec), f);
  }
  {
    const GridSpec spec{64, 16.0};
    const QSignal2D f = gen_random_smooth(spec, 106);
    e_gen = rel_l2_error(qqpft_inverse(qqpft_fast(f, kGenPair), spec), f);
  }
  {
    const GridSpec spec{32, 16.0};
    const QSignal2D f = gen_bandlimited_random(spec, 107);
    const QSignal2D g = gen_gaussian(spec, 1.0);
    const WindowedPair wp(f, g, ParamPair::fourier());
    const QSignal2D back = stqqpft_inverse_slices(
        spec, [&wp](int a, int b) { return stqqpft_slice(wp, a, b); }, g, ParamPair::fourier());
    e_wft = rel_l2_error(back, f);
  }
  {
    const GridSpec spec{64, 16.0};
    const QSignal2D f = gen_gaussian(spec, 1.3);
    const QSignal2D g = gen_gaussian(spec, 1.0);
    const WindowedPair wp(f, g, kGenPair);
    const QSignal2D back = stqqpft_inverse_slices(
        spec, [&wp](int a, int b) { return stqqpft_slice(wp, a, b); }, g, kGenPair);
    e_wgen = rel_l2_error(back, f);
  }
  const bool ok = e_ft <= 1e-6 && e_gen <= 1e-3 && e_wft <= 1e-6 && e_wgen <= 1e-3;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "plain %.2g/%.2g windowed %.2g/%.2g", e_ft, e_gen, e_wft,
                e_wgen);
  gate.report("inversion round trips", ok, detail, timer.seconds());
}

// 6. Kernel-shift identities and the bilinear transform relations.
void criterion_relations(Gate& gate) {
  Timer timer;
  Rng rng(108);
  double err_id = 0.0;
  for (Axis ax : {Axis::I, Axis::J}) {
    for (int it = 0; it < 1000; ++it) {
      const ParamSet L = random_param_set(rng);
      const double t = rng.uniform(-2.0, 2.0);
      const double xi = rng.uniform(-2.0, 2.0);
      const double r = rng.uniform(-2.0, 2.0);
      const double k = rng.uniform(-2.0, 2.0);
      err_id = std::max(
          err_id, max_comp(kernel(ax, L, t + r * k, xi) -
                           kernel(ax, L, t, xi + 2.0 * r * k * L.a / L.b) *
                               shift_phase(ax, L, r, k, xi)));
      const double x = rng.uniform(-2.0, 2.0);
      err_id = std::max(
          err_id, max_comp(kernel(ax, L, 2.0 * (t - x), xi) -
                           kernel(ax, wvd_params(L), t, xi - 4.0 * L.a * x / L.b) *
                               wvd_phase(ax, L, x, xi)));
    }
  }

  const GridSpec spec{32, 16.0};
  const QSignal2D f = gen_random_smooth(spec, 109);
  const QSignal2D g = gen_gaussian(spec, 1.0);
  double err_af = 0.0, err_wvd = 0.0;
  {
    const TFGrid4D A = qqpaf(f, g, kGenPair);
    for (int it = 0; it < 24; ++it) {
      const int p1 = static_cast<int>(rng.uniform(0, spec.n / 2));
      const int p2 = static_cast<int>(rng.uniform(0, spec.n / 2));
      const int k1 = static_cast<int>(rng.uniform(0, spec.n));
      const int k2 = static_cast<int>(rng.uniform(0, spec.n));
      const double x1 = A.xspec().coord(p1);
      const double x2 = A.xspec().coord(p2);
      const double xi1 = A.xispec().xi1[k1];
      const double xi2 = A.xispec().xi2[k2];
      const Quaternion s = stqqpft_direct_at(f, g, kGenPair, 2 * p1, 2 * p2,
                                             xi1 - kGenPair.l1.a * x1 / kGenPair.l1.b,
                                             xi2 - kGenPair.l2.a * x2 / kGenPair.l2.b,
                                             WindowFill::ZeroFill);
      err_af = std::max(err_af, std::abs(modulus(A.at(p1, p2, k1, k2)) - modulus(s)));
      const Quaternion rhs = shift_phase(Axis::I, kGenPair.l1, -0.5, x1, xi1) * s *
                             shift_phase(Axis::J, kGenPair.l2, -0.5, x2, xi2);
      err_af = std::max(err_af, max_comp(A.at(p1, p2, k1, k2) - rhs));
    }
  }
  {
    const QSignal2D gref = reflect(g);
    const ParamPair doubled{wvd_params(kGenPair.l1), wvd_params(kGenPair.l2)};
    for (int it = 0; it < 24; ++it) {
      const int m1 = static_cast<int>(rng.uniform(0, spec.n));
      const int m2 = static_cast<int>(rng.uniform(0, spec.n));
      const QQPFTResult slice = qqpwvd_slice(f, g, kGenPair, m1, m2);
      const int k1 = static_cast<int>(rng.uniform(0, spec.n));
      const int k2 = static_cast<int>(rng.uniform(0, spec.n));
      const double x1 = spec.coord(m1);
      const double x2 = spec.coord(m2);
      const double xi1 = slice.freq.xi1[k1];
      const double xi2 = slice.freq.xi2[k2];
      const Quaternion s = stqqpft_direct_at(f, gref, doubled, 2 * m1 - spec.n / 2,
                                             2 * m2 - spec.n / 2,
                                             xi1 - 4.0 * kGenPair.l1.a * x1 / kGenPair.l1.b,
                                             xi2 - 4.0 * kGenPair.l2.a * x2 / kGenPair.l2.b,
                                             WindowFill::ZeroFill);
      err_wvd = std::max(err_wvd, std::abs(modulus(slice.at(k1, k2)) - 4.0 * modulus(s)));
      const Quaternion rhs = 4.0 * (wvd_phase(Axis::I, kGenPair.l1, x1, xi1) * s *
                                    wvd_phase(Axis::J, kGenPair.l2, x2, xi2));
      err_wvd = std::max(err_wvd, max_comp(slice.at(k1, k2) - rhs));
    }
  }
  const bool ok = err_id <= 1e-10 && err_af <= 1e-8 && err_wvd <= 1e-8;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "kernel %.2g af %.2g wvd %.2g", err_id, err_af, err_wvd);
  gate.report("shift identities and relations", ok, detail, timer.seconds());
}

// 7. Translation and dyadic scaling covariance.
void criterion_covariance(Gate& gate) {
  Timer timer;
  Rng rng(110);
  const GridSpec spec{32, 16.0};
  const QSignal2D f = gen_gaussian(spec, 1.0);
  const QSignal2D g = gen_gaussian(spec, 1.0);
  double err_tr = 0.0;
  {
    const int k1 = 2, k2 = -3;
    const QSignal2D fs = translate(f, k1, k2);
    const double dk1 = k1 * spec.spacing();
    const double dk2 = k2 * spec.spacing();
    const FreqGridSpec freq = canonical_freq_grid(spec, kGenPair);
    for (int it = 0; it < 16; ++it) {
      const int mx1 = 8 + static_cast<int>(rng.uniform(0, 16));
      const int mx2 = 8 + static_cast<int>(rng.uniform(0, 16));
      const int a1 = static_cast<int>(rng.uniform(0, spec.n));
      const int a2 = static_cast<int>(rng.uniform(0, spec.n));
      const double xi1 = freq.xi1[a1];
      const double xi2 = freq.xi2[a2];
      const Quaternion lhs = stqqpft_direct_at(fs, g, kGenPair, mx1, mx2, xi1, xi2,
                                               WindowFill::ZeroFill);
      const Quaternion s = stqqpft_direct_at(f, g, kGenPair, mx1 - k1, mx2 - k2,
                                             xi1 + 2.0 * kGenPair.l1.a * dk1 / kGenPair.l1.b,
                                             xi2 + 2.0 * kGenPair.l2.a * dk2 / kGenPair.l2.b,
                                             WindowFill::ZeroFill);
      const Quaternion rhs = shift_phase(Axis::I, kGenPair.l1, 1.0, dk1, xi1) * s *
                             shift_phase(Axis::J, kGenPair.l2, 1.0, dk2, xi2);
      err_tr = std::max(err_tr, max_comp(lhs - rhs));
    }
  }
  double err_sc = 0.0;
  {
    const double lam = 2.0;
    const QSignal2D fl = dilate(f, lam);
    const QSignal2D gl = dilate(g, lam);
    const ParamPair scaled{scaled_params(kGenPair.l1, lam), scaled_params(kGenPair.l2, lam)};
    for (int it = 0; it < 8; ++it) {
      const int mx1 = static_cast<int>(rng.uniform(0, spec.n));
      const int mx2 = static_cast<int>(rng.uniform(0, spec.n));
      const QQPFTResult lhs = stqqpft_slice(WindowedPair(fl, gl, kGenPair), mx1, mx2);
      const QQPFTResult rhs = stqqpft_slice(WindowedPair(f, g, scaled), mx1, mx2);
      for (std::size_t i = 0; i < lhs.values.size(); ++i)
        err_sc = std::max(err_sc, max_comp(lhs.values[i] - rhs.values[i]));
    }
  }
  const bool ok = err_tr <= 1e-8 && err_sc <= 1e-8;
  char detail[64];
  std::snprintf(detail, sizeof(detail), "translate %.2g scale %.2g", err_tr, err_sc);
  gate.report("translation and scaling covariance", ok, detail, timer.seconds());
}

// 8. The full randomized inequality battery.
void criterion_battery(Gate& gate) {
  Timer timer;
  BatteryOptions opts;
  opts.battery = "all";
  opts.seed = 7;
  opts.n = 32;
  opts.extent = 16.0;
  opts.signal_count = 20;
  opts.param_count = 5;
  std::ostringstream report;
  const BatteryResult result = run_battery(opts, report);
  const double sec = timer.seconds();
  char detail[96];
  std::snprintf(detail, sizeof(detail), "%d checks, %d failed", result.total, result.failed);
  gate.report("randomized inequality battery", result.failed == 0 && sec < 600.0, detail, sec);
}

// 9. Frozen Gaussian Shannon bound values.
void criterion_shannon_values(Gate& gate) {
  Timer timer;
  QSignal2D f = gen_gaussian(GridSpec{128, 20.0}, 1.0);
  f = scale_left(Quaternion(1.0 / lp_norm(f, 2.0)), f);
  const VerificationReport r = check_shannon_up(f, ParamPair::fourier());
  const double want_lhs = 2.0 * (1.0 + std::log(kPi));
  const double e = std::exp(1.0);
  const double want_rhs = std::log(e * e / (16.0 * kPi * kPi));
  const double want_margin = want_lhs - want_rhs;  // log(16 pi^4) = 7.35151...
  const bool ok = r.passed && std::abs(r.lhs - want_lhs) <= 1e-4 &&
                  std::abs(r.rhs - want_rhs) <= 1e-12 &&
                  std::abs(r.margin - want_margin) <= 1e-3;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "lhs %.6f rhs %.6f margin %.6f", r.lhs, r.rhs, r.margin);
  gate.report("Gaussian Shannon bound values", ok, detail, timer.seconds());
}

// 10. Byte-identical reports for a fixed seed.
void criterion_determinism(Gate& gate) {
  Timer timer;
  BatteryOptions opts;
  opts.battery = "all";
  opts.seed = 7;
  opts.n = 32;
  opts.signal_count = 2;
  opts.param_count = 2;
  std::ostringstream a, b;
  run_battery(opts, a);
  run_battery(opts, b);
  const bool ok = a.str() == b.str() && !a.str().empty();
  char detail[64];
  std::snprintf(detail, sizeof(detail), "%zu report bytes", a.str().size());
  gate.report("deterministic verify reports", ok, detail, timer.seconds());
}

}  // namespace

int main() {
  Gate gate;
  criterion_algebra(gate);
  criterion_oracle(gate);
  criterion_gaussian(gate);
  criterion_parseval(gate);
  criterion_inversion(gate);
  criterion_relations(gate);
  criterion_covariance(gate);
  criterion_battery(gate);
  criterion_shannon_values(gate);
  criterion_determinism(gate);
  std::printf("ACCEPTANCE: %d/10 criteria passed\n", 10 - gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
