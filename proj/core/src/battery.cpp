#include "qqpft/battery.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qqpft/io.hpp"

namespace qqpft {

namespace {

double spectra_scalar_inner(const QQPFTResult& F, const QQPFTResult& G) {
  double acc = 0.0;
  for (std::size_t i = 0; i < F.values.size(); ++i) {
    const Quaternion& a = F.values[i];
    const Quaternion& b = G.values[i];
    acc += a.r0 * b.r0 + a.r1 * b.r1 + a.r2 * b.r2 + a.r3 * b.r3;
  }
  return acc * F.freq.dxi1 * F.freq.dxi2;
}

VerificationReport equality_report(std::string id, double lhs, double rhs, double slack,
                                   std::string digest) {
  VerificationReport r;
  r.inequality_id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  r.margin = slack - std::abs(lhs - rhs);
  r.passed = r.margin >= 0.0;
  r.inputs_digest = std::move(digest);
  return r;
}

VerificationReport tolerance_report(std::string id, double max_err, double tol) {
  VerificationReport r;
  r.inequality_id = std::move(id);
  r.lhs = max_err;
  r.rhs = tol;
  r.slack = 0.0;
  r.margin = tol - max_err;
  r.passed = r.margin >= 0.0;
  return r;
}

ParamSet random_param_set(Rng& rng) {
  const double a = rng.uniform(-0.5, 0.5);
  const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
  const double b = sign * rng.uniform(0.5, 2.0);
  const double c = rng.uniform(-0.5, 0.5);
  const double d = rng.uniform(-1.0, 1.0);
  const double e = rng.uniform(-1.0, 1.0);
  return {a, b, c, d, e};
}

double max_comp_err(const Quaternion& a, const Quaternion& b) {
  return std::max(std::max(std::abs(a.r0 - b.r0), std::abs(a.r1 - b.r1)),
                  std::max(std::abs(a.r2 - b.r2), std::abs(a.r3 - b.r3)));
}

struct Runner {
  const BatteryOptions& opts;
  std::ostream& report;
  BatteryResult result;

  void emit(const VerificationReport& r, const std::string& params_text) {
    report << format_report_line(r, opts.seed, params_text);
    ++result.total;
    if (!r.passed) ++result.failed;
  }
};

QSignal2D normalized(const QSignal2D& f) {
  const double nrm = lp_norm(f, 2.0);
  if (!(nrm > 0.0)) throw std::invalid_argument("battery: zero signal");
  return scale_left(Quaternion(1.0 / nrm), f);
}

struct Combo {
  const QSignal2D& f;        // raw signal
  const QSignal2D& f_next;   // partner for bilinear identities
  QSignal2D fn;              // normalized signal
  QSignal2D gn;              // normalized window
  ParamPair P;
  std::string ptext;
};

void run_parseval(Runner& r, const Combo& c) {
  QQPFTResult F = qqpft_fast(c.f, c.P);
  const double absb = c.P.abs_b();
  const double n2 = lp_norm(F, 2.0);
  const double f2 = lp_norm(c.f, 2.0);
  const double lhs20 = absb * n2 * n2;
  const double rhs20 = f2 * f2;
  r.emit(equality_report("parseval.eq20", lhs20, rhs20, 1e-6 * std::abs(rhs20),
                         digest_signal(c.f)),
         c.ptext);

  QQPFTResult G = qqpft_fast(c.f_next, c.P);
  const double lhs19 = absb * spectra_scalar_inner(F, G);
  const double rhs19 = scalar_inner(c.f, c.f_next);
  const double scale = std::max(1e-30, f2 * lp_norm(c.f_next, 2.0));
  r.emit(equality_report("parseval.eq19", lhs19, rhs19, 1e-3 * scale,
                         digest_signal(c.f) + "/" + digest_signal(c.f_next)),
         c.ptext);
}

void run_hy(Runner& r, const Combo& c) {
  for (double p : {1.0, 4.0 / 3.0, 2.0}) r.emit(check_hausdorff_young(c.f, c.P, p), c.ptext);
}

void run_renyi(Runner& r, const Combo& c) {
  if (r.opts.alpha != 0.0) {
    r.emit(check_renyi_up(c.fn, c.P, r.opts.alpha), c.ptext);
    return;
  }
  for (double alpha : {0.6, 0.8}) r.emit(check_renyi_up(c.fn, c.P, alpha), c.ptext);
}

void run_shannon(Runner& r, const Combo& c) { r.emit(check_shannon_up(c.fn, c.P), c.ptext); }

void run_lieb(Runner& r, const Combo& c, const TFGrid4D& S) {
  const double e2 = lp_norm_4d(S, 2.0);
  r.emit(equality_report("energy.eq37", e2 * e2, 1.0 / c.P.abs_b(), 1e-3 / c.P.abs_b(),
                         digest_signal(c.fn) + "/" + digest_signal(c.gn)),
         c.ptext);
  if (r.opts.q > 2.0) {
    r.emit(check_lieb_from_field(S, 1.0, 1.0, r.opts.q), c.ptext);
    return;
  }
  for (double q : {2.0, 3.0, 4.0}) r.emit(check_lieb_from_field(S, 1.0, 1.0, q), c.ptext);
}

void run_concentration(Runner& r, const Combo& c, const TFGrid4D& S, const TFGrid4D& A,
                       const TFGrid4D& W) {
  struct Case {
    double eps, q;
  };
  std::vector<Case> cases;
  if (r.opts.epsilon >= 0.0)
    cases.push_back({r.opts.epsilon, r.opts.q > 2.0 ? r.opts.q : 4.0});
  else
    cases = {{0.0, 4.0}, {0.2, 4.0}, {0.5, 3.0}};
  for (const Case& cs : cases) {
    r.emit(check_concentration_up(S, TFKind::Stqqpft, cs.eps, cs.q), c.ptext);
    r.emit(check_concentration_up(A, TFKind::Qqpaf, cs.eps, cs.q), c.ptext);
    r.emit(check_concentration_up(W, TFKind::Qqpwvd, cs.eps, cs.q), c.ptext);
  }
}

void run_entropy_tf(Runner& r, const Combo& c, const TFGrid4D& S, const TFGrid4D& A,
                    const TFGrid4D& W) {
  r.emit(check_entropy_up_from_field(S, TFKind::Stqqpft), c.ptext);
  r.emit(check_entropy_up_from_field(A, TFKind::Qqpaf), c.ptext);
  r.emit(check_entropy_up_from_field(W, TFKind::Qqpwvd), c.ptext);
}

void run_lemma41(Runner& r, std::uint64_t seed) {
  Rng rng = Rng(seed).fork(41);
  for (Axis axis : {Axis::I, Axis::J}) {
    double max_err = 0.0;
    for (int it = 0; it < 1000; ++it) {
      const ParamSet L = random_param_set(rng);
      const double t = rng.uniform(-2.0, 2.0);
      const double xi = rng.uniform(-2.0, 2.0);
      const double rr = rng.uniform(-2.0, 2.0);
      const double k = rng.uniform(-2.0, 2.0);
      const Quaternion lhs = kernel(axis, L, t + rr * k, xi);
      const Quaternion rhs =
          kernel(axis, L, t, xi + 2.0 * rr * k * L.a / L.b) * shift_phase(axis, L, rr, k, xi);
      max_err = std::max(max_err, max_comp_err(lhs, rhs));
    }
    r.emit(tolerance_report(axis == Axis::I ? "lemma41.identity.i" : "lemma41.identity.j",
                            max_err, 1e-10),
           "-");
  }
}

void run_thm45(Runner& r, const Combo& c, const TFGrid4D& A) {
  Rng rng = Rng(r.opts.seed).fork(45);
  const int n = c.fn.n();
  const int nh = n / 2;
  double err_phase = 0.0, err_mod = 0.0;
  for (int it = 0; it < 8; ++it) {
    const int p1 = static_cast<int>(rng.uniform(0.0, nh));
    const int p2 = static_cast<int>(rng.uniform(0.0, nh));
    const int k1 = static_cast<int>(rng.uniform(0.0, n));
    const int k2 = static_cast<int>(rng.uniform(0.0, n));
    const double x1 = A.xspec().coord(p1);
    const double x2 = A.xspec().coord(p2);
    const double xi1 = A.xispec().xi1[k1];
    const double xi2 = A.xispec().xi2[k2];
    const Quaternion a = A.at(p1, p2, k1, k2);
    const double s1 = xi1 - c.P.l1.a * x1 / c.P.l1.b;
    const double s2 = xi2 - c.P.l2.a * x2 / c.P.l2.b;
    const Quaternion s = stqqpft_direct_at(c.fn, c.gn, c.P, 2 * p1, 2 * p2, s1, s2,
                                           WindowFill::ZeroFill);
    const Quaternion rhs = shift_phase(Axis::I, c.P.l1, -0.5, x1, xi1) * s *
                           shift_phase(Axis::J, c.P.l2, -0.5, x2, xi2);
    err_phase = std::max(err_phase, max_comp_err(a, rhs));
    err_mod = std::max(err_mod, std::abs(modulus(a) - modulus(s)));
  }
  r.emit(tolerance_report("thm45.phase", err_phase, 1e-8), c.ptext);
  r.emit(tolerance_report("thm45.modulus", err_mod, 1e-8), c.ptext);
}

void run_thm46(Runner& r, const Combo& c, const TFGrid4D& W) {
  Rng rng = Rng(r.opts.seed).fork(46);
  const int n = c.fn.n();
  const QSignal2D gref = reflect(c.gn);
  const ParamPair doubled{wvd_params(c.P.l1), wvd_params(c.P.l2)};
  double err_phase = 0.0, err_mod = 0.0;
  for (int it = 0; it < 8; ++it) {
    const int m1 = static_cast<int>(rng.uniform(0.0, n));
    const int m2 = static_cast<int>(rng.uniform(0.0, n));
    const int k1 = static_cast<int>(rng.uniform(0.0, n));
    const int k2 = static_cast<int>(rng.uniform(0.0, n));
    const double x1 = W.xspec().coord(m1);
    const double x2 = W.xspec().coord(m2);
    const double xi1 = W.xispec().xi1[k1];
    const double xi2 = W.xispec().xi2[k2];
    const Quaternion w = W.at(m1, m2, k1, k2);
    const double s1 = xi1 - 4.0 * c.P.l1.a * x1 / c.P.l1.b;
    const double s2 = xi2 - 4.0 * c.P.l2.a * x2 / c.P.l2.b;
    // Window center of the doubled-parameter transform sits at 2x.
    const Quaternion s = stqqpft_direct_at(c.fn, gref, doubled, 2 * m1 - n / 2,
                                           2 * m2 - n / 2, s1, s2, WindowFill::ZeroFill);
    const Quaternion rhs = 4.0 * (wvd_phase(Axis::I, c.P.l1, x1, xi1) * s *
                                  wvd_phase(Axis::J, c.P.l2, x2, xi2));
    err_phase = std::max(err_phase, max_comp_err(w, rhs));
    err_mod = std::max(err_mod, std::abs(modulus(w) - 4.0 * modulus(s)));
  }
  r.emit(tolerance_report("thm46.phase", err_phase, 1e-8), c.ptext);
  r.emit(tolerance_report("thm46.modulus", err_mod, 1e-8), c.ptext);
}

bool battery_enabled(const std::string& selected, const char* id) {
  return selected == "all" || selected == id;
}

}  // namespace

const std::vector<std::string>& battery_ids() {
  static const std::vector<std::string> ids = {"parseval", "hy",            "renyi",
                                               "shannon",  "lieb",          "concentration",
                                               "entropy-tf", "lemma41",     "thm45",
                                               "thm46",    "all"};
  return ids;
}

BatteryResult run_battery(const BatteryOptions& opts, std::ostream& report,
                          std::ostream* summary) {
  bool known = false;
  for (const auto& id : battery_ids()) known = known || id == opts.battery;
  if (!known) throw std::invalid_argument("unknown battery id: " + opts.battery);

  Runner runner{opts, report, {}};
  const std::string& sel = opts.battery;

  if (battery_enabled(sel, "lemma41")) run_lemma41(runner, opts.seed);

  const bool needs_combos = sel != "lemma41";
  if (needs_combos) {
    const GridSpec spec(opts.n, opts.extent);
    const double width = opts.extent / 16.0;

    std::vector<QSignal2D> signals;
    if (!opts.signals.empty()) {
      signals = opts.signals;
    } else {
      Rng rng(opts.seed);
      signals.push_back(gen_gaussian(spec, width));
      for (int i = 1; i < std::max(1, opts.signal_count); ++i)
        signals.push_back(gen_random_smooth(spec, rng.fork(100 + i).next_u64(), width));
    }
    for (const auto& s : signals)
      if (!(s.spec() == signals.front().spec()))
        throw std::invalid_argument("battery: input signals must share one grid");

    std::vector<ParamPair> params;
    if (opts.params.has_value()) {
      params.push_back(*opts.params);
    } else {
      Rng rng = Rng(opts.seed).fork(7);
      params.push_back(ParamPair::fourier());
      for (int j = 1; j < std::max(1, opts.param_count); ++j)
        params.push_back({random_param_set(rng), random_param_set(rng)});
    }

    const QSignal2D window = gen_gaussian(signals.front().spec(), width);
    const bool needs_tf = battery_enabled(sel, "lieb") || battery_enabled(sel, "concentration") ||
                          battery_enabled(sel, "entropy-tf") || battery_enabled(sel, "thm45") ||
                          battery_enabled(sel, "thm46");

    for (std::size_t i = 0; i < signals.size(); ++i) {
      for (const ParamPair& P : params) {
        Combo combo{signals[i],
                    signals[(i + 1) % signals.size()],
                    normalized(signals[i]),
                    normalized(window),
                    P,
                    format_param_pair(P)};

        if (battery_enabled(sel, "parseval")) run_parseval(runner, combo);
        if (battery_enabled(sel, "hy")) run_hy(runner, combo);
        if (battery_enabled(sel, "renyi")) run_renyi(runner, combo);
        if (battery_enabled(sel, "shannon")) run_shannon(runner, combo);

        if (needs_tf) {
          TFGrid4D S = stqqpft(WindowedPair(combo.fn, combo.gn, P));
          if (battery_enabled(sel, "lieb")) run_lieb(runner, combo, S);
          TFGrid4D A = qqpaf(combo.fn, combo.gn, P);
          TFGrid4D W = qqpwvd(combo.fn, combo.gn, P);
          if (battery_enabled(sel, "concentration")) run_concentration(runner, combo, S, A, W);
          if (battery_enabled(sel, "entropy-tf")) run_entropy_tf(runner, combo, S, A, W);
          if (battery_enabled(sel, "thm45")) run_thm45(runner, combo, A);
          if (battery_enabled(sel, "thm46")) run_thm46(runner, combo, W);
        }
      }
    }
  }

  if (summary) {
    *summary << "battery " << opts.battery << ": " << runner.result.total << " checks, "
             << runner.result.failed << " failed\n";
  }
  return runner.result;
}

}  // namespace qqpft
