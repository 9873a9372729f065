#include "qqpft/transforms.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fft_engine.hpp"

namespace qqpft {

namespace {

using cd = std::complex<double>;

// Two-sided sandwich transform between the centered time grid
// t_m = -T/2 + m*dt and the centered FFT frequency grid
// eta_a = 2*pi*(a - n/2)/(n*dt), without quadrature scaling:
//
//   forward: out(a1,a2) = sum_m exp_i(-t_m1 eta_a1) q(m) exp_j(-t_m2 eta_a2)
//   inverse: out(m1,m2) = sum_a exp_i(+t_m1 eta_a1) q(a) exp_j(+t_m2 eta_a2)
//
// Split q = qa + qb*j with qa, qb valued in the i-complex subfield
// (qa = r0 + i r1, qb = r2 + i r3). Each half needs one full complex 2D
// FFT; the j-kernel is recovered from the FFT and its second-axis
// reflection. The centered grids contribute the exact offset phases
// exp(i*pi*k') = (-1)^(a1+a2) for even n.
std::vector<Quaternion> qft_core(const std::vector<Quaternion>& in, int n, bool forward) {
  const std::size_t total = in.size();
  const int h = n / 2;
  std::vector<cd> ca(total), cb(total);

  if (forward) {
    for (std::size_t i = 0; i < total; ++i) {
      ca[i] = {in[i].r0, in[i].r1};
      cb[i] = {in[i].r2, in[i].r3};
    }
    detail::fft2(ca.data(), n, -1);
    detail::fft2(cb.data(), n, -1);
  } else {
    // Indexed by centered frequency; place into standard DFT order with the
    // offset parity folded in, then run the conjugate-kernel FFT.
    for (int a1 = 0; a1 < n; ++a1) {
      const int i1 = (a1 + h) % n;
      for (int a2 = 0; a2 < n; ++a2) {
        const int i2 = (a2 + h) % n;
        const double par = ((a1 + a2) & 1) ? -1.0 : 1.0;
        const Quaternion& q = in[static_cast<std::size_t>(a1) * n + a2];
        ca[static_cast<std::size_t>(i1) * n + i2] = par * cd{q.r0, q.r1};
        cb[static_cast<std::size_t>(i1) * n + i2] = par * cd{q.r2, q.r3};
      }
    }
    detail::fft2(ca.data(), n, +1);
    detail::fft2(cb.data(), n, +1);
  }

  std::vector<Quaternion> out(total);
  const cd half_i(0.0, 0.5);
  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = 0; a2 < n; ++a2) {
      cd phi, phi_r, psi, psi_r;
      if (forward) {
        const int i1 = (a1 + h) % n;
        const int i2 = (a2 + h) % n;
        const int i2r = (n - i2) % n;
        const double par = ((a1 + a2) & 1) ? -1.0 : 1.0;
        phi = par * ca[static_cast<std::size_t>(i1) * n + i2];
        phi_r = par * ca[static_cast<std::size_t>(i1) * n + i2r];
        psi = par * cb[static_cast<std::size_t>(i1) * n + i2];
        psi_r = par * cb[static_cast<std::size_t>(i1) * n + i2r];
      } else {
        const int i2r = (n - a2) % n;
        phi = ca[static_cast<std::size_t>(a1) * n + a2];
        phi_r = ca[static_cast<std::size_t>(a1) * n + i2r];
        psi = cb[static_cast<std::size_t>(a1) * n + a2];
        psi_r = cb[static_cast<std::size_t>(a1) * n + i2r];
      }
      const cd out_a = 0.5 * (phi + phi_r) + half_i * (psi - psi_r);
      const cd out_b = -half_i * (phi - phi_r) + 0.5 * (psi + psi_r);
      out[static_cast<std::size_t>(a1) * n + a2] = {out_a.real(), out_a.imag(),
                                                    out_b.real(), out_b.imag()};
    }
  }
  return out;
}

void require_pow2(int n, const char* who) {
  if (!detail::is_pow2(n))
    throw std::invalid_argument(std::string(who) + ": fast path requires power-of-two n");
}

bool chirp_guard_tripped(const GridSpec& spec, const ParamSet& L) {
  // max |2*A*t*dt| over the grid; |t| is largest at the left edge.
  return 2.0 * std::abs(L.a) * (0.5 * spec.extent) * spec.spacing() > kPi / 4.0;
}

// Matches the layout produced by canonical_freq_grid: the FFT index holding
// the value for output index a along an axis with parameter B.
int canonical_source_index(int a, int n, double b) { return b > 0.0 ? a : n - 1 - a; }

bool grids_match(const FreqGridSpec& a, const FreqGridSpec& b) {
  if (a.n() != b.n()) return false;
  auto close = [](double x, double y) {
    return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
  };
  if (!close(a.dxi1, b.dxi1) || !close(a.dxi2, b.dxi2)) return false;
  for (int k = 0; k < a.n(); ++k)
    if (!close(a.xi1[k], b.xi1[k]) || !close(a.xi2[k], b.xi2[k])) return false;
  return true;
}

}  // namespace

FreqGridSpec canonical_freq_grid(const GridSpec& spec, const ParamPair& P) {
  const int n = spec.n;
  const int h = n / 2;
  const double deta = kTwoPi / (n * spec.spacing());
  // Built with the same origin-plus-spacing recurrence the file headers use,
  // so serialized grids reconstruct bit for bit.
  auto axis_origin = [&](double b) { return (b > 0.0 ? -h : h - 1) * deta / b; };
  return FreqGridSpec::uniform(n, axis_origin(P.l1.b), deta / std::abs(P.l1.b),
                               axis_origin(P.l2.b), deta / std::abs(P.l2.b));
}

Quaternion qqpft_direct_at(const QSignal2D& f, const ParamPair& P, double xi1, double xi2) {
  const int n = f.n();
  const GridSpec& spec = f.spec();
  std::vector<Quaternion> ki(n), kj(n);
  for (int m = 0; m < n; ++m) {
    const double t = spec.coord(m);
    ki[m] = kernel(Axis::I, P.l1, t, xi1);
    kj[m] = kernel(Axis::J, P.l2, t, xi2);
  }
  Quaternion acc;
  for (int m1 = 0; m1 < n; ++m1) {
    Quaternion row;
    for (int m2 = 0; m2 < n; ++m2) row += f.at(m1, m2) * kj[m2];
    acc += ki[m1] * row;
  }
  const double d = spec.spacing();
  return acc * (d * d);
}

QQPFTResult qqpft_direct(const QSignal2D& f, const ParamPair& P, const FreqGridSpec& freq) {
  freq.validate();
  QQPFTResult out{P, freq, {}, {false, false}};
  const int nf = freq.n();
  out.values.resize(static_cast<std::size_t>(nf) * nf);
  for (int k1 = 0; k1 < nf; ++k1)
    for (int k2 = 0; k2 < nf; ++k2)
      out.values[static_cast<std::size_t>(k1) * nf + k2] =
          qqpft_direct_at(f, P, freq.xi1[k1], freq.xi2[k2]);
  return out;
}

QQPFTResult qft_fast(const QSignal2D& f) {
  require_pow2(f.n(), "qft_fast");
  const ParamPair ft = ParamPair::fourier();
  const GridSpec& spec = f.spec();
  auto raw = qft_core(f.samples(), spec.n, /*forward=*/true);
  const double d = spec.spacing();
  const double scale = d * d / kTwoPi;
  for (auto& q : raw) q *= scale;
  return {ft, canonical_freq_grid(spec, ft), std::move(raw), {false, false}};
}

QQPFTResult qqpft_fast(const QSignal2D& f, const ParamPair& P) {
  require_pow2(f.n(), "qqpft_fast");
  const GridSpec& spec = f.spec();
  const int n = spec.n;

  // Input chirps of the QQPFT-to-QFT relation, i side left, j side right.
  std::vector<Quaternion> lchirp(n), rchirp(n);
  for (int m = 0; m < n; ++m) {
    const double t = spec.coord(m);
    lchirp[m] = exp_axis(Axis::I, -(P.l1.a * t * t + P.l1.d * t));
    rchirp[m] = exp_axis(Axis::J, -(P.l2.a * t * t + P.l2.d * t));
  }
  std::vector<Quaternion> mod(spec.size());
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2)
      mod[static_cast<std::size_t>(m1) * n + m2] = lchirp[m1] * f.at(m1, m2) * rchirp[m2];

  auto raw = qft_core(mod, n, /*forward=*/true);
  const double d = spec.spacing();
  const double scale = d * d / kTwoPi;

  QQPFTResult out{P, canonical_freq_grid(spec, P), {}, {false, false}};
  out.chirp_warning = {chirp_guard_tripped(spec, P.l1), chirp_guard_tripped(spec, P.l2)};
  out.values.resize(spec.size());

  std::vector<Quaternion> lout(n), rout(n);
  for (int a = 0; a < n; ++a) {
    const double x1 = out.freq.xi1[a];
    const double x2 = out.freq.xi2[a];
    lout[a] = exp_axis(Axis::I, -(P.l1.c * x1 * x1 + P.l1.e * x1));
    rout[a] = exp_axis(Axis::J, -(P.l2.c * x2 * x2 + P.l2.e * x2));
  }
  for (int a1 = 0; a1 < n; ++a1) {
    const int s1 = canonical_source_index(a1, n, P.l1.b);
    for (int a2 = 0; a2 < n; ++a2) {
      const int s2 = canonical_source_index(a2, n, P.l2.b);
      const Quaternion v = raw[static_cast<std::size_t>(s1) * n + s2] * scale;
      out.values[static_cast<std::size_t>(a1) * n + a2] = lout[a1] * v * rout[a2];
    }
  }
  return out;
}

QSignal2D qqpft_inverse(const QQPFTResult& F, const GridSpec& target) {
  F.freq.validate();
  const ParamPair& P = F.params;
  const int n = F.n();

  if (target.n == n && detail::is_pow2(n) && grids_match(F.freq, canonical_freq_grid(target, P))) {
    // Undo the output chirps and the 1/B reordering, inverse-QFT, undo the
    // input chirps. Exact inverse of qqpft_fast on the grid.
    std::vector<Quaternion> eta_order(F.values.size());
    std::vector<Quaternion> lundo(n), rundo(n);
    for (int a = 0; a < n; ++a) {
      const double x1 = F.freq.xi1[a];
      const double x2 = F.freq.xi2[a];
      lundo[a] = exp_axis(Axis::I, P.l1.c * x1 * x1 + P.l1.e * x1);
      rundo[a] = exp_axis(Axis::J, P.l2.c * x2 * x2 + P.l2.e * x2);
    }
    for (int a1 = 0; a1 < n; ++a1) {
      const int s1 = canonical_source_index(a1, n, P.l1.b);
      for (int a2 = 0; a2 < n; ++a2) {
        const int s2 = canonical_source_index(a2, n, P.l2.b);
        eta_order[static_cast<std::size_t>(s1) * n + s2] =
            lundo[a1] * F.values[static_cast<std::size_t>(a1) * n + a2] * rundo[a2];
      }
    }
    auto raw = qft_core(eta_order, n, /*forward=*/false);
    const double deta = kTwoPi / (n * target.spacing());
    const double scale = deta * deta / kTwoPi;
    QSignal2D out(target);
    for (int m1 = 0; m1 < n; ++m1) {
      const double t1 = target.coord(m1);
      const Quaternion lc = exp_axis(Axis::I, P.l1.a * t1 * t1 + P.l1.d * t1);
      for (int m2 = 0; m2 < n; ++m2) {
        const double t2 = target.coord(m2);
        const Quaternion rc = exp_axis(Axis::J, P.l2.a * t2 * t2 + P.l2.d * t2);
        out.at(m1, m2) = lc * (raw[static_cast<std::size_t>(m1) * n + m2] * scale) * rc;
      }
    }
    return out;
  }

  // General uniform grid: direct inversion quadrature.
  const double cell = F.freq.dxi1 * F.freq.dxi2 * P.abs_b();
  QSignal2D out(target);
  std::vector<Quaternion> ki(n), kj(n);
  for (int m1 = 0; m1 < target.n; ++m1) {
    const double t1 = target.coord(m1);
    for (int k = 0; k < n; ++k) ki[k] = conj_kernel(Axis::I, P.l1, t1, F.freq.xi1[k]);
    for (int m2 = 0; m2 < target.n; ++m2) {
      const double t2 = target.coord(m2);
      for (int k = 0; k < n; ++k) kj[k] = conj_kernel(Axis::J, P.l2, t2, F.freq.xi2[k]);
      Quaternion acc;
      for (int k1 = 0; k1 < n; ++k1) {
        Quaternion row;
        for (int k2 = 0; k2 < n; ++k2) row += F.values[static_cast<std::size_t>(k1) * n + k2] * kj[k2];
        acc += ki[k1] * row;
      }
      out.at(m1, m2) = acc * cell;
    }
  }
  return out;
}

double lp_norm(const QQPFTResult& F, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  const double cell = F.freq.dxi1 * F.freq.dxi2;
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& q : F.values) m = std::max(m, norm_sq(q));
    return std::sqrt(m);
  }
  double acc = 0.0;
  if (p == 2.0) {
    for (const auto& q : F.values) acc += norm_sq(q);
  } else {
    for (const auto& q : F.values) acc += std::pow(norm_sq(q), 0.5 * p);
  }
  acc *= cell;
  return p == 2.0 ? std::sqrt(acc) : std::pow(acc, 1.0 / p);
}

}  // namespace qqpft
