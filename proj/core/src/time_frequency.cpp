#include "qqpft/time_frequency.hpp"

#include <cmath>
#include <stdexcept>

namespace qqpft {

namespace {

int wrap(int m, int n) {
  int r = m % n;
  return r < 0 ? r + n : r;
}

// Windowed product h_x(t) = f(t) * conj(g(t - x)) with the window shifted
// circularly; mx is the window-center index on the signal grid.
QSignal2D windowed_product(const QSignal2D& f, const QSignal2D& g, int mx1, int mx2) {
  const int n = f.n();
  const int h = n / 2;
  QSignal2D out(f.spec());
  for (int m1 = 0; m1 < n; ++m1) {
    const int q1 = wrap(m1 - mx1 + h, n);
    for (int m2 = 0; m2 < n; ++m2) {
      const int q2 = wrap(m2 - mx2 + h, n);
      out.at(m1, m2) = f.at(m1, m2) * conj(g.at(q1, q2));
    }
  }
  return out;
}

}  // namespace

WindowedPair::WindowedPair(QSignal2D f_, QSignal2D g_, ParamPair params_)
    : f(std::move(f_)), g(std::move(g_)), params(params_) {
  if (!(f.spec() == g.spec()))
    throw std::invalid_argument("WindowedPair: signal and window grids differ");
  if (!(lp_norm(g, 2.0) > 0.0))
    throw std::invalid_argument("WindowedPair: window must have positive L2 norm");
  for (const auto& q : g.samples())
    if (!is_finite(q)) throw std::invalid_argument("WindowedPair: window not finite");
}

QQPFTResult stqqpft_slice(const WindowedPair& wp, int mx1, int mx2) {
  return qqpft_fast(windowed_product(wp.f, wp.g, mx1, mx2), wp.params);
}

TFGrid4D stqqpft(const WindowedPair& wp) {
  const int n = wp.f.n();
  TFGrid4D out(wp.f.spec(), canonical_freq_grid(wp.f.spec(), wp.params), wp.params);
  for (int mx1 = 0; mx1 < n; ++mx1)
    for (int mx2 = 0; mx2 < n; ++mx2) {
      QQPFTResult slice = stqqpft_slice(wp, mx1, mx2);
      for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = 0; k2 < n; ++k2) out.at(mx1, mx2, k1, k2) = slice.at(k1, k2);
    }
  return out;
}

Quaternion stqqpft_direct_at(const QSignal2D& f, const QSignal2D& g, const ParamPair& P,
                             int mx1, int mx2, double xi1, double xi2, WindowFill fill) {
  if (fill == WindowFill::Circular)
    return qqpft_direct_at(windowed_product(f, g, mx1, mx2), P, xi1, xi2);
  const int n = f.n();
  const int h = n / 2;
  QSignal2D prod(f.spec());
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2)
      prod.at(m1, m2) =
          f.at(m1, m2) * conj(g.at_or_zero(m1 - mx1 + h, m2 - mx2 + h));
  return qqpft_direct_at(prod, P, xi1, xi2);
}

QSignal2D stqqpft_inverse_slices(const GridSpec& xspec,
                                 const std::function<QQPFTResult(int, int)>& slice,
                                 const QSignal2D& g, const ParamPair& P) {
  if (!(xspec == g.spec()))
    throw std::invalid_argument("stqqpft_inverse: window grid does not match x lattice");
  const double gnorm2 = scalar_inner(g, g);
  if (!(gnorm2 > 0.0)) throw std::invalid_argument("stqqpft_inverse: window must be nonzero");

  const int n = xspec.n;
  const int h = n / 2;
  const double dx2 = xspec.spacing() * xspec.spacing();
  QSignal2D acc(xspec);
  for (int mx1 = 0; mx1 < n; ++mx1)
    for (int mx2 = 0; mx2 < n; ++mx2) {
      QQPFTResult sl = slice(mx1, mx2);
      if (sl.params.l1.b != P.l1.b || sl.params.l2.b != P.l2.b)
        throw std::invalid_argument("stqqpft_inverse: slice parameters do not match");
      QSignal2D hx = qqpft_inverse(sl, xspec);
      for (int m1 = 0; m1 < n; ++m1) {
        const int q1 = wrap(m1 - mx1 + h, n);
        for (int m2 = 0; m2 < n; ++m2) {
          const int q2 = wrap(m2 - mx2 + h, n);
          acc.at(m1, m2) += hx.at(m1, m2) * g.at(q1, q2);
        }
      }
    }
  const double scale = dx2 / gnorm2;
  for (auto& q : acc.samples()) q *= scale;
  return acc;
}

QSignal2D stqqpft_inverse(const TFGrid4D& S, const QSignal2D& g, const ParamPair& P) {
  const int n = S.xspec().n;
  auto slice = [&](int mx1, int mx2) {
    QQPFTResult r{P, S.xispec(), {}, {false, false}};
    r.values.resize(static_cast<std::size_t>(n) * n);
    for (int k1 = 0; k1 < n; ++k1)
      for (int k2 = 0; k2 < n; ++k2) r.at(k1, k2) = S.at(mx1, mx2, k1, k2);
    return r;
  };
  return stqqpft_inverse_slices(S.xspec(), slice, g, P);
}

QQPFTResult qqpaf_slice(const QSignal2D& f, const QSignal2D& g, const ParamPair& P, int p1,
                        int p2) {
  const int n = f.n();
  const int d1 = p1 - n / 4;
  const int d2 = p2 - n / 4;
  QSignal2D v(f.spec());
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2)
      v.at(m1, m2) = f.at_or_zero(m1 + d1, m2 + d2) * conj(g.at_or_zero(m1 - d1, m2 - d2));
  return qqpft_fast(v, P);
}

TFGrid4D qqpaf(const QSignal2D& f, const QSignal2D& g, const ParamPair& P) {
  if (!(f.spec() == g.spec())) throw std::invalid_argument("qqpaf: grid mismatch");
  const int n = f.n();
  if (n % 4 != 0) throw std::invalid_argument("qqpaf: n must be divisible by 4");
  const GridSpec xspec(n / 2, f.spec().extent);  // even-sample lags, spacing 2*dt
  TFGrid4D out(xspec, canonical_freq_grid(f.spec(), P), P);
  for (int p1 = 0; p1 < n / 2; ++p1)
    for (int p2 = 0; p2 < n / 2; ++p2) {
      QQPFTResult slice = qqpaf_slice(f, g, P, p1, p2);
      for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = 0; k2 < n; ++k2) out.at(p1, p2, k1, k2) = slice.at(k1, k2);
    }
  return out;
}

Quaternion qqpaf_direct_at(const QSignal2D& f, const QSignal2D& g, const ParamPair& P,
                           int p1, int p2, double xi1, double xi2) {
  const int n = f.n();
  const int d1 = p1 - n / 4;
  const int d2 = p2 - n / 4;
  QSignal2D v(f.spec());
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2)
      v.at(m1, m2) = f.at_or_zero(m1 + d1, m2 + d2) * conj(g.at_or_zero(m1 - d1, m2 - d2));
  return qqpft_direct_at(v, P, xi1, xi2);
}

namespace {

// Lag product u_x(q) = f(x + tau/2) conj(g(x - tau/2)) for tau = 2*(q - n/2)*dt,
// sampled on the signal lattice; zero fill outside.
QSignal2D wvd_lag_product(const QSignal2D& f, const QSignal2D& g, int mx1, int mx2) {
  const int n = f.n();
  const int h = n / 2;
  QSignal2D u(f.spec());
  for (int q1 = 0; q1 < n; ++q1) {
    const int s1 = q1 - h;
    for (int q2 = 0; q2 < n; ++q2) {
      const int s2 = q2 - h;
      u.at(q1, q2) = f.at_or_zero(mx1 + s1, mx2 + s2) * conj(g.at_or_zero(mx1 - s1, mx2 - s2));
    }
  }
  return u;
}

}  // namespace

QQPFTResult qqpwvd_slice(const QSignal2D& f, const QSignal2D& g, const ParamPair& P, int mx1,
                         int mx2) {
  const ParamPair doubled{wvd_params(P.l1), wvd_params(P.l2)};
  QQPFTResult slice = qqpft_fast(wvd_lag_product(f, g, mx1, mx2), doubled);
  for (auto& q : slice.values) q *= 4.0;
  return slice;
}

TFGrid4D qqpwvd(const QSignal2D& f, const QSignal2D& g, const ParamPair& P) {
  if (!(f.spec() == g.spec())) throw std::invalid_argument("qqpwvd: grid mismatch");
  const int n = f.n();
  const ParamPair doubled{wvd_params(P.l1), wvd_params(P.l2)};
  TFGrid4D out(f.spec(), canonical_freq_grid(f.spec(), doubled), P);
  for (int mx1 = 0; mx1 < n; ++mx1)
    for (int mx2 = 0; mx2 < n; ++mx2) {
      QQPFTResult slice = qqpwvd_slice(f, g, P, mx1, mx2);
      for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = 0; k2 < n; ++k2) out.at(mx1, mx2, k1, k2) = slice.at(k1, k2);
    }
  return out;
}

Quaternion qqpwvd_direct_at(const QSignal2D& f, const QSignal2D& g, const ParamPair& P,
                            int mx1, int mx2, double xi1, double xi2) {
  const int n = f.n();
  const int h = n / 2;
  const GridSpec& spec = f.spec();
  const double dt = spec.spacing();
  std::vector<Quaternion> ki(n), kj(n);
  for (int q = 0; q < n; ++q) {
    const double tau = 2.0 * (q - h) * dt;
    ki[q] = kernel(Axis::I, P.l1, tau, xi1);
    kj[q] = kernel(Axis::J, P.l2, tau, xi2);
  }
  Quaternion acc;
  for (int q1 = 0; q1 < n; ++q1) {
    Quaternion row;
    for (int q2 = 0; q2 < n; ++q2) {
      const Quaternion mid =
          f.at_or_zero(mx1 + q1 - h, mx2 + q2 - h) * conj(g.at_or_zero(mx1 - (q1 - h), mx2 - (q2 - h)));
      row += mid * kj[q2];
    }
    acc += ki[q1] * row;
  }
  return acc * (4.0 * dt * dt);
}

QSignal2D translate(const QSignal2D& f, int k1, int k2) {
  const int n = f.n();
  QSignal2D out(f.spec());
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2) out.at(m1, m2) = f.at_or_zero(m1 - k1, m2 - k2);
  return out;
}

QSignal2D dilate(const QSignal2D& f, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("dilate: lambda must be positive");
  const double l2 = std::log2(lambda);
  if (std::abs(l2 - std::nearbyint(l2)) > 1e-12)
    throw std::invalid_argument("dilate: lambda must be a power of two");
  QSignal2D out(GridSpec(f.n(), f.spec().extent * lambda));
  const double inv = 1.0 / lambda;
  for (std::size_t i = 0; i < out.samples().size(); ++i)
    out.samples()[i] = f.samples()[i] * inv;
  return out;
}

QSignal2D reflect(const QSignal2D& f) {
  const int n = f.n();
  QSignal2D out(f.spec());
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2) out.at(m1, m2) = f.at((n - m1) % n, (n - m2) % n);
  return out;
}

}  // namespace qqpft
