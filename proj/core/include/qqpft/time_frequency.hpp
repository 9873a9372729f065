#pragma once

#include <functional>

#include "qqpft/transforms.hpp"

namespace qqpft {

/// Signal, quaternion window function, and the transform parameters of a
/// windowed analysis. f and g must share one grid; g must be nonzero.
struct WindowedPair {
  QSignal2D f;
  QSignal2D g;
  ParamPair params;

  WindowedPair(QSignal2D f_, QSignal2D g_, ParamPair params_);
};

/// One frequency slice of the windowed transform: the transform of
/// f(t) * conj(g(t - x)) with the window translated circularly by the
/// sample offsets (mx1, mx2) relative to the grid origin index n/2.
/// Window-center indices outside [0, n) wrap.
QQPFTResult stqqpft_slice(const WindowedPair& wp, int mx1, int mx2);

/// Full windowed transform on the 4D lattice: window centers x on the
/// signal grid, frequencies on the canonical grid. O(n^4) values; for
/// memory-bounded runs use stqqpft_slice or the streaming inverse.
TFGrid4D stqqpft(const WindowedPair& wp);

/// Window translation convention for the direct evaluator. The lattice
/// transforms shift the window circularly (which keeps the discrete frame
/// identities exact); the bilinear half-shift definitions zero-fill, and
/// their relation checks need the matching convention on the windowed side.
enum class WindowFill { Circular, ZeroFill };

/// Direct quadrature of one windowed-transform value at an arbitrary
/// frequency pair; the oracle for off-grid frequency evaluations. The
/// window-center index may lie outside [0, n).
Quaternion stqqpft_direct_at(const QSignal2D& f, const QSignal2D& g, const ParamPair& P,
                             int mx1, int mx2, double xi1, double xi2,
                             WindowFill fill = WindowFill::Circular);

/// Inversion: f(t) = (|B1 B2| / ||g||^2) * sum_{x,xi} conj_kernel(i) *
/// S(x,xi) * conj_kernel(j) * g(t-x) * dx^2 dxi1 dxi2.
QSignal2D stqqpft_inverse(const TFGrid4D& S, const QSignal2D& g, const ParamPair& P);

/// Streaming variant: slices are pulled one window center at a time, so the
/// 4D field never needs to be materialized.
QSignal2D stqqpft_inverse_slices(const GridSpec& xspec,
                                 const std::function<QQPFTResult(int, int)>& slice,
                                 const QSignal2D& g, const ParamPair& P);

/// Ambiguity transform A(x, xi) = sum_t K_i(t1,xi1) f(t + x/2) conj(g(t - x/2))
/// K_j(t2,xi2) dt^2 with x restricted to even-sample lags; the output x
/// lattice has n/2 points per axis with spacing 2*dt. Out-of-grid half-shift
/// lookups are zero-filled.
TFGrid4D qqpaf(const QSignal2D& f, const QSignal2D& g, const ParamPair& P);

/// One ambiguity value straight from the definition (the fast-path oracle).
/// (p1, p2) index the decimated x lattice.
Quaternion qqpaf_direct_at(const QSignal2D& f, const QSignal2D& g, const ParamPair& P,
                           int p1, int p2, double xi1, double xi2);

/// One fixed-lag frequency slice of the ambiguity transform.
QQPFTResult qqpaf_slice(const QSignal2D& f, const QSignal2D& g, const ParamPair& P, int p1,
                        int p2);

/// Wigner-Ville transform W(x, xi) = sum_t K_i(t1,xi1) f(x + t/2)
/// conj(g(x - t/2)) K_j(t2,xi2) dt^2 with the lag t on the even-sample
/// sublattice (cell (2*dt)^2); x runs over the full signal grid and the
/// frequency grid is the canonical grid of the doubled parameters.
TFGrid4D qqpwvd(const QSignal2D& f, const QSignal2D& g, const ParamPair& P);

/// One Wigner-Ville value straight from the definition.
Quaternion qqpwvd_direct_at(const QSignal2D& f, const QSignal2D& g, const ParamPair& P,
                            int mx1, int mx2, double xi1, double xi2);

/// One fixed-x frequency slice of the Wigner-Ville transform.
QQPFTResult qqpwvd_slice(const QSignal2D& f, const QSignal2D& g, const ParamPair& P, int mx1,
                         int mx2);

/// Integer-lag sample shift with zero fill outside the grid,
/// out[m] = f[m - k].
QSignal2D translate(const QSignal2D& f, int k1, int k2);

/// f_lambda(t) = (1/lambda) f(t/lambda) realized exactly on a grid with the
/// extent scaled by lambda. lambda must be a (possibly negative) power of
/// two so the dyadic grids stay sample-aligned.
QSignal2D dilate(const QSignal2D& f, double lambda);

/// g~(t) = g(-t) on the circular lattice.
QSignal2D reflect(const QSignal2D& f);

}  // namespace qqpft
