#pragma once

#include <array>

#include "qqpft/grid.hpp"
#include "qqpft/params.hpp"

namespace qqpft {

/// Output of the two-sided transforms: quaternion values on a frequency
/// grid (xi1 index outer, xi2 inner), with the producing ParamPair.
/// chirp_warning flags the axes where the fast path's input chirp exceeds
/// the sampling guard max |2*A*t*dt| > pi/4 over the grid; computation
/// proceeds regardless.
struct QQPFTResult {
  ParamPair params;
  FreqGridSpec freq;
  std::vector<Quaternion> values;
  std::array<bool, 2> chirp_warning{false, false};

  int n() const { return freq.n(); }
  Quaternion& at(int k1, int k2) { return values[static_cast<std::size_t>(k1) * freq.n() + k2]; }
  const Quaternion& at(int k1, int k2) const {
    return values[static_cast<std::size_t>(k1) * freq.n() + k2];
  }
};

/// The frequency grid the fast path produces: the FFT grid
/// eta_k = 2*pi*(k - n/2)/(n*dt) divided componentwise by B_l, reordered to
/// be increasing when B_l < 0.
FreqGridSpec canonical_freq_grid(const GridSpec& spec, const ParamPair& P);

/// Single-point direct quadrature of the two-sided transform,
///   sum_t kernel(i, L1, t1, xi1) * f(t) * kernel(j, L2, t2, xi2) * dt^2.
/// The i-kernel multiplies from the left, the j-kernel from the right.
Quaternion qqpft_direct_at(const QSignal2D& f, const ParamPair& P, double xi1, double xi2);

/// Direct quadrature on an arbitrary frequency grid; O(n^2) per output
/// point. This is the reference oracle for the fast path.
QQPFTResult qqpft_direct(const QSignal2D& f, const ParamPair& P, const FreqGridSpec& freq);

/// Two-sided quaternion Fourier transform on the canonical FFT grid,
/// computed by splitting f into its i-complex halves and recombining two
/// complex 2D FFTs. Requires power-of-two n.
QQPFTResult qft_fast(const QSignal2D& f);

/// Fast two-sided quadratic-phase transform: chirp-multiplies f on both
/// sides, applies qft_fast, maps the frequency grid through 1/B_l, and
/// applies the output chirps. Agrees with qqpft_direct on its own grid.
/// Requires power-of-two n.
QQPFTResult qqpft_fast(const QSignal2D& f, const ParamPair& P);

/// Inversion onto `target`: f(t) = |B1 B2| * sum_xi conj_kernel(i) * F(xi)
/// * conj_kernel(j) * dxi1 * dxi2, via inverse FFTs when F lives on the
/// canonical grid of `target`, direct summation otherwise.
QSignal2D qqpft_inverse(const QQPFTResult& F, const GridSpec& target);

/// Quadrature L^p norm of a spectrum with cell dxi1 * dxi2.
double lp_norm(const QQPFTResult& F, double p);

}  // namespace qqpft
