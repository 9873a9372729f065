#pragma once

#include <cstddef>
#include <vector>

#include "qqpft/params.hpp"
#include "qqpft/quaternion.hpp"

namespace qqpft {

/// Uniform centered square grid: n samples per axis on [-extent/2, extent/2),
/// sample coordinates t_m = -extent/2 + m * spacing. For even n the origin is
/// sampled at index n/2.
struct GridSpec {
  int n;
  double extent;

  GridSpec(int n_, double extent_);

  double spacing() const { return extent / n; }
  double coord(int m) const { return -0.5 * extent + m * spacing(); }
  std::size_t size() const { return static_cast<std::size_t>(n) * n; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Sampled quaternion-valued function on a GridSpec, row-major with the t1
/// index outer and the t2 index inner. Owns its sample buffer.
class QSignal2D {
 public:
  explicit QSignal2D(GridSpec spec);
  QSignal2D(GridSpec spec, std::vector<Quaternion> samples);

  const GridSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }

  Quaternion& at(int m1, int m2) { return samples_[idx(m1, m2)]; }
  const Quaternion& at(int m1, int m2) const { return samples_[idx(m1, m2)]; }

  /// Zero outside the grid.
  Quaternion at_or_zero(int m1, int m2) const {
    if (m1 < 0 || m1 >= spec_.n || m2 < 0 || m2 >= spec_.n) return {};
    return samples_[idx(m1, m2)];
  }

  std::vector<Quaternion>& samples() { return samples_; }
  const std::vector<Quaternion>& samples() const { return samples_; }

 private:
  std::size_t idx(int m1, int m2) const {
    return static_cast<std::size_t>(m1) * spec_.n + m2;
  }

  GridSpec spec_;
  std::vector<Quaternion> samples_;
};

/// Explicit frequency sample positions, one strictly increasing uniformly
/// spaced array per axis.
struct FreqGridSpec {
  std::vector<double> xi1;
  std::vector<double> xi2;
  double dxi1 = 0.0;
  double dxi2 = 0.0;

  int n() const { return static_cast<int>(xi1.size()); }
  void validate() const;

  /// Uniform grid from origin and spacing.
  static FreqGridSpec uniform(int n, double xi1_0, double dxi1, double xi2_0, double dxi2);
};

/// Quaternion-valued field on the 4D (x, xi) lattice produced by the
/// windowed and bilinear transforms. The x lattice is a GridSpec (possibly
/// decimated relative to the signal grid), the xi lattice a FreqGridSpec,
/// and the producing ParamPair is recorded for the inequality checkers.
class TFGrid4D {
 public:
  TFGrid4D(GridSpec xspec, FreqGridSpec xispec, ParamPair params);

  const GridSpec& xspec() const { return xspec_; }
  const FreqGridSpec& xispec() const { return xispec_; }
  const ParamPair& params() const { return params_; }

  /// 4D quadrature cell measure, dx^2 * dxi1 * dxi2.
  double cell_measure() const {
    return xspec_.spacing() * xspec_.spacing() * xispec_.dxi1 * xispec_.dxi2;
  }

  Quaternion& at(int ix1, int ix2, int k1, int k2) { return values_[idx(ix1, ix2, k1, k2)]; }
  const Quaternion& at(int ix1, int ix2, int k1, int k2) const {
    return values_[idx(ix1, ix2, k1, k2)];
  }

  std::vector<Quaternion>& values() { return values_; }
  const std::vector<Quaternion>& values() const { return values_; }

 private:
  std::size_t idx(int ix1, int ix2, int k1, int k2) const {
    const std::size_t nxi = xispec_.xi1.size();
    return ((static_cast<std::size_t>(ix1) * xspec_.n + ix2) * nxi + k1) * nxi + k2;
  }

  GridSpec xspec_;
  FreqGridSpec xispec_;
  ParamPair params_;
  std::vector<Quaternion> values_;
};

/// Riemann-sum L^p norm, (sum |f|^p dt^2)^(1/p); the sup of the sample
/// moduli for p = infinity. Rejects p < 1.
double lp_norm(const QSignal2D& f, double p);

/// Quaternion inner product sum f(t) * conj(g(t)) * dt^2. Grids must match.
Quaternion inner_product(const QSignal2D& f, const QSignal2D& g);

/// Real symmetric inner product sc(inner_product(f, g)).
double scalar_inner(const QSignal2D& f, const QSignal2D& g);

/// Quadrature L^p norm over the 4D lattice with cell dx^2 * dxi1 * dxi2.
double lp_norm_4d(const TFGrid4D& F, double p);

/// sum sc(F1 * conj(F2)) * cell over the 4D lattice. Lattices must match.
double scalar_inner_4d(const TFGrid4D& F1, const TFGrid4D& F2);

QSignal2D add(const QSignal2D& f, const QSignal2D& g);
QSignal2D subtract(const QSignal2D& f, const QSignal2D& g);
QSignal2D scale_left(const Quaternion& c, const QSignal2D& f);
QSignal2D scale_right(const QSignal2D& f, const Quaternion& c);
QSignal2D conj(const QSignal2D& f);

}  // namespace qqpft
