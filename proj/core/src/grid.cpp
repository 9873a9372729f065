#include "qqpft/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qqpft {

GridSpec::GridSpec(int n_, double extent_) : n(n_), extent(extent_) {
  if (n < 2) throw std::invalid_argument("GridSpec: n must be >= 2");
  if (!(extent > 0.0)) throw std::invalid_argument("GridSpec: extent must be positive");
}

QSignal2D::QSignal2D(GridSpec spec) : spec_(spec), samples_(spec.size()) {}

QSignal2D::QSignal2D(GridSpec spec, std::vector<Quaternion> samples)
    : spec_(spec), samples_(std::move(samples)) {
  if (samples_.size() != spec_.size())
    throw std::invalid_argument("QSignal2D: sample count does not match grid");
}

void FreqGridSpec::validate() const {
  if (xi1.size() != xi2.size() || xi1.size() < 2)
    throw std::invalid_argument("FreqGridSpec: axes must have equal size >= 2");
  if (!(dxi1 > 0.0) || !(dxi2 > 0.0))
    throw std::invalid_argument("FreqGridSpec: spacings must be positive");
  auto check_axis = [](const std::vector<double>& xi, double dxi) {
    for (std::size_t k = 1; k < xi.size(); ++k) {
      const double step = xi[k] - xi[k - 1];
      if (!(step > 0.0) || std::abs(step - dxi) > 1e-9 * std::max(1.0, std::abs(dxi)))
        throw std::invalid_argument("FreqGridSpec: axis not strictly increasing and uniform");
    }
  };
  check_axis(xi1, dxi1);
  check_axis(xi2, dxi2);
}

FreqGridSpec FreqGridSpec::uniform(int n, double xi1_0, double dxi1, double xi2_0, double dxi2) {
  FreqGridSpec out;
  out.xi1.resize(n);
  out.xi2.resize(n);
  out.dxi1 = dxi1;
  out.dxi2 = dxi2;
  for (int k = 0; k < n; ++k) {
    out.xi1[k] = xi1_0 + k * dxi1;
    out.xi2[k] = xi2_0 + k * dxi2;
  }
  out.validate();
  return out;
}

TFGrid4D::TFGrid4D(GridSpec xspec, FreqGridSpec xispec, ParamPair params)
    : xspec_(xspec), xispec_(std::move(xispec)), params_(params) {
  xispec_.validate();
  const std::size_t nxi = xispec_.xi1.size();
  values_.resize(xspec_.size() * nxi * nxi);
}

namespace {

double lp_of_values(const std::vector<Quaternion>& v, double cell, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& q : v) m = std::max(m, norm_sq(q));
    return std::sqrt(m);
  }
  double acc = 0.0;
  if (p == 2.0) {
    for (const auto& q : v) acc += norm_sq(q);
  } else if (p == 1.0) {
    for (const auto& q : v) acc += modulus(q);
  } else {
    for (const auto& q : v) acc += std::pow(norm_sq(q), 0.5 * p);
  }
  acc *= cell;
  return p == 2.0 ? std::sqrt(acc) : (p == 1.0 ? acc : std::pow(acc, 1.0 / p));
}

}  // namespace

double lp_norm(const QSignal2D& f, double p) {
  const double d = f.spec().spacing();
  return lp_of_values(f.samples(), d * d, p);
}

Quaternion inner_product(const QSignal2D& f, const QSignal2D& g) {
  if (!(f.spec() == g.spec())) throw std::invalid_argument("inner_product: grid mismatch");
  Quaternion acc;
  const auto& a = f.samples();
  const auto& b = g.samples();
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * conj(b[i]);
  const double d = f.spec().spacing();
  return acc * (d * d);
}

double scalar_inner(const QSignal2D& f, const QSignal2D& g) {
  if (!(f.spec() == g.spec())) throw std::invalid_argument("scalar_inner: grid mismatch");
  double acc = 0.0;
  const auto& a = f.samples();
  const auto& b = g.samples();
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += a[i].r0 * b[i].r0 + a[i].r1 * b[i].r1 + a[i].r2 * b[i].r2 + a[i].r3 * b[i].r3;
  const double d = f.spec().spacing();
  return acc * (d * d);
}

double lp_norm_4d(const TFGrid4D& F, double p) {
  return lp_of_values(F.values(), F.cell_measure(), p);
}

double scalar_inner_4d(const TFGrid4D& F1, const TFGrid4D& F2) {
  if (F1.values().size() != F2.values().size())
    throw std::invalid_argument("scalar_inner_4d: lattice mismatch");
  double acc = 0.0;
  const auto& a = F1.values();
  const auto& b = F2.values();
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += a[i].r0 * b[i].r0 + a[i].r1 * b[i].r1 + a[i].r2 * b[i].r2 + a[i].r3 * b[i].r3;
  return acc * F1.cell_measure();
}

QSignal2D add(const QSignal2D& f, const QSignal2D& g) {
  if (!(f.spec() == g.spec())) throw std::invalid_argument("add: grid mismatch");
  QSignal2D out(f.spec());
  for (std::size_t i = 0; i < out.samples().size(); ++i)
    out.samples()[i] = f.samples()[i] + g.samples()[i];
  return out;
}

QSignal2D subtract(const QSignal2D& f, const QSignal2D& g) {
  if (!(f.spec() == g.spec())) throw std::invalid_argument("subtract: grid mismatch");
  QSignal2D out(f.spec());
  for (std::size_t i = 0; i < out.samples().size(); ++i)
    out.samples()[i] = f.samples()[i] - g.samples()[i];
  return out;
}

QSignal2D scale_left(const Quaternion& c, const QSignal2D& f) {
  QSignal2D out(f.spec());
  for (std::size_t i = 0; i < out.samples().size(); ++i) out.samples()[i] = c * f.samples()[i];
  return out;
}

QSignal2D scale_right(const QSignal2D& f, const Quaternion& c) {
  QSignal2D out(f.spec());
  for (std::size_t i = 0; i < out.samples().size(); ++i) out.samples()[i] = f.samples()[i] * c;
  return out;
}

QSignal2D conj(const QSignal2D& f) {
  QSignal2D out(f.spec());
  for (std::size_t i = 0; i < out.samples().size(); ++i) out.samples()[i] = conj(f.samples()[i]);
  return out;
}

}  // namespace qqpft
