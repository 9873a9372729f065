#include "qqpft/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace qqpft {

namespace {
// splitmix64 step, used both as the core generator and for stream forking.
std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t Rng::next_u64() { return splitmix(state_); }

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

Rng Rng::fork(std::uint64_t label) const {
  std::uint64_t s = state_ ^ (0xd1342543de82ef95ull * (label + 1));
  splitmix(s);
  return Rng(s);
}

QSignal2D gen_gaussian(const GridSpec& spec, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("gen_gaussian: width must be positive");
  QSignal2D out(spec);
  const double inv = 1.0 / (2.0 * width * width);
  for (int m1 = 0; m1 < spec.n; ++m1) {
    const double t1 = spec.coord(m1);
    for (int m2 = 0; m2 < spec.n; ++m2) {
      const double t2 = spec.coord(m2);
      out.at(m1, m2) = Quaternion(std::exp(-(t1 * t1 + t2 * t2) * inv));
    }
  }
  return out;
}

QSignal2D gen_chirp(const GridSpec& spec, double width, double rate) {
  if (!(width > 0.0)) throw std::invalid_argument("gen_chirp: width must be positive");
  QSignal2D out(spec);
  const double inv = 1.0 / (2.0 * width * width);
  for (int m1 = 0; m1 < spec.n; ++m1) {
    const double t1 = spec.coord(m1);
    const Quaternion left = exp_axis(Axis::I, rate * t1 * t1);
    for (int m2 = 0; m2 < spec.n; ++m2) {
      const double t2 = spec.coord(m2);
      const double env = std::exp(-(t1 * t1 + t2 * t2) * inv);
      out.at(m1, m2) = left * exp_axis(Axis::J, rate * t2 * t2) * env;
    }
  }
  return out;
}

QSignal2D gen_impulse(const GridSpec& spec) {
  if (spec.n % 2 != 0) throw std::invalid_argument("gen_impulse: requires even n");
  QSignal2D out(spec);
  const double d = spec.spacing();
  out.at(spec.n / 2, spec.n / 2) = Quaternion(1.0 / (d * d));
  return out;
}

QSignal2D gen_random_smooth(const GridSpec& spec, std::uint64_t seed, double width) {
  if (width == 0.0) width = spec.extent / 14.0;
  if (!(width > 0.0)) throw std::invalid_argument("gen_random_smooth: width must be positive");
  Rng rng(seed);
  constexpr int kModes = 4;
  double a[4][kModes], b[4][kModes], amp[4][kModes], ph[4][kModes];
  for (int c = 0; c < 4; ++c)
    for (int u = 0; u < kModes; ++u) {
      a[c][u] = rng.uniform(-2.0, 2.0);
      b[c][u] = rng.uniform(-2.0, 2.0);
      amp[c][u] = rng.uniform(-1.0, 1.0);
      ph[c][u] = rng.uniform(0.0, kTwoPi);
    }
  QSignal2D out(spec);
  const double inv = 1.0 / (2.0 * width * width);
  for (int m1 = 0; m1 < spec.n; ++m1) {
    const double t1 = spec.coord(m1);
    for (int m2 = 0; m2 < spec.n; ++m2) {
      const double t2 = spec.coord(m2);
      const double env = std::exp(-(t1 * t1 + t2 * t2) * inv);
      double comp[4];
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int u = 0; u < kModes; ++u)
          s += amp[c][u] * std::cos(a[c][u] * t1 + b[c][u] * t2 + ph[c][u]);
        comp[c] = env * s;
      }
      out.at(m1, m2) = {comp[0], comp[1], comp[2], comp[3]};
    }
  }
  return out;
}

QSignal2D gen_quaternion_random(const GridSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  QSignal2D out(spec);
  for (auto& q : out.samples())
    q = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
         rng.uniform(-1.0, 1.0)};
  return out;
}

QSignal2D gen_bandlimited_random(const GridSpec& spec, std::uint64_t seed, int max_mode) {
  Rng rng(seed);
  QSignal2D out(spec);
  const double base = kTwoPi / spec.extent;  // grid-periodic fundamental
  const int modes = 2 * max_mode + 1;
  std::vector<double> amp(static_cast<std::size_t>(4) * modes * modes),
      ph(static_cast<std::size_t>(4) * modes * modes);
  for (std::size_t i = 0; i < amp.size(); ++i) {
    amp[i] = rng.uniform(-1.0, 1.0);
    ph[i] = rng.uniform(0.0, kTwoPi);
  }
  for (int m1 = 0; m1 < spec.n; ++m1) {
    const double t1 = spec.coord(m1);
    for (int m2 = 0; m2 < spec.n; ++m2) {
      const double t2 = spec.coord(m2);
      double comp[4];
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int u = -max_mode; u <= max_mode; ++u)
          for (int v = -max_mode; v <= max_mode; ++v) {
            const std::size_t i =
                ((static_cast<std::size_t>(c) * modes) + (u + max_mode)) * modes + (v + max_mode);
            s += amp[i] * std::cos(base * (u * t1 + v * t2) + ph[i]);
          }
        comp[c] = s;
      }
      out.at(m1, m2) = {comp[0], comp[1], comp[2], comp[3]};
    }
  }
  return out;
}

}  // namespace qqpft
