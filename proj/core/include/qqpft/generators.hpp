#pragma once

#include <cstdint>

#include "qqpft/grid.hpp"

namespace qqpft {

/// Deterministic random stream used project-wide: mt19937_64 with explicit
/// uniform and Gaussian draws, so identical seeds give identical signals
/// bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64();
  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  double gaussian();                       // Box-Muller, unit normal

  /// Independent child stream for a labelled subtask.
  Rng fork(std::uint64_t label) const;

 private:
  std::uint64_t state_;
};

/// Real Gaussian envelope exp(-|t|^2 / (2 width^2)).
QSignal2D gen_gaussian(const GridSpec& spec, double width = 1.0);

/// Gaussian envelope carrying quadratic phase on both imaginary axes,
/// exp_axis(i, rate t1^2) * exp_axis(j, rate t2^2) * envelope.
QSignal2D gen_chirp(const GridSpec& spec, double width = 1.0, double rate = 0.5);

/// Unit-mass grid impulse: value 1/dt^2 at the origin sample, zero
/// elsewhere. Requires even n so the origin is sampled.
QSignal2D gen_impulse(const GridSpec& spec);

/// Smooth concentrated quaternion field: per component a short random
/// trigonometric sum under a Gaussian envelope (default width extent/14, so
/// boundary tails stay below the strictest test tolerances).
QSignal2D gen_random_smooth(const GridSpec& spec, std::uint64_t seed, double width = 0.0);

/// Rough i.i.d. quaternion samples with components uniform on [-1, 1).
QSignal2D gen_quaternion_random(const GridSpec& spec, std::uint64_t seed);

/// Random bandlimited field: a few low-frequency Fourier modes per
/// component, no envelope. Spread over the whole grid.
QSignal2D gen_bandlimited_random(const GridSpec& spec, std::uint64_t seed, int max_mode = 3);

}  // namespace qqpft
