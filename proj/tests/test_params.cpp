#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qqpft/generators.hpp"
#include "qqpft/params.hpp"

using namespace qqpft;

namespace {

double max_comp(const Quaternion& q) {
  return std::max(std::max(std::abs(q.r0), std::abs(q.r1)),
                  std::max(std::abs(q.r2), std::abs(q.r3)));
}

ParamSet random_params(Rng& rng) {
  double b = rng.uniform(0.5, 2.0);
  if (rng.uniform() < 0.5) b = -b;
  return {rng.uniform(-1.0, 1.0), b, rng.uniform(-1.0, 1.0), rng.uniform(-2.0, 2.0),
          rng.uniform(-2.0, 2.0)};
}

}  // namespace

TEST_CASE("kernel values") {
  SUBCASE("zero phase") {
    const ParamSet L{0, 1, 0, 0, 0};
    for (double xi : {-3.0, 0.0, 1.7}) {
      const Quaternion k = kernel(Axis::I, L, 0.0, xi);
      CHECK(k.r0 == doctest::Approx(kInvSqrt2Pi).epsilon(1e-15));
      CHECK(std::abs(k.r1) <= 1e-15);
    }
  }
  SUBCASE("phase A + D = 2 at t=1, xi=0") {
    const ParamSet L{1, 1, 1, 1, 1};
    const Quaternion k = kernel(Axis::I, L, 1.0, 0.0);
    CHECK(k.r0 == doctest::Approx(kInvSqrt2Pi * std::cos(2.0)).epsilon(1e-14));
    CHECK(k.r1 == doctest::Approx(-kInvSqrt2Pi * std::sin(2.0)).epsilon(1e-14));
    CHECK(k.r2 == 0.0);
    CHECK(k.r3 == 0.0);
  }
  SUBCASE("constant modulus") {
    Rng rng(21);
    for (int it = 0; it < 1000; ++it) {
      const ParamSet L = random_params(rng);
      const Axis ax = rng.uniform() < 0.5 ? Axis::I : Axis::J;
      const Quaternion k = kernel(ax, L, rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
      CHECK(std::abs(modulus(k) - kInvSqrt2Pi) <= 1e-12);
    }
  }
  SUBCASE("Fourier specialization is the plain exponential kernel") {
    const ParamSet L{0, 1, 0, 0, 0};
    Rng rng(22);
    for (int it = 0; it < 100; ++it) {
      const double t = rng.uniform(-4.0, 4.0);
      const double xi = rng.uniform(-4.0, 4.0);
      const Quaternion k = kernel(Axis::I, L, t, xi);
      CHECK(k.r0 == kInvSqrt2Pi * std::cos(t * xi));
      CHECK(k.r1 == kInvSqrt2Pi * std::sin(-t * xi));
    }
  }
}

TEST_CASE("conj_kernel") {
  Rng rng(23);
  const ParamSet L = random_params(rng);
  SUBCASE("product at equal arguments is the scalar 1/(2 pi)") {
    const Quaternion p = kernel(Axis::I, L, 0.7, -1.3) * conj_kernel(Axis::I, L, 0.7, -1.3);
    CHECK(p.r0 == doctest::Approx(1.0 / kTwoPi).epsilon(1e-14));
    CHECK(std::abs(p.r1) <= 1e-16);
  }
  SUBCASE("value at the origin") {
    const ParamSet Lft{0, 1, 0, 0, 0};
    CHECK(conj_kernel(Axis::I, Lft, 0.0, 0.0).r0 == doctest::Approx(kInvSqrt2Pi).epsilon(1e-15));
  }
  SUBCASE("pointwise conjugate of kernel") {
    for (int it = 0; it < 200; ++it) {
      const ParamSet M = random_params(rng);
      const double t = rng.uniform(-3.0, 3.0);
      const double xi = rng.uniform(-3.0, 3.0);
      for (Axis ax : {Axis::I, Axis::J})
        CHECK(max_comp(conj_kernel(ax, M, t, xi) - conj(kernel(ax, M, t, xi))) == 0.0);
    }
  }
}

TEST_CASE("shift_phase") {
  SUBCASE("no shift") {
    Rng rng(24);
    const ParamSet L = random_params(rng);
    CHECK(shift_phase(Axis::I, L, 0.0, 1.3, 0.4) == Quaternion(1.0));
    CHECK(shift_phase(Axis::J, L, 0.9, 0.0, 0.4) == Quaternion(1.0));
  }
  SUBCASE("A = 0 closed form") {
    Rng rng(25);
    for (int it = 0; it < 100; ++it) {
      const ParamSet L{0.0, rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0), rng.uniform(-2.0, 2.0),
                       rng.uniform(-2.0, 2.0)};
      const double r = rng.uniform(-2.0, 2.0);
      const double k = rng.uniform(-2.0, 2.0);
      const double xi = rng.uniform(-2.0, 2.0);
      const Quaternion expect = exp_axis(Axis::I, -(L.d * r * k + L.b * r * k * xi));
      CHECK(max_comp(shift_phase(Axis::I, L, r, k, xi) - expect) <= 1e-14);
    }
  }
  SUBCASE("defining kernel identity at 1000 random points") {
    Rng rng(26);
    for (Axis ax : {Axis::I, Axis::J}) {
      double max_err = 0.0;
      for (int it = 0; it < 1000; ++it) {
        const ParamSet L = random_params(rng);
        const double t = rng.uniform(-2.0, 2.0);
        const double xi = rng.uniform(-2.0, 2.0);
        const double r = rng.uniform(-2.0, 2.0);
        const double k = rng.uniform(-2.0, 2.0);
        const Quaternion lhs = kernel(ax, L, t + r * k, xi);
        const Quaternion rhs =
            kernel(ax, L, t, xi + 2.0 * r * k * L.a / L.b) * shift_phase(ax, L, r, k, xi);
        max_err = std::max(max_err, max_comp(lhs - rhs));
      }
      CHECK(max_err <= 1e-10);
    }
  }
  SUBCASE("factor does not depend on t") {
    Rng rng(27);
    for (int it = 0; it < 200; ++it) {
      const ParamSet L = random_params(rng);
      const double xi = rng.uniform(-2.0, 2.0);
      const double r = rng.uniform(-2.0, 2.0);
      const double k = rng.uniform(-2.0, 2.0);
      const Quaternion phi = shift_phase(Axis::I, L, r, k, xi);
      for (double t : {-1.4, 2.2}) {
        const Quaternion lhs = kernel(Axis::I, L, t + r * k, xi);
        const Quaternion rhs = kernel(Axis::I, L, t, xi + 2.0 * r * k * L.a / L.b) * phi;
        CHECK(max_comp(lhs - rhs) <= 1e-12);
      }
    }
  }
  SUBCASE("cross-check against the closed form with the bare 2rAk/B tail term") {
    // A published closed form writes the last phase term as 2rAk/B with no E
    // factor; the completed square produces 2*A*E*r*k/B. The two agree only
    // when E = 1 or the term vanishes. The defining identity above is the
    // authority; this records how far the other form drifts.
    Rng rng(28);
    double max_div = 0.0;
    for (int it = 0; it < 200; ++it) {
      const ParamSet L = random_params(rng);
      const double r = rng.uniform(-2.0, 2.0);
      const double k = rng.uniform(-2.0, 2.0);
      const double xi = rng.uniform(-2.0, 2.0);
      const double rk = r * k;
      const double theta_printed =
          -(L.a * rk * rk + L.d * rk + L.b * rk * xi -
            4.0 * L.a * L.a * L.c * rk * rk / (L.b * L.b) - 4.0 * L.a * L.c * rk * xi / L.b -
            2.0 * L.a * rk / L.b);
      max_div = std::max(max_div,
                         max_comp(exp_axis(Axis::I, theta_printed) - shift_phase(Axis::I, L, r, k, xi)));
      // With E pinned to 1 the forms coincide.
      const ParamSet L1{L.a, L.b, L.c, L.d, 1.0};
      const double theta1 = -(L1.a * rk * rk + L1.d * rk + L1.b * rk * xi -
                              4.0 * L1.a * L1.a * L1.c * rk * rk / (L1.b * L1.b) -
                              4.0 * L1.a * L1.c * rk * xi / L1.b - 2.0 * L1.a * rk / L1.b);
      CHECK(max_comp(exp_axis(Axis::I, theta1) - shift_phase(Axis::I, L1, r, k, xi)) <= 1e-12);
    }
    MESSAGE("max divergence of the E-less closed form over random draws: ", max_div);
  }
}

TEST_CASE("wvd_phase") {
  SUBCASE("x = 0") {
    Rng rng(29);
    const ParamSet L = random_params(rng);
    CHECK(wvd_phase(Axis::I, L, 0.0, 0.7) == Quaternion(1.0));
  }
  SUBCASE("A = D = 0 closed form") {
    Rng rng(30);
    for (int it = 0; it < 100; ++it) {
      const ParamSet L{0.0, rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0), 0.0,
                       rng.uniform(-2.0, 2.0)};
      const double x = rng.uniform(-2.0, 2.0);
      const double xi = rng.uniform(-2.0, 2.0);
      CHECK(max_comp(wvd_phase(Axis::J, L, x, xi) - exp_axis(Axis::J, 2.0 * L.b * x * xi)) <=
            1e-14);
    }
  }
  SUBCASE("defining kernel identity at 1000 random points") {
    Rng rng(31);
    for (Axis ax : {Axis::I, Axis::J}) {
      double max_err = 0.0;
      for (int it = 0; it < 1000; ++it) {
        const ParamSet L = random_params(rng);
        const ParamSet Ld = wvd_params(L);
        const double t = rng.uniform(-2.0, 2.0);
        const double x = rng.uniform(-2.0, 2.0);
        const double xi = rng.uniform(-2.0, 2.0);
        const Quaternion lhs = kernel(ax, L, 2.0 * (t - x), xi);
        const Quaternion rhs =
            kernel(ax, Ld, t, xi - 4.0 * L.a * x / L.b) * wvd_phase(ax, L, x, xi);
        max_err = std::max(max_err, max_comp(lhs - rhs));
      }
      CHECK(max_err <= 1e-10);
    }
  }
  SUBCASE("matches its closed form directly") {
    Rng rng(32);
    for (int it = 0; it < 200; ++it) {
      const ParamSet L = random_params(rng);
      const double x = rng.uniform(-2.0, 2.0);
      const double xi = rng.uniform(-2.0, 2.0);
      const double theta = -(4.0 * L.a * x * x - 2.0 * L.b * x * xi - 2.0 * L.d * x -
                             16.0 * L.a * L.a * L.c * x * x / (L.b * L.b) +
                             8.0 * L.a * L.c * x * xi / L.b + 4.0 * L.a * L.e * x / L.b);
      CHECK(max_comp(wvd_phase(Axis::I, L, x, xi) - exp_axis(Axis::I, theta)) <= 1e-12);
    }
  }
  SUBCASE("factor does not depend on t") {
    Rng rng(33);
    const ParamSet L = random_params(rng);
    const double x = 0.8, xi = -1.1;
    const Quaternion psi = wvd_phase(Axis::I, L, x, xi);
    for (double t : {-0.9, 1.7}) {
      const Quaternion lhs = kernel(Axis::I, L, 2.0 * (t - x), xi);
      const Quaternion rhs = kernel(Axis::I, wvd_params(L), t, xi - 4.0 * L.a * x / L.b) * psi;
      CHECK(max_comp(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("scaled_params") {
  const ParamSet L{1, 2, 3, 4, 5};
  SUBCASE("lambda = 1 identity") {
    const ParamSet s = scaled_params(L, 1.0);
    CHECK(s.a == 1.0);
    CHECK(s.b == 2.0);
    CHECK(s.c == 3.0);
    CHECK(s.d == 4.0);
    CHECK(s.e == 5.0);
  }
  SUBCASE("direct substitution") {
    const ParamSet s = scaled_params(L, 2.0);
    CHECK(s.a == 4.0);
    CHECK(s.b == 4.0);
    CHECK(s.c == 3.0);
    CHECK(s.d == 8.0);
    CHECK(s.e == 5.0);
  }
  SUBCASE("kernel scaling identity") {
    Rng rng(34);
    for (int it = 0; it < 200; ++it) {
      const ParamSet M = random_params(rng);
      const double lam = rng.uniform() < 0.5 ? 2.0 : 0.5;
      const double t = rng.uniform(-2.0, 2.0);
      const double xi = rng.uniform(-2.0, 2.0);
      CHECK(max_comp(kernel(Axis::I, M, lam * t, xi) -
                     kernel(Axis::I, scaled_params(M, lam), t, xi)) <= 1e-12);
    }
  }
  SUBCASE("lambda = 0 rejected") { CHECK_THROWS_AS(scaled_params(L, 0.0), std::invalid_argument); }
}

TEST_CASE("wvd_params") {
  const ParamSet a = wvd_params({0, 1, 0, 0, 0});
  CHECK(a.a == 0.0);
  CHECK(a.b == 2.0);
  const ParamSet b = wvd_params({1, 1, 1, 1, 1});
  CHECK(b.a == 4.0);
  CHECK(b.b == 2.0);
  CHECK(b.c == 1.0);
  CHECK(b.d == 2.0);
  CHECK(b.e == 1.0);

  // Same as scaling by 2 on the (A, B, D) coordinates.
  const ParamSet L{0.3, -1.2, 0.7, 0.4, -0.9};
  const ParamSet w = wvd_params(L);
  const ParamSet s = scaled_params(L, 2.0);
  CHECK(w.a == s.a);
  CHECK(w.b == s.b);
  CHECK(w.c == s.c);
  CHECK(w.d == s.d);
  CHECK(w.e == s.e);
}

TEST_CASE("ParamSet validation and text form") {
  CHECK_THROWS_AS(ParamSet(0, 0, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_param_set("1,0,0,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_param_set("1,2,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_param_set("1,2,x,4,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_param_pair("1,2,3,4,5"), std::invalid_argument);

  const ParamPair P = parse_param_pair("0.3,1.1,0.2,-0.4,0.5;-0.2,0.9,0.1,0.3,-0.6");
  CHECK(P.l1.a == 0.3);
  CHECK(P.l2.b == 0.9);
  const ParamPair Q = parse_param_pair(format_param_pair(P));
  CHECK(Q.l1.e == P.l1.e);
  CHECK(Q.l2.d == P.l2.d);
}
