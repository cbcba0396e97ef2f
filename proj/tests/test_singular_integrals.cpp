/// \file test_singular_integrals.cpp
/// Spectral contour mean and the circulant product-integration operator for
/// the |tau - w|^(-alpha) kernel, checked against closed-form moments and an
/// independent adaptive quadrature.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "vortexpair/quadrature.hpp"
#include "vortexpair/singular_integrals.hpp"

#include "reference_values.hpp"

using namespace vortexpair;

TEST_CASE("contour mean picks out the residue mode", "[singular]") {
  const CircleGrid g(16);
  for (int m = -3; m <= 3; ++m) {
    std::vector<complex> density(static_cast<std::size_t>(g.M));
    for (int j = 0; j < g.M; ++j)
      density[static_cast<std::size_t>(j)] =
          std::pow(g.w[static_cast<std::size_t>(j)], m);
    const complex cm = contour_mean(g, density);
    const double expect = (m == -1) ? 1.0 : 0.0;
    CAPTURE(m);
    CHECK(std::abs(cm - expect) < 1e-14);
  }
}

TEST_CASE("contour mean of rational densities", "[singular]") {
  const CircleGrid g(64);
  const double a = 2.5;
  std::vector<complex> d1(static_cast<std::size_t>(g.M)),
      d2(static_cast<std::size_t>(g.M));
  for (int j = 0; j < g.M; ++j) {
    const complex t = g.w[static_cast<std::size_t>(j)];
    d1[static_cast<std::size_t>(j)] = 1.0 / (a - t);        // analytic in disc
    d2[static_cast<std::size_t>(j)] = 1.0 / (t * (a - t)); // simple pole at 0
  }
  CHECK(std::abs(contour_mean(g, d1)) < 1e-15);
  CHECK(std::abs(contour_mean(g, d2) - 1.0 / a) < 1e-15);
}

TEST_CASE("circulant operator reproduces the kernel moments", "[singular]") {
  // (1/2 pi i) \oint tau^m / |tau - w|^alpha dtau = Mo(m) w^(m+1) with
  // Mo(m) = M_(|m+1|+1); the discrete operator is exact for band-limited
  // densities, so monomials must come back multiplied by frozen moments.
  const int M = 64;
  const CircleGrid g(M);
  const double alphas[3] = {0.25, 0.5, 0.75};
  for (int ai = 0; ai < 3; ++ai) {
    const RieszTable table(alphas[ai], M);
    for (int m = -4; m <= 5; ++m) {
      std::vector<complex> density(static_cast<std::size_t>(M));
      for (int j = 0; j < M; ++j)
        density[static_cast<std::size_t>(j)] =
            std::pow(g.w[static_cast<std::size_t>(j)], m);
      const int k = (m >= -1 ? m + 1 : -(m + 1)) + 1; // moment order
      REQUIRE(k >= 1);
      REQUIRE(k <= 8);
      const double mo = refvals::moments[ai][k - 1];
      for (int i : {0, 7, 31}) {
        const complex lhs = riesz_apply(g, table, density, i);
        const complex rhs =
            mo * std::pow(g.w[static_cast<std::size_t>(i)], m + 1);
        CAPTURE(alphas[ai], m, i);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs) + 1e-14);
      }
    }
  }
}

TEST_CASE("moment identity against adaptive quadrature", "[singular]") {
  // Independent oracle: M_k = (1/pi) \int_0^pi cos((k-1)t) (2 sin(t/2))^(-alpha) dt.
  const double alphas[3] = {0.25, 0.5, 0.75};
  for (int ai = 0; ai < 3; ++ai) {
    const double al = alphas[ai];
    for (int k : {1, 3}) {
      auto f = [&](double t) {
        return std::cos((k - 1) * t) *
               std::pow(2.0 * std::sin(0.5 * t), -al);
      };
      const auto est = integrate_adaptive(f, 0.0, 3.141592653589793238462643,
                                          1e-12, 1e-12, 4000);
      REQUIRE(est.converged);
      const double val = est.value / 3.141592653589793238462643;
      CAPTURE(al, k);
      CHECK(val == Catch::Approx(refvals::moments[ai][k - 1]).epsilon(1e-9));
    }
  }
}

TEST_CASE("circulant table stores grid metadata", "[singular]") {
  const RieszTable table(0.5, 32);
  CHECK(table.alpha == 0.5);
  CHECK(table.M == 32);
  CHECK(table.rho.size() == 32);
}
