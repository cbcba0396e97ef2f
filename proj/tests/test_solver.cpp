/// \file test_solver.cpp
/// Linear solve, damped Newton iteration, and branch continuation in the
/// patch size.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "vortexpair/solver.hpp"

#include "reference_values.hpp"

using namespace vortexpair;

TEST_CASE("dense lu solve", "[solver]") {
  Matrix A(2);
  A(0, 0) = 2.0;
  A(0, 1) = 1.0;
  A(1, 0) = 1.0;
  A(1, 1) = 3.0;
  const std::vector<double> x = lu_solve(A, {5.0, 10.0});
  CHECK(x[0] == Catch::Approx(1.0).margin(1e-14));
  CHECK(x[1] == Catch::Approx(3.0).margin(1e-14));

  Matrix S(2);
  S(0, 0) = 1.0;
  S(0, 1) = 2.0;
  S(1, 0) = 2.0;
  S(1, 1) = 4.0; // rank one
  CHECK_THROWS_AS(lu_solve(S, {1.0, 1.0}), DegenerateJacobian);
}

TEST_CASE("spec validation rejects out-of-regime parameters", "[solver]") {
  ProblemSpec ok;
  ok.model = Model::euler;
  ok.d = 3.0;
  ok.eps = 0.1;
  CHECK_NOTHROW(check_spec(ok));

  ProblemSpec s = ok;
  s.d = 1.5;
  CHECK_THROWS_AS(check_spec(s), InvalidArgument);
  s = ok;
  s.eps = 0.6;
  CHECK_THROWS_AS(check_spec(s), InvalidArgument);
  s = ok;
  s.modes = 0;
  CHECK_THROWS_AS(check_spec(s), InvalidArgument);
  s = ok;
  s.grid = 33;
  CHECK_THROWS_AS(check_spec(s), InvalidArgument);
  s = ok;
  s.grid = 6;
  CHECK_THROWS_AS(check_spec(s), InvalidArgument);
  s = ok;
  s.model = Model::gsqg;
  s.alpha = 1.2;
  CHECK_THROWS_AS(check_spec(s), InvalidArgument);
}

TEST_CASE("newton accepts the trivial solution without iterating", "[solver]") {
  const CircleGrid g(64);
  ProblemSpec spec;
  spec.model = Model::euler;
  spec.pair = PairKind::corotating;
  spec.d = 3.0;
  spec.eps = 0.0;
  spec.modes = 8;
  spec.grid = g.M;
  BoundaryCoefficients c0;
  c0.a.assign(8, 0.0);
  const NewtonResult res = newton_solve(spec, g, nullptr, c0);
  CHECK(res.iterations == 0);
  CHECK(res.residual_inf <= 1e-10);
  CHECK(res.velocity.value == Catch::Approx(1.0 / 36.0).epsilon(1e-12));
}

TEST_CASE("newton guards", "[solver]") {
  const CircleGrid g(64);
  ProblemSpec spec;
  spec.model = Model::euler;
  spec.pair = PairKind::corotating;
  spec.d = 3.0;
  spec.eps = 0.1;
  spec.modes = 2;
  spec.grid = g.M;

  BoundaryCoefficients far;
  far.a = {0.9, 0.2}; // weighted sum 2*0.9 + 3*0.2 > 1
  CHECK_THROWS_AS(newton_solve(spec, g, nullptr, far), BallExit);

  BoundaryCoefficients wrong;
  wrong.a = {0.0};
  CHECK_THROWS_AS(newton_solve(spec, g, nullptr, wrong), InvalidArgument);

  // An unreachable tolerance exhausts damping or the iteration cap.
  BoundaryCoefficients c0;
  c0.a.assign(2, 0.0);
  NewtonOptions opts;
  opts.tol = 1e-30;
  opts.max_iter = 10;
  CHECK_THROWS_AS(newton_solve(spec, g, nullptr, c0, opts), NoConvergence);
}

TEST_CASE("single solve at finite size", "[solver]") {
  ProblemSpec spec;
  spec.model = Model::euler;
  spec.d = 3.0;
  spec.eps = 0.1;
  spec.modes = 16;
  spec.grid = 128;

  spec.pair = PairKind::corotating;
  const PairSolution co = solve_single(spec);
  CHECK(co.residual_inf <= 1e-10);
  CHECK(co.validation.pass);
  CHECK(co.spec.eps == 0.1);
  CHECK(co.coefficients.a[0] > 0.0);
  CHECK(co.velocity.kind == Velocity::Kind::angular);
  // finite-size correction to 1/(4 d^2) is tiny but nonzero
  CHECK(co.velocity.value == Catch::Approx(1.0 / 36.0).epsilon(1e-6));
  CHECK(std::abs(co.velocity.value - 1.0 / 36.0) > 1e-10);

  spec.pair = PairKind::counter_rotating;
  const PairSolution ct = solve_single(spec);
  CHECK(ct.residual_inf <= 1e-10);
  CHECK(ct.validation.pass);
  CHECK(ct.coefficients.a[0] < 0.0);
  CHECK(ct.velocity.kind == Velocity::Kind::translation);
  CHECK(ct.velocity.value == Catch::Approx(1.0 / 12.0).epsilon(1e-6));
}

TEST_CASE("mirrored patch sizes give mirrored coefficients", "[solver]") {
  ProblemSpec spec;
  spec.model = Model::euler;
  spec.pair = PairKind::corotating;
  spec.d = 3.0;
  spec.modes = 12;
  spec.grid = 96;

  spec.eps = 0.08;
  const PairSolution plus = solve_single(spec);
  spec.eps = -0.08;
  const PairSolution minus = solve_single(spec);

  CHECK(plus.velocity.value ==
        Catch::Approx(minus.velocity.value).epsilon(1e-13));
  for (int n = 1; n <= 12; ++n) {
    const double expect =
        (n % 2 == 0 ? 1.0 : -1.0) * plus.coefficients.a[static_cast<std::size_t>(n - 1)];
    CAPTURE(n);
    CHECK(minus.coefficients.a[static_cast<std::size_t>(n - 1)] ==
          Catch::Approx(expect).margin(1e-8));
  }
}

TEST_CASE("branch continuation walks to the target size", "[solver]") {
  ProblemSpec spec;
  spec.model = Model::euler;
  spec.pair = PairKind::corotating;
  spec.d = 3.0;
  spec.modes = 8;
  spec.grid = 64;

  const Branch br = continue_branch(spec, 0.1, 4);
  REQUIRE(br.complete);
  REQUIRE(br.members.size() == 5);
  CHECK(br.failure_reason.empty());
  for (std::size_t k = 0; k < br.members.size(); ++k) {
    const PairSolution& m = br.members[k];
    CAPTURE(k);
    CHECK(m.spec.eps ==
          Catch::Approx(0.025 * static_cast<double>(k)).margin(1e-15));
    CHECK(m.residual_inf <= 1e-10);
    CHECK(m.validation.pass);
  }
  CHECK(br.members.back().spec.eps == 0.1); // exact terminal landing
  // removing the quadratic finite-size correction recovers the point limit
  CHECK(std::abs(br.velocity_extrapolated - 1.0 / 36.0) < 1e-8);
}

TEST_CASE("branch continuation accepts negative sizes", "[solver]") {
  ProblemSpec spec;
  spec.model = Model::euler;
  spec.pair = PairKind::corotating;
  spec.d = 3.0;
  spec.modes = 8;
  spec.grid = 64;
  const Branch br = continue_branch(spec, -0.05, 2);
  REQUIRE(br.complete);
  REQUIRE(br.members.size() == 3);
  CHECK(br.members.back().spec.eps == -0.05);
  CHECK(br.members.back().coefficients.a[0] < 0.0);
}

TEST_CASE("singular-family single solve", "[solver]") {
  ProblemSpec spec;
  spec.model = Model::gsqg;
  spec.alpha = 0.5;
  spec.pair = PairKind::corotating;
  spec.d = 3.0;
  spec.eps = 0.05;
  spec.modes = 8;
  spec.grid = 64;
  const PairSolution sol = solve_single(spec);
  CHECK(sol.residual_inf <= 1e-10);
  CHECK(sol.validation.pass);
  const double omega0 =
      0.5 * refvals::c_alpha[1] / std::pow(6.0, 2.5); // zero-size limit
  CHECK(sol.velocity.value == Catch::Approx(omega0).epsilon(1e-3));
  CHECK(std::abs(sol.velocity.value - omega0) < 1e-5);
}

TEST_CASE("velocity extrapolation edge cases", "[solver]") {
  Branch empty;
  CHECK(extrapolate_velocity(empty) == 0.0);

  Branch one;
  PairSolution m;
  m.spec.eps = 0.0;
  m.velocity.value = 0.25;
  one.members.push_back(m);
  CHECK(extrapolate_velocity(one) == 0.25);
}
