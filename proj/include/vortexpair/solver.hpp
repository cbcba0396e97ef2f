/// \file solver.hpp
/// Damped Newton solver and branch continuation in the patch size eps.
///
/// The unknowns are the shape coefficients a_1..a_N; the rotation or
/// translation speed is eliminated affinely at every residual evaluation, so
/// Newton acts on the reduced system R(a) = (b_2, ..., b_{N+1}) built in
/// linearization.hpp.  Continuation walks eps from 0 (where the zero shape is
/// an exact solution) to a target in uniform steps, inserting midpoint
/// stepping stones when a step fails, and gates every accepted member with
/// the independent geometry checks plus a doubled-grid residual recheck.

#ifndef VORTEXPAIR_SOLVER_HPP
#define VORTEXPAIR_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "vortexpair/linearization.hpp"
#include "vortexpair/validation.hpp"

namespace vortexpair {

struct NewtonOptions {
  double tol = 1e-10;
  int max_iter = 50;
  double fd_step = 1e-6;
  int max_halvings = 8;
};

struct NewtonResult {
  BoundaryCoefficients coefficients;
  Velocity velocity;
  double residual_inf = 0.0;
  int iterations = 0;
};

/// Reject parameter combinations outside the regime the expansion covers.
inline void check_spec(const ProblemSpec& spec) {
  if (!(spec.d > 2.0))
    throw InvalidArgument("half separation d must exceed 2");
  if (!(std::abs(spec.eps) < 0.5))
    throw InvalidArgument("patch size |eps| must be below 1/2");
  if (spec.modes < 1) throw InvalidArgument("modes must be positive");
  if (spec.grid < 8 || spec.grid % 2 != 0)
    throw InvalidArgument("grid must be even and at least 8");
  if (spec.model == Model::gsqg && !(spec.alpha > 0.0 && spec.alpha < 1.0))
    throw InvalidArgument("alpha must lie in (0,1) for the fractional model");
}

inline Velocity::Kind velocity_kind(PairKind pair) {
  return pair == PairKind::corotating ? Velocity::Kind::angular
                                      : Velocity::Kind::translation;
}

/// Damped Newton iteration from the supplied initial coefficients.
/// Throws NoConvergence when damping or the iteration cap fails, and
/// BallExit when an iterate leaves the shape-validity ball
/// sum (1+n)|a_n| <= 1 where the boundary map is guaranteed injective.
inline NewtonResult newton_solve(const ProblemSpec& spec, const CircleGrid& g,
                                 const RieszTable* table,
                                 BoundaryCoefficients c,
                                 const NewtonOptions& opts = {}) {
  const int N = spec.modes;
  if (static_cast<int>(c.a.size()) != N)
    throw InvalidArgument("initial coefficient count does not match modes");
  if (ball_surrogate(c) > 1.0)
    throw BallExit("initial shape outside validity ball");

  ResidualEval ev = eval_residual(spec, g, table, c);
  double r = ev.R.inf_norm();

  for (int it = 0; it <= opts.max_iter; ++it) {
    if (r <= opts.tol) {
      if (ball_surrogate(c) > 1.0)
        throw BallExit("converged shape outside validity ball");
      return NewtonResult{c, ev.velocity, r, it};
    }
    if (it == opts.max_iter) break;

    const Matrix J = fd_jacobian(spec, g, table, c, opts.fd_step);
    const std::vector<double> delta = lu_solve(J, ev.R.b);

    double lambda = 1.0;
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h, lambda *= 0.5) {
      BoundaryCoefficients trial = c;
      for (int n = 0; n < N; ++n)
        trial.a[static_cast<std::size_t>(n)] -=
            lambda * delta[static_cast<std::size_t>(n)];
      if (ball_surrogate(trial) > 1.0) continue;
      ResidualEval evt;
      try {
        evt = eval_residual(spec, g, table, trial);
      } catch (const QuadratureGuard&) {
        continue; // shape too distorted at this step length, retreat
      }
      const double rt = evt.R.inf_norm();
      if (rt < r) {
        c = trial;
        ev = evt;
        r = rt;
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw NoConvergence("step damping failed to reduce the residual");
  }
  throw NoConvergence("Newton iteration cap reached");
}

/// Velocity limit by eps^2-extrapolation from the two smallest nonzero
/// members (the velocity is even in eps, so the leading finite-size
/// correction is quadratic).
inline double extrapolate_velocity(const Branch& br) {
  const PairSolution* a = nullptr;
  const PairSolution* b = nullptr;
  for (const auto& m : br.members) {
    if (m.spec.eps == 0.0) continue;
    if (!a || std::abs(m.spec.eps) < std::abs(a->spec.eps)) {
      b = a;
      a = &m;
    } else if (!b || std::abs(m.spec.eps) < std::abs(b->spec.eps)) {
      b = &m;
    }
  }
  if (a && b) {
    const double ea2 = a->spec.eps * a->spec.eps;
    const double eb2 = b->spec.eps * b->spec.eps;
    return (a->velocity.value * eb2 - b->velocity.value * ea2) / (eb2 - ea2);
  }
  if (!br.members.empty()) return br.members.front().velocity.value;
  return 0.0;
}

/// Continue the trivial eps = 0 solution to eps_max in `steps` uniform
/// increments.  Returns steps+1 members on success; on failure the partial
/// branch is returned with complete = false and the reason recorded.
inline Branch continue_branch(ProblemSpec spec, double eps_max, int steps,
                              const NewtonOptions& opts = {}) {
  spec.eps = 0.0;
  check_spec(spec);
  if (steps < 1) throw InvalidArgument("steps must be positive");
  if (!(std::abs(eps_max) < 0.5))
    throw InvalidArgument("|eps-max| must be below 1/2");

  const CircleGrid g(spec.grid);
  const CircleGrid g2(2 * spec.grid);
  RieszTable table, table2;
  const RieszTable* tp = nullptr;
  const RieszTable* tp2 = nullptr;
  if (spec.model == Model::gsqg) {
    table = RieszTable(spec.alpha, spec.grid);
    table2 = RieszTable(spec.alpha, 2 * spec.grid);
    tp = &table;
    tp2 = &table2;
  }

  Branch br;
  br.complete = false;

  BoundaryCoefficients c_cur;
  c_cur.a.assign(static_cast<std::size_t>(spec.modes), 0.0);
  double eps_cur = 0.0;

  // Accept the solution at eps (already converged) as a branch member:
  // geometry gate plus a residual recheck on the doubled grid.
  auto accept_member = [&](const NewtonResult& res, double eps) -> bool {
    ProblemSpec ms = spec;
    ms.eps = eps;
    ValidationReport rep = validate(ms, res.velocity, res.coefficients);
    ProblemSpec ms2 = ms;
    ms2.grid = 2 * spec.grid;
    const ResidualEval ev2 = eval_residual(ms2, g2, tp2, res.coefficients);
    const double res2 = ev2.R.inf_norm();
    if (!(res2 < 10.0 * std::max(res.residual_inf, 1e-13))) {
      rep.pass = false;
      rep.notes.push_back("residual grows under grid refinement");
    }
    br.members.push_back(PairSolution{ms, res.velocity, res.coefficients,
                                      res.residual_inf, res.iterations, rep});
    if (!rep.pass) {
      std::ostringstream os;
      os << "validation failed at eps=" << eps;
      br.failure_reason = os.str();
      br.validation_failed = true;
      return false;
    }
    return true;
  };

  {
    ProblemSpec ms = spec; // trivial member: zero shape solves eps = 0
    const NewtonResult res0 = newton_solve(ms, g, tp, c_cur, opts);
    if (!accept_member(res0, 0.0)) {
      br.velocity_extrapolated = extrapolate_velocity(br);
      return br;
    }
  }

  int consecutive_halvings = 0;
  for (int k = 1; k <= steps; ++k) {
    // Land on eps_max exactly at the last step (k/steps rounding would
    // otherwise miss it by an ulp).
    const double target = (k == steps) ? eps_max : eps_max * k / steps;
    std::vector<double> pending{target}; // stepping-stone stack
    while (!pending.empty()) {
      const double t = pending.back();
      ProblemSpec ms = spec;
      ms.eps = t;
      NewtonResult res;
      try {
        res = newton_solve(ms, g, tp, c_cur, opts);
      } catch (const std::runtime_error& ex) {
        ++consecutive_halvings;
        if (consecutive_halvings > 10) {
          std::ostringstream os;
          os << "continuation stalled near eps=" << eps_cur << ": "
             << ex.what();
          br.failure_reason = os.str();
          br.velocity_extrapolated = extrapolate_velocity(br);
          return br;
        }
        pending.push_back(0.5 * (eps_cur + t));
        continue;
      }
      consecutive_halvings = 0;
      c_cur = res.coefficients;
      eps_cur = t;
      pending.pop_back();
      if (pending.empty()) { // reached the scheduled target, not a stone
        if (!accept_member(res, t)) {
          br.velocity_extrapolated = extrapolate_velocity(br);
          return br;
        }
      }
    }
  }

  br.complete = true;
  br.velocity_extrapolated = extrapolate_velocity(br);
  return br;
}

/// Solve at a single eps by running a short internal continuation; the
/// number of steps scales with |eps| so each increment stays small.
inline PairSolution solve_single(const ProblemSpec& spec,
                                 const NewtonOptions& opts = {}) {
  check_spec(spec);
  const int steps =
      std::max(1, static_cast<int>(std::ceil(std::abs(spec.eps) / 0.025)));
  if (spec.eps == 0.0) {
    Branch br = continue_branch(spec, 0.0, 1, opts);
    // eps_max = 0 makes both members trivial; return the first.
    if (br.members.empty())
      throw NoConvergence(br.failure_reason.empty() ? "no members produced"
                                                    : br.failure_reason);
    return br.members.front();
  }
  Branch br = continue_branch(spec, spec.eps, steps, opts);
  if (!br.members.empty() &&
      br.members.back().spec.eps == spec.eps && br.complete)
    return br.members.back();
  if (br.validation_failed && !br.members.empty() &&
      br.members.back().spec.eps == spec.eps)
    return br.members.back(); // caller can inspect validation.pass
  throw NoConvergence(br.failure_reason.empty()
                          ? "continuation did not reach the requested eps"
                          : br.failure_reason);
}

} // namespace vortexpair

#endif
