/// \file linearization.hpp
/// Velocity elimination, the reduced residual, and its finite-difference
/// Jacobian.
///
/// The assembled functional is affine in the frame velocity,
/// G = base + vel * velpart.  The first sine mode b_1(vel) = 0 fixes the
/// velocity; it is extracted by evaluating the affine map at vel = 0 and
/// vel = 1 (two-point form).  The reduced residual consists of sine modes
/// 2..N+1 of G at the eliminated velocity: mode n of the coefficient vector
/// perturbs mode n+1 of G, so this indexing makes the Jacobian diagonal at
/// the trivial state (entries -n for Euler, +/-gamma_hat_n for the singular
/// family depending on the pair kind).

#ifndef VORTEXPAIR_LINEARIZATION_HPP
#define VORTEXPAIR_LINEARIZATION_HPP

#include <cmath>
#include <vector>

#include "vortexpair/boundary.hpp"
#include "vortexpair/functionals.hpp"
#include "vortexpair/linalg.hpp"
#include "vortexpair/singular_integrals.hpp"
#include "vortexpair/types.hpp"

namespace vortexpair {

/// Velocity from the affine constraint b1(vel) = 0 evaluated at vel = 0, 1.
/// Throws when the constraint does not depend on the velocity.
inline double eliminate_velocity(double b1_at_0, double b1_at_1) {
  const double slope = b1_at_1 - b1_at_0;
  if (std::abs(slope) < 1e-10)
    throw error::DegenerateConstraint(
        "first-mode constraint is velocity-independent");
  return -b1_at_0 / slope;
}

/// Residual together with the velocity that zeroes the first mode.
struct ResidualEval {
  ResidualVector R; ///< sine modes 2..modes+1 of G
  Velocity velocity;
};

/// Evaluate the reduced residual at the given coefficients.
inline ResidualEval eval_residual(const ProblemSpec& spec, const CircleGrid& g,
                                  const RieszTable* table,
                                  const BoundaryCoefficients& c) {
  const GSamples s = assemble_G(spec, g, table, c);
  const int M = g.M;
  const int N = spec.modes;

  // First sine mode of G at vel = 0 and vel = 1 (two-point affine form).
  double b1_0 = 0.0, b1_1 = 0.0;
  for (int j = 0; j < M; ++j) {
    const double sn = g.sin_table[static_cast<std::size_t>(j)];
    b1_0 += s.base[static_cast<std::size_t>(j)] * sn;
    b1_1 += (s.base[static_cast<std::size_t>(j)] +
             s.velpart[static_cast<std::size_t>(j)]) *
            sn;
  }
  b1_0 *= 2.0 / M;
  b1_1 *= 2.0 / M;
  const double vel = eliminate_velocity(b1_0, b1_1);

  std::vector<double> G(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j)
    G[static_cast<std::size_t>(j)] = s.base[static_cast<std::size_t>(j)] +
                                     vel * s.velpart[static_cast<std::size_t>(j)];
  const std::vector<double> b = analyze_sine(g, G, N + 1);

  ResidualEval out;
  out.R.b.assign(b.begin() + 1, b.end()); // modes 2..N+1
  out.velocity.kind = (spec.pair == PairKind::corotating)
                          ? Velocity::Kind::angular
                          : Velocity::Kind::translation;
  out.velocity.value = vel;
  return out;
}

/// Central finite-difference Jacobian of the reduced residual; the velocity
/// is re-eliminated at every probe.
inline Matrix fd_jacobian(const ProblemSpec& spec, const CircleGrid& g,
                          const RieszTable* table,
                          const BoundaryCoefficients& c, double step = 1e-6) {
  const int N = spec.modes;
  Matrix J(N);
  BoundaryCoefficients probe = c;
  for (int n = 0; n < N; ++n) {
    probe.a[static_cast<std::size_t>(n)] = c.a[static_cast<std::size_t>(n)] + step;
    const ResidualVector Rp = eval_residual(spec, g, table, probe).R;
    probe.a[static_cast<std::size_t>(n)] = c.a[static_cast<std::size_t>(n)] - step;
    const ResidualVector Rm = eval_residual(spec, g, table, probe).R;
    probe.a[static_cast<std::size_t>(n)] = c.a[static_cast<std::size_t>(n)];
    for (int k = 0; k < N; ++k)
      J(k, n) = (Rp.b[static_cast<std::size_t>(k)] -
                 Rm.b[static_cast<std::size_t>(k)]) /
                (2.0 * step);
  }
  return J;
}

} // namespace vortexpair

#endif
