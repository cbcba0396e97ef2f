/// \file validation.hpp
/// Independent geometry checks for a computed pair.
///
/// The tangency check re-derives the steadiness defect from the physical
/// velocity field (contour integrals over both physical boundaries) at
/// off-grid nodes, deliberately avoiding the solver's spectral assembly: the
/// smooth contributions use plain trapezoid sums on a 3x-refined grid and the
/// singular self-interaction of the fractional kernel uses adaptive
/// Gauss-Kronrod panels split at the singular angle.  Curvature and a Holder
/// regularity surrogate are sampled on a 4x grid.
///
/// Reflection geometry: the second boundary is pointwise 2d - z, so distances
/// from a point of boundary 2 to boundary 2 reduce to |eps| |phi(t)-phi(u)|
/// with the 2d offset cancelled exactly.  The cancelled forms are used
/// directly; forming the difference through 2d first would lose all relative
/// accuracy near the kernel singularity.

#ifndef VORTEXPAIR_VALIDATION_HPP
#define VORTEXPAIR_VALIDATION_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vortexpair/boundary.hpp"
#include "vortexpair/quadrature.hpp"
#include "vortexpair/special_functions.hpp"
#include "vortexpair/types.hpp"

namespace vortexpair {

/// Hard acceptance thresholds and the advisory regularity bound.
inline constexpr double tangency_threshold = 1e-6;
inline constexpr double symmetry_threshold = 1e-12;
inline constexpr double holder_soft_bound = 1.1;

/// Steadiness defect sampled on both physical boundaries.
struct TangencyDefects {
  std::vector<double> boundary1, boundary2;
};

/// Holder quotient sup |g_i - g_j| / |w_i - w_j|^beta over dyadic strides of
/// the sample grid (chord distance on the circle).
inline double holder_quotient(const std::vector<complex>& samples,
                              const CircleGrid& g, double beta) {
  const int M = g.M;
  double best = 0.0;
  for (int s = 1; s < M; s *= 2) {
    // chord |w_{j+s} - w_j| is stride-dependent only
    const double chord =
        std::abs(g.w[static_cast<std::size_t>(s)] - g.w[0]);
    const double denom = std::pow(chord, beta);
    double num = 0.0;
    for (int j = 0; j < M; ++j) {
      const int k = (j + s) % M;
      num = std::max(num, std::abs(samples[static_cast<std::size_t>(k)] -
                                   samples[static_cast<std::size_t>(j)]));
    }
    best = std::max(best, num / denom);
  }
  return best;
}

/// Evaluate the steadiness defect at `nodes` half-offset angles on both
/// boundaries.  Requires eps != 0.
inline TangencyDefects tangency_defects(const ProblemSpec& spec,
                                        const Velocity& vel,
                                        const BoundaryCoefficients& c,
                                        int nodes) {
  const double eps = spec.eps;
  const double d = spec.d;
  const double amp = amplitude(spec.model, spec.alpha, eps);
  const double vv = vel.value;
  const double delta = (spec.pair == PairKind::corotating) ? 1.0 : -1.0;
  constexpr double two_pi = 6.283185307179586476925286766559;

  // Source grid for the trapezoid sums (same refinement as the eval nodes).
  const CircleGrid src(nodes);
  const BoundaryEval e = eval_boundary(src, c, amp);

  TangencyDefects out;
  out.boundary1.resize(static_cast<std::size_t>(nodes));
  out.boundary2.resize(static_cast<std::size_t>(nodes));

  const double c_a = (spec.model == Model::gsqg) ? kernel_constant(spec.alpha) : 0.0;

  for (int k = 0; k < nodes; ++k) {
    const double thv = two_pi * (k + 0.5) / nodes;
    const complex u(std::cos(thv), std::sin(thv));
    const BoundaryPoint P = eval_boundary_at(c, amp, u);
    const complex z1 = eps * P.phi;
    const complex z2 = 2.0 * d - z1;
    const complex uphip = u * P.phip;
    const double anorm = std::abs(uphip);

    if (spec.model == Model::euler) {
      // I(z) = (1/eps^2) * sum over boundaries of the contour mean of
      // (conj(xi) - conj(z))/(xi - z) d(xi), weight delta on boundary 2.
      complex A11(0.0), A21(0.0), A12(0.0), A22(0.0);
      for (int j = 0; j < nodes; ++j) {
        const std::size_t sj = static_cast<std::size_t>(j);
        const complex tau = src.w[sj];
        const complex dxi1 = eps * e.phip[sj] * tau;  // d(xi)/dt / i on bd 1
        // Self difference formed before scaling by eps (no 2d cancellation).
        const complex X = eps * (e.phi[sj] - P.phi);
        const complex Y = 2.0 * d - eps * e.phi[sj] - z1;
        complex kerX;
        if (std::abs(e.phi[sj] - P.phi) < 1e-13) {
          const complex T = complex(0.0, 1.0) * u * P.phip;
          kerX = std::conj(T) / T; // tangential limit of conj(X)/X
        } else {
          kerX = std::conj(X) / X;
        }
        const complex kerY = std::conj(Y) / Y;
        A11 += kerX * dxi1;
        A21 += kerY * (-dxi1);
        // Boundary-2 target: xi1 - z2 = -(Y), xi2 - z2 = -(X).
        A12 += std::conj(-Y) / (-Y) * dxi1;
        A22 += kerX * (-dxi1); // conj(-X)/(-X) = conj(X)/X
      }
      A11 /= nodes; A21 /= nodes; A12 /= nodes; A22 /= nodes;
      const complex I1 = (A11 + delta * A21) / (eps * eps);
      const complex I2 = (A12 + delta * A22) / (eps * eps);
      const complex frame1 = (spec.pair == PairKind::corotating)
                                 ? 2.0 * vv * (std::conj(z1) - d)
                                 : complex(2.0 * vv, 0.0);
      const complex frame2 = (spec.pair == PairKind::corotating)
                                 ? 2.0 * vv * (std::conj(z2) - d)
                                 : complex(2.0 * vv, 0.0);
      const complex tang1 = complex(0.0, 1.0) * uphip / anorm;
      out.boundary1[static_cast<std::size_t>(k)] =
          ((frame1 + I1) * tang1).real();
      out.boundary2[static_cast<std::size_t>(k)] =
          ((frame2 + I2) * (-tang1)).real();
    } else {
      // v(z) = (C_alpha/eps^2) * sum over boundaries of the contour mean of
      // |z - xi|^(-alpha) d(xi); the flow is i v(z).
      //
      // Self integral (1/2 pi) int |eps(phi(t)-phi(u))|^(-alpha)
      //                            * eps phi'(t) e^(it) dt:
      // the |t - thv|^(-alpha) endpoint singularity is removed analytically
      // by the substitution t = thv +/- s^p, p(1-alpha) >= 3, and the kernel
      // modulus is factored as |eps| * 2 sin(|t-thv|/2) * |q| with q the
      // divided difference of phi, so no catastrophic cancellation occurs
      // near the node (q has the exact limit phi'(u)).
      const double al = spec.alpha;
      const double pexp = std::max(8.0, 3.0 / (1.0 - al));
      const double slim = std::pow(0.5 * two_pi, 1.0 / pexp);
      auto half_range = [&](double sign) {
        auto integrand = [&](double s) -> complex {
          const double sp = std::pow(s, pexp); // |t - thv|
          const double jac = pexp * std::pow(s, pexp - 1.0);
          const double chord = 2.0 * std::sin(0.5 * sp); // |tau - u|
          complex q, phip_t, tau;
          if (sp < 1e-6) {
            q = P.phip;      // divided-difference limit at the node
            phip_t = P.phip; // O(sp) relative error, negligible here
            tau = u;
          } else {
            const double t = thv + sign * sp;
            tau = complex(std::cos(t), std::sin(t));
            const BoundaryPoint Q = eval_boundary_at(c, amp, tau);
            q = (Q.phi - P.phi) / (tau - u);
            phip_t = Q.phip;
          }
          const double mod = std::abs(eps) * chord * std::abs(q);
          return std::pow(mod, -al) * eps * phip_t * tau * (jac / two_pi);
        };
        return integrate_adaptive(integrand, 0.0, slim, 1e-13, 3e-12, 400);
      };
      const auto sa = half_range(1.0);
      const auto sb = half_range(-1.0);
      const complex B_self = sa.value + sb.value; // equals B11; B22 = -B11
      complex B21(0.0);
      for (int j = 0; j < nodes; ++j) {
        const std::size_t sj = static_cast<std::size_t>(j);
        const complex Y = 2.0 * d - eps * e.phi[sj] - z1;
        B21 += std::pow(std::abs(Y), -al) * (-eps) * e.phip[sj] * src.w[sj];
      }
      B21 /= nodes; // B12 = -B21 (reflected differences have equal modulus)
      const complex v1 = c_a * (B_self + delta * B21) / (eps * eps);
      const complex v2 = c_a * (-B21 + delta * (-B_self)) / (eps * eps);
      const complex frame1 = (spec.pair == PairKind::corotating)
                                 ? vv * (z1 - d)
                                 : complex(vv, 0.0);
      const complex frame2 = (spec.pair == PairKind::corotating)
                                 ? vv * (z2 - d)
                                 : complex(vv, 0.0);
      const complex cuphip = std::conj(uphip);
      out.boundary1[static_cast<std::size_t>(k)] =
          -((v1 - frame1) * cuphip).imag() / anorm;
      out.boundary2[static_cast<std::size_t>(k)] =
          ((v2 - frame2) * cuphip).imag() / anorm;
    }
  }
  return out;
}

/// Full geometry report for one solution.
inline ValidationReport validate(const ProblemSpec& spec, const Velocity& vel,
                                 const BoundaryCoefficients& c) {
  ValidationReport rep;
  const double amp = amplitude(spec.model, spec.alpha, spec.eps);
  const double beta = (spec.model == Model::gsqg) ? 1.0 - spec.alpha : 0.5;

  // Curvature and regularity on the 4x grid.
  const CircleGrid g4(4 * spec.grid);
  const std::vector<double> kappa = boundary_curvature(g4, c, amp);
  rep.min_curvature = *std::min_element(kappa.begin(), kappa.end());

  const BoundaryEval e4 = eval_boundary(g4, c, amp);
  double fsup = 0.0;
  std::vector<complex> dfdtheta(static_cast<std::size_t>(g4.M));
  for (int j = 0; j < g4.M; ++j) {
    const std::size_t sj = static_cast<std::size_t>(j);
    fsup = std::max(fsup, std::abs(e4.f[sj]));
    dfdtheta[sj] = complex(0.0, 1.0) * g4.w[sj] * e4.fp[sj];
  }
  rep.holder_seminorm = fsup + holder_quotient(dfdtheta, g4, beta);

  if (spec.eps == 0.0) {
    rep.tangency_inf = 0.0;
    rep.symmetry_defect = 0.0;
    rep.notes.push_back(
        "zero-size limit: boundaries are points, tangency holds trivially");
    rep.pass = rep.min_curvature > 0.0;
    if (!rep.pass) rep.notes.push_back("curvature not positive");
    return rep;
  }

  const TangencyDefects td = tangency_defects(spec, vel, c, 3 * spec.grid);
  double tmax = 0.0, smax = 0.0;
  for (std::size_t k = 0; k < td.boundary1.size(); ++k) {
    const double d1 = std::abs(td.boundary1[k]);
    const double d2 = std::abs(td.boundary2[k]);
    tmax = std::max(tmax, std::max(d1, d2));
    smax = std::max(smax, std::abs(d1 - d2));
  }
  rep.tangency_inf = tmax;
  rep.symmetry_defect = smax;

  bool ok = true;
  if (tmax > tangency_threshold) {
    ok = false;
    rep.notes.push_back("tangency defect exceeds threshold");
  }
  if (rep.min_curvature <= 0.0) {
    ok = false;
    rep.notes.push_back("curvature not positive");
  }
  if (smax > symmetry_threshold) {
    ok = false;
    rep.notes.push_back("boundary defects break reflection symmetry");
  }
  if (rep.holder_seminorm > holder_soft_bound)
    rep.notes.push_back("regularity surrogate exceeds advisory bound (soft)");
  rep.pass = ok;
  return rep;
}

} // namespace vortexpair

#endif
