/// \file functionals.hpp
/// Assembly of the steadiness functional G on the quadrature grid.
///
/// For each model/pair combination, G(theta_j) is the (suitably oriented)
/// normal component of the relative flow on the unit-scale boundary, and a
/// steady pair is G = 0.  G is affine in the frame velocity (angular speed
/// Omega or translation speed U), so assembly returns two sample vectors,
///   G = base + velocity * velpart,
/// with all contour integrals independent of the velocity.
///
/// Euler (amplitude a = eps), with q = (phi(tau)-phi(w))/(tau-w) = 1 + eps*D
/// and D the divided difference of f:
///   G = Im( F1 + F2 + F3 ),
///   F1 = 2 Omega (eps conj(phi(w)) - d) w phi'(w) - f'(w)     (corotating)
///      = 2 U w phi'(w) - f'(w)                                 (counter)
///   F2 = w phi'(w) * (1/2 pi i) \oint [K1 f'(tau) + K2] dtau,
///        K1 = -conj(tau) conj(w) conj(q)/q,
///        K2 =  conj(tau) conj(w) (1 - conj(q)/q) / eps
///           =  2 i conj(tau) conj(w) Im(D)/q,
///   F3 = -/+ w phi'(w) * Itil,  (corotating/counter)
///        Itil = (1/2 pi i) \oint conj(phi(tau)) phi'(tau)
///                               / (eps (phi(tau)+phi(w)) - 2d) dtau.
///
/// Singular family (amplitude a = eps |eps|^alpha), with S = |q|^(-alpha):
///   corotating:
///     G = Omega Im{(eps phi(w) - d) conj(w phi'(w))}
///         - Im{I_self conj(w phi'(w))} + hatC_alpha Im f'(w)
///         + Im{I2 conj(w phi'(w))}
///   counter:
///     G = U Im{w phi'(w)}
///         + Im{I_self conj(w phi'(w))} - hatC_alpha Im f'(w)
///         + Im{I2 conj(w phi'(w))}
///   I_self = C_alpha (1/2 pi i) \oint [f'(tau) S + (S-1)/a] / |tau-w|^alpha dtau
///   I2     = C_alpha (1/2 pi i) \oint phi'(tau) V(tau, w) dtau,
///   V      = (2d)^(-alpha) [ (1+x)^(-alpha/2) - 1 ] / eps,
///   1 + x  = |1 - eps (phi(tau)+phi(w)) / (2d)|^2.
/// (S-1)/a and V are evaluated through expm1/log1p with exact eps = 0
/// branches, so the trivial state and finite-difference probes around it are
/// well conditioned.  The subtracted singular multiple of w carries the
/// closed-form contribution hatC_alpha Im f' that appears explicitly.

#ifndef VORTEXPAIR_FUNCTIONALS_HPP
#define VORTEXPAIR_FUNCTIONALS_HPP

#include <cmath>
#include <vector>

#include "vortexpair/boundary.hpp"
#include "vortexpair/singular_integrals.hpp"
#include "vortexpair/special_functions.hpp"
#include "vortexpair/types.hpp"

namespace vortexpair {

/// Velocity-independent samples of the functional:
/// G(theta_j) = base[j] + velocity * velpart[j].
struct GSamples {
  std::vector<double> base;
  std::vector<double> velpart;
};

namespace detail {

/// Divided difference (f(tau_j) - f(w_i)) / (tau_j - w_i) with the exact
/// diagonal limit f'(w_i).
inline complex divided_difference(const CircleGrid& g, const BoundaryEval& e,
                                  int j, int i) {
  if (j == i) return e.fp[static_cast<std::size_t>(i)];
  return (e.f[static_cast<std::size_t>(j)] - e.f[static_cast<std::size_t>(i)]) /
         (g.w[static_cast<std::size_t>(j)] - g.w[static_cast<std::size_t>(i)]);
}

} // namespace detail

/// Pair interaction factor for the Euler model: per-node values of
///   Itil(w_i) = (1/2 pi i) \oint conj(phi) phi' / (eps(phi(tau)+phi(w_i)) - 2d) dtau.
/// At f = 0 this is -1/(2d - eps w) in closed form.
inline std::vector<complex> euler_interaction(const CircleGrid& g,
                                              const BoundaryEval& e, double d,
                                              double eps) {
  const int M = g.M;
  // Guard: the interaction denominator must stay away from zero.
  double sup_phi = 0.0;
  for (int j = 0; j < M; ++j)
    sup_phi = std::max(sup_phi, std::abs(e.phi[static_cast<std::size_t>(j)]));
  if (2.0 * d - 2.0 * std::abs(eps) * sup_phi <= 1.0)
    throw error::QuadratureGuard("pair boundaries too close for interaction quadrature");

  std::vector<complex> out(static_cast<std::size_t>(M));
  std::vector<complex> density(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) {
    const complex phi_i = e.phi[static_cast<std::size_t>(i)];
    for (int j = 0; j < M; ++j) {
      const complex phi_j = e.phi[static_cast<std::size_t>(j)];
      density[static_cast<std::size_t>(j)] =
          std::conj(phi_j) * e.phip[static_cast<std::size_t>(j)] /
          (eps * (phi_j + phi_i) - 2.0 * d);
    }
    out[static_cast<std::size_t>(i)] = contour_mean(g, density);
  }
  return out;
}

/// Euler self-deformation factor: per-node values of
///   (1/2 pi i) \oint [K1 f' + K2] dtau  (see file header).
/// Identically zero at f = 0.
inline std::vector<complex> euler_self_term(const CircleGrid& g,
                                            const BoundaryEval& e, double eps) {
  const int M = g.M;
  std::vector<complex> out(static_cast<std::size_t>(M));
  std::vector<complex> density(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) {
    const complex wbar_i = std::conj(g.w[static_cast<std::size_t>(i)]);
    for (int j = 0; j < M; ++j) {
      const complex D = detail::divided_difference(g, e, j, i);
      const complex q = 1.0 + eps * D;
      const double aq = std::abs(q);
      if (aq < 0.25 || aq > 4.0)
        throw error::QuadratureGuard(
            "kernel magnitude left trust region in euler self term");
      const complex tb_wb = std::conj(g.w[static_cast<std::size_t>(j)]) * wbar_i;
      const complex K1 = -tb_wb * std::conj(q) / q;
      const complex K2 = tb_wb * complex(0.0, 2.0) * D.imag() / q;
      density[static_cast<std::size_t>(j)] =
          K1 * e.fp[static_cast<std::size_t>(j)] + K2;
    }
    out[static_cast<std::size_t>(i)] = contour_mean(g, density);
  }
  return out;
}

/// Assemble the Euler functional.
inline GSamples assemble_euler(const CircleGrid& g,
                               const BoundaryCoefficients& c, PairKind pair,
                               double d, double eps) {
  const int M = g.M;
  const BoundaryEval e = eval_boundary(g, c, amplitude(Model::euler, 0.0, eps));
  const std::vector<complex> self = euler_self_term(g, e, eps);
  const std::vector<complex> itil = euler_interaction(g, e, d, eps);
  const double s3 = (pair == PairKind::corotating) ? -1.0 : 1.0;

  GSamples out;
  out.base.resize(static_cast<std::size_t>(M));
  out.velpart.resize(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const complex wphip = g.w[k] * e.phip[k];
    const complex base_c = -e.fp[k] + self[k] * wphip + s3 * itil[k] * wphip;
    const complex vel_c = (pair == PairKind::corotating)
                              ? 2.0 * (eps * std::conj(e.phi[k]) - d) * wphip
                              : 2.0 * wphip;
    out.base[k] = base_c.imag();
    out.velpart[k] = vel_c.imag();
  }
  return out;
}

/// Singular-family self term: per-node values of
///   I_self(w_i) = C_alpha (1/2 pi i) \oint [f' S + (S-1)/a] / |tau - w_i|^alpha dtau.
/// Identically zero at f = 0.
inline std::vector<complex> riesz_self_term(const CircleGrid& g,
                                            const BoundaryEval& e,
                                            const RieszTable& table,
                                            double alpha, double a) {
  const int M = g.M;
  const double c_a = kernel_constant(alpha);
  std::vector<complex> out(static_cast<std::size_t>(M));
  std::vector<complex> density(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) {
      const complex rho = detail::divided_difference(g, e, j, i);
      // |q|^2 = 1 + t with t = a (2 Re rho + a |rho|^2), computed directly
      // from rho so that S - 1 keeps full relative accuracy for small a.
      const double t = a * (2.0 * rho.real() + a * std::norm(rho));
      const double abs_q2 = 1.0 + t;
      if (!(abs_q2 > 0.0625) || abs_q2 > 16.0)
        throw error::QuadratureGuard(
            "kernel magnitude left trust region in riesz self term");
      const double S = std::pow(abs_q2, -alpha / 2.0);
      const double u = (a != 0.0)
                           ? std::expm1(-(alpha / 2.0) * std::log1p(t)) / a
                           : -alpha * rho.real();
      density[static_cast<std::size_t>(j)] =
          e.fp[static_cast<std::size_t>(j)] * S + u;
    }
    out[static_cast<std::size_t>(i)] = c_a * riesz_apply(g, table, density, i);
  }
  return out;
}

/// Singular-family extended interaction term: per-node values of
///   I2(w_i) = C_alpha (1/2 pi i) \oint phi'(tau) V(tau, w_i) dtau.
inline std::vector<complex> riesz_interaction(const CircleGrid& g,
                                              const BoundaryEval& e,
                                              double alpha, double d,
                                              double eps) {
  const int M = g.M;
  const double c_a = kernel_constant(alpha);
  const double pref = std::pow(2.0 * d, -alpha);

  double sup_phi = 0.0;
  for (int j = 0; j < M; ++j)
    sup_phi = std::max(sup_phi, std::abs(e.phi[static_cast<std::size_t>(j)]));
  if (2.0 * d - 2.0 * std::abs(eps) * sup_phi <= 1.0)
    throw error::QuadratureGuard("pair boundaries too close for interaction quadrature");

  std::vector<complex> out(static_cast<std::size_t>(M));
  std::vector<complex> density(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) {
    const complex phi_i = e.phi[static_cast<std::size_t>(i)];
    for (int j = 0; j < M; ++j) {
      const complex Phi = e.phi[static_cast<std::size_t>(j)] + phi_i;
      double V;
      if (eps != 0.0) {
        const double x =
            eps * (-Phi.real() / d + eps * std::norm(Phi) / (4.0 * d * d));
        V = pref * std::expm1(-(alpha / 2.0) * std::log1p(x)) / eps;
      } else {
        V = pref * (alpha / 2.0) * Phi.real() / d;
      }
      density[static_cast<std::size_t>(j)] =
          e.phip[static_cast<std::size_t>(j)] * V;
    }
    out[static_cast<std::size_t>(i)] = c_a * contour_mean(g, density);
  }
  return out;
}

/// Assemble the singular-family functional.
inline GSamples assemble_gsqg(const CircleGrid& g,
                              const BoundaryCoefficients& c,
                              const RieszTable& table, PairKind pair,
                              double alpha, double d, double eps) {
  const int M = g.M;
  const double a = amplitude(Model::gsqg, alpha, eps);
  const BoundaryEval e = eval_boundary(g, c, a);
  const std::vector<complex> self = riesz_self_term(g, e, table, alpha, a);
  const std::vector<complex> inter = riesz_interaction(g, e, alpha, d, eps);
  const double hc = first_mode_constant(alpha);
  const double s_self = (pair == PairKind::corotating) ? -1.0 : 1.0;

  GSamples out;
  out.base.resize(static_cast<std::size_t>(M));
  out.velpart.resize(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const complex cwphip = std::conj(g.w[k] * e.phip[k]);
    out.base[k] = s_self * (self[k] * cwphip).imag() -
                  s_self * hc * e.fp[k].imag() + (inter[k] * cwphip).imag();
    out.velpart[k] = (pair == PairKind::corotating)
                         ? ((eps * e.phi[k] - d) * cwphip).imag()
                         : (g.w[k] * e.phip[k]).imag();
  }
  return out;
}

/// Model dispatch.  The Riesz table is required for the singular family and
/// ignored for Euler (may be null).
inline GSamples assemble_G(const ProblemSpec& spec, const CircleGrid& g,
                           const RieszTable* table,
                           const BoundaryCoefficients& c) {
  if (spec.model == Model::euler)
    return assemble_euler(g, c, spec.pair, spec.d, spec.eps);
  if (table == nullptr || table->M != g.M)
    throw error::InvalidArgument("riesz table missing or sized for a different grid");
  return assemble_gsqg(g, c, *table, spec.pair, spec.alpha, spec.d, spec.eps);
}

} // namespace vortexpair

#endif
