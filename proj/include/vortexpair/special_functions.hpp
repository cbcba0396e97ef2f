/// \file special_functions.hpp
/// Gamma function and the closed-form constants attached to the singular
/// kernel |z|^(-alpha): the kernel constant C_alpha, the first-mode constant
/// hatC_alpha, the circle moments M_k, and the linearization multipliers
/// gamma_hat_n.  All Pochhammer-symbol ratios are built from running products
/// so the tables stay accurate for large indices.

#ifndef VORTEXPAIR_SPECIAL_FUNCTIONS_HPP
#define VORTEXPAIR_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <vector>

#include "vortexpair/types.hpp"

namespace vortexpair {

/// Gamma(x) for real x (poles at non-positive integers return NaN/inf from the
/// reflection sine).  Lanczos approximation, g = 7, 9 terms; relative accuracy
/// ~1e-15 on the range used here (|x| <= ~30).
inline double gamma_fn(double x) {
  // Lanczos coefficients for g = 7 (Godfrey's widely reproduced set).
  static constexpr double lanczos[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,     12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6,  1.5056327351493116e-7};
  constexpr double pi = 3.141592653589793238462643383279502884;

  if (x < 0.5) {
    // Reflection Gamma(x) Gamma(1-x) = pi / sin(pi x) keeps the series
    // argument in the well-conditioned half line.
    return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
  }
  const double z = x - 1.0;
  double acc = lanczos[0];
  for (int i = 1; i < 9; ++i) acc += lanczos[i] / (z + i);
  const double t = z + 7.5; // z + g + 1/2
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

/// Kernel constant C_alpha = Gamma(alpha/2) / (2^(1-alpha) Gamma((2-alpha)/2)),
/// alpha in (0,1).  Multiplies the Riesz-type kernel |z|^(-alpha) throughout.
inline double kernel_constant(double alpha) {
  return gamma_fn(alpha / 2.0) /
         (std::pow(2.0, 1.0 - alpha) * gamma_fn((2.0 - alpha) / 2.0));
}

/// First-mode constant hatC_alpha =
///   [alpha Gamma(1-alpha) / ((2-alpha) Gamma(1-alpha/2)^2)] * C_alpha.
/// This is the coefficient of the isolated f'(w) term produced by extending
/// the singular self-interaction integral.
inline double first_mode_constant(double alpha) {
  const double g1 = gamma_fn(1.0 - alpha / 2.0);
  return alpha * gamma_fn(1.0 - alpha) / ((2.0 - alpha) * g1 * g1) *
         kernel_constant(alpha);
}

/// Circle moments of the singular kernel,
///   (1/2 pi i) \oint conj(tau)^k / |tau - w|^alpha dtau = M_k conj(w)^(k-1),
/// for k = 1..kmax.  Closed form
///   M_k = (Gamma(1-alpha)/Gamma(1-alpha/2)^2)
///         * (alpha/2)_(k-1) / (1-alpha/2)_(k-1),
/// evaluated as a running product.  The same table also covers nonnegative
/// kernel powers: (1/2 pi i) \oint tau^m / |tau - w|^alpha dtau
///   = M_(|m+1|+1) w^(m+1) for every integer m.
inline std::vector<double> moment_table(double alpha, int kmax) {
  const double g1 = gamma_fn(1.0 - alpha / 2.0);
  std::vector<double> m(static_cast<std::size_t>(kmax));
  double value = gamma_fn(1.0 - alpha) / (g1 * g1); // M_1
  for (int k = 1; k <= kmax; ++k) {
    m[static_cast<std::size_t>(k - 1)] = value;
    // (alpha/2)_k / (1-alpha/2)_k from the k-1 term: multiply one factor.
    value *= (alpha / 2.0 + (k - 1)) / (1.0 - alpha / 2.0 + (k - 1));
  }
  return m;
}

/// Linearization multipliers of the singular model at the trivial state,
///   gamma_hat_n = pref * ( 2(1+n)/(1-alpha/2) - P_n - P_(n+1) ),
///   pref = alpha C_alpha Gamma(1-alpha) / (4 Gamma(1-alpha/2)^2),
///   P_n  = (1+alpha/2)_n / (1-alpha/2)_n   (running product, P_0 = 1),
/// for n = 1..nmax.  gamma_hat_n / n -> hatC_alpha as n -> infinity, with an
/// O(n^(alpha-1)) correction.
inline std::vector<double> multiplier_table_gsqg(double alpha, int nmax) {
  const double g1 = gamma_fn(1.0 - alpha / 2.0);
  const double pref =
      alpha * kernel_constant(alpha) * gamma_fn(1.0 - alpha) / (4.0 * g1 * g1);
  std::vector<double> gam(static_cast<std::size_t>(nmax));
  double p = (1.0 + alpha / 2.0) / (1.0 - alpha / 2.0);           // P_1
  double p_next = p * (2.0 + alpha / 2.0) / (2.0 - alpha / 2.0);  // P_2
  for (int n = 1; n <= nmax; ++n) {
    gam[static_cast<std::size_t>(n - 1)] =
        pref * (2.0 * (1.0 + n) / (1.0 - alpha / 2.0) - p - p_next);
    // advance (P_n, P_(n+1)) -> (P_(n+1), P_(n+2)) in lock step
    p = p_next;
    p_next *= (1.0 + alpha / 2.0 + (n + 1)) / (1.0 - alpha / 2.0 + (n + 1));
  }
  return gam;
}

/// Trivial-state multipliers for either model: n for Euler, gamma_hat_n for
/// the singular family.  These are the magnitudes of the (diagonal) Jacobian
/// of the steadiness functional at eps = 0.
inline MultiplierTable multiplier_table(Model model, double alpha, int nmax) {
  MultiplierTable t;
  t.n.resize(static_cast<std::size_t>(nmax));
  t.value.resize(static_cast<std::size_t>(nmax));
  if (model == Model::euler) {
    for (int n = 1; n <= nmax; ++n) {
      t.n[static_cast<std::size_t>(n - 1)] = n;
      t.value[static_cast<std::size_t>(n - 1)] = static_cast<double>(n);
    }
  } else {
    auto gam = multiplier_table_gsqg(alpha, nmax);
    for (int n = 1; n <= nmax; ++n) {
      t.n[static_cast<std::size_t>(n - 1)] = n;
      t.value[static_cast<std::size_t>(n - 1)] =
          gam[static_cast<std::size_t>(n - 1)];
    }
  }
  return t;
}

} // namespace vortexpair

#endif
