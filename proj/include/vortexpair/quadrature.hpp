/// \file quadrature.hpp
/// Adaptive Gauss-Kronrod quadrature on real intervals.
///
/// Used by the independent geometry checks (which deliberately avoid the
/// spectral machinery of the solver) and by oracle-style unit tests.  The
/// 15-point Kronrod / 7-point Gauss pair is the classical embedded rule; the
/// adaptive driver bisects the interval with the largest error estimate until
/// the global estimate meets the tolerance.  Endpoint singularities are fine
/// (nodes are interior); integrable interior singularities should be placed at
/// panel boundaries by the caller.

#ifndef VORTEXPAIR_QUADRATURE_HPP
#define VORTEXPAIR_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "vortexpair/types.hpp"

namespace vortexpair {

namespace detail {

// 15-point Kronrod abscissae (positive half) and weights, plus the embedded
// 7-point Gauss weights.  Standard double-precision values.
inline constexpr double gk15_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk15_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk15_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

} // namespace detail

/// Result of one adaptive integration.
template <class R>
struct IntegralEstimate {
  R value{};
  double error = 0.0;   ///< global error estimate
  int panels = 0;       ///< panels in the final subdivision
  bool converged = false;
};

/// One GK15 panel on [a, b]; returns the Kronrod value and writes the
/// |K15 - G7| error proxy.
template <class F, class R = decltype(std::declval<F&>()(0.0))>
R gk15_panel(F&& f, double a, double b, double* abs_err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  R kron{};
  R gauss{};
  for (int i = 0; i < 8; ++i) {
    const double dx = h * detail::gk15_x[i];
    R fv = (i == 7) ? R(f(c)) : R(f(c - dx) + f(c + dx));
    kron += detail::gk15_wk[i] * fv;
    // Odd-index Kronrod nodes (center included) are the embedded Gauss-7
    // nodes; the center weight applies exactly once.
    if (i == 7)
      gauss += detail::gk15_wg[3] * fv;
    else if (i % 2 == 1)
      gauss += detail::gk15_wg[i / 2] * fv;
  }
  if (abs_err) *abs_err = std::abs(kron - gauss) * std::abs(h);
  return kron * h;
}

/// Adaptive GK15 on [a, b] to tolerance max(abs_tol, rel_tol * |I|).
/// Never throws: inspect .converged.  Worst-panel-first bisection.
template <class F, class R = decltype(std::declval<F&>()(0.0))>
IntegralEstimate<R> integrate_adaptive(F&& f, double a, double b,
                                       double abs_tol = 1e-12,
                                       double rel_tol = 1e-12,
                                       int max_panels = 4000) {
  struct Seg {
    double a, b, err;
    R val;
  };
  std::vector<Seg> segs;
  double e0 = 0.0;
  R v0 = gk15_panel(f, a, b, &e0);
  segs.push_back({a, b, e0, v0});

  IntegralEstimate<R> out;
  for (;;) {
    R total{};
    double err = 0.0;
    for (const Seg& s : segs) {
      total += s.val;
      err += s.err;
    }
    out.value = total;
    out.error = err;
    out.panels = static_cast<int>(segs.size());
    const double goal = std::max(abs_tol, rel_tol * std::abs(total));
    if (err <= goal) {
      out.converged = true;
      return out;
    }
    if (static_cast<int>(segs.size()) >= max_panels) {
      out.converged = false;
      return out;
    }
    // Split the worst panel.
    auto worst = std::max_element(
        segs.begin(), segs.end(),
        [](const Seg& s, const Seg& t) { return s.err < t.err; });
    Seg s = *worst;
    segs.erase(worst);
    const double m = 0.5 * (s.a + s.b);
    double e1 = 0.0, e2 = 0.0;
    R v1 = gk15_panel(f, s.a, m, &e1);
    R v2 = gk15_panel(f, m, s.b, &e2);
    segs.push_back({s.a, m, e1, v1});
    segs.push_back({m, s.b, e2, v2});
  }
}

} // namespace vortexpair

#endif
