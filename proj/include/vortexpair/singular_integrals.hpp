/// \file singular_integrals.hpp
/// Spectral contour integration on the unit circle.
///
/// Two quadratures drive the solver:
///  * contour_mean: (1/2 pi i) \oint g(tau) dtau for smooth g, computed as the
///    plain node average (1/M) sum_j g_j w_j (spectrally accurate).
///  * product integration for the singular kernel |tau - w|^(-alpha): since
///    (1/2 pi i) \oint tau^m / |tau - w|^alpha dtau = Mo(m) w^(m+1) with
///    Mo(m) = M_(|m+1|+1) from the closed-form moment table, the discrete
///    operator is a circulant; its symbol is precomputed once per (alpha, M)
///    and applied in O(M) per target node.

#ifndef VORTEXPAIR_SINGULAR_INTEGRALS_HPP
#define VORTEXPAIR_SINGULAR_INTEGRALS_HPP

#include <vector>

#include "vortexpair/boundary.hpp"
#include "vortexpair/special_functions.hpp"
#include "vortexpair/types.hpp"

namespace vortexpair {

/// (1/2 pi i) \oint g dtau ~ (1/M) sum_j g_j w_j; exact for band-limited g.
inline complex contour_mean(const CircleGrid& g,
                            const std::vector<complex>& density) {
  complex s(0.0);
  for (int j = 0; j < g.M; ++j)
    s += density[static_cast<std::size_t>(j)] * g.w[static_cast<std::size_t>(j)];
  return s / static_cast<double>(g.M);
}

/// Precomputed circulant for the kernel |tau - w|^(-alpha) on an M-point grid.
struct RieszTable {
  double alpha = 0.0;
  int M = 0;
  std::vector<complex> rho; ///< rho[k] = sum_m Mo(m) exp(2 pi i k m / M)

  RieszTable() = default;
  RieszTable(double alpha_, int M_) : alpha(alpha_), M(M_) {
    // Moment index |m+1|+1 spans 1..M/2+1 for m in [-M/2, M/2-1].
    const std::vector<double> mom = moment_table(alpha, M / 2 + 1);
    const CircleGrid g(M);
    rho.assign(static_cast<std::size_t>(M), complex(0.0));
    for (int k = 0; k < M; ++k) {
      complex s(0.0);
      for (int m = -M / 2; m < M / 2; ++m) {
        const int idx = (m >= -1 ? m + 1 : -(m + 1)) + 1; // |m+1|+1
        const double mo = mom[static_cast<std::size_t>(idx - 1)];
        // exp(2 pi i k m / M) via the node table, index mod M.
        const int r = static_cast<int>(
            ((static_cast<long long>(k) * m) % M + M) % M);
        s += mo * g.w[static_cast<std::size_t>(r)];
      }
      rho[static_cast<std::size_t>(k)] = s;
    }
  }
};

/// (1/2 pi i) \oint density(tau) / |tau - w_i|^alpha dtau at grid node i.
inline complex riesz_apply(const CircleGrid& g, const RieszTable& table,
                           const std::vector<complex>& density, int i) {
  const int M = g.M;
  complex s(0.0);
  for (int j = 0; j < M; ++j) {
    const int k = (i - j + M) % M;
    s += density[static_cast<std::size_t>(j)] *
         table.rho[static_cast<std::size_t>(k)];
  }
  return g.w[static_cast<std::size_t>(i)] * s / static_cast<double>(M);
}

} // namespace vortexpair

#endif
