/// \file boundary.hpp
/// The discretized boundary map and its derived geometry.
///
/// The unit-scale patch boundary is phi(w) = w + a * f(w) on |w| = 1 with
/// f(w) = sum_{n>=1} a_n w^(-n), real a_n.  The physical pair is
/// z1 = eps * phi(w) and its point reflection z2 = 2d - z1 through the
/// midpoint of the centroid axis.  The amplitude factor a depends on the
/// model: a = eps for Euler and a = eps*|eps|^alpha for the singular family
/// (an odd extension so mirrored branches carry mirrored coefficients).

#ifndef VORTEXPAIR_BOUNDARY_HPP
#define VORTEXPAIR_BOUNDARY_HPP

#include <cmath>
#include <vector>

#include "vortexpair/types.hpp"

namespace vortexpair {

/// Uniform nodes w_j = exp(2 pi i j / M) with a shared sine table
/// (sin(n theta_j) = sin_table[(n*j) mod M]) for spectral analysis.
struct CircleGrid {
  int M = 0;
  std::vector<double> theta;
  std::vector<complex> w;
  std::vector<double> sin_table;

  explicit CircleGrid(int M_) : M(M_) {
    theta.resize(static_cast<std::size_t>(M));
    w.resize(static_cast<std::size_t>(M));
    sin_table.resize(static_cast<std::size_t>(M));
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int j = 0; j < M; ++j) {
      const double t = two_pi * j / M;
      theta[static_cast<std::size_t>(j)] = t;
      w[static_cast<std::size_t>(j)] = complex(std::cos(t), std::sin(t));
      sin_table[static_cast<std::size_t>(j)] = std::sin(t);
    }
  }
};

/// Model-dependent amplitude a(eps) multiplying the perturbation f.
inline double amplitude(Model model, double alpha, double eps) {
  if (model == Model::euler) return eps;
  return eps * std::pow(std::abs(eps), alpha);
}

/// f, f', f'' and phi, phi', phi'' sampled on the grid.
struct BoundaryEval {
  std::vector<complex> f, fp, fpp;
  std::vector<complex> phi, phip, phipp;
};

/// Pointwise values of the map at one (possibly off-grid) circle point.
struct BoundaryPoint {
  complex f{}, fp{}, fpp{};
  complex phi{}, phip{}, phipp{};
};

/// Evaluate the map at a single w with |w| = 1.
inline BoundaryPoint eval_boundary_at(const BoundaryCoefficients& c,
                                      double amp, complex w) {
  const complex wbar = std::conj(w); // 1/w on the unit circle
  BoundaryPoint p;
  complex pw = wbar; // w^(-n), running
  for (int n = 1; n <= c.size(); ++n) {
    const double an = c[n - 1];
    p.f += an * pw;
    p.fp += -static_cast<double>(n) * an * pw * wbar;
    p.fpp += static_cast<double>(n) * static_cast<double>(n + 1) * an * pw * wbar * wbar;
    pw *= wbar;
  }
  p.phi = w + amp * p.f;
  p.phip = 1.0 + amp * p.fp;
  p.phipp = amp * p.fpp;
  return p;
}

/// Evaluate the map and derivatives at every grid node (O(N*M) running
/// powers; spectral accuracy is inherited from the exact Laurent form).
inline BoundaryEval eval_boundary(const CircleGrid& g,
                                  const BoundaryCoefficients& c, double amp) {
  const int M = g.M;
  BoundaryEval e;
  e.f.assign(static_cast<std::size_t>(M), complex(0.0));
  e.fp.assign(static_cast<std::size_t>(M), complex(0.0));
  e.fpp.assign(static_cast<std::size_t>(M), complex(0.0));
  e.phi.resize(static_cast<std::size_t>(M));
  e.phip.resize(static_cast<std::size_t>(M));
  e.phipp.resize(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    const BoundaryPoint p =
        eval_boundary_at(c, amp, g.w[static_cast<std::size_t>(j)]);
    e.f[static_cast<std::size_t>(j)] = p.f;
    e.fp[static_cast<std::size_t>(j)] = p.fp;
    e.fpp[static_cast<std::size_t>(j)] = p.fpp;
    e.phi[static_cast<std::size_t>(j)] = p.phi;
    e.phip[static_cast<std::size_t>(j)] = p.phip;
    e.phipp[static_cast<std::size_t>(j)] = p.phipp;
  }
  return e;
}

/// Sine-series analysis: v(theta_j) -> b_n with v = sum b_n sin(n theta),
/// n = 1..kmax (kmax < M/2).  Exact for band-limited odd samples.
inline std::vector<double> analyze_sine(const CircleGrid& g,
                                        const std::vector<double>& v,
                                        int kmax) {
  const int M = g.M;
  std::vector<double> b(static_cast<std::size_t>(kmax), 0.0);
  for (int n = 1; n <= kmax; ++n) {
    double s = 0.0;
    for (int j = 0; j < M; ++j)
      s += v[static_cast<std::size_t>(j)] *
           g.sin_table[static_cast<std::size_t>((static_cast<long long>(n) * j) % M)];
    b[static_cast<std::size_t>(n - 1)] = 2.0 * s / M;
  }
  return b;
}

/// Sine-series synthesis at the grid nodes.
inline std::vector<double> synthesize_sine(const CircleGrid& g,
                                           const std::vector<double>& b) {
  const int M = g.M;
  std::vector<double> v(static_cast<std::size_t>(M), 0.0);
  for (int j = 0; j < M; ++j) {
    double s = 0.0;
    for (int n = 1; n <= static_cast<int>(b.size()); ++n)
      s += b[static_cast<std::size_t>(n - 1)] *
           g.sin_table[static_cast<std::size_t>((static_cast<long long>(n) * j) % M)];
    v[static_cast<std::size_t>(j)] = s;
  }
  return v;
}

/// Curvature of the unit-scale boundary theta -> phi(e^(i theta)):
///   kappa = Re(1 + w phi''/phi') / |phi'|.
/// The physical curvature is kappa/eps.  Throws when |phi'| collapses.
inline std::vector<double> boundary_curvature(const CircleGrid& g,
                                              const BoundaryCoefficients& c,
                                              double amp) {
  const BoundaryEval e = eval_boundary(g, c, amp);
  std::vector<double> k(static_cast<std::size_t>(g.M), 0.0);
  for (int j = 0; j < g.M; ++j) {
    const complex phip = e.phip[static_cast<std::size_t>(j)];
    const double ap = std::abs(phip);
    if (ap < 1e-12)
      throw error::QuadratureGuard("boundary map derivative vanished");
    const complex ratio = e.phipp[static_cast<std::size_t>(j)] / phip;
    k[static_cast<std::size_t>(j)] =
        (1.0 + (g.w[static_cast<std::size_t>(j)] * ratio).real()) / ap;
  }
  return k;
}

/// Physical boundary curves: z1 = eps*phi near the origin and its point
/// reflection z2 = 2d - z1 near 2d, sampled on Mout uniform angles.
struct PhysicalCurves {
  std::vector<double> theta;
  std::vector<complex> z1, z2;
};

inline PhysicalCurves scale_to_physical(const ProblemSpec& spec,
                                        const BoundaryCoefficients& c,
                                        int Mout) {
  const double amp = amplitude(spec.model, spec.alpha, spec.eps);
  const CircleGrid g(Mout);
  const BoundaryEval e = eval_boundary(g, c, amp);
  PhysicalCurves out;
  out.theta = g.theta;
  out.z1.resize(static_cast<std::size_t>(Mout));
  out.z2.resize(static_cast<std::size_t>(Mout));
  for (int j = 0; j < Mout; ++j) {
    const complex z = spec.eps * e.phi[static_cast<std::size_t>(j)];
    out.z1[static_cast<std::size_t>(j)] = z;
    out.z2[static_cast<std::size_t>(j)] = 2.0 * spec.d - z;
  }
  return out;
}

/// Analyticity-ball surrogate sum |a_n| + sum n |a_n|; the Newton iteration
/// aborts when this exceeds 1 (the map may stop being an embedding).
inline double ball_surrogate(const BoundaryCoefficients& c) {
  double s = 0.0;
  for (int n = 1; n <= c.size(); ++n)
    s += (1.0 + n) * std::abs(c[n - 1]);
  return s;
}

} // namespace vortexpair

#endif
