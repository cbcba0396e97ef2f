/// \file types.hpp
/// Plain data types and the error hierarchy shared across the library.
///
/// A steady translating or rotating pair of uniform patches is described by a
/// conformal-type boundary map
///     phi(w) = w + a * sum_{n>=1} a_n w^{-n},   |w| = 1,
/// with real coefficients a_n (reflection symmetry about the real axis) and a
/// model-dependent amplitude factor a = a(eps).  One patch is eps * phi(T),
/// the other is its point reflection through the midpoint of the two centroids;
/// the centroid separation is 2d in patch-radius units.

#ifndef VORTEXPAIR_TYPES_HPP
#define VORTEXPAIR_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace vortexpair {

using complex = std::complex<double>;

/// Flow model: classical 2-D Euler (logarithmic kernel) or the generalized
/// surface quasi-geostrophic family with kernel exponent alpha in (0,1).
enum class Model { euler, gsqg };

/// Relative sign of the two patches: equal signs rotate about the midpoint,
/// opposite signs translate.
enum class PairKind { corotating, counter_rotating };

namespace error {

/// Bad user input (flags, parameter ranges, malformed files).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A kernel magnitude left its trust region; quadrature results would be
/// meaningless, so evaluation is aborted.
struct QuadratureGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The first-mode constraint is (numerically) independent of the velocity, so
/// the velocity cannot be eliminated.
struct DegenerateConstraint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Newton iteration failed to reach the tolerance within its budget.
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The iterate left the analyticity ball in which the boundary map is a valid
/// embedding (coefficient-norm surrogate exceeded 1).
struct BallExit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The finite-difference Jacobian was numerically singular.
struct DegenerateJacobian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem read/write failure.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace error

using error::BallExit;
using error::DegenerateConstraint;
using error::DegenerateJacobian;
using error::InvalidArgument;
using error::IoError;
using error::NoConvergence;
using error::QuadratureGuard;

/// Everything needed to pose one steady-pair problem.
struct ProblemSpec {
  Model model = Model::euler;
  double alpha = 0.0;         ///< kernel exponent; 0 for Euler, (0,1) for gSQG
  PairKind pair = PairKind::corotating;
  double d = 3.0;             ///< half distance between centroids, d > 2
  double eps = 0.0;           ///< patch size parameter, |eps| < 1/2
  int modes = 32;             ///< number of unknown coefficients a_1..a_N
  int grid = 256;             ///< quadrature nodes M on the unit circle
};

/// The eliminated velocity: angular speed for corotating pairs, translation
/// speed for counter-rotating pairs.
struct Velocity {
  enum class Kind { angular, translation };
  Kind kind = Kind::angular;
  double value = 0.0;
};

/// Real coefficients a_1..a_N of the boundary perturbation.
struct BoundaryCoefficients {
  std::vector<double> a;

  int size() const { return static_cast<int>(a.size()); }
  double& operator[](int n) { return a[static_cast<std::size_t>(n)]; }
  double operator[](int n) const { return a[static_cast<std::size_t>(n)]; }
};

/// Sine coefficients b_k of the steadiness defect (the reduced residual).
struct ResidualVector {
  std::vector<double> b;

  int size() const { return static_cast<int>(b.size()); }
  double inf_norm() const {
    double m = 0.0;
    for (double x : b) m = std::max(m, std::abs(x));
    return m;
  }
};

/// Geometry checks for one computed pair.
struct ValidationReport {
  double tangency_inf = 0.0;     ///< max |steadiness defect| over off-grid nodes
  double min_curvature = 0.0;    ///< min curvature of the unit-scale boundary
  double symmetry_defect = 0.0;  ///< max | |defect_1| - |defect_2| | across boundaries
  double holder_seminorm = 0.0;  ///< advisory boundary-regularity surrogate
  bool pass = false;
  std::vector<std::string> notes;
};

/// One converged steady pair.
struct PairSolution {
  ProblemSpec spec;
  Velocity velocity;
  BoundaryCoefficients coefficients;
  double residual_inf = 0.0;   ///< reduced-residual sup norm at acceptance
  int newton_iterations = 0;
  ValidationReport validation;
};

/// A family of solutions along an eps continuation ray.
struct Branch {
  std::vector<PairSolution> members;
  bool complete = false;        ///< reached the requested terminal eps
  std::string failure_reason;   ///< empty when complete
  bool validation_failed = false;  ///< a member failed the geometry gate
  double velocity_extrapolated = 0.0;  ///< Richardson eps->0 velocity estimate
};

/// Diagonal multipliers of the linearized problem at the trivial state.
struct MultiplierTable {
  std::vector<int> n;
  std::vector<double> value;
};

} // namespace vortexpair

#endif
