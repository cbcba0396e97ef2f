/// \file linalg.hpp
/// Dense LU solve with partial pivoting for the small Newton systems
/// (dimension = number of boundary modes, at most a few dozen).

#ifndef VORTEXPAIR_LINALG_HPP
#define VORTEXPAIR_LINALG_HPP

#include <cmath>
#include <vector>

#include "vortexpair/types.hpp"

namespace vortexpair {

/// Row-major dense matrix, duck-typed minimal.
struct Matrix {
  int n = 0;
  std::vector<double> a; ///< n*n entries, row-major

  explicit Matrix(int n_ = 0) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Solve A x = b in place (A and b are copied); throws DegenerateJacobian on
/// a vanishing pivot.
inline std::vector<double> lu_solve(Matrix A, std::vector<double> b) {
  const int n = A.n;
  for (int k = 0; k < n; ++k) {
    // Partial pivoting: bring the largest remaining |entry| in column k up.
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A(i, k)) > std::abs(A(p, k))) p = i;
    if (std::abs(A(p, k)) < 1e-300)
      throw error::DegenerateJacobian("LU pivot vanished; Jacobian is singular");
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(A(p, j), A(k, j));
      std::swap(b[static_cast<std::size_t>(p)], b[static_cast<std::size_t>(k)]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double m = A(i, k) / A(k, k);
      A(i, k) = 0.0;
      for (int j = k + 1; j < n; ++j) A(i, j) -= m * A(k, j);
      b[static_cast<std::size_t>(i)] -= m * b[static_cast<std::size_t>(k)];
    }
  }
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s / A(i, i);
  }
  return x;
}

} // namespace vortexpair

#endif
