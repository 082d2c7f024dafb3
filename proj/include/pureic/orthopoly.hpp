// Copyright 2026 The pureic authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PUREIC_ORTHOPOLY_HPP
#define PUREIC_ORTHOPOLY_HPP

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "pureic/types.hpp"

namespace pureic {

enum class PolyKind { hermite, legendre, chebyshev, custom };

inline std::string to_string(PolyKind k) {
  switch (k) {
    case PolyKind::hermite: return "hermite";
    case PolyKind::legendre: return "legendre";
    case PolyKind::chebyshev: return "chebyshev";
    default: return "custom";
  }
}

/// Orthonormal polynomial family given by its three-term recurrence
///   p_{k+1}(x) = (a_k x + b_k) p_k(x) - c_k p_{k-1}(x),  p_0 = 1, p_{-1} = 0.
/// Polynomials p_0 .. p_{count-1} are defined; a, b, c hold count-1 entries
/// (c_0 is unused and stored as 0); `leading` holds the count leading
/// coefficients.  The weight and interval are implicit in the recurrence;
/// built-in kinds are orthonormal for a unit-mass weight, which the
/// quadrature self-tests confirm.
struct OrthoPolyFamily {
  PolyKind kind = PolyKind::custom;
  int count = 0;
  std::vector<double> a, b, c;
  std::vector<double> leading;
};

/// Built-in families, orthonormal against unit-mass weights:
///   hermite   : w(x) = exp(-x^2)/sqrt(pi) on R
///   legendre  : w(x) = 1/2 on [-1, 1]
///   chebyshev : w(x) = 1/(pi sqrt(1-x^2)) on [-1, 1]
inline OrthoPolyFamily make_family(PolyKind kind, int count) {
  require(count >= 1, "make_family: count must be >= 1");
  OrthoPolyFamily f;
  f.kind = kind;
  f.count = count;
  f.a.assign(count - 1, 0.0);
  f.b.assign(count - 1, 0.0);
  f.c.assign(count - 1, 0.0);
  for (int k = 0; k + 1 < count; ++k) {
    switch (kind) {
      case PolyKind::hermite:
        f.a[k] = std::sqrt(2.0 / (k + 1));
        f.c[k] = (k == 0) ? 0.0 : std::sqrt(static_cast<double>(k) / (k + 1));
        break;
      case PolyKind::legendre:
        f.a[k] = std::sqrt((2.0 * k + 1) * (2.0 * k + 3)) / (k + 1);
        f.c[k] = (k == 0) ? 0.0
                          : (static_cast<double>(k) / (k + 1)) *
                                std::sqrt((2.0 * k + 3) / (2.0 * k - 1));
        break;
      case PolyKind::chebyshev:
        if (k == 0) {
          f.a[k] = std::sqrt(2.0);
        } else if (k == 1) {
          f.a[k] = 2.0;
          f.c[k] = std::sqrt(2.0);
        } else {
          f.a[k] = 2.0;
          f.c[k] = 1.0;
        }
        break;
      default:
        throw std::invalid_argument("make_family: custom kind has no preset");
    }
  }
  f.leading.assign(count, 1.0);
  for (int k = 1; k < count; ++k) f.leading[k] = f.leading[k - 1] * f.a[k - 1];
  return f;
}

/// Values p_0(x) .. p_n(x) by forward recurrence.
inline std::vector<double> poly_eval_all(const OrthoPolyFamily& f, int n,
                                         double x) {
  require(n >= 0 && n < f.count, "poly_eval: index out of range");
  std::vector<double> p(n + 1);
  p[0] = 1.0;
  if (n >= 1) p[1] = (f.a[0] * x + f.b[0]) * p[0];
  for (int k = 1; k < n; ++k)
    p[k + 1] = (f.a[k] * x + f.b[k]) * p[k] - f.c[k] * p[k - 1];
  return p;
}

inline double poly_eval(const OrthoPolyFamily& f, int n, double x) {
  return poly_eval_all(f, n, x).back();
}

/// The n roots of p_n, strictly increasing, computed as eigenvalues of the
/// symmetric tridiagonal Jacobi matrix of the recurrence:
///   alpha_k = -b_k/a_k,  beta_k = sqrt(c_k/(a_k a_{k-1})).
inline std::vector<double> poly_roots(const OrthoPolyFamily& f, int n) {
  require(n >= 1 && n < f.count, "poly_roots: index out of range");
  RealMatrix jac = RealMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    require(f.a[k] != 0.0, "poly_roots: degenerate recurrence (a_k = 0)");
    jac(k, k) = -f.b[k] / f.a[k];
    if (k >= 1) {
      const double t = f.c[k] / (f.a[k] * f.a[k - 1]);
      require(t > 0.0, "poly_roots: degenerate recurrence (nonpositive beta)");
      jac(k, k - 1) = jac(k - 1, k) = std::sqrt(t);
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(jac);
  std::vector<double> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);
  for (int i = 0; i + 1 < n; ++i)
    require(roots[i] < roots[i + 1], "poly_roots: roots not distinct");
  return roots;
}

/// Gauss weights for the n-point rule on the roots of p_n, valid for
/// unit-mass weights: w_i = 1 / sum_{j<n} p_j(x_i)^2.  The rule integrates
/// polynomials of degree <= 2n-1 exactly.
inline std::vector<double> gauss_weights(const OrthoPolyFamily& f, int n,
                                         const std::vector<double>& roots) {
  require(static_cast<int>(roots.size()) == n, "gauss_weights: size mismatch");
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    auto p = poly_eval_all(f, n - 1, roots[i]);
    double s = 0.0;
    for (double v : p) s += v * v;
    w[i] = 1.0 / s;
  }
  return w;
}

/// Deviation from the Christoffel-Darboux identity at (x, y):
///   | sum_{j<=n} p_j(x)p_j(y)
///     - (lead_n/lead_{n+1}) (p_{n+1}(x)p_n(y) - p_n(x)p_{n+1}(y))/(x - y) |
inline double christoffel_darboux_residual(const OrthoPolyFamily& f, int n,
                                           double x, double y) {
  require(x != y, "christoffel_darboux_residual: x and y must differ");
  require(n >= 0 && n + 1 < f.count,
          "christoffel_darboux_residual: index out of range");
  auto px = poly_eval_all(f, n + 1, x);
  auto py = poly_eval_all(f, n + 1, y);
  double lhs = 0.0;
  for (int j = 0; j <= n; ++j) lhs += px[j] * py[j];
  const double ratio = f.leading[n] / f.leading[n + 1];
  const double rhs = ratio * (px[n + 1] * py[n] - px[n] * py[n + 1]) / (x - y);
  return std::abs(lhs - rhs);
}

/// Monomial coefficients of p_n (index = power), in extended precision for
/// use in the reconstruction's coefficient extraction.
inline std::vector<long double> poly_monomial_coeffs(const OrthoPolyFamily& f,
                                                     int n) {
  require(n >= 0 && n < f.count, "poly_monomial_coeffs: index out of range");
  std::vector<std::vector<long double>> p(n + 1);
  p[0] = {1.0L};
  for (int k = 0; k < n; ++k) {
    std::vector<long double> next(k + 2, 0.0L);
    for (int i = 0; i <= k; ++i) {
      next[i + 1] += static_cast<long double>(f.a[k]) * p[k][i];
      next[i] += static_cast<long double>(f.b[k]) * p[k][i];
    }
    if (k >= 1)
      for (int i = 0; i <= k - 1; ++i)
        next[i] -= static_cast<long double>(f.c[k]) * p[k - 1][i];
    p[k + 1] = std::move(next);
  }
  return p[n];
}

}  // namespace pureic

#endif  // PUREIC_ORTHOPOLY_HPP
