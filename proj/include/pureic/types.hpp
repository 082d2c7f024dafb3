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

#ifndef PUREIC_TYPES_HPP
#define PUREIC_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pureic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Direction = Eigen::Vector3d;  // unit vectors; checked where consumed

// A selfadjoint operator is carried as a plain dense matrix; selfadjointness
// is a checked precondition of the operations that require it, not a type
// invariant enforced at construction.
using SelfAdjointOp = Eigen::MatrixXcd;

/// Numerical tolerances used throughout the library.
///   tol_unit  - unit-norm / orthonormality / unitarity deviations
///   tol_herm  - allowed deviation from A = A^*
///   tol_zero  - what counts as "zero" for traces, residuals, probability gaps
///   tol_rank  - relative singular-value cutoff for numerical rank
struct Tolerances {
  double tol_unit = 1e-10;
  double tol_herm = 1e-10;
  double tol_zero = 1e-9;
  double tol_rank = 1e-8;
};

/// Orthonormal basis of C^d, stored as the columns of a d x d matrix.
struct OrthonormalBasis {
  ComplexMatrix vectors;

  OrthonormalBasis() = default;
  explicit OrthonormalBasis(ComplexMatrix m) : vectors(std::move(m)) {}

  int dim() const { return static_cast<int>(vectors.rows()); }
  Ket vec(int j) const { return vectors.col(j); }
};

/// Rank-1 projections of one or more bases, grouped by source basis.
/// groups[l][j] is the projection onto the j-th vector of basis l.
struct ProjectionSet {
  int dim = 0;
  std::vector<std::vector<SelfAdjointOp>> groups;

  int total() const {
    int n = 0;
    for (const auto& g : groups) n += static_cast<int>(g.size());
    return n;
  }
};

/// Real-linear basis of the selfadjoint operators that are Hilbert-Schmidt
/// orthogonal to every projection of a ProjectionSet.  Elements are traceless
/// and orthonormal in the HS inner product.
struct ComplementBasis {
  int dim = 0;
  std::vector<SelfAdjointOp> ops;

  int size() const { return static_cast<int>(ops.size()); }
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Thrown when measurement data fed to a reconstruction is not explainable
/// by any pure state within tolerance.
struct InconsistentDataError : std::runtime_error {
  double residual;
  InconsistentDataError(const std::string& msg, double r)
      : std::runtime_error(msg), residual(r) {}
};

inline bool is_finite(const ComplexMatrix& m) { return m.allFinite(); }

inline bool is_selfadjoint(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unit(const Ket& v, double tol) {
  return std::abs(v.norm() - 1.0) <= tol;
}

inline bool is_orthonormal(const OrthonormalBasis& b, double tol) {
  if (b.vectors.rows() != b.vectors.cols() || b.vectors.rows() == 0) return false;
  const auto d = b.vectors.cols();
  ComplexMatrix g = b.vectors.adjoint() * b.vectors;
  return (g - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

/// True when the two unit vectors describe the same ray, i.e. differ by a
/// global phase only.
inline bool phase_equivalent(const Ket& a, const Ket& b, double tol = 1e-8) {
  if (a.size() != b.size()) return false;
  return std::abs(std::abs(a.dot(b)) - 1.0) <= tol;
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix s(2, 2);
  s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return s;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

/// Tensor (Kronecker) product, row-major block layout.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace pureic

#endif  // PUREIC_TYPES_HPP
