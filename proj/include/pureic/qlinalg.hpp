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

#ifndef PUREIC_QLINALG_HPP
#define PUREIC_QLINALG_HPP

#include <vector>

#include <Eigen/Dense>

#include "pureic/types.hpp"

namespace pureic {

/// Hilbert-Schmidt inner product tr(A* B).
inline Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "hs_inner: shape mismatch");
  return (a.adjoint() * b).trace();
}

inline double hs_norm(const ComplexMatrix& a) { return a.norm(); }

/// Flatten a selfadjoint d x d operator to a real vector of length d^2 so
/// that the Euclidean dot product of two flattenings equals their
/// Hilbert-Schmidt inner product.  Layout: the d diagonal entries, then
/// sqrt(2)*Re of the strict upper triangle (row-major), then sqrt(2)*Im of
/// the same entries.
inline RealVector flatten_selfadjoint(const SelfAdjointOp& a) {
  const int d = static_cast<int>(a.rows());
  require(a.cols() == d, "flatten_selfadjoint: matrix must be square");
  RealVector v(d * d);
  int k = 0;
  for (int i = 0; i < d; ++i) v(k++) = a(i, i).real();
  const double s = std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) v(k++) = s * a(i, j).real();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) v(k++) = s * a(i, j).imag();
  return v;
}

inline SelfAdjointOp unflatten_selfadjoint(const RealVector& v, int d) {
  require(v.size() == d * d, "unflatten_selfadjoint: length must be d^2");
  SelfAdjointOp a = SelfAdjointOp::Zero(d, d);
  int k = 0;
  for (int i = 0; i < d; ++i) a(i, i) = v(k++);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) a(i, j) += Complex(s * v(k++), 0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) a(i, j) += Complex(0, s * v(k++));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) a(j, i) = std::conj(a(i, j));
  return a;
}

/// Number of singular values above tol_rank * largest.  Zero matrix has rank 0.
inline int numerical_rank(const RealMatrix& m, double tol_rank) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<RealMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol_rank * sv(0)) ++r;
  return r;
}

inline int numerical_rank(const ComplexMatrix& m, double tol_rank) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol_rank * sv(0)) ++r;
  return r;
}

/// Rank-one projections |phi><phi| of every basis vector, grouped by basis.
inline ProjectionSet projections_of(const std::vector<OrthonormalBasis>& bases,
                                    const Tolerances& tol = {}) {
  require(!bases.empty(), "projections_of: need at least one basis");
  const int d = bases[0].dim();
  ProjectionSet ps;
  ps.dim = d;
  for (const auto& b : bases) {
    require(b.dim() == d, "projections_of: bases must share one dimension");
    require(is_orthonormal(b, tol.tol_unit),
            "projections_of: basis is not orthonormal");
    std::vector<SelfAdjointOp> group;
    group.reserve(d);
    for (int j = 0; j < d; ++j) {
      Ket v = b.vec(j);
      group.push_back(v * v.adjoint());
    }
    ps.groups.push_back(std::move(group));
  }
  return ps;
}

/// Orthonormal basis (in Hilbert-Schmidt inner product) of the space of
/// selfadjoint operators orthogonal to every projection in `ps`.  This is the
/// orthogonal complement of span_R{ |phi><phi| } inside the d^2-dimensional
/// real space of selfadjoint operators.
inline ComplementBasis selfadjoint_complement(const ProjectionSet& ps,
                                              const Tolerances& tol = {}) {
  const int d = ps.dim;
  const int n = ps.total();
  require(n > 0, "selfadjoint_complement: empty projection set");
  RealMatrix rows(n, d * d);
  int r = 0;
  for (const auto& g : ps.groups)
    for (const auto& p : g) rows.row(r++) = flatten_selfadjoint(p).transpose();

  Eigen::JacobiSVD<RealMatrix> svd(rows, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = (sv.size() > 0) ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (top > 0.0 && sv(i) > tol.tol_rank * top) ++rank;

  ComplementBasis out;
  out.dim = d;
  const RealMatrix& v = svd.matrixV();  // d^2 x d^2
  for (int c = rank; c < v.cols(); ++c)
    out.ops.push_back(unflatten_selfadjoint(v.col(c), d));
  return out;
}

/// Dimension of the real span of the projections together with the identity.
/// Complements the nullspace count: span-rank + complement size = d^2 always,
/// and the identity is already in the span of any single orthonormal basis.
inline int projection_span_rank(const ProjectionSet& ps,
                                const Tolerances& tol = {}) {
  const int d = ps.dim;
  const int n = ps.total();
  RealMatrix rows(n + 1, d * d);
  int r = 0;
  for (const auto& g : ps.groups)
    for (const auto& p : g) rows.row(r++) = flatten_selfadjoint(p).transpose();
  rows.row(r) = flatten_selfadjoint(SelfAdjointOp::Identity(d, d)).transpose();
  return numerical_rank(rows, tol.tol_rank);
}

/// True when the two operator systems agree: span(A ∪ {I}) = span(B ∪ {I}).
/// For selfadjoint generators the complex span is the complexification of the
/// real span, so real-span comparison decides the question: equal numerical
/// ranks plus mutual projection residuals below tol_zero.
inline bool operator_system_equal(const std::vector<SelfAdjointOp>& fam_a,
                                  const std::vector<SelfAdjointOp>& fam_b,
                                  const Tolerances& tol = {}) {
  require(!fam_a.empty() || !fam_b.empty(),
          "operator_system_equal: both families empty");
  const int d = static_cast<int>(fam_a.empty() ? fam_b[0].rows()
                                               : fam_a[0].rows());
  for (const auto& a : fam_a)
    require(a.rows() == d && a.cols() == d, "operator_system_equal: shapes");
  for (const auto& b : fam_b)
    require(b.rows() == d && b.cols() == d, "operator_system_equal: shapes");

  auto stack = [d](const std::vector<SelfAdjointOp>& fam) {
    RealMatrix m(static_cast<int>(fam.size()) + 1, d * d);
    for (int i = 0; i < static_cast<int>(fam.size()); ++i)
      m.row(i) = flatten_selfadjoint(fam[i]).transpose();
    m.row(static_cast<int>(fam.size())) =
        flatten_selfadjoint(SelfAdjointOp::Identity(d, d)).transpose();
    return m;
  };
  RealMatrix ma = stack(fam_a);
  RealMatrix mb = stack(fam_b);
  const int ra = numerical_rank(ma, tol.tol_rank);
  const int rb = numerical_rank(mb, tol.tol_rank);
  if (ra != rb) return false;

  // Orthonormal basis of each row span, then mutual projection residuals.
  auto span_basis = [&](const RealMatrix& m, int rank) {
    Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullV);
    return RealMatrix(svd.matrixV().leftCols(rank));
  };
  RealMatrix qa = span_basis(ma, ra);  // d^2 x ra, orthonormal columns
  RealMatrix qb = span_basis(mb, rb);
  for (int i = 0; i < ma.rows(); ++i) {
    RealVector row = ma.row(i).transpose();
    double res = (row - qb * (qb.transpose() * row)).norm();
    if (res > tol.tol_zero * std::max(1.0, row.norm())) return false;
  }
  for (int i = 0; i < mb.rows(); ++i) {
    RealVector row = mb.row(i).transpose();
    double res = (row - qa * (qa.transpose() * row)).norm();
    if (res > tol.tol_zero * std::max(1.0, row.norm())) return false;
  }
  return true;
}

}  // namespace pureic

#endif  // PUREIC_QLINALG_HPP
