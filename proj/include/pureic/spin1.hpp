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

#ifndef PUREIC_SPIN1_HPP
#define PUREIC_SPIN1_HPP

#include <array>
#include <optional>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "pureic/criterion.hpp"
#include "pureic/qlinalg.hpp"
#include "pureic/types.hpp"

namespace pureic {

/// Spin-1 operators along the three axes (eigenvalues +1, 0, -1 each).
inline std::array<SelfAdjointOp, 3> spin_ops() {
  const double s = 1.0 / std::sqrt(2.0);
  SelfAdjointOp lx(3, 3), ly(3, 3), lz(3, 3);
  lx << 0, s, 0, s, 0, s, 0, s, 0;
  ly << Complex(0, 0), Complex(0, -s), Complex(0, 0),
        Complex(0, s), Complex(0, 0), Complex(0, -s),
        Complex(0, 0), Complex(0, s), Complex(0, 0);
  lz << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  return {lx, ly, lz};
}

/// n . L for a unit direction n.
inline SelfAdjointOp spin_along(const Direction& n,
                                const Tolerances& tol = {}) {
  require(std::abs(n.norm() - 1.0) <= tol.tol_unit,
          "spin_along: direction must be unit");
  auto l = spin_ops();
  return n(0) * l[0] + n(1) * l[1] + n(2) * l[2];
}

/// Eigenprojections of n . L in the eigenvalue order (+1, -1, 0):
///   P_{+-1} = ((n.L)^2 +- n.L)/2,   P_0 = I - (n.L)^2.
inline std::array<SelfAdjointOp, 3> spin_projections(const Direction& n,
                                                     const Tolerances& tol =
                                                         {}) {
  SelfAdjointOp ln = spin_along(n, tol);
  SelfAdjointOp ln2 = ln * ln;
  return {0.5 * (ln2 + ln), 0.5 * (ln2 - ln),
          SelfAdjointOp(ComplexMatrix::Identity(3, 3) - ln2)};
}

/// Orthonormal eigenbasis of n . L, columns ordered like spin_projections.
inline OrthonormalBasis spin_eigenbasis(const Direction& n,
                                        const Tolerances& tol = {}) {
  auto ps = spin_projections(n, tol);
  ComplexMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ps[i]);
    m.col(i) = es.eigenvectors().col(2);  // range vector of a rank-1 projection
  }
  return OrthonormalBasis{m};
}

/// The 4x5 coefficient matrix of the direction quadruple: row k is
///   (2 sqrt(2) n_x n_z, -2 sqrt(2) n_y n_z, n_x^2 - n_y^2, -2 n_x n_y,
///    3 n_z^2 - 1).
inline Eigen::Matrix<double, 4, 5> build_M(const std::array<Direction, 4>& dirs,
                                           const Tolerances& tol = {}) {
  Eigen::Matrix<double, 4, 5> m;
  const double s = 2.0 * std::sqrt(2.0);
  for (int k = 0; k < 4; ++k) {
    const Direction& n = dirs[k];
    require(std::abs(n.norm() - 1.0) <= tol.tol_unit,
            "build_M: directions must be unit");
    m(k, 0) = s * n(0) * n(2);
    m(k, 1) = -s * n(1) * n(2);
    m(k, 2) = n(0) * n(0) - n(1) * n(1);
    m(k, 3) = -2.0 * n(0) * n(1);
    m(k, 4) = 3.0 * n(2) * n(2) - 1.0;
  }
  return m;
}

/// Linear embedding of R^5 into the traceless selfadjoint operators
/// orthogonal to I, L_x, L_y, L_z.
inline SelfAdjointOp phi_map(const Eigen::Matrix<double, 5, 1>& x) {
  SelfAdjointOp m(3, 3);
  m << Complex(x(4), 0), Complex(x(0), x(1)), Complex(x(2), x(3)),
       Complex(x(0), -x(1)), Complex(-2.0 * x(4), 0), Complex(-x(0), -x(1)),
       Complex(x(2), -x(3)), Complex(-x(0), x(1)), Complex(x(4), 0);
  return m;
}

/// Cubic whose nonvanishing at the kernel vector makes phi_map(x)
/// invertible:  2 x1 x2 x4 + x3 (x1^2 - x2^2)
///              + x5 (x1^2 + x2^2 + x5^2 - x3^2 - x4^2).
/// det(phi_map(x)) = -2 * invertibility_cubic(x), verified numerically in
/// the test suite against the direct 3x3 determinant.
inline double invertibility_cubic(const Eigen::Matrix<double, 5, 1>& x) {
  return 2.0 * x(0) * x(1) * x(3) + x(2) * (x(0) * x(0) - x(1) * x(1)) +
         x(4) * (x(0) * x(0) + x(1) * x(1) + x(4) * x(4) - x(2) * x(2) -
                 x(3) * x(3));
}

struct SpinCriterionReport {
  Eigen::Matrix<double, 4, 5> M;
  int rank_M = 0;
  std::optional<Eigen::Matrix<double, 5, 1>> kernel_vector;
  double determinant_value = 0.0;
  Verdict verdict;
};

/// Decision procedure for four spin directions: the eigenbases of the four
/// spin observables distinguish all pure states iff (a) M has rank 4 and
/// (b) the cubic does not vanish on the one-dimensional kernel of M.  The
/// kernel vector is normalized with its first nonzero coordinate positive.
/// A NotIC outcome is cross-checked against the exact four-basis decision in
/// dimension 3, which also supplies the witness pair.
inline SpinCriterionReport spin1_verdict(const std::array<Direction, 4>& dirs,
                                         const Tolerances& tol = {}) {
  SpinCriterionReport report;
  report.M = build_M(dirs, tol);

  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 5>> svd(report.M,
                                                    Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  report.rank_M = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(0) > 0.0 && sv(i) > tol.tol_rank * sv(0)) ++report.rank_M;

  bool cubic_ok = false;
  if (report.rank_M == 4) {
    Eigen::Matrix<double, 5, 1> x = svd.matrixV().col(4);
    x /= x.norm();
    for (int i = 0; i < 5; ++i) {
      if (std::abs(x(i)) > 1e-12) {
        if (x(i) < 0) x = -x;
        break;
      }
    }
    report.kernel_vector = x;
    report.determinant_value = invertibility_cubic(x);
    cubic_ok = std::abs(report.determinant_value) > tol.tol_zero;
  }

  std::vector<OrthonormalBasis> bases;
  bases.reserve(4);
  for (const auto& n : dirs) bases.push_back(spin_eigenbasis(n, tol));
  ProjectionSet ps = projections_of(bases, tol);
  report.verdict.complement_dim = selfadjoint_complement(ps, tol).size();

  if (report.rank_M == 4 && cubic_ok) {
    report.verdict.status = Status::IC;
    report.verdict.diagnostics.note =
        "rank(M) = 4 and the kernel cubic is nonvanishing";
  } else {
    report.verdict.status = Status::NotIC;
    report.verdict.diagnostics.note =
        (report.rank_M < 4) ? "rank(M) < 4"
                            : "kernel cubic vanishes within tol_zero";
    Verdict exact = check_d3_four_bases(bases, tol);
    if (exact.status == Status::NotIC) {
      report.verdict.witness = exact.witness;
    } else {
      report.verdict.diagnostics.note +=
          "; exact four-basis check disagrees at the tolerance boundary";
    }
  }
  return report;
}

}  // namespace pureic

#endif  // PUREIC_SPIN1_HPP
