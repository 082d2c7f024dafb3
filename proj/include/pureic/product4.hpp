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

#ifndef PUREIC_PRODUCT4_HPP
#define PUREIC_PRODUCT4_HPP

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pureic/random.hpp"
#include "pureic/types.hpp"

namespace pureic {

/// Two Bloch directions defining one product basis of C^2 (x) C^2.
struct BlochPair {
  Direction m;
  Direction n;
};

/// Element of SO(3), the image of SU(2) under conjugation on the Paulis.
struct Rotation {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
};

/// Two distinct maximally entangled states that the four product bases
/// cannot tell apart.  f_residual is the sup-norm gap of the four h values
/// (literal trace path); prob1/prob2 are the full outcome tables, row =
/// basis, column = outcome in the order (+,+), (+,-), (-,+), (-,-).
struct CollisionResult {
  Rotation r1, r2;
  Ket omega1, omega2;
  double f_residual = 0.0;
  double state_overlap = 0.0;
  Eigen::Matrix4d prob1 = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d prob2 = Eigen::Matrix4d::Zero();
};

inline SelfAdjointOp bloch_vector_op(const Direction& v) {
  return v(0) * pauli_x() + v(1) * pauli_y() + v(2) * pauli_z();
}

/// Rank-1 projection (I + n.sigma)/2 onto the +1 eigenvector of n.sigma.
inline SelfAdjointOp bloch_projection(const Direction& n,
                                      const Tolerances& tol = {}) {
  require(std::abs(n.norm() - 1.0) <= tol.tol_unit,
          "bloch_projection: direction must be unit");
  return 0.5 * (ComplexMatrix::Identity(2, 2) + bloch_vector_op(n));
}

/// Unit +1 eigenvector of n.sigma, with the branch switched near the south
/// pole where the generic formula degenerates.
inline Ket bloch_eigenvector(const Direction& n) {
  Ket v(2);
  if (1.0 + n(2) > 1e-12) {
    v << Complex(1.0 + n(2), 0.0), Complex(n(0), n(1));
  } else {
    v << Complex(n(0), -n(1)), Complex(1.0 - n(2), 0.0);
  }
  return v / v.norm();
}

/// The four product bases of C^4: basis j is the tensor basis of the
/// eigenvectors of m_j.sigma and n_j.sigma, columns ordered
/// (+,+), (+,-), (-,+), (-,-).
inline std::vector<OrthonormalBasis> product_bases(
    const std::array<BlochPair, 4>& pairs, const Tolerances& tol = {}) {
  std::vector<OrthonormalBasis> bases;
  bases.reserve(4);
  for (const auto& pr : pairs) {
    require(std::abs(pr.m.norm() - 1.0) <= tol.tol_unit &&
                std::abs(pr.n.norm() - 1.0) <= tol.tol_unit,
            "product_bases: directions must be unit");
    const Ket mp = bloch_eigenvector(pr.m);
    const Ket mm = bloch_eigenvector(-pr.m);
    const Ket np = bloch_eigenvector(pr.n);
    const Ket nm = bloch_eigenvector(-pr.n);
    ComplexMatrix b(4, 4);
    b.col(0) = kron(mp, np);
    b.col(1) = kron(mp, nm);
    b.col(2) = kron(mm, np);
    b.col(3) = kron(mm, nm);
    bases.push_back(OrthonormalBasis{b});
  }
  return bases;
}

/// (U (x) I) applied to the canonical maximally entangled state
/// (e1 (x) e1 + e2 (x) e2)/sqrt(2).
inline Ket max_entangled_state(const ComplexMatrix& u,
                               const Tolerances& tol = {}) {
  require(u.rows() == 2 && u.cols() == 2, "max_entangled_state: U must be 2x2");
  require((u.adjoint() * u - ComplexMatrix::Identity(2, 2))
                  .cwiseAbs()
                  .maxCoeff() <= tol.tol_unit,
          "max_entangled_state: U must be unitary");
  Ket omega0(4);
  omega0 << 1, 0, 0, 1;
  omega0 /= std::sqrt(2.0);
  return kron(u, ComplexMatrix::Identity(2, 2)) * omega0;
}

/// The rotation R_U defined by U^* (x.sigma) U = (R_U x).sigma, extracted
/// entrywise as R_ab = Re tr(sigma_a U^* sigma_b U) / 2.
inline Rotation rotation_of_unitary(const ComplexMatrix& u,
                                    const Tolerances& tol = {}) {
  require(u.rows() == 2 && u.cols() == 2, "rotation_of_unitary: U must be 2x2");
  require((u.adjoint() * u - ComplexMatrix::Identity(2, 2))
                  .cwiseAbs()
                  .maxCoeff() <= tol.tol_unit,
          "rotation_of_unitary: U must be unitary");
  require(std::abs(u.determinant() - Complex(1, 0)) <= 1e-8,
          "rotation_of_unitary: U must have determinant 1");
  const std::array<ComplexMatrix, 3> sigma = {pauli_x(), pauli_y(), pauli_z()};
  Rotation rot;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      rot.R(a, b) =
          0.5 * (sigma[a] * u.adjoint() * sigma[b] * u).trace().real();
  return rot;
}

/// The four linear functionals of the collision problem, evaluated by the
/// literal 4x4 trace:  h_j(A) = <Omega_0 | ((A m_j).sigma (x) n_j.sigma)
/// | Omega_0>.
inline Eigen::Vector4d h_functionals(const std::array<BlochPair, 4>& pairs,
                                     const Eigen::Matrix3d& a) {
  Ket omega0(4);
  omega0 << 1, 0, 0, 1;
  omega0 /= std::sqrt(2.0);
  Eigen::Vector4d h;
  for (int j = 0; j < 4; ++j) {
    const Direction am = a * pairs[j].m;
    ComplexMatrix op = kron(bloch_vector_op(am), bloch_vector_op(pairs[j].n));
    h(j) = omega0.dot(op * omega0).real();
  }
  return h;
}

/// Closed form of the same functionals: h_j(A) = ntilde_j^T A m_j with
/// ntilde = (n_x, -n_y, n_z).  Follows from <Omega_0| X (x) Y |Omega_0> =
/// tr(X Y^T)/2 and sigma_y^T = -sigma_y; the test suite verifies the
/// equivalence against the literal trace on batches of random inputs.
inline Eigen::Vector4d h_functionals_fast(const std::array<BlochPair, 4>& pairs,
                                          const Eigen::Matrix3d& a) {
  Eigen::Vector4d h;
  for (int j = 0; j < 4; ++j) {
    const Direction& n = pairs[j].n;
    const Direction ntilde(n(0), -n(1), n(2));
    h(j) = ntilde.dot(a * pairs[j].m);
  }
  return h;
}

namespace detail {

/// SU(2) element of a unit quaternion q = (w, x, y, z):
/// U = w I - i (x sigma_x + y sigma_y + z sigma_z).
inline ComplexMatrix su2_of_quaternion(const Eigen::Vector4d& q) {
  ComplexMatrix u(2, 2);
  u << Complex(q(0), -q(3)), Complex(-q(2), -q(1)),
       Complex(q(2), -q(1)), Complex(q(0), q(3));
  return u;
}

/// Symmetric 4x4 forms H_j with q^T H_j q = h_j(R_{U(q)}) for unit q,
/// obtained by polarization of the homogenized map (h composed with the
/// quaternion-to-rotation map is quadratic in q).
inline std::array<Eigen::Matrix4d, 4> collision_forms(
    const std::array<BlochPair, 4>& pairs) {
  auto homogeneous = [&](const Eigen::Vector4d& q) -> Eigen::Vector4d {
    const double s2 = q.squaredNorm();
    const Eigen::Vector4d qn = q / std::sqrt(s2);
    const Eigen::Matrix3d r = rotation_of_unitary(su2_of_quaternion(qn)).R;
    return s2 * h_functionals_fast(pairs, r);
  };
  std::array<Eigen::Vector4d, 4> diag;
  for (int i = 0; i < 4; ++i) diag[i] = homogeneous(Eigen::Vector4d::Unit(i));
  std::array<Eigen::Matrix4d, 4> forms;
  for (auto& f : forms) f.setZero();
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) forms[j](i, i) = diag[i](j);
  for (int i = 0; i < 4; ++i)
    for (int k = i + 1; k < 4; ++k) {
      const Eigen::Vector4d mixed =
          homogeneous(Eigen::Vector4d::Unit(i) + Eigen::Vector4d::Unit(k));
      for (int j = 0; j < 4; ++j) {
        const double off = 0.5 * (mixed(j) - diag[i](j) - diag[k](j));
        forms[j](i, k) = forms[j](k, i) = off;
      }
    }
  return forms;
}

struct CollisionCandidate {
  Eigen::Vector4d q1, q2;
  double h_gap = std::numeric_limits<double>::infinity();
  double overlap = 1.0;
};

/// One seeded Levenberg-Marquardt descent on (q1, q2) in R^8 with residuals
///   r_j = q1^T H_j q1 / |q1|^2 - q2^T H_j q2 / |q2|^2   (j = 1..4)
///   r_5 = sqrt(mu) * max(0, |cos angle(q1, q2)| - target)
/// where the overlap barrier keeps the two states apart (|<Omega1, Omega2>|
/// equals |q1 . q2| for unit quaternions).  The quotient by scale makes the
/// objective well defined on rays, so the iteration is unconstrained.
inline CollisionCandidate collision_restart(
    const std::array<Eigen::Matrix4d, 4>& forms, double separation, Rng rng) {
  const double target = 1.0 - 1.05 * separation;
  const double mu = std::sqrt(10.0);
  Eigen::Matrix<double, 8, 1> z;
  for (int i = 0; i < 8; ++i) z(i) = rng.gauss();

  auto residuals = [&](const Eigen::Matrix<double, 8, 1>& v,
                       Eigen::Matrix<double, 5, 1>& r,
                       Eigen::Matrix<double, 5, 8>* jac) {
    const Eigen::Vector4d q1 = v.head<4>();
    const Eigen::Vector4d q2 = v.tail<4>();
    const double s1 = q1.squaredNorm();
    const double s2 = q2.squaredNorm();
    for (int j = 0; j < 4; ++j) {
      const Eigen::Vector4d h1 = forms[j] * q1;
      const Eigen::Vector4d h2 = forms[j] * q2;
      const double f1 = q1.dot(h1) / s1;
      const double f2 = q2.dot(h2) / s2;
      r(j) = f1 - f2;
      if (jac) {
        jac->row(j).head<4>() = (2.0 / s1) * (h1 - f1 * q1).transpose();
        jac->row(j).tail<4>() = (-2.0 / s2) * (h2 - f2 * q2).transpose();
      }
    }
    const double dot = q1.dot(q2);
    const double a = std::sqrt(s1), b = std::sqrt(s2);
    const double ovl = std::abs(dot) / (a * b);
    const double excess = ovl - target;
    r(4) = mu * std::max(0.0, excess);
    if (jac) {
      jac->row(4).setZero();
      if (excess > 0.0) {
        const double sign = (dot >= 0.0) ? 1.0 : -1.0;
        jac->row(4).head<4>() =
            mu * (sign * q2 / (a * b) - ovl * q1 / s1).transpose();
        jac->row(4).tail<4>() =
            mu * (sign * q1 / (a * b) - ovl * q2 / s2).transpose();
      }
    }
  };

  Eigen::Matrix<double, 5, 1> r;
  Eigen::Matrix<double, 5, 8> jac;
  residuals(z, r, nullptr);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  for (int iter = 0; iter < 300; ++iter) {
    residuals(z, r, &jac);
    const Eigen::Matrix<double, 8, 8> jtj = jac.transpose() * jac;
    const Eigen::Matrix<double, 8, 1> jtr = jac.transpose() * r;
    if (jtr.cwiseAbs().maxCoeff() < 1e-16) break;
    bool stepped = false;
    for (int tries = 0; tries < 25; ++tries) {
      Eigen::Matrix<double, 8, 8> lhs = jtj;
      lhs.diagonal().array() += lambda;
      const Eigen::Matrix<double, 8, 1> delta = lhs.ldlt().solve(-jtr);
      Eigen::Matrix<double, 8, 1> cand = z + delta;
      cand.head<4>() /= cand.head<4>().norm();
      cand.tail<4>() /= cand.tail<4>().norm();
      Eigen::Matrix<double, 5, 1> cand_r;
      residuals(cand, cand_r, nullptr);
      const double cand_cost = cand_r.squaredNorm();
      if (cand_cost < cost) {
        z = cand;
        cost = cand_cost;
        lambda = std::max(1e-12, lambda / 3.0);
        stepped = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!stepped || cost < 1e-30) break;
  }

  CollisionCandidate out;
  out.q1 = z.head<4>() / z.head<4>().norm();
  out.q2 = z.tail<4>() / z.tail<4>().norm();
  residuals(z, r, nullptr);
  out.h_gap = r.head<4>().cwiseAbs().maxCoeff();
  out.overlap = std::abs(out.q1.dot(out.q2));
  return out;
}

}  // namespace detail

/// Seeded multi-start search for two maximally entangled states that all
/// four product bases fail to distinguish.  Existence is guaranteed by a
/// topological argument, so failure after `restarts` attempts is reported
/// (empty optional) rather than papered over.  A returned result has been
/// verified through the literal trace path: h-gap and all 16 outcome
/// probability gaps below tol_zero, state overlap at most 1 - separation.
inline std::optional<CollisionResult> find_entangled_collision(
    const std::array<BlochPair, 4>& pairs, std::uint64_t seed, int restarts,
    double separation = 1e-3, const Tolerances& tol = {}) {
  require(separation > 0.0 && separation < 1.0,
          "find_entangled_collision: separation must be in (0, 1)");
  require(restarts >= 1, "find_entangled_collision: restarts must be >= 1");
  for (const auto& pr : pairs) {
    require(std::abs(pr.m.norm() - 1.0) <= tol.tol_unit &&
                std::abs(pr.n.norm() - 1.0) <= tol.tol_unit,
            "find_entangled_collision: directions must be unit");
  }
  const auto forms = detail::collision_forms(pairs);
  const auto bases = product_bases(pairs, tol);

  for (int attempt = 0; attempt < restarts; ++attempt) {
    detail::CollisionCandidate cand = detail::collision_restart(
        forms, separation, Rng::substream(seed, attempt));
    if (cand.h_gap > 0.1 * tol.tol_zero) continue;
    if (cand.overlap > 1.0 - separation) continue;

    const ComplexMatrix u1 = detail::su2_of_quaternion(cand.q1);
    const ComplexMatrix u2 = detail::su2_of_quaternion(cand.q2);
    CollisionResult res;
    res.r1 = rotation_of_unitary(u1, tol);
    res.r2 = rotation_of_unitary(u2, tol);
    res.omega1 = max_entangled_state(u1, tol);
    res.omega2 = max_entangled_state(u2, tol);
    res.state_overlap = std::abs(res.omega1.dot(res.omega2));
    const Eigen::Vector4d h1 = h_functionals(pairs, res.r1.R);
    const Eigen::Vector4d h2 = h_functionals(pairs, res.r2.R);
    res.f_residual = (h1 - h2).cwiseAbs().maxCoeff();

    double prob_gap = 0.0;
    for (int l = 0; l < 4; ++l)
      for (int j = 0; j < 4; ++j) {
        res.prob1(l, j) = std::norm(bases[l].vectors.col(j).dot(res.omega1));
        res.prob2(l, j) = std::norm(bases[l].vectors.col(j).dot(res.omega2));
        prob_gap = std::max(prob_gap,
                            std::abs(res.prob1(l, j) - res.prob2(l, j)));
      }
    if (res.f_residual < tol.tol_zero && prob_gap < tol.tol_zero &&
        res.state_overlap <= 1.0 - separation)
      return res;
  }
  return std::nullopt;
}

}  // namespace pureic

#endif  // PUREIC_PRODUCT4_HPP
