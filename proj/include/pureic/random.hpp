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

#ifndef PUREIC_RANDOM_HPP
#define PUREIC_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "pureic/types.hpp"

namespace pureic {

/// Deterministic random source.  Gaussians come from a hand-rolled
/// Box-Muller transform so that streams are identical across standard
/// library implementations (std::normal_distribution is not pinned).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Independent substream for restart r of a seeded search.
  static Rng substream(std::uint64_t seed, std::uint64_t r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32)};
    Rng rng(0);
    rng.gen_.seed(seq);
    rng.have_spare_ = false;
    return rng;
  }

  double uniform() {  // in (0, 1)
    // 53-bit mantissa, never exactly 0
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double t = 2.0 * M_PI * v;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  Complex cgauss() { return Complex(gauss(), gauss()); }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Unit vector of i.i.d. standard complex Gaussians, normalized; this is the
/// unitarily invariant distribution on pure states.
inline Ket random_pure_state(int dim, Rng& rng) {
  Ket v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.cgauss();
  v /= v.norm();
  return v;
}

inline Eigen::Vector3d random_direction(Rng& rng) {
  Eigen::Vector3d n(rng.gauss(), rng.gauss(), rng.gauss());
  n /= n.norm();
  return n;
}

/// Haar-random unitary: QR of a Ginibre matrix with the R diagonal phased out.
inline ComplexMatrix random_unitary(int dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.cgauss();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    Complex rjj = r(j, j);
    Complex phase = (std::abs(rjj) > 0) ? rjj / std::abs(rjj) : Complex(1, 0);
    q.col(j) *= phase;
  }
  return q;
}

inline OrthonormalBasis random_basis(int dim, Rng& rng) {
  return OrthonormalBasis(random_unitary(dim, rng));
}

/// Haar-random element of SU(2) via a uniform unit quaternion.
inline ComplexMatrix random_su2(Rng& rng) {
  Eigen::Vector4d q(rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss());
  q /= q.norm();
  ComplexMatrix u(2, 2);
  u << Complex(q(0), -q(3)), Complex(-q(2), -q(1)),
       Complex(q(2), -q(1)), Complex(q(0), q(3));
  return u;
}

}  // namespace pureic

#endif  // PUREIC_RANDOM_HPP
