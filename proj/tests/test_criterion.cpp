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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pureic/criterion.hpp"
#include "pureic/jaming.hpp"
#include "pureic/qlinalg.hpp"
#include "pureic/random.hpp"
#include "pureic/spin1.hpp"

using namespace pureic;

namespace {

OrthonormalBasis standard_basis(int d) {
  return OrthonormalBasis{ComplexMatrix::Identity(d, d)};
}

OrthonormalBasis sigma_x_basis() {
  ComplexMatrix m(2, 2);
  m << 1, 1, 1, -1;
  return OrthonormalBasis{m / std::sqrt(2.0)};
}

OrthonormalBasis sigma_y_basis() {
  ComplexMatrix m(2, 2);
  m << 1, 1, Complex(0, 1), Complex(0, -1);
  return OrthonormalBasis{m / std::sqrt(2.0)};
}

// Direct probability-table oracle for a witness: the largest difference of
// outcome probabilities the two states produce across all given bases.
double probability_gap(const std::vector<OrthonormalBasis>& bases,
                       const Ket& a, const Ket& b) {
  double gap = 0.0;
  for (const auto& basis : bases)
    for (int j = 0; j < basis.dim(); ++j) {
      const Ket v = basis.vec(j);
      gap = std::max(gap, std::abs(std::norm(v.dot(a)) - std::norm(v.dot(b))));
    }
  return gap;
}

void check_witness_sound(const std::vector<OrthonormalBasis>& bases,
                         const WitnessPair& w, double gap_bound) {
  CHECK(is_unit(w.psi_plus, 1e-9));
  CHECK(is_unit(w.psi_minus, 1e-9));
  const double overlap = std::abs(w.psi_plus.dot(w.psi_minus));
  CHECK(overlap < 1.0 - 1e-6);
  CHECK(probability_gap(bases, w.psi_plus, w.psi_minus) < gap_bound);
  const SelfAdjointOp rho1 = w.psi_plus * w.psi_plus.adjoint();
  const SelfAdjointOp rho2 = w.psi_minus * w.psi_minus.adjoint();
  CHECK_FALSE(distinguishes(bases, rho1, rho2));
}

}  // namespace

TEST_CASE("distinguishes reference cases") {
  const auto std2 = standard_basis(2);
  ComplexMatrix rho1 = ComplexMatrix::Zero(2, 2);
  rho1(0, 0) = 1.0;
  ComplexMatrix rho2 = ComplexMatrix::Zero(2, 2);
  rho2(1, 1) = 1.0;
  CHECK(distinguishes({std2}, rho1, rho2));
  CHECK_FALSE(distinguishes({std2}, rho1, rho1));

  Ket plus(2), minus(2);
  plus << 1, 1;
  minus << 1, -1;
  plus /= std::sqrt(2.0);
  minus /= std::sqrt(2.0);
  const SelfAdjointOp p1 = plus * plus.adjoint();
  const SelfAdjointOp p2 = minus * minus.adjoint();
  CHECK_FALSE(distinguishes({std2}, p1, p2));
}

TEST_CASE("distinguishes validates its state inputs") {
  const auto std2 = standard_basis(2);
  ComplexMatrix not_a_state = ComplexMatrix::Identity(2, 2);  // trace 2
  CHECK_THROWS_AS(
      distinguishes({std2}, not_a_state, ComplexMatrix::Identity(2, 2)),
      std::invalid_argument);
}

TEST_CASE("two_basis_counterexample on identical standard bases") {
  const WitnessPair w =
      two_basis_counterexample(standard_basis(2), standard_basis(2));
  Ket plus(2), minus(2);
  plus << 1, 1;
  minus << 1, -1;
  plus /= std::sqrt(2.0);
  minus /= std::sqrt(2.0);
  CHECK((w.psi_plus - plus).norm() < 1e-14);
  CHECK((w.psi_minus - minus).norm() < 1e-14);
  CHECK(w.residual < 1e-14);
}

TEST_CASE("two_basis_counterexample standard vs sigma_x eigenbasis") {
  const auto b1 = standard_basis(2);
  const auto b2 = sigma_x_basis();
  const WitnessPair w = two_basis_counterexample(b1, b2);
  CHECK(w.residual < 1e-12);
  CHECK(std::abs(w.psi_plus.dot(w.psi_minus)) < 1.0);
  check_witness_sound({b1, b2}, w, 1e-12);
}

TEST_CASE("two_basis_counterexample on random pairs in d=5") {
  Rng rng(307);
  for (int trial = 0; trial < 100; ++trial) {
    const auto b1 = random_basis(5, rng);
    const auto b2 = random_basis(5, rng);
    const WitnessPair w = two_basis_counterexample(b1, b2);
    CHECK(w.residual < 1e-10);
    CHECK(std::abs(w.psi_plus.dot(w.psi_minus)) < 1.0 - 1e-6);
    CHECK(probability_gap({b1, b2}, w.psi_plus, w.psi_minus) < 1e-10);
  }
}

TEST_CASE("witness_search finds the sigma_x eigen-pair witness") {
  ComplementBasis c;
  c.dim = 2;
  c.ops = {pauli_x() / std::sqrt(2.0), pauli_y() / std::sqrt(2.0)};
  const auto w = witness_search(c, 50, 0);
  REQUIRE(w.has_value());
  CHECK(w->residual < 1e-10);
  // any witness for this complement leaves the standard basis blind
  CHECK(probability_gap({standard_basis(2)}, w->psi_plus, w->psi_minus) <
        1e-9);
}

TEST_CASE("witness_search reports absence for a rank-3 line") {
  ComplementBasis c;
  c.dim = 3;
  ComplexMatrix t = ComplexMatrix::Zero(3, 3);
  t.diagonal() << 1.0, 1.0, -2.0;
  c.ops = {t / std::sqrt(6.0)};
  CHECK_FALSE(witness_search(c, 50, 0).has_value());
}

TEST_CASE("witness_search succeeds on three random bases in d=3") {
  Rng rng(311);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<OrthonormalBasis> bases = {
        random_basis(3, rng), random_basis(3, rng), random_basis(3, rng)};
    const ComplementBasis c =
        selfadjoint_complement(projections_of(bases), Tolerances{});
    REQUIRE(c.size() >= 2);
    const auto w = witness_search(c, 200, 17);
    REQUIRE(w.has_value());
    CHECK(w->residual < 1e-8);
    CHECK(probability_gap(bases, w->psi_plus, w->psi_minus) < 1e-7);
  }
}

TEST_CASE("certify_pure_ic: three Pauli eigenbases are IC") {
  const std::vector<OrthonormalBasis> bases = {
      sigma_x_basis(), sigma_y_basis(), standard_basis(2)};
  const Verdict v = certify_pure_ic(bases, 50, 0);
  CHECK(v.status == Status::IC);
  CHECK(v.complement_dim == 0);
}

TEST_CASE("certify_pure_ic: any three bases in d=3 are NotIC") {
  Rng rng(313);
  for (int trial = 0; trial < 3; ++trial) {
    const std::vector<OrthonormalBasis> bases = {
        random_basis(3, rng), random_basis(3, rng), random_basis(3, rng)};
    const Verdict v = certify_pure_ic(bases, 200, 5);
    REQUIRE(v.status == Status::NotIC);
    REQUIRE(v.witness.has_value());
    check_witness_sound(bases, *v.witness, 1e-7);
  }
}

TEST_CASE("certify_pure_ic: two bases short-circuit to the closed form") {
  Rng rng(317);
  for (int d : {2, 3, 5}) {
    const auto b1 = random_basis(d, rng);
    const auto b2 = random_basis(d, rng);
    const Verdict v = certify_pure_ic({b1, b2}, 10, 0);
    REQUIRE(v.status == Status::NotIC);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->residual < 1e-10);
    check_witness_sound({b1, b2}, *v.witness, 1e-10);
  }
}

TEST_CASE("certify_pure_ic never settles random d=4 triples as IC") {
  Rng rng(331);
  const std::vector<OrthonormalBasis> bases = {
      random_basis(4, rng), random_basis(4, rng), random_basis(4, rng)};
  const Verdict v = certify_pure_ic(bases, 30, 0);
  CHECK(v.status != Status::IC);
  CHECK(v.complement_dim >= 2);
  if (v.status == Status::NotIC) {
    REQUIRE(v.witness.has_value());
    check_witness_sound(bases, *v.witness, 1e-7);
  }
}

TEST_CASE("check_d3_four_bases rejects four copies of one basis") {
  const std::vector<OrthonormalBasis> bases(4, standard_basis(3));
  const Verdict v = check_d3_four_bases(bases);
  REQUIRE(v.status == Status::NotIC);
  REQUIRE(v.witness.has_value());
  check_witness_sound(bases, *v.witness, 1e-9);
}

TEST_CASE("check_d3_four_bases rejects the axis spin quadruple") {
  const Direction e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
  const std::vector<OrthonormalBasis> bases = {
      spin_eigenbasis(e1), spin_eigenbasis(e2), spin_eigenbasis(e3),
      spin_eigenbasis(e3)};
  const Verdict v = check_d3_four_bases(bases);
  REQUIRE(v.status == Status::NotIC);
  REQUIRE(v.witness.has_value());
  check_witness_sound(bases, *v.witness, 1e-8);
}

TEST_CASE("IC verdicts coexist with witness-search absence") {
  const auto bases = jaming_bases(make_jaming_config(3, PolyKind::hermite, 1.0));
  const Verdict v = check_d3_four_bases(bases);
  REQUIRE(v.status == Status::IC);
  const ComplementBasis c =
      selfadjoint_complement(projections_of(bases), Tolerances{});
  CHECK(c.size() <= 1);
  if (c.size() == 1) CHECK_FALSE(witness_search(c, 100, 3).has_value());
}

TEST_CASE("IC d=3 quadruple distinguishes random pure pairs") {
  const auto bases = jaming_bases(make_jaming_config(3, PolyKind::hermite, 1.0));
  Rng rng(337);
  for (int trial = 0; trial < 1000; ++trial) {
    const Ket a = random_pure_state(3, rng);
    const Ket b = random_pure_state(3, rng);
    if (std::abs(a.dot(b)) > 1.0 - 1e-6) continue;
    CHECK(probability_gap(bases, a, b) > 1e-9);
  }
}

TEST_CASE("witness_residual equals the maximal probability gap") {
  Rng rng(347);
  const auto b1 = random_basis(3, rng);
  const auto b2 = random_basis(3, rng);
  const Ket x = random_pure_state(3, rng);
  const Ket y = random_pure_state(3, rng);
  CHECK(witness_residual({b1, b2}, x, y) ==
        Catch::Approx(probability_gap({b1, b2}, x, y)).margin(1e-14));
}
