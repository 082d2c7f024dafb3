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

#include <bit>
#include <cmath>

#include "pureic/bounds.hpp"

using namespace pureic;

namespace {

// Direct evaluation of every branch of the outcome-count bound; the library
// must return the max of the applicable ones.
int s_oracle(int d) {
  const int alpha = std::popcount(static_cast<unsigned>(d - 1));
  int s = 4 * d - 2 * alpha - 3;
  if (d % 2 == 1 && alpha % 4 == 2) s = std::max(s, 4 * d - 2 * alpha - 2);
  if (d % 2 == 1 && alpha % 4 == 3) s = std::max(s, 4 * d - 2 * alpha - 1);
  return s;
}

// Golden-section style shrink; f is unimodal near its minimum.
double numeric_argmin() {
  double lo = 1.5, hi = 6.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f_of(m1) < f_of(m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("binary_ones pinned values") {
  CHECK(binary_ones(2) == 1);
  CHECK(binary_ones(8) == 3);
  CHECK(binary_ones(9) == 1);
  CHECK_THROWS_AS(binary_ones(1), std::invalid_argument);
}

TEST_CASE("s_lower_bound reproduces the reference table") {
  const int expected[] = {3, 7, 9, 15, 17, 22};
  for (int d = 2; d <= 7; ++d) CHECK(s_lower_bound(d) == expected[d - 2]);
  // d=9: alpha(8)=1, refinements inapplicable, base branch 4*9-2-3
  CHECK(s_lower_bound(9) == 31);
}

TEST_CASE("s_lower_bound equals the branch-evaluation oracle") {
  for (int d = 2; d <= 300; ++d) CHECK(s_lower_bound(d) == s_oracle(d));
}

TEST_CASE("f checkpoints") {
  CHECK(f_of(2.0) == 3.0);  // exact in floating point
  CHECK(std::abs(f_of(8.0) - 3.055) < 1e-3);
  CHECK(std::abs(f_of(8.0) - 3.0550416) < 1e-6);
  CHECK_THROWS_AS(f_of(1.0), std::invalid_argument);
  CHECK_THROWS_AS(f_of(0.5), std::invalid_argument);
}

TEST_CASE("f minimizer location") {
  const double x0 = 1.0 + std::exp(1.0) / std::sqrt(2.0);
  CHECK(std::abs(f_argmin() - x0) < 1e-12);
  CHECK(std::abs(numeric_argmin() - x0) < 1e-6);
  // decreasing then increasing around the minimum
  CHECK(f_of(x0 - 1e-3) > f_of(x0));
  CHECK(f_of(x0 + 1e-3) > f_of(x0));
  CHECK(f_of(2.0) > f_of(2.5));
  CHECK(f_of(4.0) > f_of(3.2));
}

TEST_CASE("b_lower_bound pinned values and consistency") {
  CHECK(b_lower_bound(3) == 4);   // ceil(7/2)
  CHECK(b_lower_bound(5) == 4);   // ceil(15/4)
  CHECK(b_lower_bound(4) == 3);   // 9/3
  for (int d = 2; d <= 100; ++d) {
    const int expect = (s_lower_bound(d) + d - 2) / (d - 1);
    CHECK(b_lower_bound(d) == expect);
    CHECK(b_lower_bound(d) >= static_cast<int>(std::ceil(f_of(d) - 1e-12)));
  }
}

TEST_CASE("at least four bases needed for every 5 <= d <= 1e6") {
  for (int d = 5; d <= 1000000; ++d) {
    if (b_lower_bound(d) < 4) {
      FAIL("b_lower_bound dropped below 4 at d = " << d);
    }
  }
  SUCCEED();
}

TEST_CASE("known_answer map") {
  CHECK(known_answer(2).exact());
  CHECK(known_answer(2).lo == 3);
  CHECK(known_answer(3).exact());
  CHECK(known_answer(3).lo == 4);
  CHECK_FALSE(known_answer(4).exact());
  CHECK(known_answer(4).lo == 3);
  CHECK(known_answer(4).hi == 4);
  CHECK(known_answer(17).exact());
  CHECK(known_answer(17).lo == 4);
}

TEST_CASE("bounds report fields are mutually consistent") {
  for (int d = 2; d <= 12; ++d) {
    const BoundsReport r = make_bounds_report(d);
    CHECK(r.d == d);
    CHECK(r.alpha_ones == binary_ones(d));
    CHECK(r.s_lower == s_lower_bound(d));
    CHECK(r.b_lower == b_lower_bound(d));
    CHECK(r.f_value == f_of(static_cast<double>(d)));
    CHECK(r.f_value <= r.b_lower + 1e-12);
  }
}
