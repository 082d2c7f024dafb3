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

#ifndef PUREIC_BOUNDS_HPP
#define PUREIC_BOUNDS_HPP

#include <algorithm>
#include <bit>
#include <cmath>

#include "pureic/types.hpp"

namespace pureic {

/// Number of ones in the binary expansion of d-1.
inline int binary_ones(int d) {
  require(d >= 2, "binary_ones: d must be >= 2");
  return std::popcount(static_cast<unsigned>(d - 1));
}

/// Closed-form lower bound on the minimal number of selfadjoint operators
/// whose expectations distinguish all pure states in dimension d.  The base
/// bound 4d - 2a - 3 (a = binary_ones(d)) is sharpened for odd d when
/// a = 2 mod 4 (to 4d - 2a - 2) or a = 3 mod 4 (to 4d - 2a - 1); the
/// maximum over the applicable branches is returned.
inline int s_lower_bound(int d) {
  require(d >= 2, "s_lower_bound: d must be >= 2");
  const int a = binary_ones(d);
  int s = 4 * d - 2 * a - 3;
  if (d % 2 == 1 && a % 4 == 2) s = std::max(s, 4 * d - 2 * a - 2);
  if (d % 2 == 1 && a % 4 == 3) s = std::max(s, 4 * d - 2 * a - 1);
  return s;
}

/// Asymptotic per-basis bound f(x) = 4 - (2 log2(x-1) + 1)/(x-1), defined
/// for x > 1; f(2) = 3 and the minimum sits at x0 = 1 + e/sqrt(2).
inline double f_of(double x) {
  require(x > 1.0, "f_of: x must be > 1");
  return 4.0 - (2.0 * std::log2(x - 1.0) + 1.0) / (x - 1.0);
}

/// Location of the minimum of f: the derivative vanishes where
/// ln(x-1) = 1 - ln(2)/2, i.e. at 1 + e/sqrt(2).
inline double f_argmin() { return 1.0 + std::exp(1.0) / std::sqrt(2.0); }

/// Lower bound on the minimal number of orthonormal bases: each basis
/// contributes at most d-1 informative projections, so
/// b >= ceil(s_lower_bound(d) / (d-1)).
inline int b_lower_bound(int d) {
  require(d >= 2, "b_lower_bound: d must be >= 2");
  return (s_lower_bound(d) + d - 2) / (d - 1);
}

/// The settled minimal basis count: 3 for d = 2, 4 for d = 3 and d >= 5,
/// and either 3 or 4 for d = 4 (open).
struct KnownAnswer {
  int lo = 0;
  int hi = 0;
  bool exact() const { return lo == hi; }
};

inline KnownAnswer known_answer(int d) {
  require(d >= 2, "known_answer: d must be >= 2");
  if (d == 2) return {3, 3};
  if (d == 4) return {3, 4};
  return {4, 4};
}

struct BoundsReport {
  int d = 0;
  int alpha_ones = 0;
  int s_lower = 0;
  int b_lower = 0;
  double f_value = 0.0;
  KnownAnswer known;
};

inline BoundsReport make_bounds_report(int d) {
  BoundsReport r;
  r.d = d;
  r.alpha_ones = binary_ones(d);
  r.s_lower = s_lower_bound(d);
  r.b_lower = b_lower_bound(d);
  r.f_value = f_of(static_cast<double>(d));
  r.known = known_answer(d);
  return r;
}

}  // namespace pureic

#endif  // PUREIC_BOUNDS_HPP
