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

#ifndef PUREIC_JAMING_HPP
#define PUREIC_JAMING_HPP

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "pureic/orthopoly.hpp"
#include "pureic/types.hpp"

namespace pureic {

/// Configuration of the four-basis construction: dimension, orthonormal
/// polynomial family (count must be at least dim+1), and the phase alpha.
/// alpha must not be a rational multiple of pi; the default 1.0 rad is the
/// documented safe choice (1/pi is irrational).
struct JamingConfig {
  int dim = 2;
  OrthoPolyFamily family;
  double alpha = 1.0;
};

inline JamingConfig make_jaming_config(int dim, PolyKind kind,
                                       double alpha = 1.0) {
  require(dim >= 2, "make_jaming_config: dim must be >= 2");
  return JamingConfig{dim, make_family(kind, dim + 1), alpha};
}

/// Measurement statistics of one pure state under four bases: table[l][j] is
/// the outcome-j probability in basis l.  Rows sum to 1.
struct ProbabilityData {
  int dim = 0;
  std::vector<std::vector<double>> table;
};

/// Four orthonormal bases that together distinguish all pure states.
///   B1: normalized value vectors (p_0(x_j), ..., p_{d-1}(x_j)) at the d
///       roots x_j of p_d;
///   B2: normalized (p_0(y_j), ..., p_{d-2}(y_j), 0) at the d-1 roots y_j of
///       p_{d-1}, completed by e_d;
///   B3, B4: the same with component k multiplied by e^{ik*alpha}, where B4
///       keeps the appended vector exactly e_d.
/// Orthonormality of B1/B2 is Gauss quadrature in disguise; B3/B4 differ from
/// them by a diagonal unitary.
inline std::vector<OrthonormalBasis> jaming_bases(const JamingConfig& cfg) {
  const int d = cfg.dim;
  require(d >= 2, "jaming_bases: dim must be >= 2");
  const OrthoPolyFamily& fam = cfg.family;
  require(fam.count >= d + 1,
          "jaming_bases: family must define polynomials up to degree dim");
  auto xs = poly_roots(fam, d);
  auto ys = poly_roots(fam, d - 1);

  ComplexMatrix b1(d, d);
  ComplexMatrix b2 = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    auto p = poly_eval_all(fam, d - 1, xs[j]);
    RealVector col = Eigen::Map<RealVector>(p.data(), d);
    b1.col(j) = (col / col.norm()).cast<Complex>();
  }
  for (int j = 0; j < d - 1; ++j) {
    auto p = poly_eval_all(fam, d - 2, ys[j]);
    RealVector col = RealVector::Zero(d);
    for (int k = 0; k <= d - 2; ++k) col(k) = p[k];
    b2.col(j) = (col / col.norm()).cast<Complex>();
  }
  b2(d - 1, d - 1) = 1.0;

  Eigen::VectorXcd phases(d);
  for (int k = 0; k < d; ++k) phases(k) = std::exp(Complex(0.0, k * cfg.alpha));
  ComplexMatrix b3 = phases.asDiagonal() * b1;
  ComplexMatrix b4 = phases.asDiagonal() * b2;
  b4.col(d - 1).setZero();
  b4(d - 1, d - 1) = 1.0;

  return {OrthonormalBasis{b1}, OrthonormalBasis{b2}, OrthonormalBasis{b3},
          OrthonormalBasis{b4}};
}

inline ProbabilityData simulate_probabilities(
    const std::vector<OrthonormalBasis>& bases, const Ket& psi,
    const Tolerances& tol = {}) {
  require(bases.size() == 4, "simulate_probabilities: need exactly 4 bases");
  const int d = bases[0].dim();
  for (const auto& b : bases)
    require(b.dim() == d, "simulate_probabilities: dimension mismatch");
  require(static_cast<int>(psi.size()) == d,
          "simulate_probabilities: state dimension mismatch");
  require(std::abs(psi.norm() - 1.0) <= tol.tol_unit,
          "simulate_probabilities: state is not unit");
  ProbabilityData data;
  data.dim = d;
  data.table.assign(4, std::vector<double>(d));
  for (int l = 0; l < 4; ++l)
    for (int j = 0; j < d; ++j)
      data.table[l][j] = std::norm(bases[l].vectors.col(j).dot(psi));
  return data;
}

inline void validate_probability_data(const ProbabilityData& data,
                                      const Tolerances& tol = {}) {
  require(data.dim >= 2, "probability data: dim must be >= 2");
  require(data.table.size() == 4, "probability data: need exactly 4 rows");
  for (const auto& row : data.table) {
    require(static_cast<int>(row.size()) == data.dim,
            "probability data: row length must equal dim");
    double sum = 0.0;
    for (double p : row) {
      require(std::isfinite(p) && p >= -tol.tol_unit,
              "probability data: entries must be nonnegative");
      sum += p;
    }
    require(std::abs(sum - 1.0) <= tol.tol_unit * data.dim,
            "probability data: each row must sum to 1");
  }
}

namespace detail {

// The coefficient extraction divides by the recovered top amplitude, which can
// sit just above the truncation threshold; do that arithmetic in the widest
// float the compiler offers so the amplified roundoff stays far below the
// a-posteriori residual limit.
#if defined(__SIZEOF_FLOAT128__) && !defined(PUREIC_NO_FLOAT128)
using BigFloat = __float128;
#else
using BigFloat = long double;
#endif

inline BigFloat big_sqrt(BigFloat x) {
  if (!(x > 0)) return 0;
  // Newton refinement of the long-double seed; three steps reach full width.
  BigFloat r = std::sqrt(static_cast<long double>(x));
  for (int i = 0; i < 3; ++i) r = (r + x / r) / 2;
  return r;
}

struct BigComplex {
  BigFloat re = 0, im = 0;
};

inline BigComplex operator+(BigComplex a, BigComplex b) {
  return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator*(BigComplex a, BigComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex big_conj(BigComplex a) { return {a.re, -a.im}; }

inline std::vector<BigComplex> conv(const std::vector<BigComplex>& f,
                                    const std::vector<BigComplex>& g) {
  std::vector<BigComplex> h(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      h[i + j] = h[i + j] + f[i] * g[j];
  return h;
}

/// Monomial coefficients of |K|^2 restricted to the real line, where K has
/// the given complex coefficient vector.
inline std::vector<BigFloat> abs2_coeffs(const std::vector<BigComplex>& k) {
  std::vector<BigComplex> kc(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) kc[i] = big_conj(k[i]);
  auto h = conv(k, kc);
  std::vector<BigFloat> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = h[i].re;
  return out;
}

/// Monomial coefficients of the polynomial interpolating (nodes[i], val[i]):
/// Newton divided differences expanded back to the power basis, the stable
/// route for Vandermonde systems with distinct real nodes.
inline std::vector<BigFloat> interp_monomial(const std::vector<BigFloat>& nodes,
                                             std::vector<BigFloat> dd) {
  const int n = static_cast<int>(nodes.size());
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);
  std::vector<BigFloat> mono(n, BigFloat(0));
  mono[0] = dd[n - 1];
  int deg = 0;
  for (int i = n - 2; i >= 0; --i) {
    // mono <- mono * (x - nodes[i]) + dd[i], in place from the top down.
    for (int k = deg + 1; k >= 1; --k)
      mono[k] = mono[k - 1] - nodes[i] * mono[k];
    mono[0] = dd[i] - nodes[i] * mono[0];
    ++deg;
  }
  return mono;
}

}  // namespace detail

/// Recover the unique pure state consistent with exact statistics under the
/// four constructed bases.
///
/// Write the state as psi = sum_k xi_k e_{k+1} and F(z) = sum_k xi_k p_k(z).
/// The basis-1/2 rows give |F|^2 at all 2d-1 roots of p_d and p_{d-1}
/// (denormalized by the value-vector norms), which pins down the real
/// polynomial G1 = |F|^2 of degree <= 2d-2; rows 3/4 do the same for
/// G2 = |F_alpha|^2 with F_alpha(z) = sum_k xi_k e^{-ik*alpha} p_k(z).
/// The top coefficient of G1 yields |xi_top|^2; each lower coefficient pair
/// then yields Re(u_n) and Re(u_n e^{-in*alpha}) for u_n = xi_top *
/// conj(xi_{top-n}) after subtracting the contribution of already-known
/// amplitudes, and the two functionals determine u_n because sin(n*alpha)
/// never vanishes for irrational alpha/pi.  A vanishing top coefficient
/// truncates to the first nonvanishing trailing amplitude and restarts the
/// induction there.  Coefficients are extracted by Newton interpolation at
/// the quadrature nodes in extended precision; the result is validated a
/// posteriori against the input statistics.
inline Ket reconstruct_pure_state(const ProbabilityData& data,
                                  const JamingConfig& cfg,
                                  const Tolerances& tol = {}) {
  using detail::BigComplex;
  using detail::BigFloat;

  const int d = cfg.dim;
  require(d >= 2, "reconstruct_pure_state: dim must be >= 2");
  require(data.dim == d, "reconstruct_pure_state: data/config dim mismatch");
  validate_probability_data(data, tol);
  const OrthoPolyFamily& fam = cfg.family;
  require(fam.count >= d + 1,
          "reconstruct_pure_state: family must define polynomials up to dim");

  auto xs = poly_roots(fam, d);
  auto ys = poly_roots(fam, d - 1);
  const int nn = 2 * d - 1;

  // Node values of G1 and G2: probability times squared value-vector norm.
  std::vector<BigFloat> nodes(nn), val1(nn), val2(nn);
  for (int j = 0; j < d; ++j) {
    auto p = poly_eval_all(fam, d - 1, xs[j]);
    BigFloat norm2 = 0;
    for (double t : p) norm2 += BigFloat(t) * BigFloat(t);
    nodes[j] = xs[j];
    val1[j] = BigFloat(std::max(0.0, data.table[0][j])) * norm2;
    val2[j] = BigFloat(std::max(0.0, data.table[2][j])) * norm2;
  }
  for (int j = 0; j < d - 1; ++j) {
    auto p = poly_eval_all(fam, d - 2, ys[j]);
    BigFloat norm2 = 0;
    for (double t : p) norm2 += BigFloat(t) * BigFloat(t);
    nodes[d + j] = ys[j];
    val1[d + j] = BigFloat(std::max(0.0, data.table[1][j])) * norm2;
    val2[d + j] = BigFloat(std::max(0.0, data.table[3][j])) * norm2;
  }

  // Monomial coefficients of G1, G2 by interpolation at the 2d-1 nodes.
  auto g1 = detail::interp_monomial(nodes, val1);
  auto g2 = detail::interp_monomial(nodes, val2);

  // Truncation: effective dimension = largest D whose top coefficient gives
  // |xi_{D-1}|^2 above tol_zero; ties broken toward smaller D.
  int top = 0;
  BigFloat top_abs2 = 0;
  for (int cand = d; cand >= 1; --cand) {
    const BigFloat lead = fam.leading[cand - 1];
    const BigFloat est = g1[2 * cand - 2] / (lead * lead);
    if (est > BigFloat(tol.tol_zero)) {
      top = cand - 1;  // 0-indexed top amplitude
      top_abs2 = est;
      break;
    }
  }
  if (top == 0 && !(top_abs2 > 0))
    throw InconsistentDataError(
        "reconstruct_pure_state: statistics admit no leading amplitude", 1.0);

  std::vector<BigComplex> xi(d);
  const BigFloat xi_top = detail::big_sqrt(top_abs2);
  xi[top] = {xi_top, 0};

  // Induction on n: coefficient 2*top-n of G1 (resp. G2) equals the known
  // part |K|^2 coefficient plus 2 Re(u_n) (resp. 2 Re(u_n e^{-in*alpha}))
  // times lead_top * lead_{top-n}, where K collects amplitudes above top-n.
  std::vector<BigComplex> known_plain(top + 1);
  std::vector<BigComplex> known_phased(top + 1);
  auto add_amplitude = [&](int k) {
    auto mono = poly_monomial_coeffs(fam, k);
    const long double ka = -static_cast<long double>(k) * cfg.alpha;
    const BigComplex phase{std::cos(ka), std::sin(ka)};
    for (std::size_t i = 0; i < mono.size(); ++i) {
      const BigComplex term = xi[k] * BigComplex{BigFloat(mono[i]), 0};
      known_plain[i] = known_plain[i] + term;
      known_phased[i] = known_phased[i] + phase * term;
    }
  };
  add_amplitude(top);
  for (int n = 1; n <= top; ++n) {
    const int idx = 2 * top - n;
    auto kn1 = detail::abs2_coeffs(known_plain);
    auto kn2 = detail::abs2_coeffs(known_phased);
    const BigFloat denom =
        2 * BigFloat(fam.leading[top]) * BigFloat(fam.leading[top - n]);
    const BigFloat re_u = (g1[idx] - kn1[idx]) / denom;
    const BigFloat re_u_phased = (g2[idx] - kn2[idx]) / denom;
    const long double na = n * static_cast<long double>(cfg.alpha);
    const BigFloat s = std::sin(na);
    const BigFloat co = std::cos(na);
    require(std::abs(static_cast<double>(s)) >= 1e-6,
            "reconstruct_pure_state: sin(n*alpha) too small; alpha is too "
            "close to a rational multiple of pi for this dimension");
    const BigFloat im_u = (re_u_phased - re_u * co) / s;
    // u_n = xi_top * conj(xi_{top-n}) and xi_top is real positive.
    xi[top - n] = {re_u / xi_top, -im_u / xi_top};
    add_amplitude(top - n);
  }

  Ket psi(d);
  for (int k = 0; k < d; ++k)
    psi(k) = Complex(static_cast<double>(xi[k].re),
                     static_cast<double>(xi[k].im));
  psi /= psi.norm();

  // Deterministic Gauss-Newton polish against the input table.  The induction
  // divides by the top amplitude, so when that amplitude sits barely above
  // the truncation threshold the algebraic output carries amplified roundoff
  // from the double-precision statistics; a few damped least-squares steps on
  // the probability residuals restore full accuracy.
  const std::vector<OrthonormalBasis> bases = jaming_bases(cfg);
  {
    std::vector<Ket> vs;
    std::vector<double> ps;
    vs.reserve(4 * d);
    ps.reserve(4 * d);
    for (int l = 0; l < 4; ++l)
      for (int j = 0; j < d; ++j) {
        vs.push_back(bases[l].vectors.col(j));
        ps.push_back(data.table[l][j]);
      }
    const int m = static_cast<int>(vs.size());
    auto objective = [&](const Ket& v) {
      double f = 0;
      for (int i = 0; i < m; ++i) {
        const double diff = std::norm(vs[i].dot(v)) - ps[i];
        f += diff * diff;
      }
      return f;
    };
    Eigen::VectorXd r(m);
    Eigen::MatrixXd jac(m, 2 * d);
    double f_cur = objective(psi);
    for (int it = 0; it < 40 && f_cur > 1e-28; ++it) {
      for (int i = 0; i < m; ++i) {
        const Complex c = vs[i].dot(psi);
        r(i) = std::norm(c) - ps[i];
        for (int k = 0; k < d; ++k) {
          const Complex vc = vs[i](k) * c;
          jac(i, k) = 2.0 * vc.real();
          jac(i, d + k) = 2.0 * vc.imag();
        }
      }
      Eigen::MatrixXd normal = jac.transpose() * jac;
      normal.diagonal().array() += 1e-12 + f_cur;
      const Eigen::VectorXd step = normal.ldlt().solve(jac.transpose() * r);
      bool improved = false;
      for (double scale = 1.0; scale > 1e-7; scale *= 0.5) {
        Ket trial = psi;
        for (int k = 0; k < d; ++k)
          trial(k) -= scale * Complex(step(k), step(d + k));
        trial /= trial.norm();
        const double f_trial = objective(trial);
        if (f_trial < f_cur) {
          psi = trial;
          f_cur = f_trial;
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
  }

  for (int k = 0; k < d; ++k) {
    if (std::abs(psi(k)) > 1e-9) {
      psi *= std::conj(psi(k)) / std::abs(psi(k));
      break;
    }
  }

  // A-posteriori consistency: the reconstruction must reproduce the input.
  ProbabilityData sim = simulate_probabilities(bases, psi, tol);
  double residual = 0.0;
  for (int l = 0; l < 4; ++l)
    for (int j = 0; j < d; ++j)
      residual =
          std::max(residual, std::abs(sim.table[l][j] - data.table[l][j]));
  const double limit = std::max(10.0 * tol.tol_zero, 1e-8);
  if (residual > limit)
    throw InconsistentDataError(
        "reconstruct_pure_state: statistics are inconsistent with every pure "
        "state (residual " +
            std::to_string(residual) + ")",
        residual);
  return psi;
}

}  // namespace pureic

#endif  // PUREIC_JAMING_HPP
