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
//
// JSON wire formats (documented in docs/formats.md):
//   complex number      [re, im]
//   matrix              list of rows
//   basis               {"dim": d, "vectors": [[...], ...]}
//   basis set           {"bases": [...]}

#ifndef PUREIC_IO_HPP
#define PUREIC_IO_HPP

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "pureic/bounds.hpp"
#include "pureic/criterion.hpp"
#include "pureic/jaming.hpp"
#include "pureic/product4.hpp"
#include "pureic/spin1.hpp"
#include "pureic/types.hpp"

namespace pureic {
namespace io {

using nlohmann::json;

inline double number_at(const json& j, const std::string& path) {
  require(j.is_number(), path + ": expected a number");
  return j.get<double>();
}

inline json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline Complex complex_at(const json& j, const std::string& path) {
  require(j.is_array() && j.size() == 2, path + ": expected [re, im]");
  return {number_at(j[0], path + "[0]"), number_at(j[1], path + "[1]")};
}

inline json to_json(const Ket& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

inline Ket ket_at(const json& j, const std::string& path) {
  require(j.is_array() && !j.empty(), path + ": expected a nonempty array");
  Ket v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) =
        complex_at(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

template <typename Derived>
json real_matrix_to_json(const Eigen::MatrixBase<Derived>& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(static_cast<double>(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline json to_json(const OrthonormalBasis& b) {
  json vectors = json::array();
  for (int j = 0; j < b.dim(); ++j) vectors.push_back(to_json(b.vec(j)));
  return json{{"dim", b.dim()}, {"vectors", vectors}};
}

inline OrthonormalBasis basis_at(const json& j, const std::string& path) {
  require(j.is_object(), path + ": expected a basis object");
  require(j.contains("dim") && j["dim"].is_number_integer(),
          path + ".dim: expected an integer");
  const int d = j["dim"].get<int>();
  require(d >= 1, path + ".dim: must be positive");
  require(j.contains("vectors") && j["vectors"].is_array() &&
              static_cast<int>(j["vectors"].size()) == d,
          path + ".vectors: expected " + std::to_string(d) + " vectors");
  ComplexMatrix m(d, d);
  for (int c = 0; c < d; ++c) {
    Ket v = ket_at(j["vectors"][c], path + ".vectors[" + std::to_string(c) + "]");
    require(static_cast<int>(v.size()) == d,
            path + ".vectors[" + std::to_string(c) + "]: wrong length");
    m.col(c) = v;
  }
  return OrthonormalBasis{m};
}

inline json to_json(const std::vector<OrthonormalBasis>& bases) {
  json arr = json::array();
  for (const auto& b : bases) arr.push_back(to_json(b));
  return json{{"bases", arr}};
}

inline std::vector<OrthonormalBasis> basis_set_at(const json& j) {
  require(j.is_object() && j.contains("bases") && j["bases"].is_array() &&
              !j["bases"].empty(),
          "bases: expected a nonempty array of bases");
  std::vector<OrthonormalBasis> out;
  out.reserve(j["bases"].size());
  for (std::size_t i = 0; i < j["bases"].size(); ++i)
    out.push_back(basis_at(j["bases"][i], "bases[" + std::to_string(i) + "]"));
  return out;
}

inline json to_json(const WitnessPair& w) {
  return json{{"psi_plus", to_json(w.psi_plus)},
              {"psi_minus", to_json(w.psi_minus)},
              {"residual", w.residual}};
}

inline json to_json(const Verdict& v) {
  json diag{{"restarts_used", v.diagnostics.restarts_used},
            {"note", v.diagnostics.note}};
  if (v.diagnostics.best_objective)
    diag["best_objective"] = *v.diagnostics.best_objective;
  json out{{"status", to_string(v.status)},
           {"complement_dim", v.complement_dim},
           {"diagnostics", diag}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

inline PolyKind family_at(const json& j, const std::string& path) {
  require(j.is_string(), path + ": expected a family name");
  const std::string s = j.get<std::string>();
  if (s == "hermite") return PolyKind::hermite;
  if (s == "legendre") return PolyKind::legendre;
  if (s == "chebyshev") return PolyKind::chebyshev;
  throw std::invalid_argument(
      path + ": unknown family '" + s +
      "' (expected hermite, legendre or chebyshev)");
}

inline json to_json(const ProbabilityData& data, double alpha,
                    PolyKind family) {
  json table = json::array();
  for (const auto& row : data.table) table.push_back(row);
  return json{{"dim", data.dim},
              {"alpha", alpha},
              {"family", to_string(family)},
              {"table", table}};
}

struct ProbabilityInput {
  ProbabilityData data;
  double alpha = 1.0;
  PolyKind family = PolyKind::hermite;
};

inline ProbabilityInput probability_at(const json& j) {
  require(j.is_object(), "expected a probability-data object");
  require(j.contains("dim") && j["dim"].is_number_integer(),
          "dim: expected an integer");
  ProbabilityInput in;
  in.data.dim = j["dim"].get<int>();
  require(j.contains("alpha"), "alpha: missing");
  in.alpha = number_at(j["alpha"], "alpha");
  require(j.contains("family"), "family: missing");
  in.family = family_at(j["family"], "family");
  require(j.contains("table") && j["table"].is_array() &&
              j["table"].size() == 4,
          "table: expected 4 rows");
  for (std::size_t l = 0; l < 4; ++l) {
    const json& row = j["table"][l];
    const std::string p = "table[" + std::to_string(l) + "]";
    require(row.is_array() && static_cast<int>(row.size()) == in.data.dim,
            p + ": expected dim entries");
    std::vector<double> r(row.size());
    for (std::size_t c = 0; c < row.size(); ++c)
      r[c] = number_at(row[c], p + "[" + std::to_string(c) + "]");
    in.data.table.push_back(std::move(r));
  }
  return in;
}

inline Direction direction_at(const json& j, const std::string& path) {
  require(j.is_array() && j.size() == 3, path + ": expected [x, y, z]");
  return Direction(number_at(j[0], path + "[0]"),
                   number_at(j[1], path + "[1]"),
                   number_at(j[2], path + "[2]"));
}

inline std::array<Direction, 4> directions_at(const json& j) {
  require(j.is_object() && j.contains("directions") &&
              j["directions"].is_array() && j["directions"].size() == 4,
          "directions: expected exactly 4 entries");
  std::array<Direction, 4> out;
  for (int i = 0; i < 4; ++i)
    out[i] = direction_at(j["directions"][i],
                          "directions[" + std::to_string(i) + "]");
  return out;
}

inline json to_json(const SpinCriterionReport& r) {
  json out{{"M", real_matrix_to_json(r.M)},
           {"rank_M", r.rank_M},
           {"determinant_value", r.determinant_value},
           {"verdict", to_json(r.verdict)}};
  if (r.kernel_vector) {
    json k = json::array();
    for (int i = 0; i < 5; ++i) k.push_back((*r.kernel_vector)(i));
    out["kernel_vector"] = k;
  }
  return out;
}

inline std::array<BlochPair, 4> pairs_at(const json& j) {
  require(j.is_object() && j.contains("pairs") && j["pairs"].is_array() &&
              j["pairs"].size() == 4,
          "pairs: expected exactly 4 entries");
  std::array<BlochPair, 4> out;
  for (int i = 0; i < 4; ++i) {
    const json& p = j["pairs"][i];
    const std::string path = "pairs[" + std::to_string(i) + "]";
    require(p.is_object() && p.contains("m") && p.contains("n"),
            path + ": expected {\"m\": [...], \"n\": [...]}");
    out[i].m = direction_at(p["m"], path + ".m");
    out[i].n = direction_at(p["n"], path + ".n");
  }
  return out;
}

inline json to_json(const CollisionResult& c) {
  return json{{"R1", real_matrix_to_json(c.r1.R)},
              {"R2", real_matrix_to_json(c.r2.R)},
              {"omega1", to_json(c.omega1)},
              {"omega2", to_json(c.omega2)},
              {"f_residual", c.f_residual},
              {"state_overlap", c.state_overlap},
              {"prob1", real_matrix_to_json(c.prob1)},
              {"prob2", real_matrix_to_json(c.prob2)}};
}

inline json to_json(const KnownAnswer& k) {
  if (k.exact()) return json{{"kind", "exactly"}, {"value", k.lo}};
  return json{{"kind", "range"}, {"lo", k.lo}, {"hi", k.hi}};
}

inline json to_json(const BoundsReport& r) {
  return json{{"d", r.d},
              {"alpha_ones", r.alpha_ones},
              {"s_lower", r.s_lower},
              {"three_d_minus_1", 3 * (r.d - 1)},
              {"b_lower", r.b_lower},
              {"f_value", r.f_value},
              {"known_answer", to_json(r.known)}};
}

}  // namespace io
}  // namespace pureic

#endif  // PUREIC_IO_HPP
