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
// Command-line front door. One subcommand per invocation; JSON in, JSON out.
// Exit codes: 0 success, 2 validation/input error, 3 search failure
// (Inconclusive verdict or no collision found).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pureic/pureic.hpp"

namespace {

using nlohmann::json;
using namespace pureic;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSearchFailed = 3;

// Shared flag values; CLI11 binds per-subcommand options onto these.
struct Options {
  std::string in_path;   // empty = stdin
  std::string out_path;  // empty = stdout
  int dim = 2;
  std::string family = "hermite";
  double alpha = 1.0;
  std::uint64_t seed = 0;
  int restarts = 200;
  double separation = 1e-3;
  int table_max = 0;
  bool d3 = false;
  Tolerances tols;
};

json read_input(const Options& opt) {
  std::string text;
  if (opt.in_path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(opt.in_path);
    if (!f) throw std::invalid_argument("cannot open input file: " + opt.in_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.what() carries the byte offset of the failure.
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

void write_output(const Options& opt, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + opt.out_path);
    f << text;
  }
}

PolyKind parse_family(const std::string& s) {
  return io::family_at(json(s), "--family");
}

int run_jaming(const Options& opt) {
  require(opt.dim >= 2, "--dim: must be at least 2");
  const JamingConfig cfg =
      make_jaming_config(opt.dim, parse_family(opt.family), opt.alpha);
  json out = io::to_json(jaming_bases(cfg));
  out["format"] = 1;
  write_output(opt, out);
  return kExitOk;
}

int run_certify(const Options& opt) {
  const auto bases = io::basis_set_at(read_input(opt));
  Verdict v;
  if (opt.d3) {
    require(bases.size() == 4, "--d3 requires exactly four bases");
    require(bases.front().dim() == 3, "--d3 requires dimension 3");
    v = check_d3_four_bases(bases, opt.tols);
  } else {
    v = certify_pure_ic(bases, opt.restarts, opt.seed, opt.tols);
  }
  json out = io::to_json(v);
  out["format"] = 1;
  write_output(opt, out);
  return v.status == Status::Inconclusive ? kExitSearchFailed : kExitOk;
}

int run_reconstruct(const Options& opt) {
  const io::ProbabilityInput in = io::probability_at(read_input(opt));
  const JamingConfig cfg =
      make_jaming_config(in.data.dim, in.family, in.alpha);
  const Ket psi = reconstruct_pure_state(in.data, cfg, opt.tols);
  const auto bases = jaming_bases(cfg);
  const ProbabilityData check = simulate_probabilities(bases, psi, opt.tols);
  double residual = 0.0;
  for (int l = 0; l < 4; ++l)
    for (int j = 0; j < in.data.dim; ++j)
      residual = std::max(residual,
                          std::abs(check.table[l][j] - in.data.table[l][j]));
  json out{{"format", 1},
           {"dim", in.data.dim},
           {"psi", io::to_json(psi)},
           {"residual", residual}};
  write_output(opt, out);
  return kExitOk;
}

int run_spin1(const Options& opt) {
  const auto dirs = io::directions_at(read_input(opt));
  const SpinCriterionReport report = spin1_verdict(dirs, opt.tols);
  json out = io::to_json(report);
  out["format"] = 1;
  write_output(opt, out);
  return kExitOk;
}

int run_product_collide(const Options& opt) {
  const auto pairs = io::pairs_at(read_input(opt));
  const auto hit = find_entangled_collision(pairs, opt.seed, opt.restarts,
                                            opt.separation, opt.tols);
  json out{{"format", 1}, {"found", hit.has_value()}};
  if (hit) out["collision"] = io::to_json(*hit);
  write_output(opt, out);
  return hit ? kExitOk : kExitSearchFailed;
}

int run_bounds(const Options& opt) {
  json out{{"format", 1}};
  if (opt.table_max > 0) {
    require(opt.table_max >= 2, "--table: must be at least 2");
    json table = json::array();
    for (int d = 2; d <= opt.table_max; ++d)
      table.push_back(io::to_json(make_bounds_report(d)));
    out["table"] = table;
  } else {
    require(opt.dim >= 2, "--dim: must be at least 2");
    const json row = io::to_json(make_bounds_report(opt.dim));
    for (auto it = row.begin(); it != row.end(); ++it) out[it.key()] = it.value();
  }
  write_output(opt, out);
  return kExitOk;
}

int run_counterexample(const Options& opt) {
  const auto bases = io::basis_set_at(read_input(opt));
  require(bases.size() >= 2, "bases: need at least two bases");
  const WitnessPair w =
      two_basis_counterexample(bases[0], bases[1], opt.tols);
  json out{{"format", 1},
           {"psi_plus", io::to_json(w.psi_plus)},
           {"psi_minus", io::to_json(w.psi_minus)},
           {"residual", w.residual}};
  write_output(opt, out);
  return kExitOk;
}

void add_io_flags(CLI::App* sub, Options& opt, bool bases_alias = false) {
  sub->add_option("--in", opt.in_path, "Input JSON file (default: stdin)");
  if (bases_alias)
    sub->add_option("--bases", opt.in_path,
                    "Input basis-set JSON file (alias of --in)")
        ->excludes("--in");
  sub->add_option("--out", opt.out_path, "Output JSON file (default: stdout)");
}

void add_tol_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--tol-zero", opt.tols.tol_zero,
                  "Zero-detection tolerance");
  sub->add_option("--tol-rank", opt.tols.tol_rank,
                  "Relative singular-value cutoff for numerical rank");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pureic: decide whether orthonormal bases determine every pure state"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* jaming = app.add_subcommand(
      "jaming", "Emit the four-basis construction for a dimension");
  jaming->add_option("--dim", opt.dim, "Hilbert-space dimension")->required();
  jaming->add_option("--family", opt.family,
                     "Polynomial family: hermite, legendre or chebyshev");
  jaming->add_option("--alpha", opt.alpha, "Phase in radians");
  add_io_flags(jaming, opt);

  CLI::App* certify = app.add_subcommand(
      "certify", "Certify a basis set as IC / NotIC / Inconclusive");
  certify->add_flag("--d3", opt.d3,
                    "Use the exact four-basis test in dimension 3");
  certify->add_option("--restarts", opt.restarts, "Witness-search restarts");
  certify->add_option("--seed", opt.seed, "Search seed");
  add_tol_flags(certify, opt);
  add_io_flags(certify, opt);

  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "Reconstruct a pure state from four-basis statistics");
  add_tol_flags(reconstruct, opt);
  add_io_flags(reconstruct, opt);

  CLI::App* spin1 = app.add_subcommand(
      "spin1", "Rank-and-cubic criterion for four spin-1 directions");
  add_tol_flags(spin1, opt);
  add_io_flags(spin1, opt);

  CLI::App* collide = app.add_subcommand(
      "product-collide",
      "Find two entangled states that four product bases cannot distinguish");
  collide->add_option("--seed", opt.seed, "Search seed");
  collide->add_option("--restarts", opt.restarts, "Search restarts");
  collide->add_option("--separation", opt.separation,
                      "Required overlap gap: |<omega1, omega2>| <= 1 - separation");
  add_tol_flags(collide, opt);
  add_io_flags(collide, opt);

  CLI::App* bounds = app.add_subcommand(
      "bounds", "Lower bounds on outcomes and bases for pure-state IC");
  bounds->add_option("--dim", opt.dim, "Single dimension to report");
  bounds->add_option("--table", opt.table_max,
                     "Emit a table for dimensions 2..N");
  add_io_flags(bounds, opt);

  CLI::App* counterexample = app.add_subcommand(
      "counterexample",
      "Two states no two given bases can tell apart");
  add_tol_flags(counterexample, opt);
  add_io_flags(counterexample, opt, /*bases_alias=*/true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (jaming->parsed()) return run_jaming(opt);
    if (certify->parsed()) return run_certify(opt);
    if (reconstruct->parsed()) return run_reconstruct(opt);
    if (spin1->parsed()) return run_spin1(opt);
    if (collide->parsed()) return run_product_collide(opt);
    if (bounds->parsed()) return run_bounds(opt);
    if (counterexample->parsed()) return run_counterexample(opt);
  } catch (const InconsistentDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
