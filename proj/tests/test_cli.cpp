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
// End-to-end exercises of the installed command-line binary.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pureic/pureic.hpp"

using namespace pureic;
using nlohmann::json;
using testutil::run_cli;

namespace {
const std::string kCli = PUREIC_CLI_PATH;
}

TEST_CASE("cli: jaming output feeds certify --d3 and yields IC") {
  const auto jam = run_cli(kCli, "jaming --dim 3 --family hermite --alpha 1.0");
  REQUIRE(jam.exit_code == 0);
  const json bases = json::parse(jam.out);
  CHECK(bases["format"] == 1);
  REQUIRE(bases["bases"].size() == 4);

  const auto cert = run_cli(kCli, "certify --d3", jam.out);
  REQUIRE(cert.exit_code == 0);
  const json verdict = json::parse(cert.out);
  CHECK(verdict["status"] == "IC");
}

TEST_CASE("cli: certify without --d3 detects two-basis insufficiency") {
  Rng rng(701);
  const std::vector<OrthonormalBasis> pair = {random_basis(4, rng),
                                              random_basis(4, rng)};
  const auto res = run_cli(kCli, "certify", io::to_json(pair).dump());
  REQUIRE(res.exit_code == 0);
  const json verdict = json::parse(res.out);
  CHECK(verdict["status"] == "NotIC");
  CHECK(verdict["witness"]["residual"].get<double>() < 1e-10);
}

TEST_CASE("cli: counterexample accepts --bases file input") {
  Rng rng(709);
  const std::vector<OrthonormalBasis> pair = {random_basis(5, rng),
                                              random_basis(5, rng)};
  const std::string path = "/tmp/pureic_test/two_random_bases.json";
  REQUIRE(std::system("mkdir -p /tmp/pureic_test") == 0);
  {
    std::ofstream f(path);
    f << io::to_json(pair).dump();
  }
  const auto res = run_cli(kCli, "counterexample --bases " + path);
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.out);
  CHECK(out["format"] == 1);
  CHECK(out["residual"].get<double>() < 1e-10);

  const Ket plus = io::ket_at(out["psi_plus"], "psi_plus");
  const Ket minus = io::ket_at(out["psi_minus"], "psi_minus");
  double gap = 0.0;
  for (const auto& b : pair)
    for (int j = 0; j < 5; ++j) {
      const Ket v = b.vec(j);
      gap = std::max(gap,
                     std::abs(std::norm(v.dot(plus)) - std::norm(v.dot(minus))));
    }
  CHECK(gap < 1e-10);
}

TEST_CASE("cli: reconstruct round-trips simulated statistics") {
  const JamingConfig cfg = make_jaming_config(4, PolyKind::hermite, 1.0);
  Rng rng(719);
  const Ket psi = random_pure_state(4, rng);
  const ProbabilityData data =
      simulate_probabilities(jaming_bases(cfg), psi);
  const json in = io::to_json(data, cfg.alpha, cfg.family.kind);

  const auto res = run_cli(kCli, "reconstruct", in.dump());
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.out);
  CHECK(out["residual"].get<double>() < 1e-8);
  const Ket rec = io::ket_at(out["psi"], "psi");
  CHECK(std::norm(rec.dot(psi)) >= 1.0 - 1e-8);
}

TEST_CASE("cli: spin1 reports IC for the reference quadruple") {
  const json in = {{"directions",
                    {{0, 0, 1},
                     {1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0},
                     {1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0)},
                     {0, std::sqrt(3.0) / 2.0, 0.5}}}};
  const auto res = run_cli(kCli, "spin1", in.dump());
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.out);
  CHECK(out["rank_M"] == 4);
  CHECK(out["verdict"]["status"] == "IC");
  CHECK(out.contains("kernel_vector"));
}

TEST_CASE("cli: bounds table has the documented shape") {
  const auto res = run_cli(kCli, "bounds --table 7");
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.out);
  REQUIRE(out["table"].size() == 6);
  CHECK(out["table"][0]["d"] == 2);
  CHECK(out["table"][5]["s_lower"] == 22);

  const auto one = run_cli(kCli, "bounds --dim 9");
  REQUIRE(one.exit_code == 0);
  CHECK(json::parse(one.out)["s_lower"] == 31);
}

TEST_CASE("cli: malformed JSON exits 2 with no stdout payload") {
  const auto res = run_cli(kCli, "certify", "{\"bases\": [");
  CHECK(res.exit_code == 2);
  CHECK(res.out.empty());

  const auto res2 = run_cli(kCli, "spin1", "{\"directions\": [[0,0,1]]}");
  CHECK(res2.exit_code == 2);
  CHECK(res2.out.empty());
}

TEST_CASE("cli: dimension mismatch in a basis set exits 2") {
  Rng rng(727);
  const std::vector<OrthonormalBasis> mixed = {random_basis(2, rng),
                                               random_basis(3, rng)};
  const auto res = run_cli(kCli, "certify", io::to_json(mixed).dump());
  CHECK(res.exit_code == 2);
  CHECK(res.out.empty());
}

TEST_CASE("cli: identical argv and seed produce byte-identical output") {
  Rng rng(733);
  const std::vector<OrthonormalBasis> bases = {
      random_basis(3, rng), random_basis(3, rng), random_basis(3, rng)};
  const std::string in = io::to_json(bases).dump();
  const auto a = run_cli(kCli, "certify --seed 11 --restarts 100", in);
  const auto b = run_cli(kCli, "certify --seed 11 --restarts 100", in);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["status"] == "NotIC");
}

TEST_CASE("cli: product-collide emits a collision certificate") {
  const json in = {{"pairs",
                    {{{"m", {0, 0, 1}}, {"n", {0, 0, 1}}},
                     {{"m", {1, 0, 0}}, {"n", {0, 1, 0}}},
                     {{"m", {0, 1, 0}}, {"n", {1, 0, 0}}},
                     {{"m", {0.6, 0.8, 0}}, {"n", {0, 0.6, 0.8}}}}}};
  const auto res = run_cli(kCli, "product-collide --seed 2 --restarts 200",
                           in.dump());
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.out);
  REQUIRE(out["found"] == true);
  CHECK(out["collision"]["state_overlap"].get<double>() <= 1.0 - 1e-3 + 1e-9);
  CHECK(out["collision"]["prob1"].size() == 4);
}
