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
// Shared helpers for the test suite: subprocess driver for the CLI and a few
// small numeric conveniences.

#ifndef PUREIC_TESTS_HELPERS_HPP
#define PUREIC_TESTS_HELPERS_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs `exe args` feeding `input` on stdin; captures stdout. stderr is left
// alone so failures show up in the test log.
inline CliResult run_cli(const std::string& exe, const std::string& args,
                         const std::string& input = "") {
  static int counter = 0;
  const std::string dir = "/tmp/pureic_test";
  const int mkdir_rc = std::system(("mkdir -p " + dir).c_str());
  if (mkdir_rc != 0) return {};
  const std::string in_path =
      dir + "/in_" + std::to_string(counter) + ".json";
  const std::string out_path =
      dir + "/out_" + std::to_string(counter) + ".json";
  ++counter;
  {
    std::ofstream f(in_path);
    f << input;
  }
  const std::string cmd =
      exe + " " + args + " < " + in_path + " > " + out_path;
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  std::ifstream f(out_path);
  std::ostringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace testutil

#endif  // PUREIC_TESTS_HELPERS_HPP
