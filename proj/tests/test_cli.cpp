// Copyright 2026 The Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  std::string output;
  int exit_code = -1;
};

RunResult run(const std::string& arguments) {
  const std::string command =
      std::string(ARITHMAT_CLI_BINARY) + " " + arguments + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

const char* kTwoPath = "cli_two.json";
const char* kBrokenPath = "cli_broken.json";
const char* kBadPath = "cli_bad.json";
const char* kOtherPath = "cli_other.json";

struct Fixtures {
  Fixtures() {
    write_file(kTwoPath, R"({"kind":"matrix","columns":[[2]]})");
    write_file(kBrokenPath,
               R"({"kind":"explicit","size":1,"rank":{"":0,"0":1},
                   "multiplicity":{"":2,"0":3}})");
    write_file(kBadPath, "{\"kind\":");
    write_file(kOtherPath, R"({"kind":"uniform","rank":1,"size":2})");
  }
};

const Fixtures fixtures;

}  // namespace

TEST_CASE("compute prints the canonical polynomial") {
  const RunResult result =
      run(std::string("compute --input ") + kTwoPath + " --poly arith-tutte");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "1 + x\n");
  CHECK(run(std::string("compute --input ") + kTwoPath + " --poly z").output ==
        "1 + 2*q^-1*v0\n");
}

TEST_CASE("verify exits 0 when the identity holds") {
  const RunResult result =
      run(std::string("verify --input ") + kTwoPath + " --identity char");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("equal: yes") != std::string::npos);
  CHECK(run(std::string("verify --input ") + kTwoPath + " --identity all")
            .exit_code == 0);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run(std::string("verify --input ") + kBadPath + " --identity char")
            .exit_code == 2);
  CHECK(run("verify --input does_not_exist.json").exit_code == 2);
  CHECK(run(std::string("compute --input ") + kTwoPath + " --poly nope")
            .exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  // second factor over a different underlying matroid
  CHECK(run(std::string("verify --input ") + kTwoPath + " --with " +
            kOtherPath + " --identity product-mv")
            .exit_code == 2);
}

TEST_CASE("failed axiom checks exit 1") {
  const RunResult result = run(std::string("axioms --input ") + kBrokenPath);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("FAIL") != std::string::npos);
  CHECK(run(std::string("axioms --input ") + kTwoPath).exit_code == 0);
}

TEST_CASE("corpus exits 0 and is stable for a fixed seed") {
  const RunResult first = run("corpus --seed 42 --max-n 3 --json");
  const RunResult second = run("corpus --seed 42 --max-n 3 --json");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("\"pass\": true") != std::string::npos);
}
