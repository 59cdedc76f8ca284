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

// Command-line front end; talks to the toolkit through the C API only.
// Exit codes: 0 = success and everything checked holds, 1 = some
// identity or axiom fails, 2 = input or usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "arithmat/arithmat.h"

namespace {

constexpr int kExitChecked = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

struct MatroidHandle {
  amt_matroid* value = nullptr;
  ~MatroidHandle() { amt_matroid_free(value); }
};

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { amt_free_string(value); }
};

int load_matroid(const std::string& path, MatroidHandle& handle) {
  std::ifstream stream(path);
  if (!stream) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << stream.rdbuf();
  if (amt_matroid_from_json(text.str().c_str(), &handle.value) != AMT_OK) {
    std::cerr << "error: " << path << ": " << amt_last_error() << "\n";
    return kExitUsage;
  }
  return kExitChecked;
}

void print_report(const char* report) {
  std::string text = report;
  if (text.empty() || text.back() != '\n') text += '\n';
  std::cout << text;
}

int run_compute(const std::string& input, const std::string& poly,
                bool json) {
  MatroidHandle matroid;
  if (int code = load_matroid(input, matroid)) return code;
  OwnedString out;
  if (amt_compute_poly(matroid.value, poly.c_str(), &out.value) != AMT_OK) {
    std::cerr << "error: " << amt_last_error() << "\n";
    return kExitUsage;
  }
  if (json)
    std::cout << "{\"poly\": \"" << poly << "\", \"value\": \"" << out.value
              << "\"}\n";
  else
    std::cout << out.value << "\n";
  return kExitChecked;
}

int run_verify(const std::string& input, const std::string& with,
               const std::string& identity, const std::string& mode,
               bool json) {
  MatroidHandle matroid;
  if (int code = load_matroid(input, matroid)) return code;
  MatroidHandle second;
  if (!with.empty()) {
    if (int code = load_matroid(with, second)) return code;
  }
  OwnedString report;
  int all_equal = 0;
  if (amt_verify(matroid.value, second.value, identity.c_str(), mode.c_str(),
                 json ? 1 : 0, &report.value, &all_equal) != AMT_OK) {
    std::cerr << "error: " << amt_last_error() << "\n";
    return kExitUsage;
  }
  print_report(report.value);
  return all_equal ? kExitChecked : kExitFailedCheck;
}

int run_axioms(const std::string& input, bool json) {
  MatroidHandle matroid;
  if (int code = load_matroid(input, matroid)) return code;
  OwnedString report;
  int ok = 0;
  if (amt_check_axioms(matroid.value, json ? 1 : 0, &report.value, &ok) !=
      AMT_OK) {
    std::cerr << "error: " << amt_last_error() << "\n";
    return kExitUsage;
  }
  print_report(report.value);
  return ok ? kExitChecked : kExitFailedCheck;
}

int run_corpus(std::uint64_t seed, int max_n, bool json) {
  OwnedString report;
  int pass = 0;
  if (amt_corpus_run(seed, max_n, json ? 1 : 0, &report.value, &pass) !=
      AMT_OK) {
    std::cerr << "error: " << amt_last_error() << "\n";
    return kExitUsage;
  }
  print_report(report.value);
  return pass ? kExitChecked : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact polynomials and convolution-identity checks for "
      "multiplicity and arithmetic matroids"};
  app.require_subcommand(1);

  std::string input, with, poly, identity = "all", mode = "auto";
  bool json = false;
  std::uint64_t seed = 42;
  int max_n = 6;

  CLI::App* compute =
      app.add_subcommand("compute", "print a polynomial of the matroid");
  compute->add_option("--input", input, "matroid spec file (JSON)")->required();
  compute->add_option("--poly", poly, "z | sokal-z | tutte | arith-tutte | char")
      ->required();
  compute->add_flag("--json", json, "emit JSON");

  CLI::App* verify =
      app.add_subcommand("verify", "check convolution identities exactly");
  verify->add_option("--input", input, "matroid spec file (JSON)")->required();
  verify->add_option("--with", with,
                     "second multiplicity over the same underlying matroid");
  verify->add_option("--identity", identity,
                     "all | product-mv | product-uv | single-mv | single-uv | "
                     "dupont | backman-lenz | mixed | char | kook");
  verify->add_option("--mode", mode,
                     "auto | symbolic | fast (point checks above 10 elements)");
  verify->add_flag("--json", json, "emit JSON");

  CLI::App* axioms =
      app.add_subcommand("axioms", "check the arithmetic-matroid axioms");
  axioms->add_option("--input", input, "matroid spec file (JSON)")->required();
  axioms->add_flag("--json", json, "emit JSON");

  CLI::App* corpus =
      app.add_subcommand("corpus", "run every identity on the built-in corpus");
  corpus->add_option("--seed", seed, "corpus seed");
  corpus->add_option("--max-n", max_n, "skip entries above this ground size");
  corpus->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  if (compute->parsed()) return run_compute(input, poly, json);
  if (verify->parsed()) return run_verify(input, with, identity, mode, json);
  if (axioms->parsed()) return run_axioms(input, json);
  return run_corpus(seed, max_n, json);
}
