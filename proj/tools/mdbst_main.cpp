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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mdbst/io.hpp"
#include "mdbst/oracle.hpp"
#include "mdbst/solver.hpp"

namespace {

constexpr int kExitOptimal = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

void write_output(const std::string& out_path, const nlohmann::json& doc) {
  std::string text = mdbst::io::canonical_dump(doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw mdbst::DomainError("cannot open output file: " + out_path);
    os << text;
  }
}

struct SolveFlags {
  std::string path;
  std::string out;
  bool trace = false;
  bool verify = false;
  bool debug_asserts = false;
  int st_threshold = 20;
  int matroid_threshold = 16;
  int oracle_nodes = 10;
  int oracle_edges = 20;
};

int run_solve(const SolveFlags& flags, bool force_verify) {
  bool verify = force_verify || flags.verify;
  mdbst::Instance instance;
  try {
    instance = mdbst::io::parse_instance_file(flags.path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  mdbst::SolverConfig config;
  config.st_threshold = flags.st_threshold;
  config.matroid_threshold = flags.matroid_threshold;
  config.debug_asserts = flags.debug_asserts;
  config.keep_trace = flags.trace;

  mdbst::SolveResult result;
  try {
    result = mdbst::run(instance, config);
  } catch (const mdbst::InfeasibleError&) {
    write_output(flags.out,
                 mdbst::io::emit_result("infeasible", nullptr, nullptr, false));
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    write_output(flags.out,
                 mdbst::io::emit_result("error", nullptr, nullptr, false));
    return kExitError;
  }

  int code = kExitOptimal;
  if (verify) {
    mdbst::oracle::OracleThresholds thresholds;
    thresholds.max_nodes = flags.oracle_nodes;
    thresholds.max_edges = flags.oracle_edges;
    mdbst::oracle::OracleReport report =
        mdbst::oracle::verify_solution(instance, result, thresholds);
    if (!report.all_pass()) code = kExitError;
    write_output(flags.out, mdbst::io::emit_result("optimal", &result, &report,
                                                   flags.trace));
  } else {
    write_output(flags.out, mdbst::io::emit_result("optimal", &result, nullptr,
                                                   flags.trace));
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimum-cost spanning trees under per-vertex matroidal degree "
      "constraints"};
  app.require_subcommand(1);

  SolveFlags flags;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("instance", flags.path, "Instance file")->required();
    cmd->add_option("--out", flags.out, "Write the result file here");
    cmd->add_flag("--trace", flags.trace, "Record the solve trace");
    cmd->add_flag("--debug-asserts", flags.debug_asserts,
                  "Run every internal invariant check each iteration");
    cmd->add_option("--st-threshold", flags.st_threshold,
                    "Max node count for exact spanning-tree separation");
    cmd->add_option("--matroid-threshold", flags.matroid_threshold,
                    "Max ground size for matroid subset enumeration");
    cmd->add_option("--oracle-threshold", flags.oracle_nodes,
                    "Max vertex count for brute-force verification");
  };

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  add_common(solve);
  solve->add_flag("--verify", flags.verify,
                  "Attach a verification report; nonzero exit on failure");

  CLI::App* verify =
      app.add_subcommand("verify", "Solve and always verify one instance");
  add_common(verify);

  CLI::App* gen =
      app.add_subcommand("gen", "Generate a deterministic random instance");
  std::string kind = "uniform-deg";
  int n = 6;
  int m = 9;
  std::uint64_t seed = 0;
  std::string gen_out;
  gen->add_option("--kind", kind,
                  "Constraint kind: uniform-deg, partition, laminar");
  gen->add_option("-n,--vertices", n, "Vertex count (>= 2)");
  gen->add_option("-m,--edges", m, "Edge count (>= n-1)");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--out", gen_out, "Write the instance file here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(flags, false);
    if (verify->parsed()) return run_solve(flags, true);
    write_output(gen_out, mdbst::io::generate_instance(kind, n, m, seed));
    return kExitOptimal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
