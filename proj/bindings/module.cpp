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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>

#include "mdbst/io.hpp"
#include "mdbst/oracle.hpp"
#include "mdbst/solver.hpp"

namespace py = pybind11;
using namespace mdbst;

namespace {

// The python surface trades in canonical JSON strings; structured access
// happens on the python side via json.loads.
std::string solve_json(const std::string& instance_json, bool verify,
                       bool trace, bool debug_asserts) {
  Instance inst =
      io::parse_instance_json(nlohmann::json::parse(instance_json));
  SolverConfig cfg;
  cfg.keep_trace = trace;
  cfg.debug_asserts = debug_asserts;
  try {
    SolveResult r = run(inst, cfg);
    if (verify) {
      oracle::OracleReport rep = oracle::verify_solution(inst, r);
      return io::canonical_dump(io::emit_result("optimal", &r, &rep, trace));
    }
    return io::canonical_dump(io::emit_result("optimal", &r, nullptr, trace));
  } catch (const InfeasibleError&) {
    return io::canonical_dump(
        io::emit_result("infeasible", nullptr, nullptr, false));
  }
}

std::string generate_json(const std::string& kind, int n, int m,
                          std::uint64_t seed) {
  return io::canonical_dump(io::generate_instance(kind, n, m, seed));
}

std::string brute_force_opt_json(const std::string& instance_json) {
  Instance inst =
      io::parse_instance_json(nlohmann::json::parse(instance_json));
  auto opt = oracle::brute_force_opt(inst);
  return opt ? rational_to_string(*opt) : std::string();
}

}  // namespace

PYBIND11_MODULE(_mdbst, m) {
  m.doc() =
      "Minimum-cost spanning trees under per-vertex matroidal degree "
      "constraints";
  m.def("solve", &solve_json, py::arg("instance_json"),
        py::arg("verify") = false, py::arg("trace") = false,
        py::arg("debug_asserts") = false,
        "Solve an instance given as a JSON string; returns the canonical "
        "result document as a JSON string.");
  m.def("generate", &generate_json, py::arg("kind"), py::arg("n"),
        py::arg("m"), py::arg("seed"),
        "Deterministically generate a feasible instance as a JSON string.");
  m.def("brute_force_opt", &brute_force_opt_json, py::arg("instance_json"),
        "Exact optimum over all constraint-respecting spanning trees as a "
        "rational string, or '' if infeasible.");

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_RuntimeError);
}
