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

#ifndef MDBST_IO_HPP_
#define MDBST_IO_HPP_

#include <cstdint>
#include <string>

#include <json.hpp>

#include "mdbst/instance.hpp"
#include "mdbst/oracle.hpp"
#include "mdbst/solver.hpp"

namespace mdbst {
namespace io {

/// Instance format: {"vertices": [...], "edges": [{"id","u","v","cost"}],
/// "constraints": {"<vertex>": {"kind": "free"|"uniform"|"partition"|
/// "laminar"|"explicit", ...}}}. Costs are integers or "p/q" strings.
/// Throws DomainError with field context on malformed input.
Instance parse_instance_json(const nlohmann::json& j);
Instance parse_instance_file(const std::string& path);

nlohmann::json emit_instance(const Instance& instance);

/// Canonical result document. Keys are sorted and the rendering is fixed, so
/// identical inputs produce byte-identical files.
nlohmann::json emit_result(const std::string& status,
                           const SolveResult* result,
                           const oracle::OracleReport* report,
                           bool include_trace);

nlohmann::json emit_report(const oracle::OracleReport& report);

/// Fixed serialization used for files and stdout.
std::string canonical_dump(const nlohmann::json& j);

/// Deterministic random connected multigraph with per-vertex matroids of the
/// requested kind ("uniform-deg", "partition", "laminar"). Capacities always
/// cover a construction spanning tree, so the instance is feasible; metadata
/// records this. Throws DomainError for unachievable parameters.
nlohmann::json generate_instance(const std::string& kind, int n, int m,
                                 std::uint64_t seed);

}  // namespace io
}  // namespace mdbst

#endif  // MDBST_IO_HPP_
