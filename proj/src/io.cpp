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

#include "mdbst/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

namespace mdbst {
namespace io {

namespace {

using nlohmann::json;

Rational parse_cost(const json& j, const std::string& context) {
  if (j.is_number_integer()) {
    return Rational(j.get<long>());
  }
  if (j.is_string()) {
    return rational_from_string(j.get<std::string>());
  }
  throw DomainError(context + ": cost must be an integer or a \"p/q\" string");
}

EdgeSet parse_edge_list(const json& j, const std::string& context) {
  if (!j.is_array()) throw DomainError(context + ": expected an edge id list");
  std::vector<EdgeId> ids;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw DomainError(context + ": edge ids must be integers");
    }
    ids.push_back(v.get<EdgeId>());
  }
  return make_edge_set(std::move(ids));
}

std::string subset_key(const EdgeSet& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  return os.str();
}

EdgeSet parse_subset_key(const std::string& key, const std::string& context) {
  EdgeSet out;
  if (key.empty()) return out;
  std::istringstream is(key);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw DomainError(context + ": malformed subset key \"" + key + "\"");
    }
  }
  return make_edge_set(std::move(out));
}

Matroid parse_matroid(const json& j, const EdgeSet& incident,
                      const std::string& context) {
  if (!j.is_object() || !j.contains("kind")) {
    throw DomainError(context + ": constraint must be an object with a kind");
  }
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "free") {
    return Matroid::free_matroid(incident);
  }
  if (kind == "uniform") {
    if (!j.contains("rank")) throw DomainError(context + ": uniform needs rank");
    return Matroid::uniform(incident, j.at("rank").get<int>());
  }
  if (kind == "partition") {
    std::vector<Matroid::PartitionBlock> blocks;
    for (const auto& b : j.at("blocks")) {
      blocks.push_back({parse_edge_list(b.at("edges"), context),
                        b.at("cap").get<int>()});
    }
    Matroid m = Matroid::partition(std::move(blocks));
    if (m.ground() != incident) {
      throw DomainError(context +
                        ": partition blocks do not cover the incident edges");
    }
    return m;
  }
  if (kind == "laminar") {
    std::vector<Matroid::LaminarSet> sets;
    for (const auto& s : j.at("sets")) {
      sets.push_back({parse_edge_list(s.at("edges"), context),
                      s.at("cap").get<int>()});
    }
    return Matroid::laminar(incident, std::move(sets));
  }
  if (kind == "explicit") {
    std::map<EdgeSet, int> table;
    for (const auto& [key, value] : j.at("rank").items()) {
      table[parse_subset_key(key, context)] = value.get<int>();
    }
    return Matroid::explicit_table(incident, std::move(table));
  }
  throw DomainError(context + ": unknown matroid kind \"" + kind + "\"");
}

json emit_matroid(const Matroid& m);

}  // namespace

Instance parse_instance_json(const json& j) {
  if (!j.is_object()) throw DomainError("instance: expected a JSON object");
  Instance inst;
  for (const char* field : {"vertices", "edges", "constraints"}) {
    if (!j.contains(field)) {
      throw DomainError(std::string("instance: missing field \"") + field +
                        "\"");
    }
  }
  for (const auto& v : j.at("vertices")) {
    inst.vertices.push_back(v.get<VertexId>());
  }
  for (const auto& e : j.at("edges")) {
    std::string ctx = "edge " + (e.contains("id") ? e.at("id").dump() : "?");
    for (const char* field : {"id", "u", "v", "cost"}) {
      if (!e.contains(field)) {
        throw DomainError(ctx + ": missing field \"" + field + "\"");
      }
    }
    inst.edges.push_back({e.at("id").get<EdgeId>(), e.at("u").get<VertexId>(),
                          e.at("v").get<VertexId>(),
                          parse_cost(e.at("cost"), ctx)});
  }
  for (const auto& [key, value] : j.at("constraints").items()) {
    VertexId v;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw DomainError("constraints: malformed vertex key \"" + key + "\"");
    }
    inst.constraints.emplace(
        v, parse_matroid(value, inst.incident_edges(v),
                         "constraint at vertex " + key));
  }
  inst.validate();
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DomainError("instance file " + path + ": " + e.what());
  }
  return parse_instance_json(j);
}

namespace {

// Matroids round-trip through their construction parameters. Kinds built by
// the solver (union, contraction, ...) never appear in instance files, so
// emission only handles the file kinds; everything else is rendered as an
// explicit table.
json emit_matroid(const Matroid& m) {
  std::string desc = m.describe();
  json j;
  if (desc.rfind("free", 0) == 0) {
    j["kind"] = "free";
    return j;
  }
  if (desc.rfind("uniform", 0) == 0) {
    j["kind"] = "uniform";
    j["rank"] = m.rank_full();
    return j;
  }
  // fallback: full rank table
  j["kind"] = "explicit";
  json table = json::object();
  const EdgeSet& g = m.ground();
  int n = static_cast<int>(g.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    EdgeSet s;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) s.push_back(g[i]);
    }
    table[subset_key(s)] = m.rank(s);
  }
  j["rank"] = table;
  return j;
}

}  // namespace

json emit_instance(const Instance& instance) {
  json j;
  j["vertices"] = instance.vertices;
  json edges = json::array();
  for (const auto& e : instance.edges) {
    edges.push_back({{"id", e.id},
                     {"u", e.u},
                     {"v", e.v},
                     {"cost", rational_to_string(e.cost)}});
  }
  j["edges"] = edges;
  json cons = json::object();
  for (const auto& [v, m] : instance.constraints) {
    cons[std::to_string(v)] = emit_matroid(m);
  }
  j["constraints"] = cons;
  return j;
}

json emit_report(const oracle::OracleReport& report) {
  json j;
  j["lp_value"] = rational_to_string(report.lp_value);
  j["integral_opt"] = report.integral_opt
                          ? json(rational_to_string(*report.integral_opt))
                          : json(nullptr);
  j["tree_cost"] = rational_to_string(report.tree_cost);
  j["max_violation"] = report.max_violation;
  json checks = json::object();
  for (const auto& [name, check] : report.checks) {
    checks[name] = {{"pass", check.pass}, {"witness", check.witness}};
  }
  j["checks"] = checks;
  j["all_pass"] = report.all_pass();
  return j;
}

namespace {

json emit_trace(const std::vector<TraceEvent>& trace) {
  json out = json::array();
  for (const auto& ev : trace) {
    json e;
    e["iteration"] = ev.iteration;
    switch (ev.kind) {
      case TraceEvent::Kind::kLpSolve:
        e["type"] = "lp-solve";
        e["objective"] = rational_to_string(ev.objective);
        e["support"] = ev.support_size;
        break;
      case TraceEvent::Kind::kDeleteEdge:
        e["type"] = "delete";
        e["edge"] = ev.edge;
        break;
      case TraceEvent::Kind::kContractEdge:
        e["type"] = "contract";
        e["edge"] = ev.edge;
        break;
      case TraceEvent::Kind::kFixSet:
        e["type"] = "fix-set";
        e["vertices"] = ev.vertex_set;
        break;
      case TraceEvent::Kind::kAdaptation:
        e["type"] = "adaptation";
        e["detail"] = ev.detail;
        break;
      case TraceEvent::Kind::kCut:
        e["type"] = "cut";
        e["detail"] = ev.detail;
        break;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

json emit_result(const std::string& status, const SolveResult* result,
                 const oracle::OracleReport* report, bool include_trace) {
  json j;
  j["status"] = status;
  if (result != nullptr) {
    j["tree"] = result->tree;
    j["cost"] = rational_to_string(result->cost);
    j["lp_initial"] = rational_to_string(result->lp_initial);
    json violations = json::object();
    for (const auto& [v, count] : result->violations) {
      violations[std::to_string(v)] = count;
    }
    j["violations"] = violations;
    j["iterations"] = result->iterations;
    if (!result->warnings.empty()) j["warnings"] = result->warnings;
    if (include_trace) j["trace"] = emit_trace(result->trace);
  }
  if (report != nullptr) {
    j["verification"] = emit_report(*report);
  }
  return j;
}

std::string canonical_dump(const json& j) {
  return j.dump(2) + "\n";
}

namespace {

// splitmix64: portable deterministic generator for instance synthesis
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % n); }

 private:
  std::uint64_t state_;
};

}  // namespace

json generate_instance(const std::string& kind, int n, int m,
                       std::uint64_t seed) {
  if (kind != "uniform-deg" && kind != "partition" && kind != "laminar") {
    throw DomainError("generate_instance: unknown kind \"" + kind + "\"");
  }
  if (n < 2) throw DomainError("generate_instance: need at least 2 vertices");
  if (m < n - 1) {
    throw DomainError("generate_instance: need at least n-1 edges");
  }
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 1);

  struct GenEdge {
    int u, v;
    bool in_tree;
  };
  std::vector<GenEdge> edges;
  // For non-uniform kinds with enough edges, build a hub with an odd rim
  // cycle: the spokes form the construction tree and each rim vertex's two
  // cycle edges share one tight capacity, so the relaxation is drawn toward
  // half-integral rim values. Otherwise: random tree plus extra edges.
  bool hub_rim = kind != "uniform-deg" && n % 2 == 0 && n >= 4 &&
                 m >= 2 * (n - 1);
  // rim_pair[v] = the two rim-cycle edge ids at rim vertex v
  std::map<int, EdgeSet> rim_pair;
  if (hub_rim) {
    for (int v = 1; v < n; ++v) edges.push_back({0, v, true});  // spokes
    for (int v = 1; v < n; ++v) {
      int next = v == n - 1 ? 1 : v + 1;
      edges.push_back({std::min(v, next), std::max(v, next), false});
      int id = static_cast<int>(edges.size()) - 1;
      rim_pair[v].push_back(id);
      rim_pair[next].push_back(id);
    }
    for (int i = 2 * (n - 1); i < m; ++i) {
      int u = rng.below(n);
      int v = rng.below(n - 1);
      if (v >= u) ++v;
      edges.push_back({std::min(u, v), std::max(u, v), false});
    }
    for (auto& [v, pair] : rim_pair) pair = make_edge_set(std::move(pair));
  } else {
    // random construction spanning tree, then extra edges
    for (int v = 1; v < n; ++v) edges.push_back({rng.below(v), v, true});
    for (int i = n - 1; i < m; ++i) {
      int u = rng.below(n);
      int v = rng.below(n - 1);
      if (v >= u) ++v;
      edges.push_back({std::min(u, v), std::max(u, v), false});
    }
  }

  json j;
  std::vector<int> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  j["vertices"] = vertices;
  json edge_list = json::array();
  for (int i = 0; i < m; ++i) {
    // construction-tree edges cost more than the extras, so the relaxation
    // is pulled toward cycle edges the capacities cannot all admit
    int num = edges[i].in_tree ? 8 + rng.below(12) : 1 + rng.below(6);
    int den = 1 + rng.below(4);
    Rational cost(num, den);
    cost.canonicalize();
    edge_list.push_back({{"id", i},
                         {"u", edges[i].u},
                         {"v", edges[i].v},
                         {"cost", rational_to_string(cost)}});
  }
  j["edges"] = edge_list;

  auto incident = [&](int v) {
    EdgeSet out;
    for (int i = 0; i < m; ++i) {
      if (edges[i].u == v || edges[i].v == v) out.push_back(i);
    }
    return out;
  };
  auto tree_count = [&](const EdgeSet& s) {
    int c = 0;
    for (EdgeId e : s) c += edges[e].in_tree ? 1 : 0;
    return c;
  };

  json cons = json::object();
  for (int v = 0; v < n; ++v) {
    EdgeSet inc = incident(v);
    json c;
    if (kind == "uniform-deg") {
      c["kind"] = "uniform";
      c["rank"] = tree_count(inc) + rng.below(2);
    } else if (kind == "partition") {
      c["kind"] = "partition";
      json bl = json::array();
      if (rim_pair.count(v)) {
        // the two rim edges share one tight slot; the rest covers the tree
        EdgeSet rest;
        for (EdgeId e : inc) {
          if (std::find(rim_pair[v].begin(), rim_pair[v].end(), e) ==
              rim_pair[v].end()) {
            rest.push_back(e);
          }
        }
        bl.push_back({{"edges", rim_pair[v]}, {"cap", 1}});
        bl.push_back({{"edges", rest}, {"cap", tree_count(rest) + rng.below(2)}});
      } else {
        // split incident edges into up to 3 blocks; every block's capacity
        // covers its construction-tree edges
        int nblocks = std::min<int>(1 + rng.below(3), inc.size());
        std::vector<EdgeSet> blocks(nblocks);
        for (std::size_t i = 0; i < inc.size(); ++i) {
          blocks[i < static_cast<std::size_t>(nblocks)
                     ? i
                     : static_cast<std::size_t>(rng.below(nblocks))]
              .push_back(inc[i]);
        }
        for (auto& b : blocks) {
          b = make_edge_set(std::move(b));
          bl.push_back({{"edges", b}, {"cap", tree_count(b) + rng.below(2)}});
        }
      }
      c["blocks"] = bl;
    } else {  // laminar
      c["kind"] = "laminar";
      json sets = json::array();
      if (rim_pair.count(v)) {
        sets.push_back({{"edges", rim_pair[v]}, {"cap", 1}});
        sets.push_back(
            {{"edges", inc}, {"cap", tree_count(inc) + 1 + rng.below(2)}});
      } else {
        if (inc.size() >= 2) {
          EdgeSet inner(inc.begin(), inc.begin() + (inc.size() + 1) / 2);
          sets.push_back(
              {{"edges", inner}, {"cap", tree_count(inner) + rng.below(2)}});
        }
        sets.push_back(
            {{"edges", inc}, {"cap", tree_count(inc) + rng.below(2)}});
      }
      c["sets"] = sets;
    }
    cons[std::to_string(v)] = c;
  }
  j["constraints"] = cons;
  j["metadata"] = {{"kind", kind},
                   {"n", n},
                   {"m", m},
                   {"seed", seed},
                   {"feasible_by_construction", true},
                   {"feasibility_probability", "1"}};
  return j;
}

}  // namespace io
}  // namespace mdbst
