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

#include "mdbst/instance.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mdbst {

const Instance::Edge& Instance::edge(EdgeId id) const {
  for (const auto& e : edges) {
    if (e.id == id) return e;
  }
  throw DomainError("unknown edge id " + std::to_string(id));
}

EdgeSet Instance::incident_edges(VertexId v) const {
  EdgeSet out;
  for (const auto& e : edges) {
    if (e.u == v || e.v == v) out.push_back(e.id);
  }
  return make_edge_set(std::move(out));
}

std::map<EdgeId, Rational> Instance::cost_vector() const {
  std::map<EdgeId, Rational> c;
  for (const auto& e : edges) c[e.id] = e.cost;
  return c;
}

bool Instance::is_connected() const {
  if (vertices.empty()) return false;
  std::map<VertexId, VertexId> parent;
  for (VertexId v : vertices) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges) parent[find(e.u)] = find(e.v);
  VertexId root = find(vertices.front());
  return std::all_of(vertices.begin(), vertices.end(),
                     [&](VertexId v) { return find(v) == root; });
}

void Instance::validate() const {
  std::set<VertexId> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw DomainError("duplicate vertex ids");
  std::set<EdgeId> ids;
  for (const auto& e : edges) {
    if (!ids.insert(e.id).second) {
      throw DomainError("duplicate edge id " + std::to_string(e.id));
    }
    if (!vs.count(e.u) || !vs.count(e.v)) {
      throw DomainError("edge " + std::to_string(e.id) +
                        " has an unknown endpoint");
    }
    if (e.u == e.v) {
      throw DomainError("edge " + std::to_string(e.id) + " is a self-loop");
    }
    if (e.cost < 0) {
      throw DomainError("edge " + std::to_string(e.id) + " has negative cost");
    }
  }
  for (VertexId v : vertices) {
    auto it = constraints.find(v);
    if (it == constraints.end()) {
      throw DomainError("vertex " + std::to_string(v) + " has no constraint");
    }
    if (it->second.ground() != incident_edges(v)) {
      throw DomainError("constraint ground at vertex " + std::to_string(v) +
                        " does not equal its incident edge set");
    }
  }
  for (const auto& [v, m] : constraints) {
    if (!vs.count(v)) {
      throw DomainError("constraint for unknown vertex " + std::to_string(v));
    }
  }
}

}  // namespace mdbst
