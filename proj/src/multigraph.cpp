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

#include "mdbst/multigraph.hpp"

#include <algorithm>

namespace mdbst {

Multigraph::Multigraph(
    const std::vector<VertexId>& vertices,
    const std::map<EdgeId, std::pair<VertexId, VertexId>>& edges) {
  for (VertexId v : vertices) {
    if (!nodes_.insert(v).second) {
      throw DomainError("duplicate vertex id " + std::to_string(v));
    }
    vertex_map_[v] = v;
    next_node_id_ = std::max(next_node_id_, v + 1);
  }
  for (const auto& [id, uv] : edges) {
    if (!nodes_.count(uv.first) || !nodes_.count(uv.second)) {
      throw DomainError("edge " + std::to_string(id) +
                        " has an unknown endpoint");
    }
    if (uv.first == uv.second) {
      throw DomainError("edge " + std::to_string(id) + " is a self-loop");
    }
    edges_[id] = Edge{uv.first, uv.second, id};
  }
}

const Multigraph::Edge& Multigraph::edge(EdgeId f) const {
  auto it = edges_.find(f);
  if (it == edges_.end()) {
    throw DomainError("unknown edge " + std::to_string(f));
  }
  return it->second;
}

NodeId Multigraph::node_of_vertex(VertexId v) const {
  auto it = vertex_map_.find(v);
  if (it == vertex_map_.end()) {
    throw DomainError("unknown vertex " + std::to_string(v));
  }
  return it->second;
}

std::vector<VertexId> Multigraph::vertices_of_node(NodeId w) const {
  if (!has_node(w)) throw DomainError("unknown node " + std::to_string(w));
  std::vector<VertexId> out;
  for (const auto& [v, n] : vertex_map_) {
    if (n == w) out.push_back(v);
  }
  return out;
}

EdgeSet Multigraph::delta(NodeId w) const {
  if (!has_node(w)) throw DomainError("unknown node " + std::to_string(w));
  EdgeSet out;
  for (const auto& [id, e] : edges_) {
    if (e.a == w || e.b == w) out.push_back(id);
  }
  return out;
}

EdgeSet Multigraph::edges_within(const NodeSet& s) const {
  for (NodeId w : s) {
    if (!has_node(w)) throw DomainError("unknown node " + std::to_string(w));
  }
  EdgeSet out;
  for (const auto& [id, e] : edges_) {
    if (s.count(e.a) && s.count(e.b)) out.push_back(id);
  }
  return out;
}

Multigraph::ContractionResult Multigraph::contract_edge(EdgeId f) {
  const Edge e = edge(f);
  NodeId merged = next_node_id_++;
  nodes_.erase(e.a);
  nodes_.erase(e.b);
  nodes_.insert(merged);
  for (auto& [v, n] : vertex_map_) {
    if (n == e.a || n == e.b) n = merged;
  }
  ContractionResult result;
  result.merged_node = merged;
  edges_.erase(f);
  for (auto it = edges_.begin(); it != edges_.end();) {
    Edge& g = it->second;
    if (g.a == e.a || g.a == e.b) g.a = merged;
    if (g.b == e.a || g.b == e.b) g.b = merged;
    if (g.a == g.b) {
      result.removed_loops.push_back(it->first);
      it = edges_.erase(it);
    } else {
      ++it;
    }
  }
  return result;
}

void Multigraph::delete_edge(EdgeId f) {
  if (edges_.erase(f) == 0) {
    throw DomainError("unknown edge " + std::to_string(f));
  }
}

Multigraph Multigraph::induced_subgraph(const NodeSet& s) const {
  for (NodeId w : s) {
    if (!has_node(w)) throw DomainError("unknown node " + std::to_string(w));
  }
  Multigraph g;
  g.nodes_ = s;
  g.next_node_id_ = next_node_id_;
  for (const auto& [id, e] : edges_) {
    if (s.count(e.a) && s.count(e.b)) g.edges_[id] = e;
  }
  for (const auto& [v, n] : vertex_map_) {
    if (s.count(n)) g.vertex_map_[v] = n;
  }
  return g;
}

}  // namespace mdbst
