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

#ifndef MDBST_MULTIGRAPH_HPP_
#define MDBST_MULTIGRAPH_HPP_

#include <map>
#include <set>
#include <vector>

#include "mdbst/common.hpp"
#include "mdbst/matroid.hpp"

namespace mdbst {

using NodeSet = std::set<NodeId>;

/// Contracted working graph H=(W,F). Parallel edges allowed, self-loops are
/// removed eagerly by contract_edge. Node ids are never reused; merging two
/// nodes produces a fresh id.
class Multigraph {
 public:
  struct Edge {
    NodeId a = 0;
    NodeId b = 0;
    EdgeId original = 0;
  };

  struct ContractionResult {
    NodeId merged_node = 0;
    // Parallel edges of the contracted edge that became self-loops and were
    // removed. The caller asserts these carried LP value 0.
    EdgeSet removed_loops;
  };

  Multigraph() = default;
  /// Each vertex becomes its own node; edge endpoints must be known vertices
  /// and edge ids unique. The original edge id equals the edge id.
  Multigraph(const std::vector<VertexId>& vertices,
             const std::map<EdgeId, std::pair<VertexId, VertexId>>& edges);

  const NodeSet& nodes() const { return nodes_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const std::map<VertexId, NodeId>& vertex_map() const { return vertex_map_; }

  bool has_node(NodeId w) const { return nodes_.count(w) > 0; }
  bool has_edge(EdgeId f) const { return edges_.count(f) > 0; }
  const Edge& edge(EdgeId f) const;
  NodeId node_of_vertex(VertexId v) const;
  /// Original vertices currently merged into node w, ascending.
  std::vector<VertexId> vertices_of_node(NodeId w) const;

  EdgeSet delta(NodeId w) const;
  EdgeSet edges_within(const NodeSet& s) const;
  ContractionResult contract_edge(EdgeId f);
  void delete_edge(EdgeId f);
  Multigraph induced_subgraph(const NodeSet& s) const;

 private:
  NodeSet nodes_;
  std::map<EdgeId, Edge> edges_;
  std::map<VertexId, NodeId> vertex_map_;
  NodeId next_node_id_ = 0;
};

}  // namespace mdbst

#endif  // MDBST_MULTIGRAPH_HPP_
