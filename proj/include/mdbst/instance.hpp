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

#ifndef MDBST_INSTANCE_HPP_
#define MDBST_INSTANCE_HPP_

#include <map>
#include <utility>
#include <vector>

#include "mdbst/common.hpp"
#include "mdbst/matroid.hpp"

namespace mdbst {

/// A matroidal degree-bounded MST instance: graph G=(V,E), rational
/// nonnegative edge costs, and one matroid per vertex over its incident
/// edges.
struct Instance {
  struct Edge {
    EdgeId id = 0;
    VertexId u = 0;
    VertexId v = 0;
    Rational cost;
  };

  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::map<VertexId, Matroid> constraints;

  const Edge& edge(EdgeId id) const;
  EdgeSet incident_edges(VertexId v) const;
  std::map<EdgeId, Rational> cost_vector() const;
  bool is_connected() const;

  /// Throws DomainError unless edge ids are unique, endpoints are known
  /// vertices, costs are nonnegative, and every constraint's ground equals
  /// the incident edge set of its vertex.
  void validate() const;
};

}  // namespace mdbst

#endif  // MDBST_INSTANCE_HPP_
