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
#include <doctest.h>

#include "mdbst/multigraph.hpp"

using namespace mdbst;

namespace {

Multigraph triangle() {
  return Multigraph({0, 1, 2}, {{0, {0, 1}}, {1, {0, 2}}, {2, {1, 2}}});
}

}  // namespace

TEST_CASE("delta") {
  Multigraph g = triangle();
  CHECK(g.delta(g.node_of_vertex(0)) == EdgeSet{0, 1});
  Multigraph p({0, 1}, {{0, {0, 1}}, {1, {0, 1}}});
  CHECK(p.delta(p.node_of_vertex(0)) == EdgeSet{0, 1});
  Multigraph iso({0, 1}, {});
  CHECK(iso.delta(iso.node_of_vertex(0)).empty());
  CHECK_THROWS_AS(g.delta(99), DomainError);
}

TEST_CASE("edges_within") {
  Multigraph g = triangle();
  NodeId a = g.node_of_vertex(0), b = g.node_of_vertex(1);
  CHECK(g.edges_within({a, b}) == EdgeSet{0});
  CHECK(g.edges_within(g.nodes()) == EdgeSet{0, 1, 2});
  CHECK(g.edges_within({}).empty());
}

TEST_CASE("contract path edge") {
  Multigraph g({0, 1, 2}, {{0, {0, 1}}, {1, {1, 2}}});
  auto r = g.contract_edge(0);
  CHECK(g.nodes().size() == 2);
  CHECK(r.removed_loops.empty());
  CHECK(g.node_of_vertex(0) == r.merged_node);
  CHECK(g.node_of_vertex(1) == r.merged_node);
  CHECK(g.edge(1).a != g.edge(1).b);  // bc reattached, not a loop
}

TEST_CASE("contract triangle edge leaves a parallel pair") {
  Multigraph g = triangle();
  auto r = g.contract_edge(0);
  CHECK(g.nodes().size() == 2);
  CHECK(r.removed_loops.empty());
  CHECK(g.edges().size() == 2);
  CHECK(g.edge(1).a == g.edge(2).a);
  CHECK(g.edge(1).b == g.edge(2).b);
}

TEST_CASE("contracting one of a parallel pair removes the loop") {
  Multigraph g({0, 1}, {{0, {0, 1}}, {1, {0, 1}}});
  auto r = g.contract_edge(0);
  CHECK(r.removed_loops == EdgeSet{1});
  CHECK(g.edges().empty());
  CHECK(g.nodes().size() == 1);
}

TEST_CASE("delete edge") {
  Multigraph g = triangle();
  g.delete_edge(0);
  CHECK(g.edges().size() == 2);
  CHECK(g.nodes().size() == 3);
  CHECK(g.delta(g.node_of_vertex(0)) == EdgeSet{1});
  CHECK_THROWS_AS(g.delete_edge(0), DomainError);
}

TEST_CASE("induced subgraph") {
  Multigraph g = triangle();
  NodeId a = g.node_of_vertex(0), b = g.node_of_vertex(1);
  Multigraph sub = g.induced_subgraph({a, b});
  CHECK(sub.nodes().size() == 2);
  CHECK(sub.edges().size() == 1);
  Multigraph same = g.induced_subgraph(g.nodes());
  CHECK(same.edges().size() == 3);
  // 4-cycle, drop one node -> path of 2 edges
  Multigraph c4({0, 1, 2, 3},
                {{0, {0, 1}}, {1, {1, 2}}, {2, {2, 3}}, {3, {3, 0}}});
  NodeSet three = {c4.node_of_vertex(0), c4.node_of_vertex(1),
                   c4.node_of_vertex(2)};
  CHECK(c4.induced_subgraph(three).edges().size() == 2);
}

TEST_CASE("vertex map stays a partition through contractions") {
  Multigraph c4({0, 1, 2, 3},
                {{0, {0, 1}}, {1, {1, 2}}, {2, {2, 3}}, {3, {3, 0}}});
  c4.contract_edge(0);
  c4.contract_edge(1);
  std::size_t total = 0;
  for (NodeId w : c4.nodes()) total += c4.vertices_of_node(w).size();
  CHECK(total == 4);
  // degree sum identity
  std::size_t deg = 0;
  for (NodeId w : c4.nodes()) deg += c4.delta(w).size();
  CHECK(deg == 2 * c4.edges().size());
}

TEST_CASE("merged nodes get fresh ids") {
  Multigraph g({0, 1, 2}, {{0, {0, 1}}, {1, {1, 2}}});
  NodeSet before = g.nodes();
  auto r = g.contract_edge(0);
  CHECK(before.count(r.merged_node) == 0);
}
