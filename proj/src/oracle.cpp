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

#include "mdbst/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mdbst {
namespace oracle {

bool OracleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& kv) { return kv.second.pass; });
}

bool AdaptationAudit::all_pass() const {
  return disjoint_parts.pass && free_elements.pass && removal_transform.pass &&
         still_feasible.pass;
}

namespace {

struct UnionFind {
  std::map<int, int> parent;
  void add(int v) { parent.emplace(v, v); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  // returns false if already joined
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

long ceil_of(const Rational& q) {
  mpz_class f = q.get_num() / q.get_den();  // nonnegative inputs
  if (f * q.get_den() != q.get_num()) f += 1;
  return f.get_si();
}

std::vector<EdgeSet> independent_sets(const Matroid& m, int limit) {
  const EdgeSet& ground = m.ground();
  int g = static_cast<int>(ground.size());
  if (g > limit) {
    throw ConfigError("independent-set enumeration: ground exceeds limit");
  }
  std::vector<EdgeSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    EdgeSet s;
    for (int i = 0; i < g; ++i) {
      if (mask & (std::uint64_t{1} << i)) s.push_back(ground[i]);
    }
    if (m.is_independent(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<EdgeSet> enumerate_spanning_trees(const Multigraph& g,
                                              const OracleThresholds& t) {
  int nn = static_cast<int>(g.nodes().size());
  int ne = static_cast<int>(g.edges().size());
  if (nn > t.max_nodes || ne > t.max_edges) {
    throw ConfigError("enumerate_spanning_trees: instance exceeds oracle "
                      "thresholds (" +
                      std::to_string(nn) + " nodes, " + std::to_string(ne) +
                      " edges)");
  }
  std::vector<EdgeId> ids;
  for (const auto& [id, e] : g.edges()) ids.push_back(id);
  std::vector<EdgeSet> trees;
  if (nn == 0) return trees;
  int k = nn - 1;
  if (k > ne) return trees;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    UnionFind uf;
    for (NodeId w : g.nodes()) uf.add(w);
    bool acyclic = true;
    for (int i : pick) {
      const auto& e = g.edges().at(ids[i]);
      if (!uf.unite(e.a, e.b)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) {
      // k joins over nn nodes means connected
      EdgeSet tree;
      for (int i : pick) tree.push_back(ids[i]);
      trees.push_back(make_edge_set(std::move(tree)));
    }
    // next combination
    int j = k - 1;
    while (j >= 0 && pick[j] == ne - k + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int l = j + 1; l < k; ++l) pick[l] = pick[l - 1] + 1;
  }
  return trees;
}

namespace {

Multigraph graph_of(const Instance& instance) {
  std::map<EdgeId, std::pair<VertexId, VertexId>> em;
  for (const auto& e : instance.edges) em[e.id] = {e.u, e.v};
  return Multigraph(instance.vertices, em);
}

}  // namespace

std::optional<Rational> brute_force_opt(const Instance& instance,
                                        const OracleThresholds& thresholds) {
  Multigraph g = graph_of(instance);
  std::optional<Rational> best;
  for (const EdgeSet& tree : enumerate_spanning_trees(g, thresholds)) {
    bool feasible = true;
    for (VertexId v : instance.vertices) {
      EdgeSet inc = instance.incident_edges(v);
      EdgeSet at_v;
      std::set_intersection(tree.begin(), tree.end(), inc.begin(), inc.end(),
                            std::back_inserter(at_v));
      if (!instance.constraints.at(v).is_independent(at_v)) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    Rational cost = 0;
    for (EdgeId id : tree) cost += instance.edge(id).cost;
    if (!best || cost < *best) best = cost;
  }
  return best;
}

Rational kruskal_mst_cost(const Instance& instance) {
  std::vector<const Instance::Edge*> edges;
  for (const auto& e : instance.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const Instance::Edge* a, const Instance::Edge* b) {
              return a->cost != b->cost ? a->cost < b->cost : a->id < b->id;
            });
  UnionFind uf;
  for (VertexId v : instance.vertices) uf.add(v);
  Rational cost = 0;
  std::size_t joined = 0;
  for (const auto* e : edges) {
    if (uf.unite(e->u, e->v)) {
      cost += e->cost;
      ++joined;
    }
  }
  if (joined + 1 != instance.vertices.size()) {
    throw DomainError("kruskal_mst_cost: graph is not connected");
  }
  return cost;
}

OracleReport verify_solution(const Instance& instance,
                             const SolveResult& result,
                             const OracleThresholds& thresholds) {
  OracleReport report;
  report.lp_value = result.lp_initial;
  report.tree_cost = result.cost;

  {
    CheckResult c;
    UnionFind uf;
    for (VertexId v : instance.vertices) uf.add(v);
    bool ok = result.tree.size() + 1 == instance.vertices.size();
    for (EdgeId id : result.tree) {
      bool known = std::any_of(instance.edges.begin(), instance.edges.end(),
                               [id](const auto& e) { return e.id == id; });
      if (!known) {
        ok = false;
        c.witness = "unknown edge " + std::to_string(id);
        break;
      }
      const auto& e = instance.edge(id);
      if (!uf.unite(e.u, e.v)) {
        ok = false;
        c.witness = "edge " + std::to_string(id) + " closes a cycle";
        break;
      }
    }
    c.pass = ok;
    if (!ok && c.witness.empty()) c.witness = "edge count is not |V|-1";
    report.checks["tree-structure"] = c;
  }

  {
    CheckResult c;
    Rational cost = 0;
    for (EdgeId id : result.tree) {
      if (std::any_of(instance.edges.begin(), instance.edges.end(),
                      [id](const auto& e) { return e.id == id; })) {
        cost += instance.edge(id).cost;
      }
    }
    c.pass = cost == result.cost;
    if (!c.pass) {
      c.witness = "recomputed " + rational_to_string(cost) + " vs reported " +
                  rational_to_string(result.cost);
    }
    report.checks["cost-consistency"] = c;
  }

  {
    CheckResult c;
    c.pass = result.cost <= result.lp_initial;
    if (!c.pass) c.witness = "tree cost exceeds the initial LP value";
    report.checks["cost-vs-lp"] = c;
  }

  {
    CheckResult bound, consistent;
    for (VertexId v : instance.vertices) {
      EdgeSet at_v;
      EdgeSet inc = instance.incident_edges(v);
      std::set_intersection(result.tree.begin(), result.tree.end(),
                            inc.begin(), inc.end(),
                            std::back_inserter(at_v));
      int violation =
          instance.constraints.at(v).min_removals_to_independent(at_v);
      report.max_violation = std::max(report.max_violation, violation);
      if (violation > 8) {
        bound.pass = false;
        bound.witness = "vertex " + std::to_string(v) + " violated by " +
                        std::to_string(violation);
      }
      auto it = result.violations.find(v);
      if (it == result.violations.end() || it->second != violation) {
        consistent.pass = false;
        consistent.witness =
            "vertex " + std::to_string(v) + ": recomputed " +
            std::to_string(violation) + " vs reported " +
            (it == result.violations.end() ? std::string("missing")
                                           : std::to_string(it->second));
      }
    }
    report.checks["violation-bound"] = bound;
    report.checks["violation-consistency"] = consistent;
  }

  report.integral_opt = brute_force_opt(instance, thresholds);
  if (report.integral_opt) {
    CheckResult c;
    c.pass = result.cost <= *report.integral_opt;
    if (!c.pass) {
      c.witness = "tree cost " + rational_to_string(result.cost) +
                  " exceeds integral OPT " +
                  rational_to_string(*report.integral_opt);
    }
    report.checks["cost-vs-integral-opt"] = c;

    CheckResult relax;
    relax.pass = result.lp_initial <= *report.integral_opt;
    if (!relax.pass) relax.witness = "LP value exceeds integral OPT";
    report.checks["lp-vs-integral-opt"] = relax;
  }

  return report;
}

NodeSet compute_s(const Multigraph& g, const RationalVector& y) {
  NodeSet s;
  for (NodeId w : g.nodes()) {
    EdgeSet d = g.delta(w);
    if (d.size() != 2) continue;
    Rational y1 = 0, y2 = 0;
    if (auto it = y.find(d[0]); it != y.end()) y1 = it->second;
    if (auto it = y.find(d[1]); it != y.end()) y2 = it->second;
    if (y1 != 1 && y2 != 1 && y1 + y2 != 1) s.insert(w);
  }
  return s;
}

CheckResult check_laminar_bounds(const Multigraph& g, const RationalVector& y,
                                 const std::vector<NodeSet>& laminar_family) {
  NodeSet q = compute_q(g, y);
  NodeSet rest;
  for (NodeId w : g.nodes()) {
    if (!q.count(w)) rest.insert(w);
  }
  Multigraph sub = g.induced_subgraph(rest);
  RationalVector y_sub;
  for (const auto& [id, e] : sub.edges()) {
    if (auto it = y.find(id); it != y.end()) y_sub[id] = it->second;
  }
  int s = static_cast<int>(compute_s(sub, y_sub).size());
  int bound = static_cast<int>(g.nodes().size()) - 1 - s / 2;
  CheckResult c;
  c.pass = static_cast<int>(laminar_family.size()) <= bound;
  if (!c.pass) {
    c.witness = "family of size " + std::to_string(laminar_family.size()) +
                " exceeds bound " + std::to_string(bound);
  }
  return c;
}

CheckResult check_chain_bound(const Matroid& n,
                              const RationalVector& x_restricted) {
  const EdgeSet& ground = n.ground();
  int g = static_cast<int>(ground.size());
  if (g > matroid_ground_limit()) {
    throw ConfigError("check_chain_bound: ground exceeds enumeration limit");
  }
  std::vector<std::uint64_t> tight;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
    EdgeSet c;
    Rational sum = 0;
    for (int i = 0; i < g; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        c.push_back(ground[i]);
        if (auto it = x_restricted.find(ground[i]); it != x_restricted.end()) {
          sum += it->second;
        }
      }
    }
    if (sum == n.rank(c)) tight.push_back(mask);
  }
  // longest chain under strict inclusion, sets ordered by popcount
  std::sort(tight.begin(), tight.end(),
            [](std::uint64_t a, std::uint64_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  std::vector<int> dp(tight.size(), 1);
  int longest = tight.empty() ? 0 : 1;
  for (std::size_t i = 0; i < tight.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((tight[j] & tight[i]) == tight[j] && tight[j] != tight[i]) {
        dp[i] = std::max(dp[i], dp[j] + 1);
      }
    }
    longest = std::max(longest, dp[i]);
  }
  Rational mass = 0;
  for (const auto& [e, v] : x_restricted) mass += v;
  CheckResult c;
  c.pass = Rational(longest) <= mass;
  if (!c.pass) {
    c.witness = "chain of length " + std::to_string(longest) +
                " exceeds x(delta) = " + rational_to_string(mass);
  }
  return c;
}

AdaptationAudit audit_adaptation(const AdaptationRecord& record,
                                 int ground_limit) {
  AdaptationAudit audit;

  // item i: still a direct sum over the same vertices, grounds unchanged
  {
    EdgeSet all;
    for (const auto& change : record.part_changes) {
      if (change.before.ground() != change.after.ground()) {
        audit.disjoint_parts.pass = false;
        audit.disjoint_parts.witness =
            "part ground changed at vertex " + std::to_string(change.vertex);
      }
      all.insert(all.end(), change.after.ground().begin(),
                 change.after.ground().end());
    }
    std::size_t total = all.size();
    if (make_edge_set(all).size() != total) {
      audit.disjoint_parts.pass = false;
      audit.disjoint_parts.witness = "part grounds overlap";
    }
  }

  // item ii: removed edges are free, by the definitional check over all
  // independent sets
  for (const auto& change : record.part_changes) {
    for (EdgeId f : change.removed_from_part) {
      for (const EdgeSet& indep : independent_sets(change.after, ground_limit)) {
        EdgeSet with = indep;
        if (!std::binary_search(with.begin(), with.end(), f)) {
          with.push_back(f);
          with = make_edge_set(std::move(with));
        }
        if (!change.after.is_independent(with)) {
          audit.free_elements.pass = false;
          audit.free_elements.witness =
              "edge " + std::to_string(f) + " is not free at vertex " +
              std::to_string(change.vertex);
          break;
        }
      }
      if (!audit.free_elements.pass) break;
    }
    if (!audit.free_elements.pass) break;
  }

  // item iii: every independent set of the new part becomes independent in
  // the old part after removing at most ceil(|U| - x(U)) elements
  {
    long allowance = ceil_of(record.slack);
    for (const auto& change : record.part_changes) {
      for (const EdgeSet& indep : independent_sets(change.after, ground_limit)) {
        int removals = static_cast<int>(indep.size()) -
                       change.before.rank(indep);
        if (removals > allowance) {
          audit.removal_transform.pass = false;
          audit.removal_transform.witness =
              "independent set at vertex " + std::to_string(change.vertex) +
              " needs " + std::to_string(removals) + " removals, allowed " +
              std::to_string(allowance) + " (slack " +
              rational_to_string(record.slack) + ")";
          break;
        }
      }
      if (!audit.removal_transform.pass) break;
    }
  }

  // item iv: the recorded LP point stays inside the adapted matroid polytope
  {
    std::vector<Matroid> after;
    for (const auto& change : record.part_changes) after.push_back(change.after);
    if (!after.empty()) {
      auto cut = separate_matroid(Matroid::direct_sum(after), record.x_at_node);
      if (cut) {
        audit.still_feasible.pass = false;
        audit.still_feasible.witness =
            "violated rank constraint " + cut->tag.describe();
      }
    }
  }

  return audit;
}

}  // namespace oracle
}  // namespace mdbst
