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

#include "mdbst/solver.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "mdbst/oracle.hpp"

namespace mdbst {

Matroid parts_direct_sum(const ConstraintParts& parts) {
  std::vector<Matroid> ms;
  ms.reserve(parts.size());
  for (const auto& [v, m] : parts) ms.push_back(m);
  return Matroid::direct_sum(std::move(ms));
}

bool edge_contained(const ConstraintParts& parts, EdgeId f) {
  for (const auto& [v, m] : parts) {
    if (m.in_ground(f)) return !m.is_free_element(f);
  }
  throw DomainError("edge " + std::to_string(f) +
                    " is in no part of the decomposition");
}

EdgeClassification classify_edges(
    const Multigraph& g, const std::map<NodeId, ConstraintParts>& parts) {
  EdgeClassification c;
  for (const auto& [id, e] : g.edges()) {
    int count = (edge_contained(parts.at(e.a), id) ? 1 : 0) +
                (edge_contained(parts.at(e.b), id) ? 1 : 0);
    (count == 0 ? c.f0 : count == 1 ? c.f1 : c.f2).push_back(id);
  }
  return c;
}

NodeSet compute_q_with_order(const Multigraph& g, const RationalVector& x,
                             const std::vector<NodeId>& order) {
  for (const auto& [id, e] : g.edges()) {
    auto it = x.find(id);
    if (it != x.end() && it->second == 1) {
      throw DomainError("compute_q: graph still contains a 1-edge");
    }
  }
  NodeSet q;
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId w : order) {
      if (q.count(w)) continue;
      Rational mass = 0;
      for (const auto& [id, e] : g.edges()) {
        if (q.count(e.a) || q.count(e.b)) continue;
        if (e.a != w && e.b != w) continue;
        auto it = x.find(id);
        if (it != x.end()) mass += it->second;
      }
      if (mass == 1) {
        q.insert(w);
        changed = true;
        break;
      }
    }
  }
  return q;
}

NodeSet compute_q(const Multigraph& g, const RationalVector& x) {
  std::vector<NodeId> order(g.nodes().begin(), g.nodes().end());
  return compute_q_with_order(g, x, order);
}

namespace {

long floor_of(const Rational& q) {
  // nonnegative arguments only
  mpz_class f = q.get_num() / q.get_den();
  return f.get_si();
}

EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::string format_edge_set(const EdgeSet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << "}";
  return os.str();
}

}  // namespace

ConstraintParts remove_edges_from_degree_constraint(
    const ConstraintParts& parts, const EdgeSet& u, const RationalVector& x,
    std::vector<AdaptationRecord::PartChange>* changes) {
  // precondition: x restricted to the full ground is in the matroid polytope
  {
    RationalVector restricted;
    Rational zero = 0;
    for (const auto& [v, part] : parts) {
      for (EdgeId f : part.ground()) {
        auto it = x.find(f);
        restricted[f] = it == x.end() ? zero : it->second;
      }
    }
    if (separate_matroid(parts_direct_sum(parts), restricted)) {
      throw DomainError(
          "remove_edges_from_degree_constraint: x is outside the current "
          "matroid polytope");
    }
  }
  ConstraintParts result;
  for (const auto& [v, part] : parts) {
    const EdgeSet& ground = part.ground();
    EdgeSet u_i = set_intersection(ground, u);
    if (u_i.empty()) {
      result.emplace(v, part);
      if (changes) {
        changes->push_back({v, part, part, {}, false});
      }
      continue;
    }
    Rational x_u = vector_sum(x, u_i);
    int m1_rank = static_cast<int>(u_i.size()) - floor_of(x_u);
    Matroid m1 = Matroid::loop_extension(Matroid::uniform(u_i, m1_rank),
                                         set_difference(ground, u_i));
    Matroid m2 = Matroid::matroid_union(m1, part);
    Matroid m3 = Matroid::contraction(m2, u_i);
    Matroid new_part =
        Matroid::direct_sum({m3, Matroid::free_matroid(u_i)});
    bool lost = std::any_of(u_i.begin(), u_i.end(), [&part](EdgeId f) {
      return !part.is_free_element(f);
    });
    if (changes) {
      changes->push_back({v, part, new_part, u_i, lost});
    }
    result.emplace(v, new_part);
  }
  return result;
}

namespace {

struct LoopState {
  Multigraph h;
  std::map<NodeId, ConstraintParts> parts;
  std::vector<std::set<VertexId>> fixed_orig;
  EdgeSet chosen;
  Rational chosen_cost = 0;
  std::map<VertexId, std::pair<int, int>> counters;  // (type A, type B)
};

void restrict_part_grounds(std::map<NodeId, ConstraintParts>& parts, NodeId w,
                           EdgeId removed) {
  auto it = parts.find(w);
  if (it == parts.end()) return;
  for (auto& [v, m] : it->second) {
    if (m.in_ground(removed)) {
      EdgeSet kept = m.ground();
      kept.erase(std::find(kept.begin(), kept.end(), removed));
      m = Matroid::restriction(m, kept);
      return;
    }
  }
}

}  // namespace

SolveResult run(const Instance& instance, const SolverConfig& config) {
  instance.validate();
  if (instance.vertices.empty()) throw DomainError("instance has no vertices");
  if (!instance.is_connected()) {
    throw DomainError("instance graph is not connected");
  }
  set_matroid_ground_limit(config.matroid_threshold);

  LoopState st;
  {
    std::map<EdgeId, std::pair<VertexId, VertexId>> em;
    for (const auto& e : instance.edges) em[e.id] = {e.u, e.v};
    st.h = Multigraph(instance.vertices, em);
  }
  for (VertexId v : instance.vertices) {
    st.parts[st.h.node_of_vertex(v)] = {{v, instance.constraints.at(v)}};
  }
  const auto costs = instance.cost_vector();

  SolveResult res;
  NodeSet prev_q;
  bool have_prev_total = false;
  Rational prev_total = 0;
  const int iteration_cap = 3 * static_cast<int>(instance.vertices.size()) +
                            static_cast<int>(instance.edges.size()) + 10;

  auto add_trace = [&](TraceEvent ev) {
    if (config.keep_trace) res.trace.push_back(std::move(ev));
  };

  for (int iter = 0;; ++iter) {
    if (st.h.nodes().size() <= 1) break;
    if (iter > iteration_cap) {
      throw InternalInvariantError("iteration cap exceeded without reaching a "
                                   "single node");
    }
    res.iterations = iter + 1;

    std::map<NodeId, Matroid> node_constraints;
    for (const auto& [w, parts] : st.parts) {
      Matroid nw = parts_direct_sum(parts);
      if (nw.ground() != st.h.delta(w)) {
        throw InternalInvariantError(
            "decomposition ground at node " + std::to_string(w) +
            " diverged from its incident edges");
      }
      node_constraints.emplace(w, std::move(nw));
    }

    std::vector<NodeSet> fixed_nodesets;
    {
      std::set<NodeSet> seen;
      for (const auto& s : st.fixed_orig) {
        NodeSet mapped;
        for (VertexId v : s) mapped.insert(st.h.node_of_vertex(v));
        if (mapped.size() >= 2 && seen.insert(mapped).second) {
          fixed_nodesets.push_back(std::move(mapped));
        }
      }
    }

    Lp1Options opts;
    opts.st_threshold = config.st_threshold;
    if (config.keep_trace) {
      opts.on_cut = [&](const LinearConstraint& cut) {
        TraceEvent ev;
        ev.kind = TraceEvent::Kind::kCut;
        ev.iteration = iter;
        ev.detail = cut.tag.describe();
        res.trace.push_back(std::move(ev));
      };
    }
    BasicSolution sol =
        solve_lp1(st.h, node_constraints, costs, fixed_nodesets, opts);
    if (!sol.vertex_certificate) {
      throw InternalInvariantError("LP returned a non-vertex solution");
    }
    {
      TraceEvent ev;
      ev.kind = TraceEvent::Kind::kLpSolve;
      ev.iteration = iter;
      ev.objective = sol.objective;
      ev.support_size = static_cast<int>(sol.support().size());
      add_trace(std::move(ev));
    }
    if (iter == 0) res.lp_initial = sol.objective;
    Rational total = st.chosen_cost + sol.objective;
    if (have_prev_total && total > prev_total) {
      throw InternalInvariantError("LP value increased across iterations");
    }
    prev_total = total;
    have_prev_total = true;

    bool progress = false;

    // step a (second half): delete 0-edges
    for (const auto& [e, v] : sol.x) {
      if (v != 0 || !st.h.has_edge(e)) continue;
      const auto& edge = st.h.edge(e);
      NodeId a = edge.a, b = edge.b;
      st.h.delete_edge(e);
      restrict_part_grounds(st.parts, a, e);
      restrict_part_grounds(st.parts, b, e);
      progress = true;
      TraceEvent ev;
      ev.kind = TraceEvent::Kind::kDeleteEdge;
      ev.iteration = iter;
      ev.edge = e;
      add_trace(std::move(ev));
    }

    if (config.debug_asserts) {
      // support sparsity: |F| <= 3(|W|-1)
      if (static_cast<int>(st.h.edges().size()) >
          3 * (static_cast<int>(st.h.nodes().size()) - 1)) {
        throw InternalInvariantError(
            "support exceeds 3(|W|-1) after deleting 0-edges");
      }
      for (const auto& [w, parts] : st.parts) {
        RationalVector xw;
        for (EdgeId f : st.h.delta(w)) xw[f] = sol.x.at(f);
        auto chain = oracle::check_chain_bound(parts_direct_sum(parts), xw);
        if (!chain.pass) {
          throw InternalInvariantError("tight-chain bound failed at node " +
                                       std::to_string(w) + ": " +
                                       chain.witness);
        }
      }
    }

    // step b: contract 1-edges
    for (;;) {
      EdgeId f = -1;
      for (const auto& [id, e] : st.h.edges()) {
        auto it = sol.x.find(id);
        if (it != sol.x.end() && it->second == 1) {
          f = id;
          break;
        }
      }
      if (f < 0) break;
      const auto edge = st.h.edge(f);
      ConstraintParts merged;
      for (NodeId side : {edge.a, edge.b}) {
        for (const auto& [v, part] : st.parts.at(side)) {
          merged.emplace(v, part.in_ground(f)
                                ? Matroid::contraction(part, {f})
                                : part);
        }
      }
      auto cres = st.h.contract_edge(f);
      // 0-edges are already gone, so no positive parallel edge can have
      // turned into a self-loop
      for (EdgeId loop : cres.removed_loops) {
        auto it = sol.x.find(loop);
        if (it != sol.x.end() && it->second != 0) {
          throw InternalInvariantError(
              "contraction removed a self-loop with positive LP value");
        }
        for (auto& [v, part] : merged) {
          if (part.in_ground(loop)) {
            EdgeSet kept = part.ground();
            kept.erase(std::find(kept.begin(), kept.end(), loop));
            part = Matroid::restriction(part, kept);
          }
        }
      }
      st.parts.erase(edge.a);
      st.parts.erase(edge.b);
      st.parts.emplace(cres.merged_node, std::move(merged));
      st.chosen.push_back(edge.original);
      st.chosen_cost += costs.at(edge.original);
      progress = true;
      TraceEvent ev;
      ev.kind = TraceEvent::Kind::kContractEdge;
      ev.iteration = iter;
      ev.edge = edge.original;
      add_trace(std::move(ev));
    }
    if (st.h.nodes().size() <= 1) break;

    RationalVector xcur;
    for (const auto& [id, e] : st.h.edges()) xcur[id] = sol.x.at(id);

    // step c: fix all tight spanning tree sets
    for (const NodeSet& s :
         enumerate_tight_st_sets(st.h, xcur, config.st_threshold)) {
      std::set<VertexId> orig;
      for (NodeId w : s) {
        for (VertexId v : st.h.vertices_of_node(w)) orig.insert(v);
      }
      if (std::find(st.fixed_orig.begin(), st.fixed_orig.end(), orig) ==
          st.fixed_orig.end()) {
        st.fixed_orig.push_back(orig);
        TraceEvent ev;
        ev.kind = TraceEvent::Kind::kFixSet;
        ev.iteration = iter;
        ev.vertex_set.assign(orig.begin(), orig.end());
        add_trace(std::move(ev));
      }
    }

    NodeSet q = compute_q(st.h, xcur);
    if (config.debug_asserts) {
      // order-independence spot check
      std::vector<NodeId> order(st.h.nodes().begin(), st.h.nodes().end());
      std::mt19937 rng(0x9e3779b9u ^ static_cast<unsigned>(iter));
      std::shuffle(order.begin(), order.end(), rng);
      NodeSet q2 = compute_q_with_order(st.h, xcur, order);
      if (q2 != q) {
        res.warnings.push_back("Q order dependence at iteration " +
                               std::to_string(iter));
      }
      // persistence: a surviving Q node stays in Q
      for (NodeId w : prev_q) {
        if (st.h.has_node(w) && !q.count(w)) {
          throw InternalInvariantError("node " + std::to_string(w) +
                                       " left Q without a contraction");
        }
      }
      if (!classify_edges(st.h, st.parts).f2.size()) {
        throw InternalInvariantError(
            "F2 is empty while more than one node remains");
      }
    }

    auto slack_of = [&xcur](const EdgeSet& u) -> Rational {
      return Rational(static_cast<int>(u.size())) - vector_sum(xcur, u);
    };

    auto apply_removal = [&](AdaptationRecord::Kind kind, NodeId w,
                             const EdgeSet& u, const Rational& slack) {
      AdaptationRecord rec;
      rec.kind = kind;
      rec.node = w;
      rec.iteration = iter;
      rec.removed = u;
      rec.slack = slack;
      for (EdgeId f : st.h.delta(w)) rec.x_at_node[f] = xcur.at(f);
      ConstraintParts adapted = remove_edges_from_degree_constraint(
          st.parts.at(w), u, rec.x_at_node, &rec.part_changes);
      // Property 1 item iv runs in every mode: x must stay feasible for the
      // adapted constraint.
      if (separate_matroid(parts_direct_sum(adapted), rec.x_at_node)) {
        throw InternalInvariantError(
            "adapted constraint cut off the current LP point at node " +
            std::to_string(w));
      }
      if (config.debug_asserts) {
        auto audit = oracle::audit_adaptation(rec, config.matroid_threshold);
        if (!audit.all_pass()) {
          std::string why;
          for (const auto* c :
               {&audit.disjoint_parts, &audit.free_elements,
                &audit.removal_transform, &audit.still_feasible}) {
            if (!c->pass) why += " [" + c->witness + "]";
          }
          throw InternalInvariantError(
              "removal construction audit failed at node " +
              std::to_string(w) + " removing " + format_edge_set(u) + why);
        }
      }
      for (const auto& change : rec.part_changes) {
        if (!change.lost_containment) continue;
        rec.affected_vertices.insert(change.vertex);
        auto& counter = st.counters[change.vertex];
        int& slot = kind == AdaptationRecord::Kind::kTypeA ? counter.first
                                                           : counter.second;
        if (++slot > 1) {
          throw InternalInvariantError(
              "vertex " + std::to_string(change.vertex) +
              " accumulated a second adaptation of the same type");
        }
      }
      st.parts[w] = std::move(adapted);
      TraceEvent ev;
      ev.kind = TraceEvent::Kind::kAdaptation;
      ev.iteration = iter;
      ev.detail = std::string(kind == AdaptationRecord::Kind::kTypeA ? "A"
                                                                     : "B") +
                  " node " + std::to_string(w) + " removed " +
                  format_edge_set(u);
      res.adaptations.push_back(std::move(rec));
      add_trace(std::move(ev));
      progress = true;
    };

    // step d: type A adaptations, ascending node order, containment
    // re-evaluated after every applied removal
    for (NodeId w : st.h.nodes()) {
      EdgeSet u;
      for (EdgeId f : st.h.delta(w)) {
        const auto& e = st.h.edge(f);
        NodeId other = e.a == w ? e.b : e.a;
        if (edge_contained(st.parts.at(w), f) &&
            edge_contained(st.parts.at(other), f)) {
          u.push_back(f);
        }
      }
      if (u.empty()) continue;
      Rational slack = slack_of(u);
      if (slack <= config.adaptation_threshold) {
        apply_removal(AdaptationRecord::Kind::kTypeA, w, u, slack);
      }
    }

    // step e: type B adaptations, skipping Q and edges touching Q
    for (NodeId w : st.h.nodes()) {
      if (q.count(w)) continue;
      EdgeSet u;
      for (EdgeId f : st.h.delta(w)) {
        const auto& e = st.h.edge(f);
        NodeId other = e.a == w ? e.b : e.a;
        if (!q.count(other) && edge_contained(st.parts.at(w), f)) {
          u.push_back(f);
        }
      }
      if (u.empty()) continue;
      Rational slack = slack_of(u);
      if (slack <= config.adaptation_threshold) {
        apply_removal(AdaptationRecord::Kind::kTypeB, w, u, slack);
      }
    }

    if (!progress) {
      throw InternalInvariantError(
          "stuck iteration " + std::to_string(iter) +
          ": no deletion, contraction, or adaptation was possible with " +
          std::to_string(st.h.nodes().size()) + " nodes and " +
          std::to_string(st.h.edges().size()) + " edges remaining");
    }
    prev_q = std::move(q);
  }

  res.tree = make_edge_set(st.chosen);
  res.cost = st.chosen_cost;
  if (res.tree.size() + 1 != instance.vertices.size()) {
    throw InternalInvariantError("returned edge set is not a spanning tree");
  }
  {
    std::map<VertexId, VertexId> parent;
    for (VertexId v : instance.vertices) parent[v] = v;
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (EdgeId id : res.tree) {
      const auto& e = instance.edge(id);
      VertexId ru = find(e.u), rv = find(e.v);
      if (ru == rv) {
        throw InternalInvariantError("returned edge set contains a cycle");
      }
      parent[ru] = rv;
    }
  }
  if (res.cost > res.lp_initial) {
    throw InternalInvariantError("tree cost exceeds the initial LP value");
  }
  for (VertexId v : instance.vertices) {
    EdgeSet at_v = set_intersection(res.tree, instance.incident_edges(v));
    res.violations[v] =
        instance.constraints.at(v).min_removals_to_independent(at_v);
  }
  return res;
}

}  // namespace mdbst
