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

#ifndef MDBST_ORACLE_HPP_
#define MDBST_ORACLE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdbst/instance.hpp"
#include "mdbst/lp.hpp"
#include "mdbst/multigraph.hpp"
#include "mdbst/solver.hpp"

namespace mdbst {
namespace oracle {

struct OracleThresholds {
  int max_nodes = 10;
  int max_edges = 20;
};

/// Every spanning tree of g exactly once, as sets of edge ids, by subset
/// enumeration with an acyclicity/connectivity check.
std::vector<EdgeSet> enumerate_spanning_trees(
    const Multigraph& g, const OracleThresholds& thresholds = {});

/// Minimum cost over spanning trees whose incidence at every vertex is
/// independent in that vertex's matroid; nullopt if no such tree exists.
std::optional<Rational> brute_force_opt(
    const Instance& instance, const OracleThresholds& thresholds = {});

/// Classical MST cost by Kruskal, as an LP-independent reference.
Rational kruskal_mst_cost(const Instance& instance);

struct CheckResult {
  bool pass = true;
  std::string witness;
};

struct OracleReport {
  Rational lp_value;
  std::optional<Rational> integral_opt;
  Rational tree_cost;
  int max_violation = 0;
  std::map<std::string, CheckResult> checks;

  bool all_pass() const;
};

/// Re-derives every guarantee of a solve from scratch: the tree spans and is
/// acyclic, the cost field matches the summed edge costs, cost <= initial LP
/// value, every per-vertex violation is <= 8 against the original matroid,
/// and cost <= integral OPT when the brute-force oracle finds one.
OracleReport verify_solution(const Instance& instance,
                             const SolveResult& result,
                             const OracleThresholds& thresholds = {});

/// Degree-2 nodes where no subset of the two incident edges has y-sum 1.
NodeSet compute_s(const Multigraph& g, const RationalVector& y);

/// |family| <= |V'|-1 - floor(|S(G',y')|/2) with G' the graph minus Q(G,y).
CheckResult check_laminar_bounds(const Multigraph& g, const RationalVector& y,
                                 const std::vector<NodeSet>& laminar_family);

/// Longest chain of rank-tight subsets of the ground has length at most
/// x(ground).
CheckResult check_chain_bound(const Matroid& n,
                              const RationalVector& x_restricted);

struct AdaptationAudit {
  CheckResult disjoint_parts;   // item i
  CheckResult free_elements;    // item ii, by definitional enumeration
  CheckResult removal_transform;  // item iii
  CheckResult still_feasible;   // item iv
  bool all_pass() const;
};

/// Re-checks one recorded degree adaptation by enumeration, independent of
/// the checks run inside the solve loop.
AdaptationAudit audit_adaptation(const AdaptationRecord& record,
                                 int ground_limit = 12);

}  // namespace oracle
}  // namespace mdbst

#endif  // MDBST_ORACLE_HPP_
