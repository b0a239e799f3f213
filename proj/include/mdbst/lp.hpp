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

#ifndef MDBST_LP_HPP_
#define MDBST_LP_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdbst/common.hpp"
#include "mdbst/matroid.hpp"
#include "mdbst/multigraph.hpp"

namespace mdbst {

/// Exact rational point keyed by edge id.
using RationalVector = std::map<EdgeId, Rational>;

Rational vector_sum(const RationalVector& x, const EdgeSet& over);

struct ConstraintTag {
  enum class Kind {
    kSpanningTreeSet,
    kMatroidSet,
    kCardinalityEquality,
    kBound,
  };
  Kind kind = Kind::kCardinalityEquality;
  NodeSet node_set;    // kSpanningTreeSet
  NodeId node = -1;    // kMatroidSet
  EdgeSet subset;      // kMatroidSet
  EdgeId edge = -1;    // kBound

  static ConstraintTag spanning_tree(NodeSet s);
  static ConstraintTag matroid(NodeId w, EdgeSet subset);
  static ConstraintTag cardinality();
  static ConstraintTag bound(EdgeId e);
  std::string describe() const;
};

enum class Sense { kLe, kEq };

struct LinearConstraint {
  std::map<EdgeId, Rational> coefficients;
  Sense sense = Sense::kLe;
  Rational rhs = 0;
  ConstraintTag tag;
};

struct BasicSolution {
  RationalVector x;
  Rational objective = 0;
  std::vector<LinearConstraint> tight;
  bool vertex_certificate = false;

  EdgeSet support() const;
};

/// LP infeasible. `farkas` is a multiplier per input constraint (in input
/// orientation) certifying that no x >= 0 satisfies the system.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::vector<Rational> farkas)
      : std::runtime_error(what), farkas(std::move(farkas)) {}
  std::vector<Rational> farkas;
};

class UnboundedError : public std::runtime_error {
 public:
  explicit UnboundedError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Minimizes objective over {x >= 0} intersected with `constraints`, and
/// returns the lexicographically smallest optimal point (optimal value first,
/// then coordinates in ascending edge-id order). That point is a vertex and
/// is bit-for-bit reproducible. Variables are the union of keys appearing in
/// the objective and the constraints.
BasicSolution solve_vertex_lp(const std::vector<LinearConstraint>& constraints,
                              const RationalVector& objective);

/// Most-violated spanning tree constraint x(F[S]) <= |S|-1 (or the violated
/// cardinality equality), or nullopt if x lies in the spanning tree polytope.
std::optional<LinearConstraint> separate_spanning_tree(const Multigraph& g,
                                                       const RationalVector& x,
                                                       int st_threshold = 20);

/// Most-violated rank constraint x(C) <= r(C) over subsets of the ground, or
/// nullopt if x_restricted lies in the matroid polytope. `node` only tags the
/// returned constraint.
std::optional<LinearConstraint> separate_matroid(
    const Matroid& n, const RationalVector& x_restricted, NodeId node = -1);

struct Lp1Options {
  int st_threshold = 20;
  /// Receives every cut added during the cutting-plane loop.
  std::function<void(const LinearConstraint&)> on_cut;
};

/// Cutting-plane solve of the degree-constrained spanning tree relaxation:
/// x in P_st of g, x restricted to delta(w) in the matroid polytope of
/// constraints[w], with the spanning-tree constraints of `fixed_sets` pinned
/// to equality. Returns a certified vertex optimum.
BasicSolution solve_lp1(const Multigraph& g,
                        const std::map<NodeId, Matroid>& constraints,
                        const RationalVector& costs,
                        const std::vector<NodeSet>& fixed_sets,
                        const Lp1Options& options = {});

/// All node sets S with |S| >= 2 and x(F[S]) = |S|-1, exactly.
std::vector<NodeSet> enumerate_tight_st_sets(const Multigraph& g,
                                             const RationalVector& x,
                                             int st_threshold = 20);

/// Laminar subfamily spanning the same constraints, produced by greedy
/// insertion with uncrossing. Crossing tight pairs are replaced by their
/// intersection and union, both of which must again be tight (asserted).
std::vector<NodeSet> build_laminar_tight_family(
    const std::vector<NodeSet>& tight_sets, const Multigraph& g,
    const RationalVector& x);

/// Exact rank of the coefficient rows restricted to the given edge columns.
int constraint_rank(const std::vector<LinearConstraint>& rows,
                    const EdgeSet& columns);

}  // namespace mdbst

#endif  // MDBST_LP_HPP_
