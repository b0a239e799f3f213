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

#ifndef MDBST_MATROID_HPP_
#define MDBST_MATROID_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mdbst/common.hpp"

namespace mdbst {

/// Sorted, duplicate-free set of edge ids. All matroid grounds and subset
/// arguments use this representation.
using EdgeSet = std::vector<EdgeId>;

/// Normalizes an arbitrary id list into an EdgeSet (sorts, dedups).
EdgeSet make_edge_set(std::vector<EdgeId> ids);

namespace detail {
class MatroidNode;
}

/// Enumeration-based rank computations (matroid union, polytope separation,
/// axiom checks) refuse grounds larger than this. Default 16.
int matroid_ground_limit();
void set_matroid_ground_limit(int limit);

/// Immutable matroid value. Rank queries are pure and memoized; safe to call
/// from concurrent threads.
class Matroid {
 public:
  struct PartitionBlock {
    EdgeSet edges;
    int capacity = 0;
  };
  struct LaminarSet {
    EdgeSet edges;
    int capacity = 0;
  };

  static Matroid free_matroid(EdgeSet ground);
  static Matroid uniform(EdgeSet ground, int rank);
  /// Blocks must partition the union of their edge sets.
  static Matroid partition(std::vector<PartitionBlock> blocks);
  /// Sets must form a laminar (nested or disjoint) family over `ground`.
  static Matroid laminar(EdgeSet ground, std::vector<LaminarSet> sets);
  /// Full rank table keyed by subsets of `ground`; validated as a matroid
  /// rank function on construction.
  static Matroid explicit_table(EdgeSet ground,
                                std::map<EdgeSet, int> rank_table);
  static Matroid direct_sum(std::vector<Matroid> parts);
  static Matroid matroid_union(const Matroid& m1, const Matroid& m2);
  static Matroid contraction(const Matroid& base, const EdgeSet& contracted);
  /// Ground of `base` plus `loops`; the loops have rank zero.
  static Matroid loop_extension(const Matroid& base, EdgeSet loops);
  /// Matroid deletion: restricts the ground to `kept` without changing the
  /// rank of remaining subsets.
  static Matroid restriction(const Matroid& base, const EdgeSet& kept);

  const EdgeSet& ground() const;
  bool in_ground(EdgeId e) const;

  int rank(const EdgeSet& subset) const;
  int rank_full() const;
  bool is_independent(const EdgeSet& subset) const;
  /// Coloop test: rank(ground) == rank(ground minus e) + 1.
  bool is_free_element(EdgeId e) const;
  /// |a| - rank(a): the fewest removals making `a` independent.
  int min_removals_to_independent(const EdgeSet& a) const;

  /// Checks r(empty)=0, monotonicity, unit increase, and submodularity by
  /// full enumeration. Throws ConfigError if the ground exceeds `limit`.
  bool satisfies_matroid_axioms(int limit = 12) const;

  std::string describe() const;

 private:
  explicit Matroid(std::shared_ptr<const detail::MatroidNode> node);
  std::shared_ptr<const detail::MatroidNode> node_;
};

}  // namespace mdbst

#endif  // MDBST_MATROID_HPP_
