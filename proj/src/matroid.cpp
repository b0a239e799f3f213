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

#include "mdbst/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace mdbst {

namespace {
std::atomic<int> g_ground_limit{16};
}  // namespace

int matroid_ground_limit() { return g_ground_limit.load(); }
void set_matroid_ground_limit(int limit) { g_ground_limit.store(limit); }

EdgeSet make_edge_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

namespace detail {

using Mask = std::uint64_t;

class MatroidNode {
 public:
  enum class Kind {
    kFree,
    kUniform,
    kPartition,
    kLaminar,
    kExplicit,
    kDirectSum,
    kUnion,
    kContraction,
    kLoopExtension,
    kRestriction,
  };

  Kind kind;
  EdgeSet ground;
  int uniform_rank = 0;
  std::vector<Mask> block_masks;
  std::vector<int> block_caps;
  // Laminar sets ordered children-before-parents; direct_masks exclude
  // elements covered by a nested child set.
  std::vector<Mask> lam_masks;
  std::vector<Mask> lam_direct_masks;
  std::vector<int> lam_caps;
  std::vector<int> lam_parent;  // -1 for roots
  Mask lam_uncovered = 0;       // elements in no laminar set
  std::unordered_map<Mask, int> table;
  std::vector<std::shared_ptr<const MatroidNode>> children;
  // children[i] bit j of this ground maps to child bit child_bit_[i][j], or -1.
  std::vector<std::vector<int>> child_bit;
  Mask contracted_mask_in_base = 0;  // for kContraction
  int contracted_rank = 0;

  mutable std::mutex memo_mu;
  mutable std::unordered_map<Mask, int> memo;

  int bit_of(EdgeId e) const {
    auto it = std::lower_bound(ground.begin(), ground.end(), e);
    if (it == ground.end() || *it != e) return -1;
    return static_cast<int>(it - ground.begin());
  }

  Mask mask_of(const EdgeSet& subset, const char* op) const {
    Mask m = 0;
    for (EdgeId e : subset) {
      int b = bit_of(e);
      if (b < 0) {
        throw DomainError(std::string(op) + ": element " + std::to_string(e) +
                          " not in ground set");
      }
      m |= Mask{1} << b;
    }
    return m;
  }

  Mask project(int child_idx, Mask m) const {
    Mask out = 0;
    const auto& map = child_bit[child_idx];
    while (m) {
      int b = std::countr_zero(m);
      m &= m - 1;
      int cb = map[b];
      if (cb >= 0) out |= Mask{1} << cb;
    }
    return out;
  }

  int rank_mask(Mask m) const;

 private:
  int rank_mask_uncached(Mask m) const;
};

namespace {

int popcount(Mask m) { return std::popcount(m); }

std::shared_ptr<MatroidNode> new_node(MatroidNode::Kind kind, EdgeSet ground) {
  auto n = std::make_shared<MatroidNode>();
  n->kind = kind;
  n->ground = std::move(ground);
  if (n->ground.size() > 64) {
    throw ConfigError("matroid ground sets larger than 64 are unsupported");
  }
  return n;
}

void link_child(MatroidNode& parent,
                std::shared_ptr<const MatroidNode> child) {
  std::vector<int> map(parent.ground.size(), -1);
  for (std::size_t i = 0; i < parent.ground.size(); ++i) {
    map[i] = child->bit_of(parent.ground[i]);
  }
  parent.children.push_back(std::move(child));
  parent.child_bit.push_back(std::move(map));
}

}  // namespace

int MatroidNode::rank_mask(Mask m) const {
  switch (kind) {
    case Kind::kFree:
      return popcount(m);
    case Kind::kUniform:
      return std::min(popcount(m), uniform_rank);
    case Kind::kPartition: {
      int r = 0;
      for (std::size_t i = 0; i < block_masks.size(); ++i) {
        r += std::min(popcount(m & block_masks[i]), block_caps[i]);
      }
      return r;
    }
    default:
      break;
  }
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
  }
  int r = rank_mask_uncached(m);
  std::lock_guard<std::mutex> lock(memo_mu);
  memo.emplace(m, r);
  return r;
}

int MatroidNode::rank_mask_uncached(Mask m) const {
  switch (kind) {
    case Kind::kLaminar: {
      std::vector<int> avail(lam_masks.size(), 0);
      int r = popcount(m & lam_uncovered);
      for (std::size_t i = 0; i < lam_masks.size(); ++i) {
        int a = popcount(m & lam_direct_masks[i]);
        // children precede i in the ordering
        for (std::size_t j = 0; j < i; ++j) {
          if (lam_parent[j] == static_cast<int>(i)) a += avail[j];
        }
        avail[i] = std::min(a, lam_caps[i]);
        if (lam_parent[i] < 0) r += avail[i];
      }
      return r;
    }
    case Kind::kExplicit: {
      auto it = table.find(m);
      if (it == table.end()) {
        throw InternalInvariantError("explicit rank table missing a subset");
      }
      return it->second;
    }
    case Kind::kDirectSum: {
      int r = 0;
      for (std::size_t i = 0; i < children.size(); ++i) {
        r += children[i]->rank_mask(project(i, m));
      }
      return r;
    }
    case Kind::kUnion: {
      // r(A) = min over B subset of A of |A\B| + r1(B) + r2(B)
      Mask a0 = project(0, m);
      Mask a1 = project(1, m);
      int best = popcount(m);  // B = empty
      Mask b = m;
      while (b) {
        int cand = popcount(m & ~b) + children[0]->rank_mask(project(0, b)) +
                   children[1]->rank_mask(project(1, b));
        best = std::min(best, cand);
        b = (b - 1) & m;
      }
      (void)a0;
      (void)a1;
      return best;
    }
    case Kind::kContraction:
      return children[0]->rank_mask(project(0, m) | contracted_mask_in_base) -
             contracted_rank;
    case Kind::kLoopExtension:
    case Kind::kRestriction:
      return children[0]->rank_mask(project(0, m));
    default:
      throw InternalInvariantError("unhandled matroid kind");
  }
}

}  // namespace detail

Matroid::Matroid(std::shared_ptr<const detail::MatroidNode> node)
    : node_(std::move(node)) {}

const EdgeSet& Matroid::ground() const { return node_->ground; }

bool Matroid::in_ground(EdgeId e) const { return node_->bit_of(e) >= 0; }

int Matroid::rank(const EdgeSet& subset) const {
  return node_->rank_mask(node_->mask_of(subset, "rank"));
}

int Matroid::rank_full() const {
  detail::Mask all = node_->ground.empty()
                         ? 0
                         : (node_->ground.size() == 64
                                ? ~detail::Mask{0}
                                : (detail::Mask{1} << node_->ground.size()) - 1);
  return node_->rank_mask(all);
}

bool Matroid::is_independent(const EdgeSet& subset) const {
  detail::Mask m = node_->mask_of(subset, "is_independent");
  return node_->rank_mask(m) == std::popcount(m);
}

bool Matroid::is_free_element(EdgeId e) const {
  int b = node_->bit_of(e);
  if (b < 0) {
    throw DomainError("is_free_element: element " + std::to_string(e) +
                      " not in ground set");
  }
  detail::Mask all =
      node_->ground.size() == 64 ? ~detail::Mask{0}
                                 : (detail::Mask{1} << node_->ground.size()) - 1;
  detail::Mask without = all & ~(detail::Mask{1} << b);
  return node_->rank_mask(all) == node_->rank_mask(without) + 1;
}

int Matroid::min_removals_to_independent(const EdgeSet& a) const {
  detail::Mask m = node_->mask_of(a, "min_removals_to_independent");
  return std::popcount(m) - node_->rank_mask(m);
}

Matroid Matroid::free_matroid(EdgeSet ground) {
  auto n = detail::new_node(detail::MatroidNode::Kind::kFree,
                            make_edge_set(std::move(ground)));
  return Matroid(n);
}

Matroid Matroid::uniform(EdgeSet ground, int rank) {
  if (rank < 0) throw DomainError("uniform: negative rank");
  auto n = detail::new_node(detail::MatroidNode::Kind::kUniform,
                            make_edge_set(std::move(ground)));
  n->uniform_rank = rank;
  return Matroid(n);
}

Matroid Matroid::partition(std::vector<PartitionBlock> blocks) {
  EdgeSet ground;
  for (const auto& b : blocks) {
    if (b.capacity < 0) throw DomainError("partition: negative capacity");
    for (EdgeId e : b.edges) ground.push_back(e);
  }
  std::size_t total = ground.size();
  ground = make_edge_set(std::move(ground));
  if (ground.size() != total) {
    throw DomainError("partition: blocks are not pairwise disjoint");
  }
  auto n = detail::new_node(detail::MatroidNode::Kind::kPartition,
                            std::move(ground));
  for (const auto& b : blocks) {
    n->block_masks.push_back(n->mask_of(make_edge_set(b.edges), "partition"));
    n->block_caps.push_back(b.capacity);
  }
  return Matroid(n);
}

Matroid Matroid::laminar(EdgeSet ground, std::vector<LaminarSet> sets) {
  auto n = detail::new_node(detail::MatroidNode::Kind::kLaminar,
                            make_edge_set(std::move(ground)));
  std::vector<std::pair<detail::Mask, int>> masks;
  for (const auto& s : sets) {
    if (s.capacity < 0) throw DomainError("laminar: negative capacity");
    masks.emplace_back(n->mask_of(make_edge_set(s.edges), "laminar"),
                       s.capacity);
  }
  // children before parents
  std::sort(masks.begin(), masks.end(),
            [](const auto& a, const auto& b) {
              int pa = std::popcount(a.first), pb = std::popcount(b.first);
              return pa != pb ? pa < pb : a.first < b.first;
            });
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (masks[i].first == masks[j].first) {
        throw DomainError("laminar: duplicate set in family");
      }
      detail::Mask inter = masks[i].first & masks[j].first;
      if (inter != 0 && inter != masks[i].first && inter != masks[j].first) {
        throw DomainError("laminar: family is not nested");
      }
    }
  }
  detail::Mask covered = 0;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    n->lam_masks.push_back(masks[i].first);
    n->lam_caps.push_back(masks[i].second);
    int parent = -1;
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if ((masks[i].first & masks[j].first) == masks[i].first &&
          masks[j].first != masks[i].first) {
        parent = static_cast<int>(j);
        break;
      }
    }
    n->lam_parent.push_back(parent);
    detail::Mask direct = masks[i].first;
    for (std::size_t j = 0; j < i; ++j) {
      if (n->lam_parent[j] == static_cast<int>(i)) direct &= ~masks[j].first;
    }
    n->lam_direct_masks.push_back(direct);
    covered |= masks[i].first;
  }
  detail::Mask all = n->ground.empty()
                         ? 0
                         : (detail::Mask{1} << n->ground.size()) - 1;
  n->lam_uncovered = all & ~covered;
  return Matroid(n);
}

Matroid Matroid::explicit_table(EdgeSet ground,
                                std::map<EdgeSet, int> rank_table) {
  ground = make_edge_set(std::move(ground));
  if (static_cast<int>(ground.size()) > matroid_ground_limit()) {
    throw ConfigError("explicit_table: ground exceeds enumeration limit");
  }
  auto n = detail::new_node(detail::MatroidNode::Kind::kExplicit,
                            std::move(ground));
  for (const auto& [subset, r] : rank_table) {
    n->table.emplace(n->mask_of(subset, "explicit_table"), r);
  }
  detail::Mask all = n->ground.empty()
                         ? 0
                         : (detail::Mask{1} << n->ground.size()) - 1;
  for (detail::Mask m = 0;; ++m) {
    if (n->table.find(m) == n->table.end()) {
      throw DomainError("explicit_table: rank table does not cover all subsets");
    }
    if (m == all) break;
  }
  Matroid result(n);
  if (!result.satisfies_matroid_axioms(matroid_ground_limit())) {
    throw DomainError("explicit_table: table is not a matroid rank function");
  }
  return result;
}

Matroid Matroid::direct_sum(std::vector<Matroid> parts) {
  EdgeSet ground;
  std::size_t total = 0;
  for (const auto& p : parts) {
    total += p.ground().size();
    ground.insert(ground.end(), p.ground().begin(), p.ground().end());
  }
  ground = make_edge_set(std::move(ground));
  if (ground.size() != total) {
    throw DomainError("direct_sum: ground sets overlap");
  }
  auto n = detail::new_node(detail::MatroidNode::Kind::kDirectSum,
                            std::move(ground));
  for (const auto& p : parts) detail::link_child(*n, p.node_);
  return Matroid(n);
}

Matroid Matroid::matroid_union(const Matroid& m1, const Matroid& m2) {
  if (m1.ground() != m2.ground()) {
    throw DomainError("matroid_union: ground sets differ");
  }
  if (static_cast<int>(m1.ground().size()) > matroid_ground_limit()) {
    throw ConfigError("matroid_union: ground exceeds enumeration limit");
  }
  auto n = detail::new_node(detail::MatroidNode::Kind::kUnion, m1.ground());
  detail::link_child(*n, m1.node_);
  detail::link_child(*n, m2.node_);
  return Matroid(n);
}

Matroid Matroid::contraction(const Matroid& base, const EdgeSet& contracted) {
  EdgeSet c = make_edge_set(contracted);
  detail::Mask cmask = base.node_->mask_of(c, "contraction");
  EdgeSet ground;
  for (EdgeId e : base.ground()) {
    if (!std::binary_search(c.begin(), c.end(), e)) ground.push_back(e);
  }
  auto n = detail::new_node(detail::MatroidNode::Kind::kContraction,
                            std::move(ground));
  detail::link_child(*n, base.node_);
  n->contracted_mask_in_base = cmask;
  n->contracted_rank = base.node_->rank_mask(cmask);
  return Matroid(n);
}

Matroid Matroid::loop_extension(const Matroid& base, EdgeSet loops) {
  loops = make_edge_set(std::move(loops));
  for (EdgeId e : loops) {
    if (base.in_ground(e)) {
      throw DomainError("loop_extension: loop overlaps base ground");
    }
  }
  EdgeSet ground = base.ground();
  ground.insert(ground.end(), loops.begin(), loops.end());
  auto n = detail::new_node(detail::MatroidNode::Kind::kLoopExtension,
                            make_edge_set(std::move(ground)));
  detail::link_child(*n, base.node_);
  return Matroid(n);
}

Matroid Matroid::restriction(const Matroid& base, const EdgeSet& kept) {
  EdgeSet k = make_edge_set(kept);
  base.node_->mask_of(k, "restriction");  // membership check
  auto n = detail::new_node(detail::MatroidNode::Kind::kRestriction,
                            std::move(k));
  detail::link_child(*n, base.node_);
  return Matroid(n);
}

bool Matroid::satisfies_matroid_axioms(int limit) const {
  int g = static_cast<int>(ground().size());
  if (g > limit) {
    throw ConfigError("satisfies_matroid_axioms: ground exceeds limit");
  }
  detail::Mask all = g == 0 ? 0 : (detail::Mask{1} << g) - 1;
  if (node_->rank_mask(0) != 0) return false;
  for (detail::Mask a = 0;; ++a) {
    int ra = node_->rank_mask(a);
    if (ra < 0 || ra > std::popcount(a)) return false;
    // unit increase + local submodularity
    for (int e = 0; e < g; ++e) {
      if (a & (detail::Mask{1} << e)) continue;
      detail::Mask ae = a | (detail::Mask{1} << e);
      int rae = node_->rank_mask(ae);
      if (rae < ra || rae > ra + 1) return false;
      for (int f = e + 1; f < g; ++f) {
        if (a & (detail::Mask{1} << f)) continue;
        detail::Mask af = a | (detail::Mask{1} << f);
        detail::Mask aef = ae | (detail::Mask{1} << f);
        if (rae + node_->rank_mask(af) <
            node_->rank_mask(aef) + ra) {
          return false;
        }
      }
    }
    if (a == all) break;
  }
  return true;
}

std::string Matroid::describe() const {
  std::ostringstream os;
  using K = detail::MatroidNode::Kind;
  switch (node_->kind) {
    case K::kFree: os << "free"; break;
    case K::kUniform: os << "uniform(" << node_->uniform_rank << ")"; break;
    case K::kPartition: os << "partition"; break;
    case K::kLaminar: os << "laminar"; break;
    case K::kExplicit: os << "explicit"; break;
    case K::kDirectSum: os << "direct-sum[" << node_->children.size() << "]"; break;
    case K::kUnion: os << "union"; break;
    case K::kContraction: os << "contraction"; break;
    case K::kLoopExtension: os << "loop-extension"; break;
    case K::kRestriction: os << "restriction"; break;
  }
  os << " on {";
  for (std::size_t i = 0; i < node_->ground.size(); ++i) {
    if (i) os << ",";
    os << node_->ground[i];
  }
  os << "}";
  return os.str();
}

}  // namespace mdbst
