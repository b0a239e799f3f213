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

#include "mdbst/lp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>

namespace mdbst {

Rational vector_sum(const RationalVector& x, const EdgeSet& over) {
  Rational s = 0;
  for (EdgeId e : over) {
    auto it = x.find(e);
    if (it != x.end()) s += it->second;
  }
  return s;
}

EdgeSet BasicSolution::support() const {
  EdgeSet out;
  for (const auto& [e, v] : x) {
    if (v != 0) out.push_back(e);
  }
  return out;
}

ConstraintTag ConstraintTag::spanning_tree(NodeSet s) {
  ConstraintTag t;
  t.kind = Kind::kSpanningTreeSet;
  t.node_set = std::move(s);
  return t;
}

ConstraintTag ConstraintTag::matroid(NodeId w, EdgeSet subset) {
  ConstraintTag t;
  t.kind = Kind::kMatroidSet;
  t.node = w;
  t.subset = std::move(subset);
  return t;
}

ConstraintTag ConstraintTag::cardinality() {
  ConstraintTag t;
  t.kind = Kind::kCardinalityEquality;
  return t;
}

ConstraintTag ConstraintTag::bound(EdgeId e) {
  ConstraintTag t;
  t.kind = Kind::kBound;
  t.edge = e;
  return t;
}

std::string ConstraintTag::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kSpanningTreeSet: {
      os << "st-set{";
      bool first = true;
      for (NodeId w : node_set) {
        if (!first) os << ",";
        os << w;
        first = false;
      }
      os << "}";
      break;
    }
    case Kind::kMatroidSet: {
      os << "matroid(node " << node << ", {";
      for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) os << ",";
        os << subset[i];
      }
      os << "})";
      break;
    }
    case Kind::kCardinalityEquality:
      os << "cardinality";
      break;
    case Kind::kBound:
      os << "bound(" << edge << ")";
      break;
  }
  return os.str();
}

namespace {

// Dense two-phase simplex over exact rationals. Bland's rule for
// anti-cycling; phase 2 minimizes the lexicographic objective
// (c^T x, x_0, x_1, ...), so the optimum returned is the unique
// lexicographically smallest optimal point, which is a vertex.
class Simplex {
 public:
  Simplex(const std::vector<LinearConstraint>& constraints,
          const RationalVector& objective) {
    std::set<EdgeId> varset;
    for (const auto& [e, c] : objective) varset.insert(e);
    for (const auto& con : constraints) {
      for (const auto& [e, c] : con.coefficients) varset.insert(e);
    }
    vars_.assign(varset.begin(), varset.end());
    n_ = static_cast<int>(vars_.size());
    cost_.assign(n_, 0);
    for (int j = 0; j < n_; ++j) {
      auto it = objective.find(vars_[j]);
      if (it != objective.end()) cost_[j] = it->second;
    }

    // Normalize: dense row, rhs >= 0, sense in {Le, Ge, Eq}.
    enum class S { kLe, kGe, kEq };
    struct NRow {
      std::vector<Rational> a;
      Rational b;
      S sense;
      bool flipped;
    };
    std::vector<NRow> nrows;
    for (const auto& con : constraints) {
      NRow r;
      r.a.assign(n_, 0);
      for (const auto& [e, c] : con.coefficients) {
        r.a[col_of_var(e)] = c;
      }
      r.b = con.rhs;
      r.sense = con.sense == Sense::kLe ? S::kLe : S::kEq;
      r.flipped = false;
      if (r.b < 0) {
        for (auto& c : r.a) c = -c;
        r.b = -r.b;
        if (r.sense == S::kLe) r.sense = S::kGe;
        r.flipped = true;
      }
      nrows.push_back(std::move(r));
    }
    m_ = static_cast<int>(nrows.size());
    flipped_.resize(m_);
    slack_col_.assign(m_, -1);
    art_col_.assign(m_, -1);

    int ncols = n_;
    for (int i = 0; i < m_; ++i) {
      if (nrows[i].sense != S::kEq) slack_col_[i] = ncols++;
      if (nrows[i].sense != S::kLe) art_col_[i] = ncols++;
    }
    ncols_ = ncols;
    tab_.assign(m_, std::vector<Rational>(ncols_ + 1, Rational(0)));
    basis_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      flipped_[i] = nrows[i].flipped;
      for (int j = 0; j < n_; ++j) tab_[i][j] = nrows[i].a[j];
      tab_[i][ncols_] = nrows[i].b;
      if (slack_col_[i] >= 0) {
        tab_[i][slack_col_[i]] = nrows[i].sense == S::kLe ? 1 : -1;
      }
      if (art_col_[i] >= 0) {
        tab_[i][art_col_[i]] = 1;
        basis_[i] = art_col_[i];
      } else {
        basis_[i] = slack_col_[i];
      }
    }
  }

  // Throws InfeasibleError / UnboundedError.
  void solve() {
    phase1();
    phase2();
  }

  RationalVector solution() const {
    RationalVector x;
    for (int j = 0; j < n_; ++j) x[vars_[j]] = 0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[vars_[basis_[i]]] = tab_[i][ncols_];
    }
    return x;
  }

 private:
  int col_of_var(EdgeId e) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), e);
    return static_cast<int>(it - vars_.begin());
  }

  std::vector<Rational> reduced_costs(const std::vector<Rational>& c) const {
    // c has length ncols_; returns row of length ncols_+1 whose last cell is
    // minus the current objective value.
    std::vector<Rational> row(ncols_ + 1, Rational(0));
    for (int j = 0; j < ncols_; ++j) row[j] = c[j];
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= ncols_; ++j) row[j] -= cb * tab_[i][j];
    }
    return row;
  }

  void pivot(std::vector<std::vector<Rational>>& objrows, int r, int j) {
    Rational p = tab_[r][j];
    for (int k = 0; k <= ncols_; ++k) tab_[r][k] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || tab_[i][j] == 0) continue;
      Rational f = tab_[i][j];
      for (int k = 0; k <= ncols_; ++k) tab_[i][k] -= f * tab_[r][k];
    }
    for (auto& row : objrows) {
      if (row[j] == 0) continue;
      Rational f = row[j];
      for (int k = 0; k <= ncols_; ++k) row[k] -= f * tab_[r][k];
    }
    basis_[r] = j;
  }

  // Bland ratio test; returns -1 if no positive pivot entry in column j.
  int leaving_row(int j) const {
    int best = -1;
    Rational best_ratio = 0;
    for (int i = 0; i < m_; ++i) {
      if (tab_[i][j] <= 0) continue;
      Rational ratio = tab_[i][ncols_] / tab_[i][j];
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  bool col_is_artificial(int j) const {
    for (int i = 0; i < m_; ++i) {
      if (art_col_[i] == j) return true;
    }
    return false;
  }

  void phase1() {
    bool any_art = false;
    for (int i = 0; i < m_; ++i) any_art |= art_col_[i] >= 0;
    std::vector<Rational> c(ncols_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (art_col_[i] >= 0) c[art_col_[i]] = 1;
    }
    if (!any_art) return;
    std::vector<std::vector<Rational>> objrows{reduced_costs(c)};
    run_simplex(objrows, /*allow_artificial=*/true);
    Rational value = -objrows[0][ncols_];
    if (value > 0) {
      throw_infeasible(objrows[0]);
    }
    // Drive leftover artificials out of the basis; rows where that is
    // impossible are redundant and dropped.
    for (int i = 0; i < m_; ++i) {
      if (!col_is_artificial(basis_[i])) continue;
      int enter = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (!col_is_artificial(j) && tab_[i][j] != 0) {
          enter = j;
          break;
        }
      }
      if (enter >= 0) {
        pivot(objrows, i, enter);
      } else {
        drop_row(i);
        --i;
      }
    }
  }

  void drop_row(int r) {
    tab_.erase(tab_.begin() + r);
    basis_.erase(basis_.begin() + r);
    // slack/art bookkeeping stays column-indexed; keep per-row arrays in sync
    slack_col_.erase(slack_col_.begin() + r);
    art_col_.erase(art_col_.begin() + r);
    flipped_.erase(flipped_.begin() + r);
    --m_;
  }

  void phase2() {
    std::vector<std::vector<Rational>> objrows;
    {
      std::vector<Rational> c(ncols_, Rational(0));
      for (int j = 0; j < n_; ++j) c[j] = cost_[j];
      objrows.push_back(reduced_costs(c));
    }
    for (int j = 0; j < n_; ++j) {
      std::vector<Rational> c(ncols_, Rational(0));
      c[j] = 1;
      objrows.push_back(reduced_costs(c));
    }
    run_simplex(objrows, /*allow_artificial=*/false);
  }

  // Pivots until no entering column has a lex-negative reduced-cost vector.
  void run_simplex(std::vector<std::vector<Rational>>& objrows,
                   bool allow_artificial) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (!allow_artificial && col_is_artificial(j)) continue;
        int sign = 0;
        for (const auto& row : objrows) {
          if (row[j] != 0) {
            sign = row[j] < 0 ? -1 : 1;
            break;
          }
        }
        if (sign < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;
      int leave = leaving_row(enter);
      if (leave < 0) {
        throw UnboundedError("LP is unbounded below");
      }
      pivot(objrows, leave, enter);
    }
  }

  [[noreturn]] void throw_infeasible(const std::vector<Rational>& objrow) {
    // Farkas multipliers from the phase-1 duals: for each row, read y_i off
    // the reduced cost of its artificial (y_i = 1 - rc) or slack column
    // (y_i = -rc).
    std::vector<Rational> y(m_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (art_col_[i] >= 0) {
        y[i] = Rational(1) - objrow[art_col_[i]];
      } else {
        y[i] = -objrow[slack_col_[i]];
      }
    }
    // Self-check the certificate: y^T A <= 0 on every non-artificial column
    // and y^T b > 0, which rules out any feasible x >= 0.
    Rational yb = 0;
    for (int i = 0; i < m_; ++i) yb += y[i] * row_input(i, ncols_);
    bool ok = yb > 0;
    for (int j = 0; j < ncols_ && ok; ++j) {
      if (col_is_artificial(j)) continue;
      Rational s = 0;
      for (int i = 0; i < m_; ++i) s += y[i] * row_input(i, j);
      if (s > 0) ok = false;
    }
    if (!ok) {
      throw InternalInvariantError("invalid Farkas certificate from phase 1");
    }
    std::vector<Rational> y_input(m_);
    for (int i = 0; i < m_; ++i) y_input[i] = flipped_[i] ? -y[i] : y[i];
    throw InfeasibleError("LP is infeasible", std::move(y_input));
  }

  // Entry of the original (pre-pivot) normalized system. Reconstructing it
  // from the current tableau would be wrong after pivots, so the constructor
  // keeps a pristine copy.
  const Rational& row_input(int i, int j) const { return input_[i][j]; }

 public:
  void snapshot_input() { input_ = tab_; }

 private:
  std::vector<EdgeId> vars_;
  int n_ = 0;
  int m_ = 0;
  int ncols_ = 0;
  std::vector<Rational> cost_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<std::vector<Rational>> input_;
  std::vector<int> basis_;
  std::vector<int> slack_col_;
  std::vector<int> art_col_;
  std::vector<bool> flipped_;
};

Rational evaluate(const LinearConstraint& con, const RationalVector& x) {
  Rational s = 0;
  for (const auto& [e, c] : con.coefficients) {
    auto it = x.find(e);
    if (it != x.end()) s += c * it->second;
  }
  return s;
}

}  // namespace

BasicSolution solve_vertex_lp(const std::vector<LinearConstraint>& constraints,
                              const RationalVector& objective) {
  Simplex s(constraints, objective);
  s.snapshot_input();
  s.solve();
  BasicSolution sol;
  sol.x = s.solution();
  for (const auto& [e, v] : sol.x) {
    auto it = objective.find(e);
    if (it != objective.end()) sol.objective += it->second * v;
  }
  for (const auto& con : constraints) {
    if (evaluate(con, sol.x) == con.rhs) sol.tight.push_back(con);
  }
  EdgeSet support = sol.support();
  sol.vertex_certificate =
      constraint_rank(sol.tight, support) == static_cast<int>(support.size());
  return sol;
}

int constraint_rank(const std::vector<LinearConstraint>& rows,
                    const EdgeSet& columns) {
  std::vector<std::vector<Rational>> mat;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    r.reserve(columns.size());
    bool nonzero = false;
    for (EdgeId e : columns) {
      auto it = row.coefficients.find(e);
      Rational c = it == row.coefficients.end() ? Rational(0) : it->second;
      nonzero |= c != 0;
      r.push_back(c);
    }
    if (nonzero) mat.push_back(std::move(r));
  }
  int rank = 0;
  std::size_t ncols = columns.size();
  for (std::size_t col = 0; col < ncols && rank < static_cast<int>(mat.size());
       ++col) {
    int p = -1;
    for (std::size_t i = rank; i < mat.size(); ++i) {
      if (mat[i][col] != 0) {
        p = static_cast<int>(i);
        break;
      }
    }
    if (p < 0) continue;
    std::swap(mat[rank], mat[p]);
    for (std::size_t i = 0; i < mat.size(); ++i) {
      if (static_cast<int>(i) == rank || mat[i][col] == 0) continue;
      Rational f = mat[i][col] / mat[rank][col];
      for (std::size_t j = col; j < ncols; ++j) {
        mat[i][j] -= f * mat[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// Iterates over all node subsets of g with |S| >= 2 in a deterministic order
// and reports x(F[S]) for each.
template <typename Fn>
void for_each_node_subset(const Multigraph& g, const RationalVector& x,
                          Fn&& fn) {
  std::vector<NodeId> nodes(g.nodes().begin(), g.nodes().end());
  int k = static_cast<int>(nodes.size());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    NodeSet s;
    for (int i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) s.insert(nodes[i]);
    }
    Rational inside = 0;
    for (const auto& [id, e] : g.edges()) {
      if (s.count(e.a) && s.count(e.b)) {
        auto it = x.find(id);
        if (it != x.end()) inside += it->second;
      }
    }
    fn(s, inside);
  }
}

}  // namespace

std::optional<LinearConstraint> separate_spanning_tree(const Multigraph& g,
                                                       const RationalVector& x,
                                                       int st_threshold) {
  int k = static_cast<int>(g.nodes().size());
  if (k > st_threshold) {
    throw ConfigError("separate_spanning_tree: node count " +
                      std::to_string(k) + " exceeds threshold " +
                      std::to_string(st_threshold));
  }
  // Full-set equality first.
  Rational total = 0;
  for (const auto& [id, e] : g.edges()) {
    auto it = x.find(id);
    if (it != x.end()) total += it->second;
  }
  if (total != k - 1) {
    LinearConstraint con;
    for (const auto& [id, e] : g.edges()) con.coefficients[id] = 1;
    con.sense = Sense::kEq;
    con.rhs = k - 1;
    con.tag = ConstraintTag::cardinality();
    return con;
  }
  std::optional<NodeSet> best;
  Rational best_violation = 0;
  for_each_node_subset(g, x, [&](const NodeSet& s, const Rational& inside) {
    Rational violation = inside - Rational(static_cast<int>(s.size()) - 1);
    if (violation > best_violation) {
      best_violation = violation;
      best = s;
    }
  });
  if (!best) return std::nullopt;
  LinearConstraint con;
  for (EdgeId f : g.edges_within(*best)) con.coefficients[f] = 1;
  con.sense = Sense::kLe;
  con.rhs = static_cast<int>(best->size()) - 1;
  con.tag = ConstraintTag::spanning_tree(*best);
  return con;
}

std::optional<LinearConstraint> separate_matroid(
    const Matroid& n, const RationalVector& x_restricted, NodeId node) {
  const EdgeSet& ground = n.ground();
  if (static_cast<int>(ground.size()) > matroid_ground_limit()) {
    throw ConfigError("separate_matroid: ground of size " +
                      std::to_string(ground.size()) +
                      " exceeds enumeration limit");
  }
  for (const auto& [e, v] : x_restricted) {
    if (!n.in_ground(e)) {
      throw DomainError("separate_matroid: x has key outside ground");
    }
  }
  int g = static_cast<int>(ground.size());
  std::optional<EdgeSet> best;
  Rational best_violation = 0;
  int best_rank = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
    EdgeSet c;
    Rational sum = 0;
    for (int i = 0; i < g; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        c.push_back(ground[i]);
        auto it = x_restricted.find(ground[i]);
        if (it != x_restricted.end()) sum += it->second;
      }
    }
    int r = n.rank(c);
    Rational violation = sum - r;
    if (violation > best_violation) {
      best_violation = violation;
      best = std::move(c);
      best_rank = r;
    }
  }
  if (!best) return std::nullopt;
  LinearConstraint con;
  for (EdgeId e : *best) con.coefficients[e] = 1;
  con.sense = Sense::kLe;
  con.rhs = best_rank;
  con.tag = ConstraintTag::matroid(node, *best);
  return con;
}

BasicSolution solve_lp1(const Multigraph& g,
                        const std::map<NodeId, Matroid>& constraints,
                        const RationalVector& costs,
                        const std::vector<NodeSet>& fixed_sets,
                        const Lp1Options& options) {
  int k = static_cast<int>(g.nodes().size());
  if (k <= 1) {
    BasicSolution sol;
    sol.vertex_certificate = true;
    return sol;
  }
  RationalVector objective;
  for (const auto& [id, e] : g.edges()) {
    auto it = costs.find(id);
    objective[id] = it == costs.end() ? Rational(0) : it->second;
  }

  std::vector<LinearConstraint> system;
  {
    LinearConstraint card;
    for (const auto& [id, e] : g.edges()) card.coefficients[id] = 1;
    card.sense = Sense::kEq;
    card.rhs = k - 1;
    card.tag = ConstraintTag::cardinality();
    system.push_back(std::move(card));
  }
  for (const auto& [id, e] : g.edges()) {
    LinearConstraint ub;
    ub.coefficients[id] = 1;
    ub.sense = Sense::kLe;
    ub.rhs = 1;
    ub.tag = ConstraintTag::bound(id);
    system.push_back(std::move(ub));
  }
  for (const NodeSet& l : fixed_sets) {
    if (l.size() < 2) continue;
    LinearConstraint eq;
    for (EdgeId f : g.edges_within(l)) eq.coefficients[f] = 1;
    eq.sense = Sense::kEq;
    eq.rhs = static_cast<int>(l.size()) - 1;
    eq.tag = ConstraintTag::spanning_tree(l);
    if (eq.coefficients.empty()) {
      if (eq.rhs != 0) {
        throw InfeasibleError(
            "fixed spanning-tree set has no internal edges left", {});
      }
      continue;
    }
    system.push_back(std::move(eq));
  }

  for (;;) {
    BasicSolution sol = solve_vertex_lp(system, objective);
    std::vector<LinearConstraint> cuts;
    if (auto cut = separate_spanning_tree(g, sol.x, options.st_threshold)) {
      cuts.push_back(std::move(*cut));
    }
    for (const auto& [w, matroid] : constraints) {
      RationalVector restricted;
      for (EdgeId f : g.delta(w)) restricted[f] = sol.x.at(f);
      if (auto cut = separate_matroid(matroid, restricted, w)) {
        cuts.push_back(std::move(*cut));
      }
    }
    if (cuts.empty()) return sol;
    for (auto& cut : cuts) {
      if (options.on_cut) options.on_cut(cut);
      system.push_back(std::move(cut));
    }
  }
}

std::vector<NodeSet> enumerate_tight_st_sets(const Multigraph& g,
                                             const RationalVector& x,
                                             int st_threshold) {
  int k = static_cast<int>(g.nodes().size());
  if (k > st_threshold) {
    throw ConfigError("enumerate_tight_st_sets: node count exceeds threshold");
  }
  std::vector<NodeSet> out;
  for_each_node_subset(g, x, [&](const NodeSet& s, const Rational& inside) {
    if (inside == Rational(static_cast<int>(s.size()) - 1)) out.push_back(s);
  });
  return out;
}

namespace {

bool sets_cross(const NodeSet& a, const NodeSet& b) {
  NodeSet inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(inter, inter.begin()));
  return !inter.empty() && inter != a && inter != b;
}

Rational inside_value(const Multigraph& g, const RationalVector& x,
                      const NodeSet& s) {
  Rational sum = 0;
  for (EdgeId f : g.edges_within(s)) {
    auto it = x.find(f);
    if (it != x.end()) sum += it->second;
  }
  return sum;
}

bool is_tight(const Multigraph& g, const RationalVector& x, const NodeSet& s) {
  return inside_value(g, x, s) == Rational(static_cast<int>(s.size()) - 1);
}

}  // namespace

std::vector<NodeSet> build_laminar_tight_family(
    const std::vector<NodeSet>& tight_sets, const Multigraph& g,
    const RationalVector& x) {
  std::vector<NodeSet> family;
  auto contains = [&family](const NodeSet& s) {
    return std::find(family.begin(), family.end(), s) != family.end();
  };
  for (const NodeSet& input : tight_sets) {
    if (input.size() < 2 || contains(input)) continue;
    std::vector<NodeSet> pending{input};
    while (!pending.empty()) {
      NodeSet s = std::move(pending.back());
      pending.pop_back();
      if (s.size() < 2 || contains(s)) continue;
      bool crossed = false;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (!sets_cross(s, family[i])) continue;
        NodeSet inter, uni;
        std::set_intersection(s.begin(), s.end(), family[i].begin(),
                              family[i].end(),
                              std::inserter(inter, inter.begin()));
        std::set_union(s.begin(), s.end(), family[i].begin(), family[i].end(),
                       std::inserter(uni, uni.begin()));
        // Uncrossing of two tight sets must yield two tight sets.
        if (!is_tight(g, x, inter) || !is_tight(g, x, uni)) {
          throw InternalInvariantError(
              "uncrossing produced a non-tight intersection or union");
        }
        // Keep the family member: chi(s) = chi(inter) + chi(uni) - chi(member)
        // when no positive edge crosses between the differences, so replacing
        // only the incoming set preserves the constraint span. Both new sets
        // cross strictly fewer family members, so this terminates.
        pending.push_back(std::move(inter));
        pending.push_back(std::move(uni));
        crossed = true;
        break;
      }
      if (!crossed) family.push_back(std::move(s));
    }
  }
  std::sort(family.begin(), family.end(),
            [](const NodeSet& a, const NodeSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                  b.end());
            });
  return family;
}

}  // namespace mdbst
