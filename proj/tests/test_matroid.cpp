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

#include <cstdint>
#include <thread>
#include <vector>

#include "mdbst/matroid.hpp"

using namespace mdbst;

namespace {

std::vector<EdgeSet> all_subsets(const EdgeSet& ground) {
  std::vector<EdgeSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ground.size()); ++m) {
    EdgeSet s;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (m & (std::uint64_t{1} << i)) s.push_back(ground[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Reference union rank: max |I1 u I2| over independent pairs within `a`.
int brute_union_rank(const Matroid& m1, const Matroid& m2, const EdgeSet& a) {
  int best = 0;
  for (const EdgeSet& i1 : all_subsets(a)) {
    if (!m1.is_independent(i1)) continue;
    for (const EdgeSet& i2 : all_subsets(a)) {
      if (!m2.is_independent(i2)) continue;
      EdgeSet u = i1;
      u.insert(u.end(), i2.begin(), i2.end());
      u = make_edge_set(std::move(u));
      best = std::max<int>(best, u.size());
    }
  }
  return best;
}

}  // namespace

TEST_CASE("uniform rank cap") {
  Matroid m = Matroid::uniform({1, 2, 3}, 1);
  CHECK(m.rank({1, 2}) == 1);
  CHECK(m.rank({}) == 0);
  CHECK(m.rank({3}) == 1);
  CHECK(m.rank_full() == 1);
}

TEST_CASE("union of two rank-1 uniforms has rank 2") {
  Matroid u1 = Matroid::uniform({1, 2}, 1);
  Matroid m = Matroid::matroid_union(u1, Matroid::uniform({1, 2}, 1));
  CHECK(m.rank({1, 2}) == 2);
  CHECK(m.rank({1}) == 1);
}

TEST_CASE("contraction rank formula") {
  Matroid base = Matroid::uniform({1, 2, 3}, 2);
  Matroid c = Matroid::contraction(base, {1});
  CHECK(c.rank({2, 3}) == 1);  // r({1,2,3}) - r({1}) = 2 - 1
  CHECK(c.rank({2}) == 1);
}

TEST_CASE("independence") {
  CHECK(Matroid::uniform({1, 2}, 1).is_independent({}));
  CHECK_FALSE(Matroid::uniform({1, 2}, 1).is_independent({1, 2}));
  Matroid p = Matroid::partition({{{1, 2}, 1}, {{3}, 1}});
  CHECK(p.is_independent({1, 3}));
  CHECK_FALSE(p.is_independent({1, 2}));
}

TEST_CASE("free elements") {
  CHECK(Matroid::free_matroid({1, 2}).is_free_element(1));
  CHECK_FALSE(Matroid::uniform({1, 2}, 1).is_free_element(1));
  Matroid ds = Matroid::direct_sum(
      {Matroid::free_matroid({1}), Matroid::uniform({2, 3}, 1)});
  CHECK(ds.is_free_element(1));
  CHECK_FALSE(ds.is_free_element(2));
}

TEST_CASE("direct sum") {
  Matroid ds = Matroid::direct_sum(
      {Matroid::uniform({1}, 1), Matroid::uniform({2}, 1)});
  CHECK(ds.rank({1, 2}) == 2);
  CHECK(Matroid::direct_sum({}).ground().empty());
  Matroid ds2 = Matroid::direct_sum(
      {Matroid::partition({{{1, 2}, 1}}), Matroid::free_matroid({3})});
  CHECK_FALSE(ds2.is_independent({1, 2, 3}));
  CHECK_THROWS_AS(Matroid::direct_sum({Matroid::free_matroid({1}),
                                       Matroid::free_matroid({1})}),
                  DomainError);
}

TEST_CASE("union with a one-slot loop extension frees a pair") {
  // rank-1 uniform on {f1,f2} joined with one spare slot reaches rank 2
  Matroid part = Matroid::uniform({1, 2}, 1);
  Matroid m1 = Matroid::loop_extension(Matroid::uniform({1, 2}, 1), {});
  Matroid m2 = Matroid::matroid_union(m1, part);
  CHECK(m2.rank({1, 2}) == 2);
}

TEST_CASE("union of loops contributes nothing") {
  Matroid m = Matroid::matroid_union(Matroid::uniform({1, 2}, 0),
                                     Matroid::uniform({1, 2}, 1));
  CHECK(m.rank({1, 2}) == 1);
}

TEST_CASE("union of free matroids is free") {
  Matroid m = Matroid::matroid_union(Matroid::free_matroid({1}),
                                     Matroid::free_matroid({1}));
  CHECK(m.rank({1}) == 1);
  CHECK(m.is_free_element(1));
  CHECK_THROWS_AS(Matroid::matroid_union(Matroid::free_matroid({1}),
                                         Matroid::free_matroid({2})),
                  DomainError);
}

TEST_CASE("contraction edge cases") {
  Matroid f = Matroid::contraction(Matroid::free_matroid({1, 2}), {1});
  CHECK(f.rank({2}) == 1);
  Matroid u = Matroid::contraction(Matroid::uniform({1, 2}, 1), {1});
  CHECK(u.rank({2}) == 0);  // 2 became a loop
  Matroid m = Matroid::uniform({1, 2, 3}, 2);
  Matroid id = Matroid::contraction(m, {});
  for (const EdgeSet& s : all_subsets(m.ground())) {
    CHECK(id.rank(s) == m.rank(s));
  }
  CHECK_THROWS_AS(Matroid::contraction(m, {9}), DomainError);
}

TEST_CASE("min removals to independent") {
  CHECK(Matroid::uniform({1, 2, 3}, 1).min_removals_to_independent(
            {1, 2, 3}) == 2);
  CHECK(Matroid::uniform({1, 2, 3}, 2).min_removals_to_independent({1}) == 0);
  Matroid lam = Matroid::laminar({1, 2, 3}, {{{1, 2}, 1}, {{1, 2, 3}, 2}});
  CHECK(lam.min_removals_to_independent({1, 2, 3}) == 1);
  CHECK(lam.rank({1, 2, 3}) == 2);
}

TEST_CASE("laminar validation") {
  CHECK_THROWS_AS(Matroid::laminar({1, 2, 3}, {{{1, 2}, 1}, {{2, 3}, 1}}),
                  DomainError);  // crossing sets
  CHECK_THROWS_AS(Matroid::partition({{{1, 2}, 1}, {{2}, 1}}),
                  DomainError);  // overlapping blocks
}

TEST_CASE("explicit table validation") {
  std::map<EdgeSet, int> good{{{}, 0}, {{1}, 1}, {{2}, 1}, {{1, 2}, 1}};
  Matroid m = Matroid::explicit_table({1, 2}, good);
  CHECK(m.rank({1, 2}) == 1);
  std::map<EdgeSet, int> bad{{{}, 0}, {{1}, 0}, {{2}, 0}, {{1, 2}, 1}};
  CHECK_THROWS_AS(Matroid::explicit_table({1, 2}, bad),
                  DomainError);  // not monotone-compatible submodular
}

TEST_CASE("rank rejects foreign elements") {
  CHECK_THROWS_AS(Matroid::uniform({1, 2}, 1).rank({3}), DomainError);
  CHECK_THROWS_AS(Matroid::uniform({1, 2}, 1).is_free_element(3), DomainError);
}

TEST_CASE("axiom check on every constructor kind") {
  std::vector<Matroid> all = {
      Matroid::free_matroid({1, 2, 3}),
      Matroid::uniform({1, 2, 3, 4}, 2),
      Matroid::partition({{{1, 2}, 1}, {{3, 4}, 2}}),
      Matroid::laminar({1, 2, 3, 4}, {{{1, 2}, 1}, {{1, 2, 3, 4}, 3}}),
      Matroid::matroid_union(Matroid::uniform({1, 2, 3}, 1),
                             Matroid::uniform({1, 2, 3}, 2)),
      Matroid::contraction(Matroid::uniform({1, 2, 3}, 2), {2}),
      Matroid::loop_extension(Matroid::uniform({1, 2}, 1), {5, 6}),
      Matroid::restriction(Matroid::uniform({1, 2, 3}, 2), {1, 3}),
      Matroid::direct_sum({Matroid::uniform({1, 2}, 1),
                           Matroid::free_matroid({7})}),
  };
  for (const Matroid& m : all) CHECK(m.satisfies_matroid_axioms());
}

TEST_CASE("union rank matches brute force") {
  std::vector<std::pair<Matroid, Matroid>> cases = {
      {Matroid::uniform({1, 2, 3, 4}, 2),
       Matroid::partition({{{1, 2}, 1}, {{3, 4}, 1}})},
      {Matroid::laminar({1, 2, 3}, {{{1, 2}, 1}, {{1, 2, 3}, 2}}),
       Matroid::uniform({1, 2, 3}, 1)},
      {Matroid::uniform({1, 2, 3, 4, 5}, 0),
       Matroid::uniform({1, 2, 3, 4, 5}, 3)},
  };
  for (const auto& [m1, m2] : cases) {
    Matroid u = Matroid::matroid_union(m1, m2);
    for (const EdgeSet& a : all_subsets(m1.ground())) {
      CHECK(u.rank(a) == brute_union_rank(m1, m2, a));
    }
  }
}

TEST_CASE("free element agrees with the definitional check") {
  std::vector<Matroid> cases = {
      Matroid::partition({{{1, 2}, 1}, {{3}, 1}}),
      Matroid::laminar({1, 2, 3, 4}, {{{1, 2}, 2}, {{1, 2, 3, 4}, 3}}),
      Matroid::direct_sum({Matroid::free_matroid({1, 2}),
                           Matroid::uniform({3, 4}, 1)}),
  };
  for (const Matroid& m : cases) {
    for (EdgeId e : m.ground()) {
      bool definitional = true;
      for (const EdgeSet& i : all_subsets(m.ground())) {
        if (!m.is_independent(i)) continue;
        EdgeSet ie = i;
        ie.push_back(e);
        ie = make_edge_set(std::move(ie));
        if (!m.is_independent(ie)) {
          definitional = false;
          break;
        }
      }
      CHECK(m.is_free_element(e) == definitional);
    }
  }
}

TEST_CASE("contraction identity on sampled subsets") {
  Matroid m = Matroid::laminar({1, 2, 3, 4}, {{{1, 2}, 1}, {{1, 2, 3, 4}, 3}});
  EdgeSet c = {1, 3};
  Matroid mc = Matroid::contraction(m, c);
  for (const EdgeSet& a : all_subsets(mc.ground())) {
    EdgeSet ac = a;
    ac.insert(ac.end(), c.begin(), c.end());
    CHECK(mc.rank(a) + m.rank(c) == m.rank(make_edge_set(std::move(ac))));
  }
}

TEST_CASE("concurrent rank queries agree") {
  Matroid m = Matroid::matroid_union(Matroid::uniform({1, 2, 3, 4, 5, 6}, 3),
                                     Matroid::uniform({1, 2, 3, 4, 5, 6}, 2));
  std::vector<EdgeSet> subsets = all_subsets(m.ground());
  std::vector<int> expected;
  for (const EdgeSet& s : subsets) expected.push_back(m.rank(s));
  std::vector<std::thread> workers;
  std::vector<int> fails(4, 0);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (m.rank(subsets[i]) != expected[i]) ++fails[t];
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int f : fails) CHECK(f == 0);
}

TEST_CASE("ground limit guards enumeration kinds") {
  EdgeSet big;
  for (int i = 0; i < 17; ++i) big.push_back(i);
  CHECK_THROWS_AS(Matroid::matroid_union(Matroid::uniform(big, 3),
                                         Matroid::uniform(big, 2)),
                  ConfigError);
  // free/uniform ranks stay closed-form and unaffected
  CHECK(Matroid::uniform(big, 3).rank(big) == 3);
}
