// Copyright 2026 The ixs Authors
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

#include "doctest.h"

#include "bkp.hpp"
#include "helpers.hpp"
#include "rng.hpp"

using namespace ixs;

namespace {

BkpInstance two_items() {
  BkpInstance inst;
  inst.n = 2;
  inst.budget = 1;
  inst.capacity = 2;
  inst.profit = {3, 2};
  inst.weight = {2, 2};
  return inst;
}

}  // namespace

TEST_CASE("follower picks the best affordable item") {
  BkpAdapter adapter(two_items());
  auto s = adapter.best_response(adapter.empty_leader());
  CHECK(s.value == Rat(3));
  CHECK(s.selection == std::vector<int>{0});
  CHECK(s.blockers == std::vector<int>{0});  // blockers are the chosen items

  auto s1 = adapter.best_response(adapter.make_leader({0}));
  CHECK(s1.value == Rat(2));
  CHECK(s1.selection == std::vector<int>{1});
}

TEST_CASE("interdicting everything forces the empty solution") {
  BkpInstance inst = two_items();
  inst.budget = 2;
  BkpAdapter adapter(inst);
  auto s = adapter.best_response(adapter.make_leader({0, 1}));
  CHECK(s.value == Rat(0));
  CHECK(s.selection.empty());
  CHECK(s.blockers.empty());
}

TEST_CASE("items heavier than the capacity are never selected") {
  BkpInstance inst;
  inst.n = 3;
  inst.budget = 0;
  inst.capacity = 4;
  inst.profit = {100, 5, 4};
  inst.weight = {5, 2, 2};
  BkpAdapter adapter(inst);
  auto s = adapter.best_response(adapter.empty_leader());
  CHECK(s.value == Rat(9));
  CHECK(s.selection == std::vector<int>{1, 2});
}

TEST_CASE("equal-profit optima resolve to the lexicographically smallest set") {
  BkpInstance inst;
  inst.n = 3;
  inst.budget = 0;
  inst.capacity = 2;
  inst.profit = {4, 4, 4};
  inst.weight = {2, 2, 2};
  BkpAdapter adapter(inst);
  auto s = adapter.best_response(adapter.empty_leader());
  CHECK(s.selection == std::vector<int>{0});
}

TEST_CASE("text format round-trips") {
  BkpInstance inst = gen_bkp(7, 3, 42);
  auto again = BkpInstance::parse(inst.to_text());
  CHECK(again.n == inst.n);
  CHECK(again.budget == inst.budget);
  CHECK(again.capacity == inst.capacity);
  CHECK(again.profit == inst.profit);
  CHECK(again.weight == inst.weight);

  CHECK_THROWS_AS(BkpInstance::parse("2 1 2\n3 2\n1"), Error);
  CHECK_THROWS_AS(BkpInstance::parse("2 1 2\n3 x\n1 1"), Error);
  CHECK_THROWS_AS(BkpInstance::parse("2 5 2\n3 2\n1 1"), Error);  // g > n
}

TEST_CASE("DP matches exhaustive enumeration under random interdictions") {
  SplitMix64 rng(987);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng.next_below(15));  // up to 18
    BkpInstance inst = gen_bkp(n, 0, rng.next());
    inst.budget = static_cast<int>(rng.next_below(n + 1));
    BkpAdapter adapter(inst);
    int gsize = static_cast<int>(rng.next_below(inst.budget + 1));
    LeaderVector w = adapter.make_leader(rng.next_subset(n, gsize));
    auto s = adapter.best_response(w);
    CHECK(s.value == Rat(testing::knapsack_enum(inst, w.support)));

    // The reported selection must be feasible and worth its value.
    std::int64_t wsum = 0, psum = 0;
    for (int i : s.selection) {
      CHECK_FALSE(w.contains(i));
      wsum += inst.weight[i];
      psum += inst.profit[i];
    }
    CHECK(wsum <= inst.capacity);
    CHECK(Rat(psum) == s.value);
  }
}

TEST_CASE("enlarging the interdiction set never helps the follower") {
  SplitMix64 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng.next_below(10));
    BkpInstance inst = gen_bkp(n, n, rng.next());
    BkpAdapter adapter(inst);
    auto base = rng.next_subset(n, static_cast<int>(rng.next_below(n)));
    LeaderVector w1 = adapter.make_leader(base);
    // Extend by one random unused index, if any.
    std::vector<int> bigger = base;
    for (int i = 0; i < n; ++i)
      if (!w1.contains(i)) {
        bigger.push_back(i);
        break;
      }
    LeaderVector w2 = adapter.make_leader(bigger);
    CHECK(adapter.best_response(w2).value <= adapter.best_response(w1).value);
  }
}
