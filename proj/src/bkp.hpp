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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"

namespace ixs {

// Knapsack interdiction: the leader removes up to g items, the follower then
// solves the 0-1 knapsack over the remaining ones.
//
// Text format: line 1 "n g b", line 2 the n profits, line 3 the n weights.
struct BkpInstance {
  int n = 0;
  int budget = 0;  // leader budget g
  std::int64_t capacity = 0;
  std::vector<std::int64_t> profit;
  std::vector<std::int64_t> weight;

  void validate() const;
  static BkpInstance parse(const std::string& text);
  std::string to_text() const;
};

// Uniform random instance: profits and weights in {1..100}, capacity half the
// total weight.
BkpInstance gen_bkp(int n, int budget, std::uint64_t seed);

class BkpAdapter : public ProblemAdapter {
 public:
  explicit BkpAdapter(BkpInstance inst) : inst_(std::move(inst)) {
    inst_.validate();
  }

  std::string family() const override { return "bkp"; }
  std::string payload_kind() const override { return "items"; }
  int leader_count() const override { return inst_.n; }
  int leader_budget() const override { return inst_.budget; }
  Rat trivial_value() const override { return Rat(0); }

  // Exact DP on capacity over the non-interdicted items; among equal-profit
  // optima the lexicographically smallest item set is returned, and the
  // blocker set is exactly the chosen items.
  FollowerSample best_response(const LeaderVector& w) const override;

  const BkpInstance& instance() const { return inst_; }

 private:
  BkpInstance inst_;
};

}  // namespace ixs
