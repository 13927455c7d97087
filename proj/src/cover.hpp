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

#include <vector>

#include "rational.hpp"

namespace ixs {

// One blocker set in the lower-bound covering problem. A set is "covered"
// once any of its indices is selected; mandatory sets are those whose sample
// value exceeds the current upper bound and therefore must be hit in any
// optimal leader solution.
struct CoverSet {
  std::vector<int> indices;  // sorted, non-empty, within [0, ground_n)
  Rat value;
  bool mandatory = false;
};

// Budgeted covering problem for one lower-bound step. Selecting at most
// `budget` ground indices, the achievable bound is `z0` iff every set can be
// hit; otherwise it is `zbar`. Duplicate sets are merged at construction,
// keeping the larger value (and the mandatory flag if either copy had it).
class CoverProblem {
 public:
  CoverProblem(int ground_n, std::vector<CoverSet> sets, int budget, Rat z0,
               Rat zbar);

  int ground_n() const { return ground_n_; }
  int budget() const { return budget_; }
  const Rat& z0() const { return z0_; }
  const Rat& zbar() const { return zbar_; }
  const std::vector<CoverSet>& sets() const { return sets_; }
  const std::vector<int>& sets_containing(int index) const {
    return incidence_[index];
  }

 private:
  int ground_n_;
  int budget_;
  Rat z0_;
  Rat zbar_;
  std::vector<CoverSet> sets_;
  std::vector<std::vector<int>> incidence_;  // ground index -> set ids
};

struct CoverSolution {
  std::vector<int> chosen;   // sorted, |chosen| <= budget
  std::vector<int> covered;  // set ids hit by `chosen`, ascending
  bool full_cover = false;   // every set covered
  Rat bound;                 // z0 on full cover, zbar otherwise; exact only
  bool exact = false;        // produced by exact_lb rather than the heuristic
};

// Greedy maximum covering: repeatedly select the index hitting the most
// uncovered sets (ties to the lowest index), at most `budget` picks, stopping
// early on full coverage. On full coverage `bound` is z0 and the caller can
// skip the exact solve; otherwise `bound` is meaningless and `full_cover` is
// false.
CoverSolution greedy_cover(const CoverProblem& p);

// Exact lower-bound solve. Decides by branch-and-bound whether a <=budget
// selection hits every set: if so returns z0 with such a witness, otherwise
// returns zbar with a witness hitting all mandatory sets. Mandatory sets that
// cannot be hit within budget indicate a corrupted sample pool upstream and
// raise an internal error.
CoverSolution exact_lb(const CoverProblem& p);

// Independent validity check used after every solve (and by tests): budget
// respected, `covered` exact, mandatory sets hit when claimed, bound
// consistent with coverage.
void verify_cover_solution(const CoverProblem& p, const CoverSolution& s);

}  // namespace ixs
