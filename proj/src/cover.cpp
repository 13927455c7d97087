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

#include "cover.hpp"

#include <algorithm>
#include <map>

#include "util.hpp"

namespace ixs {

CoverProblem::CoverProblem(int ground_n, std::vector<CoverSet> sets, int budget,
                           Rat z0, Rat zbar)
    : ground_n_(ground_n), budget_(budget), z0_(z0), zbar_(zbar) {
  if (ground_n < 0) fail(ErrorKind::invalid_argument, "cover: negative ground set");
  if (budget < 0) fail(ErrorKind::invalid_argument, "cover: negative budget");
  if (zbar < z0) fail(ErrorKind::invalid_argument, "cover: zbar below z0");

  // Canonicalize and deduplicate: identical index sets impose identical
  // constraints, so only the strongest label needs to be kept.
  std::map<std::vector<int>, CoverSet> uniq;
  for (CoverSet& s : sets) {
    if (s.indices.empty())
      fail(ErrorKind::invalid_argument, "cover: empty blocker set");
    std::sort(s.indices.begin(), s.indices.end());
    s.indices.erase(std::unique(s.indices.begin(), s.indices.end()),
                    s.indices.end());
    if (s.indices.front() < 0 || s.indices.back() >= ground_n)
      fail(ErrorKind::invalid_argument, "cover: index out of range");
    if (!s.mandatory && zbar_ < s.value)
      fail(ErrorKind::invalid_argument,
           "cover: non-mandatory set valued above zbar");
    auto [it, inserted] = uniq.emplace(s.indices, s);
    if (!inserted) {
      if (it->second.value < s.value) it->second.value = s.value;
      it->second.mandatory = it->second.mandatory || s.mandatory;
    }
  }
  sets_.reserve(uniq.size());
  for (auto& [key, s] : uniq) sets_.push_back(std::move(s));

  incidence_.assign(ground_n_, {});
  for (int t = 0; t < static_cast<int>(sets_.size()); ++t)
    for (int i : sets_[t].indices) incidence_[i].push_back(t);
}

namespace {

std::vector<int> covered_by(const CoverProblem& p, const std::vector<int>& chosen) {
  std::vector<char> hit(p.sets().size(), 0);
  for (int i : chosen)
    for (int t : p.sets_containing(i)) hit[t] = 1;
  std::vector<int> covered;
  for (int t = 0; t < static_cast<int>(hit.size()); ++t)
    if (hit[t]) covered.push_back(t);
  return covered;
}

// Exhaustive hitting search over a subset of the family, shared by the
// full-cover decision and the mandatory-only fallback.
class HittingSearch {
 public:
  HittingSearch(const CoverProblem& p, const std::vector<int>& target_sets)
      : p_(p), targets_(target_sets), forbidden_(p.ground_n(), 0) {
    hit_count_.assign(p_.sets().size(), 0);
    is_target_.assign(p_.sets().size(), 0);
    for (int t : targets_) is_target_[t] = 1;
  }

  // Returns true iff some selection of at most `budget` indices hits every
  // target set; the first witness found (in deterministic branch order) is
  // left in `witness`.
  bool run(int budget) {
    chosen_.clear();
    uncovered_ = static_cast<int>(targets_.size());
    std::fill(hit_count_.begin(), hit_count_.end(), 0);
    std::fill(forbidden_.begin(), forbidden_.end(), 0);
    return dfs(budget);
  }

  std::vector<int> witness;

 private:
  bool dfs(int budget) {
    if (uncovered_ == 0) {
      witness = chosen_;
      std::sort(witness.begin(), witness.end());
      return true;
    }
    if (budget == 0) return false;
    if (lower_bound_exceeds(budget)) return false;

    // Branch on the uncovered target with the fewest available indices.
    int best_t = -1;
    int best_avail = -1;
    for (int t : targets_) {
      if (hit_count_[t] > 0) continue;
      int avail = 0;
      for (int i : p_.sets()[t].indices)
        if (!forbidden_[i]) ++avail;
      if (avail == 0) return false;  // set can no longer be hit on this branch
      if (best_t < 0 || avail < best_avail) {
        best_t = t;
        best_avail = avail;
      }
    }
    IXS_CHECK(best_t >= 0, "hitting search lost its uncovered set");

    // Try each available index of the branching set; indices already tried
    // are forbidden in later branches so each selection is enumerated once.
    std::vector<int> tried;
    bool found = false;
    for (int i : p_.sets()[best_t].indices) {
      if (forbidden_[i]) continue;
      pick(i);
      found = dfs(budget - 1);
      unpick(i);
      if (found) break;
      forbidden_[i] = 1;
      tried.push_back(i);
    }
    for (int i : tried) forbidden_[i] = 0;
    return found;
  }

  // Greedy-residual bound: uncovered targets that are pairwise disjoint (on
  // their still-available indices) each need a distinct pick.
  bool lower_bound_exceeds(int budget) {
    used_.assign(p_.ground_n(), 0);
    int need = 0;
    for (int t : targets_) {
      if (hit_count_[t] > 0) continue;
      bool disjoint = true;
      for (int i : p_.sets()[t].indices)
        if (!forbidden_[i] && used_[i]) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      for (int i : p_.sets()[t].indices)
        if (!forbidden_[i]) used_[i] = 1;
      if (++need > budget) return true;
    }
    return false;
  }

  void pick(int i) {
    chosen_.push_back(i);
    for (int t : p_.sets_containing(i)) {
      if (hit_count_[t] == 0 && is_target_[t]) --uncovered_;
      ++hit_count_[t];
    }
  }

  void unpick(int i) {
    chosen_.pop_back();
    for (int t : p_.sets_containing(i)) {
      --hit_count_[t];
      if (hit_count_[t] == 0 && is_target_[t]) ++uncovered_;
    }
  }

  const CoverProblem& p_;
  std::vector<int> targets_;
  std::vector<char> is_target_;
  std::vector<char> forbidden_;
  std::vector<int> hit_count_;
  std::vector<char> used_;
  std::vector<int> chosen_;
  int uncovered_ = 0;
};

}  // namespace

CoverSolution greedy_cover(const CoverProblem& p) {
  CoverSolution sol;
  const auto& sets = p.sets();
  std::vector<char> hit(sets.size(), 0);
  int uncovered = static_cast<int>(sets.size());

  for (int pick = 0; pick < p.budget() && uncovered > 0; ++pick) {
    int best_i = -1;
    int best_gain = 0;
    for (int i = 0; i < p.ground_n(); ++i) {
      int gain = 0;
      for (int t : p.sets_containing(i))
        if (!hit[t]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_i = i;
      }
    }
    if (best_i < 0) break;
    sol.chosen.push_back(best_i);
    for (int t : p.sets_containing(best_i)) {
      if (!hit[t]) --uncovered;
      hit[t] = 1;
    }
  }

  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.covered = covered_by(p, sol.chosen);
  sol.full_cover = (uncovered == 0);
  sol.bound = sol.full_cover ? p.z0() : p.zbar();
  sol.exact = false;
  if (sol.full_cover) verify_cover_solution(p, sol);
  return sol;
}

CoverSolution exact_lb(const CoverProblem& p) {
  std::vector<int> all_sets(p.sets().size());
  for (int t = 0; t < static_cast<int>(all_sets.size()); ++t) all_sets[t] = t;

  CoverSolution sol;
  sol.exact = true;

  HittingSearch full(p, all_sets);
  if (full.run(p.budget())) {
    sol.chosen = full.witness;
    sol.full_cover = true;
    sol.bound = p.z0();
  } else {
    // No selection blocks everything, so the bound stays at zbar; a witness
    // hitting the mandatory sets always exists (the incumbent leader blocks
    // every must-block sample), and failing to find one means the pool
    // invariants were violated upstream.
    std::vector<int> mandatory;
    for (int t = 0; t < static_cast<int>(p.sets().size()); ++t)
      if (p.sets()[t].mandatory) mandatory.push_back(t);
    HittingSearch mand(p, mandatory);
    if (!mand.run(p.budget()))
      fail(ErrorKind::internal,
           "LB'' infeasible: mandatory blocker sets not hittable within budget");
    sol.chosen = mand.witness;
    sol.full_cover = false;
    sol.bound = p.zbar();
  }

  sol.covered = covered_by(p, sol.chosen);
  verify_cover_solution(p, sol);
  return sol;
}

void verify_cover_solution(const CoverProblem& p, const CoverSolution& s) {
  IXS_CHECK(static_cast<int>(s.chosen.size()) <= p.budget(),
            "cover solution exceeds budget");
  for (int i : s.chosen)
    IXS_CHECK(i >= 0 && i < p.ground_n(), "cover solution index out of range");
  std::vector<int> expect = covered_by(p, s.chosen);
  IXS_CHECK(expect == s.covered, "cover solution covered-set mismatch");
  std::vector<char> hit(p.sets().size(), 0);
  for (int t : s.covered) hit[t] = 1;
  if (s.full_cover) {
    IXS_CHECK(s.covered.size() == p.sets().size(),
              "full cover claimed but sets remain uncovered");
    IXS_CHECK(s.bound == p.z0(), "full cover must bound at z0");
  } else if (s.exact) {
    for (int t = 0; t < static_cast<int>(p.sets().size()); ++t)
      if (p.sets()[t].mandatory)
        IXS_CHECK(hit[t], "exact cover solution missed a mandatory set");
    IXS_CHECK(s.bound == p.zbar(), "partial cover must bound at zbar");
  }
}

}  // namespace ixs
