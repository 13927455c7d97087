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

#include "bkp.hpp"

#include <sstream>

#include "rng.hpp"
#include "util.hpp"

namespace ixs {

void BkpInstance::validate() const {
  if (n < 1) fail(ErrorKind::invalid_argument, "bkp: need at least one item");
  if (budget < 0 || budget > n)
    fail(ErrorKind::invalid_argument, "bkp: budget outside [0, n]");
  if (capacity < 0) fail(ErrorKind::invalid_argument, "bkp: negative capacity");
  if (static_cast<int>(profit.size()) != n ||
      static_cast<int>(weight.size()) != n)
    fail(ErrorKind::invalid_argument, "bkp: profit/weight size mismatch");
  for (int i = 0; i < n; ++i) {
    if (profit[i] <= 0)
      fail(ErrorKind::invalid_argument, "bkp: profits must be positive");
    if (weight[i] <= 0)
      fail(ErrorKind::invalid_argument, "bkp: weights must be positive");
  }
  if (static_cast<std::int64_t>(n + 1) * (capacity + 1) > 16'000'000)
    fail(ErrorKind::too_large, "bkp: capacity too large for the DP follower");
}

BkpInstance BkpInstance::parse(const std::string& text) {
  TokenReader r(text, "bkp instance");
  BkpInstance inst;
  inst.n = static_cast<int>(r.next_int("n"));
  inst.budget = static_cast<int>(r.next_int("g"));
  inst.capacity = r.next_int("b");
  if (inst.n < 1) fail(ErrorKind::parse, "bkp: need at least one item");
  inst.profit.resize(inst.n);
  inst.weight.resize(inst.n);
  for (int i = 0; i < inst.n; ++i) inst.profit[i] = r.next_int("profit");
  for (int i = 0; i < inst.n; ++i) inst.weight[i] = r.next_int("weight");
  r.expect_done();
  inst.validate();
  return inst;
}

std::string BkpInstance::to_text() const {
  std::ostringstream out;
  out << n << " " << budget << " " << capacity << "\n";
  for (int i = 0; i < n; ++i) out << (i ? " " : "") << profit[i];
  out << "\n";
  for (int i = 0; i < n; ++i) out << (i ? " " : "") << weight[i];
  out << "\n";
  return out.str();
}

BkpInstance gen_bkp(int n, int budget, std::uint64_t seed) {
  if (n < 1) fail(ErrorKind::invalid_argument, "gen bkp: n must be >= 1");
  if (budget < 0 || budget > n)
    fail(ErrorKind::invalid_argument, "gen bkp: budget outside [0, n]");
  BkpInstance inst;
  inst.n = n;
  inst.budget = budget;
  SplitMix64 rng(seed);
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    inst.profit.push_back(1 + static_cast<std::int64_t>(rng.next_below(100)));
    inst.weight.push_back(1 + static_cast<std::int64_t>(rng.next_below(100)));
    total += inst.weight.back();
  }
  inst.capacity = (total + 1) / 2;
  inst.validate();
  return inst;
}

FollowerSample BkpAdapter::best_response(const LeaderVector& w) const {
  const int n = inst_.n;
  const std::int64_t b = inst_.capacity;

  // best[i][c]: optimum over items i..n-1 with residual capacity c.
  std::vector<std::vector<std::int64_t>> best(
      n + 1, std::vector<std::int64_t>(b + 1, 0));
  for (int i = n - 1; i >= 0; --i) {
    const bool usable = !w.contains(i) && inst_.weight[i] <= b;
    for (std::int64_t c = 0; c <= b; ++c) {
      std::int64_t v = best[i + 1][c];
      if (usable && inst_.weight[i] <= c) {
        std::int64_t take = inst_.profit[i] + best[i + 1][c - inst_.weight[i]];
        if (take > v) v = take;
      }
      best[i][c] = v;
    }
  }

  // Walking forward and taking an item whenever doing so preserves the
  // optimum yields the lexicographically smallest optimal item set.
  FollowerSample s;
  s.kind = payload_kind();
  std::int64_t c = b;
  for (int i = 0; i < n; ++i) {
    if (w.contains(i) || inst_.weight[i] > c) continue;
    if (inst_.profit[i] + best[i + 1][c - inst_.weight[i]] == best[i][c]) {
      s.selection.push_back(i);
      c -= inst_.weight[i];
    }
  }

  s.value = Rat(best[0][b]);
  s.blockers = s.selection;  // interdicting any chosen item blocks the solution
  return s;
}

}  // namespace ixs
