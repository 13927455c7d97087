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

#include <algorithm>

#include "core.hpp"
#include "util.hpp"

namespace ixs {

void LeaderVector::validate() const {
  if (n < 0 || budget < 0)
    fail(ErrorKind::invalid_argument, "leader vector with negative dimensions");
  if (static_cast<int>(support.size()) > budget)
    fail(ErrorKind::invalid_argument, "leader vector exceeds budget " +
                                          std::to_string(budget));
  int prev = -1;
  for (int i : support) {
    if (i < 0 || i >= n)
      fail(ErrorKind::invalid_argument,
           "leader index " + std::to_string(i) + " outside [0," +
               std::to_string(n) + ")");
    if (i <= prev)
      fail(ErrorKind::invalid_argument, "leader support not sorted/distinct");
    prev = i;
  }
}

std::string LeaderVector::str() const {
  std::string s = "{";
  for (size_t k = 0; k < support.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(support[k]);
  }
  s += "}";
  return s;
}

bool leader_lex_less(const LeaderVector& a, const LeaderVector& b) {
  // First differing component decides; the vector with a 0 there is smaller.
  size_t ia = 0, ib = 0;
  while (ia < a.support.size() && ib < b.support.size()) {
    if (a.support[ia] == b.support[ib]) {
      ++ia;
      ++ib;
    } else {
      return a.support[ia] > b.support[ib];
    }
  }
  return ia == a.support.size() && ib < b.support.size();
}

bool FollowerSample::blocked_by(const LeaderVector& w) const {
  for (int i : blockers)
    if (w.contains(i)) return true;
  return false;
}

LeaderVector ProblemAdapter::make_leader(std::vector<int> support) const {
  std::sort(support.begin(), support.end());
  LeaderVector w{leader_count(), leader_budget(), std::move(support)};
  w.validate();
  return w;
}

SamplePool::SamplePool(Rat z0, FollowerSample trivial) : z0_(z0) {
  IXS_CHECK(trivial.blockers.empty(), "trivial solution must be unblockable");
  IXS_CHECK(trivial.value == z0, "trivial solution value must equal z0");
  trivial.id = 0;
  samples_.push_back(std::move(trivial));
}

bool SamplePool::add(FollowerSample sample) {
  IXS_CHECK(z0_ <= sample.value,
            "follower optimum below the trivial value z0");
  sample.id = static_cast<int>(samples_.size());
  bool duplicate = false;
  for (const FollowerSample& s : samples_)
    if (s.same_solution(sample)) {
      duplicate = true;
      break;
    }

  if (!zbar_ || sample.value < *zbar_) {
    zbar_ = sample.value;
    incumbent_id_ = sample.id;
  }
  samples_.push_back(std::move(sample));

  must_block_.clear();
  for (const FollowerSample& s : samples_)
    if (s.id != 0 && *zbar_ < s.value) must_block_.push_back(s.id);

  check_invariants();
  return duplicate;
}

const Rat& SamplePool::zbar() const {
  IXS_CHECK(zbar_.has_value(), "upper bound queried on a trivial-only pool");
  return *zbar_;
}

const LeaderVector& SamplePool::incumbent() const {
  return incumbent_sample().origin;
}

const FollowerSample& SamplePool::incumbent_sample() const {
  IXS_CHECK(incumbent_id_ > 0, "incumbent queried before any follower sample");
  return samples_[incumbent_id_];
}

Rat SamplePool::lb_value_given_w(const LeaderVector& w) const {
  Rat best = z0_;  // sample 0 is never blocked
  for (const FollowerSample& s : samples_)
    if (!s.blocked_by(w) && best < s.value) best = s.value;
  return best;
}

void SamplePool::check_invariants() const {
  if (!zbar_) return;
  Rat min_val = samples_[1].value;
  for (const FollowerSample& s : samples_)
    if (s.id != 0 && s.value < min_val) min_val = s.value;
  IXS_CHECK(min_val == *zbar_, "zbar is not the minimum sample value");
  IXS_CHECK(z0_ <= *zbar_, "zbar fell below z0");

  std::vector<int> expect;
  for (const FollowerSample& s : samples_)
    if (s.id != 0 && *zbar_ < s.value) expect.push_back(s.id);
  IXS_CHECK(expect == must_block_, "must-block index set is stale");

  const FollowerSample& inc = incumbent_sample();
  IXS_CHECK(inc.value == *zbar_, "incumbent does not achieve zbar");
  // The incumbent's response achieved zbar, so any sample valued above zbar
  // would have been infeasible under it: the incumbent blocks all of them.
  for (int id : must_block_)
    IXS_CHECK(samples_[id].blocked_by(inc.origin),
              "must-block sample not blocked by the incumbent");
}

void IxsConfig::validate() const {
  if (rho < 1) fail(ErrorKind::invalid_argument, "rho must be >= 1");
  if (!(time_limit_s > 0))
    fail(ErrorKind::invalid_argument, "time limit must be positive");
}

}  // namespace ixs
