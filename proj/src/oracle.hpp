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

#include "instance.hpp"

namespace ixs {

struct OracleResult {
  Rat z;
  LeaderVector leader;           // lexicographically smallest minimizer
  FollowerSample response;       // exact follower answer at `leader`
  std::uint64_t enumerated = 0;  // leader vectors actually evaluated
};

// Independent verification oracle: enumerates every leader vector with at
// most g interdictions, solves the follower exactly for each, and returns
// the minimizing pair (ties to the lexicographically smallest leader).
//
// A clique-interdiction instance with at most 64 edges is evaluated against a
// pre-enumerated table of all cliques instead of one clique search per
// leader; the enumeration and tie-breaking are unchanged. `cap` bounds the
// number of leader vectors (0 selects a per-family default); instances whose
// leader space exceeds it are rejected as too large. `force_generic`
// disables the clique-table path (used to cross-check the two evaluators).
OracleResult brute_force_bilevel(const Instance& inst, std::uint64_t cap = 0,
                                 bool force_generic = false);

}  // namespace ixs
