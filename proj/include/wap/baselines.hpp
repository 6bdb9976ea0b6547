// Copyright 2026, The waplite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "wap/core.hpp"
#include "wap/mine.hpp"

namespace wap {

struct GspStats {
  std::uint64_t levels = 0;
  std::uint64_t peak_candidates = 0; // largest candidate set over all levels
  std::uint64_t total_candidates = 0;
};

/// Candidates of length k+1 from the frequent sequences of length k
/// (ascending, duplicate-free). k == 1: all ordered pairs including equal
/// ones. k >= 2: join s and t when s minus its first element equals t minus
/// its last, emitting s + last(t); then drop candidates with any length-k
/// single-deletion subsequence missing from fk.
std::vector<AccessSequence> gsp_generate_candidates(const std::vector<AccessSequence>& fk);

/// Level-wise mining: one full database scan per level, sequences outer,
/// candidates inner. threads > 1 parallelizes the scan over sequences with
/// identical results.
PatternSet gsp_mine(const WasDatabase& db, const Ratio& threshold, GspStats* stats = nullptr,
                    int threads = 1, const Deadline* deadline = nullptr);

/// Ground-truth enumeration. Each level extends the previous level's
/// frequent patterns by one trailing frequent event and counts by direct
/// scan; no other shared machinery. With apriori_extension false the level's
/// candidates are all event combinations of that length instead (only
/// feasible for tiny inputs); both variants return the same set.
PatternSet brute_force_mine(const WasDatabase& db, const Ratio& threshold,
                            std::size_t max_len = 0, bool apriori_extension = true);

}  // namespace wap
