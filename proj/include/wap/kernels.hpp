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

#include <cstdint>
#include <vector>

#include "wap/core.hpp"

namespace wap {

/// Support count per candidate over db.sequences by direct subsequence
/// scan. The reference implementation; always sequential.
std::vector<std::uint64_t> count_supports_serial(const WasDatabase& db,
                                                 const std::vector<AccessSequence>& candidates);

/// Same counts with the sequence loop partitioned across OpenMP threads;
/// per-thread tallies are summed, so results are identical to the serial
/// kernel. Falls back to it when OpenMP is unavailable or threads <= 1.
std::vector<std::uint64_t> count_supports_parallel(const WasDatabase& db,
                                                   const std::vector<AccessSequence>& candidates,
                                                   int threads);

std::vector<std::uint64_t> count_supports(const WasDatabase& db,
                                          const std::vector<AccessSequence>& candidates,
                                          int threads);

}  // namespace wap
