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

#include "wap/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wap {

std::vector<std::uint64_t> count_supports_serial(
    const WasDatabase& db, const std::vector<AccessSequence>& candidates) {
  std::vector<std::uint64_t> counts(candidates.size(), 0);
  for (const AccessSequence& s : db.sequences) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (candidates[c].size() <= s.size() && is_subsequence(candidates[c], s)) {
        ++counts[c];
      }
    }
  }
  return counts;
}

std::vector<std::uint64_t> count_supports_parallel(
    const WasDatabase& db, const std::vector<AccessSequence>& candidates, int threads) {
#ifdef _OPENMP
  if (threads > 1) {
    std::vector<std::uint64_t> counts(candidates.size(), 0);
    const auto& seqs = db.sequences;
    const std::int64_t n = static_cast<std::int64_t>(seqs.size());
#pragma omp parallel num_threads(threads)
    {
      std::vector<std::uint64_t> local(candidates.size(), 0);
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < n; ++i) {
        const AccessSequence& s = seqs[static_cast<std::size_t>(i)];
        for (std::size_t c = 0; c < candidates.size(); ++c) {
          if (candidates[c].size() <= s.size() && is_subsequence(candidates[c], s)) {
            ++local[c];
          }
        }
      }
      // Integer sums commute, so merge order cannot change the result.
#pragma omp critical
      for (std::size_t c = 0; c < candidates.size(); ++c) counts[c] += local[c];
    }
    return counts;
  }
#else
  (void)threads;
#endif
  return count_supports_serial(db, candidates);
}

std::vector<std::uint64_t> count_supports(const WasDatabase& db,
                                          const std::vector<AccessSequence>& candidates,
                                          int threads) {
  if (threads > 1) return count_supports_parallel(db, candidates, threads);
  return count_supports_serial(db, candidates);
}

}  // namespace wap
