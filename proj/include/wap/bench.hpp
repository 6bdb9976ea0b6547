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
#include <iosfwd>
#include <string>
#include <vector>

#include "wap/core.hpp"

namespace wap {

/// First n sequences of db as an independent database (m becomes n).
WasDatabase prefix_db(const WasDatabase& db, std::uint64_t n);

struct BenchSpec {
  std::vector<std::string> algorithms; // "wap" and/or "gsp"
  std::vector<Ratio> supports;
  std::vector<std::uint64_t> sizes; // empty: the whole database
  int repeats = 1;                  // timed runs per cell; median reported
  double timeout_seconds = 0;       // per run; 0 disables
};

struct BenchResult {
  std::string algorithm;
  Ratio support;
  std::uint64_t num_sequences = 0;
  double wall_time_s = 0;
  // Both are -1 when the run timed out.
  std::int64_t patterns_found = -1;
  // gsp: peak candidate-set size; wap: labeled nodes over all trees built.
  std::int64_t aux_peak = -1;
  bool timed_out = false;
};

/// Runs every (size, support, algorithm) cell: one untimed warm-up, then
/// `repeats` timed runs of the in-memory mining path (frequent-event scan
/// included, file I/O excluded), reporting the median. Within a cell all
/// algorithms that finish must agree on the pattern count; a mismatch
/// throws std::logic_error.
std::vector<BenchResult> run_benchmark(const WasDatabase& db, const BenchSpec& spec);

/// CSV with header: algo,support,num_sequences,wall_time_s,patterns_found,aux_peak
void write_bench_csv(const std::vector<BenchResult>& results, std::ostream& out);

}  // namespace wap
