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

#include "wap/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "wap/baselines.hpp"
#include "wap/mine.hpp"

namespace wap {

WasDatabase prefix_db(const WasDatabase& db, std::uint64_t n) {
  if (n > db.m()) throw std::invalid_argument("prefix larger than database");
  WasDatabase out;
  out.dict = db.dict;
  out.sequences.assign(db.sequences.begin(),
                       db.sequences.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

namespace {

struct RunOutcome {
  double seconds = 0;
  std::uint64_t patterns = 0;
  std::uint64_t aux = 0;
};

RunOutcome run_once(const WasDatabase& db, const std::string& algo, const Ratio& support,
                    double timeout_seconds) {
  Deadline deadline{};
  const Deadline* dl = nullptr;
  if (timeout_seconds > 0) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(timeout_seconds));
    dl = &deadline;
  }
  RunOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  if (algo == "wap") {
    MiningStats stats;
    PatternSet p = wap_mine(db, support, &stats, dl);
    out.patterns = p.size();
    out.aux = stats.nodes_total;
  } else if (algo == "gsp") {
    GspStats stats;
    PatternSet p = gsp_mine(db, support, &stats, 1, dl);
    out.patterns = p.size();
    out.aux = stats.peak_candidates;
  } else {
    throw std::invalid_argument("unknown algorithm: " + algo);
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

std::vector<BenchResult> run_benchmark(const WasDatabase& db, const BenchSpec& spec) {
  if (spec.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  std::vector<std::uint64_t> sizes = spec.sizes;
  if (sizes.empty()) sizes.push_back(db.m());

  std::vector<BenchResult> results;
  for (std::uint64_t size : sizes) {
    WasDatabase slice = prefix_db(db, size);
    for (const Ratio& support : spec.supports) {
      std::vector<BenchResult> cell;
      for (const std::string& algo : spec.algorithms) {
        BenchResult row;
        row.algorithm = algo;
        row.support = support;
        row.num_sequences = size;
        try {
          run_once(slice, algo, support, spec.timeout_seconds); // warm-up
          std::vector<double> times;
          RunOutcome last;
          for (int r = 0; r < spec.repeats; ++r) {
            last = run_once(slice, algo, support, spec.timeout_seconds);
            times.push_back(last.seconds);
          }
          std::sort(times.begin(), times.end());
          row.wall_time_s = times[times.size() / 2];
          row.patterns_found = static_cast<std::int64_t>(last.patterns);
          row.aux_peak = static_cast<std::int64_t>(last.aux);
        } catch (const TimeoutError&) {
          row.timed_out = true;
          row.wall_time_s = spec.timeout_seconds;
          row.patterns_found = -1;
          row.aux_peak = -1;
        }
        cell.push_back(std::move(row));
      }
      const BenchResult* reference = nullptr;
      for (const BenchResult& row : cell) {
        if (row.timed_out) continue;
        if (reference && reference->patterns_found != row.patterns_found) {
          throw std::logic_error(
              "pattern count mismatch at support " + support.str() + ", size " +
              std::to_string(size) + ": " + reference->algorithm + "=" +
              std::to_string(reference->patterns_found) + " vs " + row.algorithm + "=" +
              std::to_string(row.patterns_found));
        }
        if (!reference) reference = &row;
      }
      for (BenchResult& row : cell) results.push_back(std::move(row));
    }
  }
  return results;
}

void write_bench_csv(const std::vector<BenchResult>& results, std::ostream& out) {
  out << "algo,support,num_sequences,wall_time_s,patterns_found,aux_peak\n";
  char buf[64];
  for (const BenchResult& r : results) {
    std::snprintf(buf, sizeof(buf), "%.6f", r.wall_time_s);
    out << r.algorithm << ',' << r.support.str() << ',' << r.num_sequences << ',' << buf
        << ',' << r.patterns_found << ',' << r.aux_peak << '\n';
  }
}

}  // namespace wap
