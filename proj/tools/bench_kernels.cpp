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

// Compares the serial reference kernels against their OpenMP variants on
// synthetic inputs and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wap/gen.hpp"
#include "wap/kernels.hpp"
#include "wap/logparse.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<wap::AccessSequence> random_candidates(const wap::WasDatabase& db,
                                                   std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<wap::AccessSequence> out;
  out.reserve(count);
  std::size_t alphabet = db.dict.size();
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t len = 1 + rng() % 4;
    wap::AccessSequence cand;
    for (std::size_t j = 0; j < len; ++j) {
      cand.push_back(static_cast<wap::EventId>(rng() % alphabet));
    }
    out.push_back(std::move(cand));
  }
  return out;
}

std::vector<std::string> synthetic_log_lines(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> lines;
  lines.reserve(count);
  char buf[256];
  for (std::size_t i = 0; i < count; ++i) {
    unsigned host = static_cast<unsigned>(rng() % 500);
    unsigned page = static_cast<unsigned>(rng() % 200);
    unsigned second = static_cast<unsigned>(i % 60);
    unsigned minute = static_cast<unsigned>((i / 60) % 60);
    std::snprintf(buf, sizeof(buf),
                  "10.0.%u.%u - - [01/Mar/2026:08:%02u:%02u +0000] "
                  "\"GET /page%u.html HTTP/1.0\" 200 %u",
                  host / 250, host % 250, minute, second, page,
                  static_cast<unsigned>(500 + rng() % 9000));
    lines.emplace_back(buf);
  }
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel comparison"};
  int threads = 0; // 0: all hardware threads
  std::uint64_t num_sequences = 20000;
  std::uint32_t alphabet = 40;
  std::size_t num_candidates = 400;
  std::size_t num_lines = 200000;
  app.add_option("--threads", threads, "Thread count for the parallel side (0 = all)");
  app.add_option("--n", num_sequences, "Synthetic database size");
  app.add_option("--alphabet", alphabet, "Synthetic alphabet size");
  app.add_option("--candidates", num_candidates, "Candidate set size");
  app.add_option("--lines", num_lines, "Synthetic log lines");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  if (threads <= 0) threads = 1;
  std::cout << "built without OpenMP; parallel kernels fall back to serial\n";
#endif

  wap::GenSpec spec;
  spec.num_sequences = num_sequences;
  spec.alphabet_size = alphabet;
  spec.mean_length = 12;
  spec.zipf_exponent = 0.8;
  spec.seed = 7;
  wap::WasDatabase db = wap::generate(spec);
  std::vector<wap::AccessSequence> candidates = random_candidates(db, num_candidates, 11);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> serial = wap::count_supports_serial(db, candidates);
  double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> parallel = wap::count_supports_parallel(db, candidates, threads);
  double parallel_s = seconds_since(t0);

  bool counts_match = serial == parallel;
  std::printf("support counting: %zu sequences x %zu candidates\n", db.sequences.size(),
              candidates.size());
  std::printf("  serial    %8.3fs\n", serial_s);
  std::printf("  %2d thread %8.3fs  (x%.2f)  results %s\n", threads, parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0,
              counts_match ? "identical" : "DIFFER");

  std::vector<std::string> lines = synthetic_log_lines(num_lines, 13);
  t0 = std::chrono::steady_clock::now();
  wap::ParsedLog serial_log = wap::parse_log_lines(lines, wap::LogFormat::kClf, 1);
  double serial_log_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  wap::ParsedLog parallel_log = wap::parse_log_lines(lines, wap::LogFormat::kClf, threads);
  double parallel_log_s = seconds_since(t0);

  bool logs_match = serial_log.records.size() == parallel_log.records.size() &&
                    serial_log.errors.size() == parallel_log.errors.size();
  for (std::size_t i = 0; logs_match && i < serial_log.records.size(); ++i) {
    const wap::LogRecord& a = serial_log.records[i];
    const wap::LogRecord& b = parallel_log.records[i];
    logs_match = a.host == b.host && a.epoch_utc == b.epoch_utc && a.path == b.path &&
                 a.status == b.status;
  }
  std::printf("log parsing: %zu lines\n", lines.size());
  std::printf("  serial    %8.3fs\n", serial_log_s);
  std::printf("  %2d thread %8.3fs  (x%.2f)  results %s\n", threads, parallel_log_s,
              parallel_log_s > 0 ? serial_log_s / parallel_log_s : 0.0,
              logs_match ? "identical" : "DIFFER");

  return counts_match && logs_match ? 0 : 1;
}
