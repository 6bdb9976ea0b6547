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

#include <algorithm>
#include <sstream>
#include <string>

#include <doctest.h>

#include "test_helpers.hpp"
#include "wap/bench.hpp"
#include "wap/gen.hpp"
#include "wap/mine.hpp"

using namespace wap;

namespace {

WasDatabase bench_input() {
  GenSpec spec;
  spec.num_sequences = 400;
  spec.alphabet_size = 8;
  spec.mean_length = 6;
  spec.zipf_exponent = 0.8;
  spec.seed = 11;
  return generate(spec);
}

} // namespace

TEST_CASE("prefix_db keeps the first n sequences and shrinks m") {
  WasDatabase db = waptest::fixture_db();
  WasDatabase head = prefix_db(db, 2);
  REQUIRE(head.m() == 2);
  CHECK(sequence_str(head.sequences[0], head.dict) == "a b d a c");
  CHECK(sequence_str(head.sequences[1], head.dict) == "e a e b c a c");
  CHECK_THROWS_AS((void)prefix_db(db, 5), std::invalid_argument);
}

TEST_CASE("benchmark emits one row per (size, support, algorithm) cell") {
  WasDatabase db = bench_input();
  BenchSpec spec;
  spec.algorithms = {"wap", "gsp"};
  spec.supports = {Ratio{1, 4}, Ratio{1, 2}};
  spec.sizes = {100, 400};
  std::vector<BenchResult> rows = run_benchmark(db, spec);
  REQUIRE(rows.size() == 8);

  // Cell order: sizes outermost, then supports, then algorithms.
  CHECK(rows[0].num_sequences == 100);
  CHECK(rows[0].support == Ratio(1, 4));
  CHECK(rows[0].algorithm == "wap");
  CHECK(rows[1].algorithm == "gsp");
  CHECK(rows[2].support == Ratio(1, 2));
  CHECK(rows[4].num_sequences == 400);

  for (const BenchResult& r : rows) {
    CHECK_FALSE(r.timed_out);
    CHECK(r.wall_time_s >= 0.0);
    CHECK(r.patterns_found >= 0);
    CHECK(r.aux_peak >= 0);
  }

  // Within each cell the two algorithms find the same number of patterns,
  // and that number matches a direct mining run.
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    CHECK(rows[i].patterns_found == rows[i + 1].patterns_found);
    WasDatabase part = prefix_db(db, rows[i].num_sequences);
    PatternSet direct = wap_mine(part, rows[i].support);
    CHECK(rows[i].patterns_found == static_cast<std::int64_t>(direct.size()));
  }
}

TEST_CASE("benchmark without explicit sizes uses the whole database") {
  WasDatabase db = waptest::fixture_db();
  BenchSpec spec;
  spec.algorithms = {"wap"};
  spec.supports = {Ratio{3, 4}};
  std::vector<BenchResult> rows = run_benchmark(db, spec);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].num_sequences == 4);
  CHECK(rows[0].patterns_found == 13);
  CHECK(rows[0].aux_peak > 0);
}

TEST_CASE("a timeout is reported as a row, not an error") {
  WasDatabase db = bench_input();
  BenchSpec spec;
  spec.algorithms = {"wap", "gsp"};
  spec.supports = {Ratio{1, 100}};
  spec.timeout_seconds = 1e-9; // expires before the first deadline check
  std::vector<BenchResult> rows = run_benchmark(db, spec);
  REQUIRE(rows.size() == 2);
  for (const BenchResult& r : rows) {
    CHECK(r.timed_out);
    CHECK(r.patterns_found == -1);
    CHECK(r.aux_peak == -1);
    CHECK(r.wall_time_s == doctest::Approx(1e-9));
  }
}

TEST_CASE("CSV output has the pinned header and one line per row") {
  WasDatabase db = waptest::fixture_db();
  BenchSpec spec;
  spec.algorithms = {"wap", "gsp"};
  spec.supports = {Ratio{3, 4}};
  std::vector<BenchResult> rows = run_benchmark(db, spec);
  std::ostringstream out;
  write_bench_csv(rows, out);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "algo,support,num_sequences,wall_time_s,patterns_found,aux_peak");
  REQUIRE(std::getline(in, line));
  CHECK(line.substr(0, 9) == "wap,3/4,4");
  std::size_t commas = std::count(line.begin(), line.end(), ',');
  CHECK(commas == 5);
  CHECK(line.find(",13,") != std::string::npos);
  REQUIRE(std::getline(in, line));
  CHECK(line.substr(0, 9) == "gsp,3/4,4");
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("repeats use the median run") {
  // Smoke: three repeated runs still produce a single row with sane values.
  WasDatabase db = waptest::fixture_db();
  BenchSpec spec;
  spec.algorithms = {"wap"};
  spec.supports = {Ratio{1, 2}};
  spec.repeats = 3;
  std::vector<BenchResult> rows = run_benchmark(db, spec);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].patterns_found > 0);
}
