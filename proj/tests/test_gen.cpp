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

#include <cmath>
#include <cstdint>

#include <doctest.h>

#include "test_helpers.hpp"
#include "wap/gen.hpp"

using namespace wap;

namespace {

GenSpec base_spec() {
  GenSpec spec;
  spec.num_sequences = 2000;
  spec.alphabet_size = 20;
  spec.mean_length = 8;
  spec.zipf_exponent = 0.9;
  spec.seed = 42;
  return spec;
}

std::vector<std::uint64_t> occurrences(const WasDatabase& db) {
  std::vector<std::uint64_t> out(db.dict.size(), 0);
  for (const AccessSequence& s : db.sequences) {
    for (EventId e : s) ++out[e];
  }
  return out;
}

}  // namespace

TEST_CASE("generation is deterministic per seed") {
  WasDatabase a = generate(base_spec());
  WasDatabase b = generate(base_spec());
  REQUIRE(a.m() == b.m());
  CHECK(a.sequences == b.sequences);

  GenSpec other = base_spec();
  other.seed = 43;
  WasDatabase c = generate(other);
  CHECK(a.sequences != c.sequences);
}

TEST_CASE("a shorter run is a prefix of a longer one") {
  GenSpec small = base_spec();
  small.num_sequences = 150;
  GenSpec large = base_spec();
  large.num_sequences = 600;
  WasDatabase a = generate(small);
  WasDatabase b = generate(large);
  REQUIRE(a.m() == 150);
  REQUIRE(b.m() == 600);
  for (std::size_t i = 0; i < a.m(); ++i) {
    CHECK(a.sequences[i] == b.sequences[i]);
  }
}

TEST_CASE("tokens are e1..eN with ids in rank order") {
  GenSpec spec = base_spec();
  spec.alphabet_size = 5;
  WasDatabase db = generate(spec);
  REQUIRE(db.dict.size() == 5);
  CHECK(db.dict.token(0) == "e1");
  CHECK(db.dict.token(4) == "e5");
}

TEST_CASE("sequence lengths match the requested mean") {
  GenSpec spec = base_spec();
  spec.num_sequences = 20000;
  spec.mean_length = 10;
  WasDatabase db = generate(spec);
  std::uint64_t total = 0;
  std::size_t longest = 0;
  for (const AccessSequence& s : db.sequences) {
    REQUIRE(!s.empty());
    total += s.size();
    longest = std::max(longest, s.size());
  }
  double mean = static_cast<double>(total) / static_cast<double>(db.m());
  CHECK(mean == doctest::Approx(10.0).epsilon(0.05));
  CHECK(longest > 10); // geometric tail reaches past the mean
}

TEST_CASE("mean length one gives all singletons") {
  GenSpec spec = base_spec();
  spec.mean_length = 1;
  spec.num_sequences = 200;
  WasDatabase db = generate(spec);
  for (const AccessSequence& s : db.sequences) CHECK(s.size() == 1);
}

TEST_CASE("zipf skew orders event popularity by rank") {
  GenSpec spec = base_spec();
  spec.num_sequences = 5000;
  spec.alphabet_size = 50;
  spec.mean_length = 10;
  spec.zipf_exponent = 1.0;
  WasDatabase db = generate(spec);
  std::vector<std::uint64_t> occ = occurrences(db);
  // Weights 1, 1/25, 1/50 are far enough apart that sampling noise cannot
  // reorder them at this sample size.
  CHECK(occ[0] > 4 * occ[24]);
  CHECK(occ[0] > 8 * occ[49]);
  CHECK(occ[24] > occ[49]);
}

TEST_CASE("zipf exponent zero is uniform") {
  GenSpec spec = base_spec();
  spec.num_sequences = 10000;
  spec.alphabet_size = 10;
  spec.mean_length = 5;
  spec.zipf_exponent = 0.0;
  WasDatabase db = generate(spec);
  std::vector<std::uint64_t> occ = occurrences(db);
  std::uint64_t lo = *std::min_element(occ.begin(), occ.end());
  std::uint64_t hi = *std::max_element(occ.begin(), occ.end());
  REQUIRE(lo > 0);
  CHECK(static_cast<double>(hi) / static_cast<double>(lo) < 1.2);
}

TEST_CASE("invalid generator parameters are rejected") {
  GenSpec spec = base_spec();
  spec.alphabet_size = 0;
  CHECK_THROWS_AS(generate(spec), std::invalid_argument);
  spec = base_spec();
  spec.mean_length = 0.5;
  CHECK_THROWS_AS(generate(spec), std::invalid_argument);
  spec = base_spec();
  spec.zipf_exponent = -1;
  CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}
