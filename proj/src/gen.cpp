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

#include "wap/gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace wap {

namespace {

// Top 53 bits of a raw draw, as a double in [0, 1). Fixed mapping; the
// distribution code below never goes through std::*_distribution, whose
// algorithms vary across standard libraries.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

WasDatabase generate(const GenSpec& spec) {
  if (spec.alphabet_size == 0) throw std::invalid_argument("alphabet_size must be >= 1");
  if (!(spec.mean_length >= 1.0)) throw std::invalid_argument("mean_length must be >= 1");
  if (!(spec.zipf_exponent >= 0.0)) throw std::invalid_argument("zipf_exponent must be >= 0");

  WasDatabase db;
  for (std::uint32_t i = 1; i <= spec.alphabet_size; ++i) {
    db.dict.intern("e" + std::to_string(i));
  }

  // Rank r has weight r^-s; cumulative weights drive a binary search per draw.
  std::vector<double> cumulative(spec.alphabet_size);
  double acc = 0.0;
  for (std::uint32_t r = 0; r < spec.alphabet_size; ++r) {
    acc += std::pow(static_cast<double>(r + 1), -spec.zipf_exponent);
    cumulative[r] = acc;
  }
  const double total = acc;

  const double success = 1.0 / spec.mean_length;
  std::mt19937_64 rng(spec.seed);

  db.sequences.reserve(spec.num_sequences);
  for (std::uint64_t n = 0; n < spec.num_sequences; ++n) {
    // Geometric number of trials to first success: mean = mean_length.
    std::size_t length = 1;
    while (unit_draw(rng) >= success) ++length;
    AccessSequence seq;
    seq.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
      double x = unit_draw(rng) * total;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
      if (it == cumulative.end()) --it; // guards the x == total edge
      seq.push_back(static_cast<EventId>(it - cumulative.begin()));
    }
    db.sequences.push_back(std::move(seq));
  }
  return db;
}

}  // namespace wap
