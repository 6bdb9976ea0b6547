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

#include "wap/core.hpp"

namespace wap {

/// Synthetic database parameters. Sequence lengths are geometric with the
/// given mean (minimum 1); events are drawn from a Zipf distribution over
/// tokens "e1".."eN" (exponent 0 = uniform).
struct GenSpec {
  std::uint64_t num_sequences = 0;
  std::uint32_t alphabet_size = 1;
  double mean_length = 1.0;
  double zipf_exponent = 0.0;
  std::uint64_t seed = 0;
};

/// Deterministic for a given spec: one fixed-algorithm PRNG stream drives
/// length and event draws in a fixed order, so the same seed reproduces the
/// same database on any platform, and generate(n) is a prefix of
/// generate(n') for n < n' with the rest of the spec equal.
WasDatabase generate(const GenSpec& spec);

}  // namespace wap
