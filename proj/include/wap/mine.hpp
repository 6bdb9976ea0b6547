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
#include "wap/tree.hpp"

namespace wap {

/// One weighted prefix sequence of a conditional database.
struct ConditionalSequence {
  AccessSequence events;
  std::uint64_t weight = 0;
};

/// Counters accumulated across one mining run, including every conditional
/// tree built by the recursion.
struct MiningStats {
  std::uint64_t trees_built = 0;
  std::uint64_t nodes_total = 0; // labeled nodes over all trees
};

using Deadline = std::chrono::steady_clock::time_point;

/// Prefix sequences that end right before each node of e, weighted by that
/// node's unsubsumed count. Zero-weight entries are dropped; entries keep
/// queue order of the defining nodes.
std::vector<ConditionalSequence> conditional_base(const WapTree& tree, EventId e);

/// Events whose weighted sequence-level frequency in the base meets
/// threshold_count, ascending.
std::vector<EventId> conditional_frequent_events(
    const std::vector<ConditionalSequence>& base, std::uint64_t threshold_count);

/// Tree over the filtered conditional base, inserted with weights.
WapTree conditional_tree(const std::vector<ConditionalSequence>& base,
                         const std::vector<EventId>& cfe);

/// Appends e to every pattern; counts carry over.
PatternSet suffix_extend(const PatternSet& patterns, EventId e);

/// All frequent patterns of a tree that collapsed to one path: every
/// non-empty subsequence of the branch, counted by its deepest picked node
/// (duplicates keep the maximum). branch is top-down and must have
/// non-increasing counts; throws std::invalid_argument otherwise.
PatternSet single_branch_patterns(const std::vector<std::pair<EventId, std::uint64_t>>& branch,
                                  std::uint64_t threshold_count, std::uint64_t denominator);

/// Recursive conditional search over the tree. threshold_count is absolute
/// (already resolved against the top-level m = denominator and reused
/// unchanged down the recursion). A deadline, when given, is checked
/// cooperatively and raises TimeoutError.
PatternSet mine_tree(const WapTree& tree, std::uint64_t threshold_count,
                     std::uint64_t denominator, MiningStats* stats = nullptr,
                     const Deadline* deadline = nullptr);

/// Full run on a database: frequent events, tree build, conditional search.
PatternSet wap_mine(const WasDatabase& db, const Ratio& threshold,
                    MiningStats* stats = nullptr, const Deadline* deadline = nullptr);

}  // namespace wap
