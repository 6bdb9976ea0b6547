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

#include "wap/mine.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wap {

namespace {

// Branches up to this long take the direct subset-enumeration path; longer
// single branches fall back to the general recursion, which shares work
// instead of enumerating up to 2^n subsets.
constexpr std::size_t kMaxEnumeratedBranch = 12;

void check_deadline(const Deadline* deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw TimeoutError("mining deadline exceeded");
  }
}

}  // namespace

std::vector<ConditionalSequence> conditional_base(const WapTree& tree, EventId e) {
  std::vector<ConditionalSequence> base;
  for (auto [idx, unsub] : tree.unsubsumed_counts(e)) {
    if (unsub == 0) continue;
    AccessSequence prefix = tree.prefix_of(idx);
    prefix.pop_back(); // drop e itself; the suffix is added back after recursion
    if (prefix.empty()) continue;
    base.push_back(ConditionalSequence{std::move(prefix), unsub});
  }
  return base;
}

std::vector<EventId> conditional_frequent_events(
    const std::vector<ConditionalSequence>& base, std::uint64_t threshold_count) {
  std::unordered_map<EventId, std::uint64_t> freq;
  std::unordered_set<EventId> seen;
  for (const ConditionalSequence& cs : base) {
    seen.clear();
    for (EventId e : cs.events) {
      if (seen.insert(e).second) freq[e] += cs.weight;
    }
  }
  std::vector<EventId> out;
  for (auto [e, f] : freq) {
    if (f >= threshold_count) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WapTree conditional_tree(const std::vector<ConditionalSequence>& base,
                         const std::vector<EventId>& cfe) {
  WapTree tree(cfe);
  for (const ConditionalSequence& cs : base) {
    AccessSequence filtered = filter_sequence(cs.events, cfe);
    if (!filtered.empty()) tree.insert(filtered, cs.weight);
  }
  return tree;
}

PatternSet suffix_extend(const PatternSet& patterns, EventId e) {
  PatternSet out(patterns.denominator());
  for (const auto& [events, count] : patterns.entries()) {
    AccessSequence extended = events;
    extended.push_back(e);
    out.add_max(std::move(extended), count);
  }
  return out;
}

PatternSet single_branch_patterns(
    const std::vector<std::pair<EventId, std::uint64_t>>& branch,
    std::uint64_t threshold_count, std::uint64_t denominator) {
  for (std::size_t i = 1; i < branch.size(); ++i) {
    if (branch[i].second > branch[i - 1].second) {
      throw std::invalid_argument("branch counts must be non-increasing");
    }
  }
  if (branch.size() > 63) {
    throw std::invalid_argument("branch too long to enumerate");
  }
  PatternSet out(denominator);
  std::size_t n = branch.size();
  // Each subset of branch positions is one candidate pattern; its support
  // is the count of the deepest position picked, because counts are
  // non-increasing down the path and every sequence through a node also
  // passes through all shallower ones.
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::uint64_t deepest = 63 - static_cast<std::uint64_t>(__builtin_clzll(mask));
    std::uint64_t count = branch[deepest].second;
    if (count < threshold_count) continue;
    AccessSequence events;
    events.reserve(static_cast<std::size_t>(__builtin_popcountll(mask)));
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ull << i)) events.push_back(branch[i].first);
    }
    out.add_max(std::move(events), count);
  }
  return out;
}

namespace {

// Unsubsumed count for every labeled node at once: one depth-first pass
// that tracks, per label, the nearest ancestor carrying it. Entering a node
// subtracts its count from that ancestor, exactly as unsubsumed_counts does
// label by label, but without re-walking ancestor chains per event.
std::vector<std::uint64_t> subtree_unsubsumed(const WapTree& tree) {
  std::vector<std::uint64_t> unsub(tree.node_count(), 0);
  for (NodeIndex i = 1; i < static_cast<NodeIndex>(tree.node_count()); ++i) {
    unsub[i] = tree.node(i).count;
  }
  const std::vector<EventId>& fe = tree.frequent_events();
  std::size_t cap = fe.empty() ? 0 : fe.back() + 1;
  std::vector<NodeIndex> nearest(cap, kNoNode);
  struct Frame {
    NodeIndex idx;
    NodeIndex saved; // previous nearest[label] to restore on exit
    std::size_t child = 0;
  };
  std::vector<Frame> stack;
  auto enter = [&](NodeIndex idx) {
    NodeIndex saved = kNoNode;
    if (idx != 0) {
      EventId lab = tree.node(idx).label;
      saved = nearest[lab];
      if (saved != kNoNode) unsub[saved] -= tree.node(idx).count;
      nearest[lab] = idx;
    }
    stack.push_back(Frame{idx, saved, 0});
  };
  enter(0);
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& children = tree.node(f.idx).children;
    if (f.child < children.size()) {
      NodeIndex next = children[f.child].second;
      ++f.child;
      enter(next);
    } else {
      if (f.idx != 0) nearest[tree.node(f.idx).label] = f.saved;
      stack.pop_back();
    }
  }
  return unsub;
}

// Recursive core. Patterns found in `tree` are suffixed by rev_suffix (in
// reverse order) and written straight into `out`, so each pattern is built
// and inserted exactly once instead of being re-copied per recursion level.
void mine_rec(const WapTree& tree, std::uint64_t threshold_count,
              std::uint64_t denominator, AccessSequence& rev_suffix,
              PatternSet& out, MiningStats* stats, const Deadline* deadline) {
  if (stats) {
    ++stats->trees_built;
    stats->nodes_total += tree.labeled_node_count();
  }
  check_deadline(deadline);
  if (tree.labeled_node_count() == 0) return;
  if (tree.single_branch()) {
    auto b = tree.branch();
    if (b.size() <= kMaxEnumeratedBranch) {
      PatternSet combos = single_branch_patterns(b, threshold_count, denominator);
      for (const auto& [events, count] : combos.entries()) {
        AccessSequence full;
        full.reserve(events.size() + rev_suffix.size());
        full.insert(full.end(), events.begin(), events.end());
        full.insert(full.end(), rev_suffix.rbegin(), rev_suffix.rend());
        out.add_max(std::move(full), count);
      }
      return;
    }
  }
  std::vector<std::uint64_t> unsub = subtree_unsubsumed(tree);
  const std::vector<EventId>& fe = tree.frequent_events();
  std::size_t cap = fe.empty() ? 0 : fe.back() + 1;
  // Scratch reused across the events of this tree. entry_mark deduplicates
  // labels within one prefix, freq accumulates weighted presence, keep is
  // the conditional-frequent filter for the projection pass.
  std::vector<std::uint64_t> freq(cap, 0);
  std::vector<std::uint64_t> entry_mark(cap, 0);
  std::vector<std::uint8_t> keep(cap, 0);
  std::vector<EventId> touched;
  std::vector<EventId> cfe;
  AccessSequence buf;
  std::uint64_t serial = 0;
  for (EventId e : fe) {
    check_deadline(deadline);
    std::uint64_t sup = tree.event_support(e);
    if (sup < threshold_count) continue;
    AccessSequence pat;
    pat.reserve(1 + rev_suffix.size());
    pat.push_back(e);
    pat.insert(pat.end(), rev_suffix.rbegin(), rev_suffix.rend());
    out.add_max(std::move(pat), sup);
    // First pass over the conditional base of e: weighted presence of each
    // label among the prefixes, each prefix counted once per label.
    touched.clear();
    for (NodeIndex idx = tree.queue_head(e); idx != kNoNode;
         idx = tree.node(idx).queue_next) {
      std::uint64_t w = unsub[idx];
      if (w == 0) continue;
      ++serial;
      for (NodeIndex cur = tree.node(idx).parent; cur != 0; cur = tree.node(cur).parent) {
        EventId lab = tree.node(cur).label;
        if (entry_mark[lab] == serial) continue;
        entry_mark[lab] = serial;
        if (freq[lab] == 0) touched.push_back(lab);
        freq[lab] += w;
      }
    }
    cfe.clear();
    for (EventId k : fe) {
      if (freq[k] >= threshold_count) cfe.push_back(k);
    }
    if (!cfe.empty()) {
      // Second pass: project each prefix onto the conditional-frequent
      // labels and insert it, preserving queue order and weights.
      WapTree ct(cfe);
      for (EventId k : cfe) keep[k] = 1;
      for (NodeIndex idx = tree.queue_head(e); idx != kNoNode;
           idx = tree.node(idx).queue_next) {
        std::uint64_t w = unsub[idx];
        if (w == 0) continue;
        buf.clear();
        for (NodeIndex cur = tree.node(idx).parent; cur != 0;
             cur = tree.node(cur).parent) {
          EventId lab = tree.node(cur).label;
          if (keep[lab]) buf.push_back(lab);
        }
        if (!buf.empty()) {
          std::reverse(buf.begin(), buf.end());
          ct.insert(buf, w);
        }
      }
      for (EventId k : cfe) keep[k] = 0;
      rev_suffix.push_back(e);
      mine_rec(ct, threshold_count, denominator, rev_suffix, out, stats, deadline);
      rev_suffix.pop_back();
    }
    for (EventId lab : touched) freq[lab] = 0;
  }
}

}  // namespace

PatternSet mine_tree(const WapTree& tree, std::uint64_t threshold_count,
                     std::uint64_t denominator, MiningStats* stats,
                     const Deadline* deadline) {
  PatternSet out(denominator);
  AccessSequence rev_suffix;
  mine_rec(tree, threshold_count, denominator, rev_suffix, out, stats, deadline);
  return out;
}

PatternSet wap_mine(const WasDatabase& db, const Ratio& threshold, MiningStats* stats,
                    const Deadline* deadline) {
  std::vector<EventId> fe = frequent_events(db, threshold);
  WapTree tree = build_tree(db, fe);
  std::uint64_t need = threshold.min_count(db.m());
  return mine_tree(tree, need, db.m(), stats, deadline);
}

}  // namespace wap
