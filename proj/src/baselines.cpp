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

#include "wap/baselines.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wap/kernels.hpp"

namespace wap {

namespace {

void check_deadline(const Deadline* deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw TimeoutError("mining deadline exceeded");
  }
}

}  // namespace

std::vector<AccessSequence> gsp_generate_candidates(const std::vector<AccessSequence>& fk) {
  std::vector<AccessSequence> out;
  if (fk.empty()) return out;
  std::size_t k = fk.front().size();
  if (k == 1) {
    out.reserve(fk.size() * fk.size());
    for (const AccessSequence& s : fk) {
      for (const AccessSequence& t : fk) {
        out.push_back(AccessSequence{s[0], t[0]});
      }
    }
    return out;
  }
  std::set<AccessSequence> fk_set(fk.begin(), fk.end());
  for (const AccessSequence& s : fk) {
    for (const AccessSequence& t : fk) {
      if (!std::equal(s.begin() + 1, s.end(), t.begin(), t.end() - 1)) continue;
      AccessSequence cand = s;
      cand.push_back(t.back());
      // Apriori check over every single-deletion subsequence; candidates
      // that fail cannot be frequent.
      bool ok = true;
      for (std::size_t drop = 0; ok && drop < cand.size(); ++drop) {
        AccessSequence sub;
        sub.reserve(cand.size() - 1);
        for (std::size_t i = 0; i < cand.size(); ++i) {
          if (i != drop) sub.push_back(cand[i]);
        }
        if (!fk_set.contains(sub)) ok = false;
      }
      if (ok) out.push_back(std::move(cand));
    }
  }
  return out;
}

PatternSet gsp_mine(const WasDatabase& db, const Ratio& threshold, GspStats* stats,
                    int threads, const Deadline* deadline) {
  PatternSet out(db.m());
  std::uint64_t need = threshold.min_count(db.m());

  std::vector<EventId> fe = frequent_events(db, threshold);
  std::vector<AccessSequence> level;
  level.reserve(fe.size());
  std::vector<std::uint64_t> freq = event_frequencies(db);
  for (EventId e : fe) {
    out.add_max(AccessSequence{e}, freq[e]);
    level.push_back(AccessSequence{e});
  }
  if (stats) {
    stats->levels = fe.empty() ? 0 : 1;
    stats->peak_candidates = std::max<std::uint64_t>(stats->peak_candidates, fe.size());
    stats->total_candidates += fe.size();
  }

  while (!level.empty()) {
    check_deadline(deadline);
    std::vector<AccessSequence> candidates = gsp_generate_candidates(level);
    if (stats) {
      stats->peak_candidates = std::max<std::uint64_t>(stats->peak_candidates, candidates.size());
      stats->total_candidates += candidates.size();
    }
    if (candidates.empty()) break;
    std::vector<std::uint64_t> counts = count_supports(db, candidates, threads);
    check_deadline(deadline);
    std::vector<AccessSequence> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (counts[i] >= need) {
        out.add_max(candidates[i], counts[i]);
        next.push_back(std::move(candidates[i]));
      }
    }
    // Join order already yields ascending candidates, but sort anyway so
    // the next level's join never depends on that detail.
    std::sort(next.begin(), next.end());
    if (stats && !next.empty()) ++stats->levels;
    level = std::move(next);
  }
  return out;
}

PatternSet brute_force_mine(const WasDatabase& db, const Ratio& threshold,
                            std::size_t max_len, bool apriori_extension) {
  std::size_t longest = 0;
  for (const AccessSequence& s : db.sequences) longest = std::max(longest, s.size());
  if (max_len == 0 || max_len > longest) max_len = longest;

  std::uint64_t need = threshold.min_count(db.m());
  PatternSet out(db.m());

  // Alphabet: every event with at least one occurrence.
  std::vector<EventId> alphabet;
  {
    std::vector<std::uint64_t> freq = event_frequencies(db);
    for (EventId e = 0; e < freq.size(); ++e) {
      if (freq[e] > 0) alphabet.push_back(e);
    }
  }

  std::vector<AccessSequence> level;
  for (EventId e : alphabet) level.push_back(AccessSequence{e});

  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<AccessSequence> survivors;
    for (const AccessSequence& cand : level) {
      std::uint64_t count = 0;
      for (const AccessSequence& s : db.sequences) {
        if (is_subsequence(cand, s)) ++count;
      }
      if (count >= need) {
        out.add_max(cand, count);
        survivors.push_back(cand);
      }
    }
    if (len == max_len) break;
    std::vector<AccessSequence> next;
    if (apriori_extension) {
      // Appending to frequent patterns only. Complete because every prefix
      // of a frequent pattern is frequent (dropping the tail cannot lower
      // support).
      for (const AccessSequence& p : survivors) {
        for (EventId e : alphabet) {
          AccessSequence ext = p;
          ext.push_back(e);
          next.push_back(std::move(ext));
        }
      }
    } else {
      // Exhaustive: every combination of the next length, frequent or not.
      for (const AccessSequence& p : level) {
        for (EventId e : alphabet) {
          AccessSequence ext = p;
          ext.push_back(e);
          next.push_back(std::move(ext));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace wap
