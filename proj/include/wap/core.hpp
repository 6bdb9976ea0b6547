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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wap {

/// Dense event identifier, assigned in first-seen order by EventDictionary.
using EventId = std::uint32_t;

/// An ordered list of events. Repetition is allowed; order is significant.
using AccessSequence = std::vector<EventId>;

/// Raised for malformed input files (WASD databases, strict-mode logs).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a cooperative deadline expires inside a miner.
struct TimeoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bijective token <-> id map. Ids are contiguous from 0 in first-seen order.
class EventDictionary {
 public:
  EventId intern(std::string_view token);
  std::optional<EventId> find(std::string_view token) const;
  const std::string& token(EventId id) const;
  std::size_t size() const { return tokens_.size(); }

 private:
  std::unordered_map<std::string, EventId> ids_;
  std::vector<std::string> tokens_;
};

/// Exact non-negative rational. All threshold comparisons go through this
/// type so that boundary cases (count == xi * m) are deterministic.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio of(std::uint64_t num, std::uint64_t den);

  /// Accepts "3/4", "0.75", ".2", "1". Returns nullopt on anything else.
  static std::optional<Ratio> parse(std::string_view text);

  /// True iff count / m >= this ratio, evaluated in integer arithmetic.
  bool meets(std::uint64_t count, std::uint64_t m) const;

  /// Smallest support count c with c * den >= num * m, clamped to >= 1
  /// (a pattern must occur at least once to be reported at all).
  std::uint64_t min_count(std::uint64_t m) const;

  std::string str() const;  // "num/den" in lowest terms

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// The sequence database. Immutable after load; m (the support denominator)
/// is the number of sequences and never changes, even when later stages
/// filter individual sequences down to nothing.
struct WasDatabase {
  EventDictionary dict;
  std::vector<AccessSequence> sequences;

  std::uint64_t m() const { return sequences.size(); }
};

struct Support {
  std::uint64_t count = 0;
  Ratio fraction;
};

/// One mined pattern: event sequence plus absolute support count.
struct Pattern {
  AccessSequence events;
  std::uint64_t count = 0;
};

/// Orders sequences by (length, lexicographic event-id order) — the
/// serialization order for pattern output.
struct LenLexLess {
  bool operator()(const AccessSequence& a, const AccessSequence& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Set of patterns keyed by event sequence; each sequence maps to exactly
/// one count. Keeps the support denominator m for fraction output.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::uint64_t denominator) : denominator_(denominator) {}

  /// Inserts, keeping the maximum count if the sequence is already present.
  void add_max(AccessSequence events, std::uint64_t count);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::uint64_t denominator() const { return denominator_; }
  std::optional<std::uint64_t> count_of(const AccessSequence& events) const;

  const std::map<AccessSequence, std::uint64_t, LenLexLess>& entries() const {
    return entries_;
  }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::map<AccessSequence, std::uint64_t, LenLexLess> entries_;
  std::uint64_t denominator_ = 0;
};

/// True iff candidate embeds into host order-preservingly (greedy left-to-
/// right match, O(|host|)). The empty candidate embeds into everything.
bool is_subsequence(const AccessSequence& candidate, const AccessSequence& host);

/// Support of pattern in db: number of sequences containing it (each
/// sequence counts at most once). Throws std::invalid_argument on an empty
/// pattern.
Support support(const AccessSequence& pattern, const WasDatabase& db);

/// Events whose sequence-level frequency (one increment per sequence)
/// meets the threshold, in ascending id order. A zero threshold returns
/// every event occurring at least once.
std::vector<EventId> frequent_events(const WasDatabase& db, const Ratio& threshold);

/// Per-event sequence-level frequencies (one increment per sequence),
/// indexed by EventId over the whole dictionary.
std::vector<std::uint64_t> event_frequencies(const WasDatabase& db);

/// Copy of s with every event not in fe removed. fe must be sorted.
AccessSequence filter_sequence(const AccessSequence& s, const std::vector<EventId>& fe);

inline constexpr std::size_t kDefaultMaxTokensPerLine = 100000;

/// Reads the WASD text format: one whitespace-separated sequence per line,
/// blank lines and lines whose first non-space character is '#' ignored.
/// Throws ParseError when a line exceeds max_tokens_per_line.
WasDatabase read_wasd(std::istream& in,
                      std::size_t max_tokens_per_line = kDefaultMaxTokensPerLine);
WasDatabase read_wasd_file(const std::string& path,
                           std::size_t max_tokens_per_line = kDefaultMaxTokensPerLine);

/// Writes the WASD format: tokens joined by single spaces, LF endings.
void write_wasd(const WasDatabase& db, std::ostream& out);
void write_wasd_file(const WasDatabase& db, const std::string& path);

/// Pattern TSV: "tokens<TAB>count<TAB>num/den" (fraction in lowest terms),
/// sorted by (length, event-id lex), LF endings.
void write_patterns_tsv(const PatternSet& patterns, const EventDictionary& dict,
                        std::ostream& out);

std::string sequence_str(const AccessSequence& s, const EventDictionary& dict);

}  // namespace wap
