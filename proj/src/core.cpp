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

#include "wap/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>

namespace wap {

EventId EventDictionary::intern(std::string_view token) {
  auto it = ids_.find(std::string(token));
  if (it != ids_.end()) return it->second;
  EventId id = static_cast<EventId>(tokens_.size());
  tokens_.emplace_back(token);
  ids_.emplace(tokens_.back(), id);
  return id;
}

std::optional<EventId> EventDictionary::find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& EventDictionary::token(EventId id) const {
  if (id >= tokens_.size()) throw std::out_of_range("unknown event id");
  return tokens_[id];
}

Ratio Ratio::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("ratio with zero denominator");
  std::uint64_t g = std::gcd(num, den);
  return Ratio{num / g, den / g};
}

namespace {

bool parse_u64(std::string_view text, std::uint64_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::optional<Ratio> Ratio::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::uint64_t n = 0, d = 0;
    if (!parse_u64(text.substr(0, slash), n)) return std::nullopt;
    if (!parse_u64(text.substr(slash + 1), d)) return std::nullopt;
    if (d == 0) return std::nullopt;
    return Ratio::of(n, d);
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    std::uint64_t n = 0;
    if (!parse_u64(text, n)) return std::nullopt;
    return Ratio::of(n, 1);
  }
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  // Up to 18 fractional digits keeps the scaled value inside uint64.
  if (frac.size() > 18) return std::nullopt;
  std::uint64_t w = 0;
  if (!whole.empty() && !parse_u64(whole, w)) return std::nullopt;
  std::uint64_t f = 0;
  if (!frac.empty() && !parse_u64(frac, f)) return std::nullopt;
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  if (w > (std::numeric_limits<std::uint64_t>::max() - f) / den) return std::nullopt;
  return Ratio::of(w * den + f, den);
}

bool Ratio::meets(std::uint64_t count, std::uint64_t m) const {
  using u128 = unsigned __int128;
  return static_cast<u128>(count) * den >= static_cast<u128>(num) * m;
}

std::uint64_t Ratio::min_count(std::uint64_t m) const {
  using u128 = unsigned __int128;
  u128 prod = static_cast<u128>(num) * m;
  u128 c = (prod + den - 1) / den;
  if (c < 1) c = 1;
  return static_cast<std::uint64_t>(c);
}

std::string Ratio::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

void PatternSet::add_max(AccessSequence events, std::uint64_t count) {
  auto [it, inserted] = entries_.try_emplace(std::move(events), count);
  if (!inserted && it->second < count) it->second = count;
}

std::optional<std::uint64_t> PatternSet::count_of(const AccessSequence& events) const {
  auto it = entries_.find(events);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool is_subsequence(const AccessSequence& candidate, const AccessSequence& host) {
  auto it = host.begin();
  for (EventId e : candidate) {
    it = std::find(it, host.end(), e);
    if (it == host.end()) return false;
    ++it;
  }
  return true;
}

Support support(const AccessSequence& pattern, const WasDatabase& db) {
  if (pattern.empty()) throw std::invalid_argument("support of empty pattern");
  std::uint64_t count = 0;
  for (const AccessSequence& s : db.sequences) {
    if (is_subsequence(pattern, s)) ++count;
  }
  std::uint64_t m = db.m();
  return Support{count, Ratio::of(count, m == 0 ? 1 : m)};
}

std::vector<std::uint64_t> event_frequencies(const WasDatabase& db) {
  std::vector<std::uint64_t> freq(db.dict.size(), 0);
  std::vector<std::uint32_t> seen(db.dict.size(), 0);
  std::uint32_t stamp = 0;
  for (const AccessSequence& s : db.sequences) {
    ++stamp;
    for (EventId e : s) {
      if (seen[e] != stamp) {
        seen[e] = stamp;
        ++freq[e];
      }
    }
  }
  return freq;
}

std::vector<EventId> frequent_events(const WasDatabase& db, const Ratio& threshold) {
  std::vector<std::uint64_t> freq = event_frequencies(db);
  std::uint64_t need = threshold.min_count(db.m());
  std::vector<EventId> out;
  for (EventId e = 0; e < freq.size(); ++e) {
    if (freq[e] >= need) out.push_back(e);
  }
  return out;
}

AccessSequence filter_sequence(const AccessSequence& s, const std::vector<EventId>& fe) {
  AccessSequence out;
  out.reserve(s.size());
  for (EventId e : s) {
    if (std::binary_search(fe.begin(), fe.end(), e)) out.push_back(e);
  }
  return out;
}

WasDatabase read_wasd(std::istream& in, std::size_t max_tokens_per_line) {
  WasDatabase db;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    AccessSequence seq;
    while (pos != std::string::npos) {
      std::size_t end = line.find_first_of(" \t", pos);
      std::string_view token(line.data() + pos,
                             (end == std::string::npos ? line.size() : end) - pos);
      seq.push_back(db.dict.intern(token));
      if (seq.size() > max_tokens_per_line) {
        throw ParseError("line " + std::to_string(line_no) + ": more than " +
                         std::to_string(max_tokens_per_line) + " tokens");
      }
      pos = line.find_first_not_of(" \t", end);
    }
    db.sequences.push_back(std::move(seq));
  }
  return db;
}

WasDatabase read_wasd_file(const std::string& path, std::size_t max_tokens_per_line) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return read_wasd(in, max_tokens_per_line);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_wasd(const WasDatabase& db, std::ostream& out) {
  for (const AccessSequence& s : db.sequences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out << ' ';
      out << db.dict.token(s[i]);
    }
    out << '\n';
  }
}

void write_wasd_file(const WasDatabase& db, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_wasd(db, out);
}

std::string sequence_str(const AccessSequence& s, const EventDictionary& dict) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ' ';
    out += dict.token(s[i]);
  }
  return out;
}

void write_patterns_tsv(const PatternSet& patterns, const EventDictionary& dict,
                        std::ostream& out) {
  for (const auto& [events, count] : patterns.entries()) {
    Ratio frac = Ratio::of(count, patterns.denominator() == 0 ? 1 : patterns.denominator());
    out << sequence_str(events, dict) << '\t' << count << '\t' << frac.str() << '\n';
  }
}

}  // namespace wap
