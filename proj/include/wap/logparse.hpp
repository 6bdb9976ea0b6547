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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wap/core.hpp"

namespace wap {

enum class LogFormat { kClf, kCombined };

/// One parsed access-log entry. Timestamps are normalized to UTC seconds
/// at parse time; the original zone offset is kept for reference.
struct LogRecord {
  std::string host;
  std::string ident;
  std::string authuser;
  std::int64_t epoch_utc = 0;
  std::int32_t tz_offset_seconds = 0;
  std::string method;
  std::string path;     // as logged (query string included)
  std::string protocol;
  int status = 0;
  std::optional<std::uint64_t> bytes; // "-" in the log -> nullopt
  std::optional<std::string> referrer;
  std::optional<std::string> user_agent;
};

/// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(std::int64_t year, unsigned month, unsigned day);

/// Parses one log line. On failure returns nullopt and, if error is given,
/// stores a message naming the offending field.
std::optional<LogRecord> parse_log_line(std::string_view line, LogFormat format,
                                        std::string* error = nullptr);

struct LineError {
  std::uint64_t line = 0; // 1-based
  std::string message;
};

struct ParsedLog {
  std::vector<LogRecord> records; // input order
  std::vector<LineError> errors;
  std::uint64_t total_lines = 0; // non-blank lines seen
};

/// Parses a batch of lines (1-based numbering within the batch). Blank
/// lines are skipped. threads > 1 partitions the batch across OpenMP
/// threads; record order and every parse result stay identical to the
/// serial path.
ParsedLog parse_log_lines(const std::vector<std::string>& lines, LogFormat format,
                          int threads = 1);
ParsedLog parse_log(std::istream& in, LogFormat format, int threads = 1);

enum class SessionKeyMode {
  kHostOnly,
  kHostAgent, // host plus user agent when the record has one
};

struct SessionConfig {
  std::int64_t timeout_seconds = 1800;
  SessionKeyMode key_mode = SessionKeyMode::kHostAgent;
  bool strip_query = true;
  // Compared against the lowercased extension of the query-stripped path.
  std::set<std::string> exclude_extensions = {"gif", "jpg", "jpeg", "png", "ico",
                                              "css", "js",  "bmp", "swf"};
  int status_min = 200;
  int status_max = 399;
  std::set<std::string> methods_kept = {"GET"};
};

/// Lowercased extension of the final segment of the query-stripped path;
/// empty when the segment has no dot (or ends with one).
std::string path_extension(std::string_view path);

/// Event token for a record, or nullopt when the record is filtered out
/// (method, status range, or excluded extension). Tokens are query-stripped
/// when configured and never contain whitespace or a leading '#'.
std::optional<std::string> normalize_event(const LogRecord& record,
                                           const SessionConfig& config);

std::string session_key(const LogRecord& record, const SessionConfig& config);

/// Groups kept records by session key, orders them by (key, timestamp,
/// input position), and cuts a new sequence whenever the gap between
/// consecutive kept records exceeds the timeout. Filtered records are
/// invisible to the gap clock. Output sessions are ordered by key, then
/// time; m is the number of sessions.
WasDatabase sessionize(const std::vector<LogRecord>& records, const SessionConfig& config);

struct LogStats {
  std::uint64_t entries = 0;
  std::uint64_t unique_hosts = 0;
  std::uint64_t unique_urls = 0;       // distinct path fields as logged
  std::uint64_t unique_extensions = 0; // distinct non-empty extensions
};

/// Stats over parsed records, before any session filtering.
LogStats log_stats(const std::vector<LogRecord>& records);

}  // namespace wap
