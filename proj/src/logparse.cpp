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

#include "wap/logparse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <tuple>

namespace wap {

std::int64_t days_from_civil(std::int64_t year, unsigned month, unsigned day) {
  year -= month <= 2;
  const std::int64_t era = (year >= 0 ? year : year - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(year - era * 400);
  const unsigned doy = (153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  void skip_spaces() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
};

bool read_plain(Cursor& c, std::string& out) {
  c.skip_spaces();
  std::size_t start = c.pos;
  while (c.pos < c.text.size() && c.text[c.pos] != ' ') ++c.pos;
  if (c.pos == start) return false;
  out.assign(c.text.substr(start, c.pos - start));
  return true;
}

bool read_bracketed(Cursor& c, std::string_view& out) {
  c.skip_spaces();
  if (c.done() || c.text[c.pos] != '[') return false;
  std::size_t end = c.text.find(']', c.pos + 1);
  if (end == std::string_view::npos) return false;
  out = c.text.substr(c.pos + 1, end - c.pos - 1);
  c.pos = end + 1;
  return true;
}

// A quoted field, honoring backslash escapes, or a bare "-".
bool read_quoted_or_dash(Cursor& c, std::optional<std::string>& out) {
  c.skip_spaces();
  if (c.done()) return false;
  if (c.text[c.pos] == '-' &&
      (c.pos + 1 == c.text.size() || c.text[c.pos + 1] == ' ')) {
    ++c.pos;
    out = std::nullopt;
    return true;
  }
  if (c.text[c.pos] != '"') return false;
  std::string value;
  std::size_t i = c.pos + 1;
  while (i < c.text.size() && c.text[i] != '"') {
    if (c.text[i] == '\\' && i + 1 < c.text.size()) {
      value.push_back(c.text[i + 1]);
      i += 2;
    } else {
      value.push_back(c.text[i]);
      ++i;
    }
  }
  if (i >= c.text.size()) return false; // unterminated
  c.pos = i + 1;
  out = std::move(value);
  return true;
}

int month_number(std::string_view name) {
  static constexpr std::string_view kMonths[] = {"Jan", "Feb", "Mar", "Apr",
                                                 "May", "Jun", "Jul", "Aug",
                                                 "Sep", "Oct", "Nov", "Dec"};
  for (int i = 0; i < 12; ++i) {
    if (kMonths[i] == name) return i + 1;
  }
  return 0;
}

bool parse_int(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// "dd/Mon/yyyy:HH:MM:SS +zzzz"
bool parse_timestamp(std::string_view text, LogRecord& rec) {
  std::size_t slash1 = text.find('/');
  std::size_t slash2 = text.find('/', slash1 + 1);
  if (slash1 == std::string_view::npos || slash2 == std::string_view::npos) return false;
  std::size_t colon1 = text.find(':', slash2 + 1);
  if (colon1 == std::string_view::npos) return false;

  std::int64_t day = 0, year = 0;
  if (!parse_int(text.substr(0, slash1), day)) return false;
  int month = month_number(text.substr(slash1 + 1, slash2 - slash1 - 1));
  if (!parse_int(text.substr(slash2 + 1, colon1 - slash2 - 1), year)) return false;

  std::size_t space = text.find(' ', colon1 + 1);
  if (space == std::string_view::npos) return false;
  std::string_view clock = text.substr(colon1 + 1, space - colon1 - 1);
  if (clock.size() != 8 || clock[2] != ':' || clock[5] != ':') return false;
  std::int64_t hh = 0, mm = 0, ss = 0;
  if (!parse_int(clock.substr(0, 2), hh) || !parse_int(clock.substr(3, 2), mm) ||
      !parse_int(clock.substr(6, 2), ss)) {
    return false;
  }

  std::string_view zone = text.substr(space + 1);
  if (zone.size() != 5 || (zone[0] != '+' && zone[0] != '-')) return false;
  std::int64_t zh = 0, zm = 0;
  if (!parse_int(zone.substr(1, 2), zh) || !parse_int(zone.substr(3, 2), zm)) return false;

  if (month == 0 || day < 1 || day > 31 || year < 1970 || year > 9999) return false;
  if (hh > 23 || mm > 59 || ss > 59 || zh > 14 || zm > 59) return false;

  std::int64_t offset = (zh * 3600 + zm * 60) * (zone[0] == '-' ? -1 : 1);
  rec.epoch_utc = days_from_civil(year, static_cast<unsigned>(month),
                                  static_cast<unsigned>(day)) *
                      86400 +
                  hh * 3600 + mm * 60 + ss - offset;
  rec.tz_offset_seconds = static_cast<std::int32_t>(offset);
  return true;
}

std::optional<LogRecord> fail(std::string* error, const char* what) {
  if (error) *error = std::string("malformed ") + what;
  return std::nullopt;
}

}  // namespace

std::optional<LogRecord> parse_log_line(std::string_view line, LogFormat format,
                                        std::string* error) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  Cursor c{line};
  LogRecord rec;
  if (!read_plain(c, rec.host)) return fail(error, "host");
  if (!read_plain(c, rec.ident)) return fail(error, "ident");
  if (!read_plain(c, rec.authuser)) return fail(error, "authuser");

  std::string_view ts;
  if (!read_bracketed(c, ts) || !parse_timestamp(ts, rec)) {
    return fail(error, "timestamp");
  }

  std::optional<std::string> request;
  if (!read_quoted_or_dash(c, request) || !request) return fail(error, "request");
  {
    Cursor rc{*request};
    std::string extra;
    if (!read_plain(rc, rec.method) || !read_plain(rc, rec.path) ||
        !read_plain(rc, rec.protocol)) {
      return fail(error, "request");
    }
    if (read_plain(rc, extra)) return fail(error, "request");
  }

  std::string status_text;
  std::int64_t status = 0;
  if (!read_plain(c, status_text) || !parse_int(status_text, status) || status < 100 ||
      status > 599) {
    return fail(error, "status");
  }
  rec.status = static_cast<int>(status);

  std::string bytes_text;
  if (!read_plain(c, bytes_text)) return fail(error, "bytes");
  if (bytes_text == "-") {
    rec.bytes = std::nullopt;
  } else {
    std::int64_t bytes = 0;
    if (!parse_int(bytes_text, bytes) || bytes < 0) return fail(error, "bytes");
    rec.bytes = static_cast<std::uint64_t>(bytes);
  }

  if (format == LogFormat::kCombined) {
    if (!read_quoted_or_dash(c, rec.referrer)) return fail(error, "referrer");
    if (!read_quoted_or_dash(c, rec.user_agent)) return fail(error, "user_agent");
  }

  c.skip_spaces();
  if (!c.done()) return fail(error, "trailing content");
  return rec;
}

ParsedLog parse_log_lines(const std::vector<std::string>& lines, LogFormat format,
                          int threads) {
  std::vector<std::optional<LogRecord>> slots(lines.size());
  std::vector<std::string> errors(lines.size());

  auto parse_one = [&](std::size_t i) {
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) return;
    slots[i] = parse_log_line(lines[i], format, &errors[i]);
    if (!slots[i] && errors[i].empty()) errors[i] = "malformed line";
  };

#ifdef _OPENMP
  if (threads > 1) {
    const std::int64_t n = static_cast<std::int64_t>(lines.size());
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) parse_one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i) parse_one(i);
  }
#else
  (void)threads;
  for (std::size_t i = 0; i < lines.size(); ++i) parse_one(i);
#endif

  // Serial merge keeps record order equal to input order no matter how the
  // parse loop was scheduled.
  ParsedLog out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (slots[i]) {
      ++out.total_lines;
      out.records.push_back(std::move(*slots[i]));
    } else if (!errors[i].empty()) {
      ++out.total_lines;
      out.errors.push_back(LineError{i + 1, errors[i]});
    }
  }
  return out;
}

ParsedLog parse_log(std::istream& in, LogFormat format, int threads) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return parse_log_lines(lines, format, threads);
}

std::string path_extension(std::string_view path) {
  std::size_t query = path.find('?');
  if (query != std::string_view::npos) path = path.substr(0, query);
  std::size_t slash = path.rfind('/');
  std::string_view segment =
      slash == std::string_view::npos ? path : path.substr(slash + 1);
  std::size_t dot = segment.rfind('.');
  if (dot == std::string_view::npos || dot + 1 == segment.size()) return "";
  std::string ext(segment.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return ext;
}

std::optional<std::string> normalize_event(const LogRecord& record,
                                           const SessionConfig& config) {
  if (!config.methods_kept.contains(record.method)) return std::nullopt;
  if (record.status < config.status_min || record.status > config.status_max) {
    return std::nullopt;
  }
  std::string ext = path_extension(record.path);
  if (!ext.empty() && config.exclude_extensions.contains(ext)) return std::nullopt;

  std::string token = record.path;
  if (config.strip_query) {
    std::size_t query = token.find('?');
    if (query != std::string::npos) token.resize(query);
  }
  if (token.empty()) return std::nullopt;

  // Keep tokens safe for the one-sequence-per-line text format: no
  // whitespace, and no '#' in the lead position.
  std::string safe;
  safe.reserve(token.size());
  for (char ch : token) {
    switch (ch) {
      case ' ': safe += "%20"; break;
      case '\t': safe += "%09"; break;
      case '\n': safe += "%0A"; break;
      case '\r': safe += "%0D"; break;
      default: safe.push_back(ch);
    }
  }
  if (safe.front() == '#') safe = "%23" + safe.substr(1);
  return safe;
}

std::string session_key(const LogRecord& record, const SessionConfig& config) {
  if (config.key_mode == SessionKeyMode::kHostAgent && record.user_agent) {
    // Unit separator cannot appear in either part, so keys never collide
    // across the host/agent boundary.
    return record.host + '\x1f' + *record.user_agent;
  }
  return record.host;
}

WasDatabase sessionize(const std::vector<LogRecord>& records, const SessionConfig& config) {
  struct Kept {
    std::string key;
    std::int64_t ts;
    std::size_t pos;
    std::string token;
  };
  std::vector<Kept> kept;
  kept.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::optional<std::string> token = normalize_event(records[i], config);
    if (!token) continue;
    kept.push_back(Kept{session_key(records[i], config), records[i].epoch_utc, i,
                        std::move(*token)});
  }
  std::sort(kept.begin(), kept.end(), [](const Kept& a, const Kept& b) {
    return std::tie(a.key, a.ts, a.pos) < std::tie(b.key, b.ts, b.pos);
  });

  WasDatabase db;
  const std::string* prev_key = nullptr;
  std::int64_t prev_ts = 0;
  for (const Kept& k : kept) {
    bool fresh = prev_key == nullptr || k.key != *prev_key ||
                 k.ts - prev_ts > config.timeout_seconds;
    if (fresh) db.sequences.emplace_back();
    db.sequences.back().push_back(db.dict.intern(k.token));
    prev_key = &k.key;
    prev_ts = k.ts;
  }
  return db;
}

LogStats log_stats(const std::vector<LogRecord>& records) {
  std::set<std::string_view> hosts;
  std::set<std::string_view> urls;
  std::set<std::string> extensions;
  for (const LogRecord& r : records) {
    hosts.insert(r.host);
    urls.insert(r.path);
    std::string ext = path_extension(r.path);
    if (!ext.empty()) extensions.insert(ext);
  }
  return LogStats{records.size(), hosts.size(), urls.size(), extensions.size()};
}

}  // namespace wap
