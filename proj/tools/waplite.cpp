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

// waplite: mine sequential access patterns from web logs.
//
// Exit codes: 0 success, 1 usage error, 2 malformed or unreadable input.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wap/baselines.hpp"
#include "wap/bench.hpp"
#include "wap/core.hpp"
#include "wap/gen.hpp"
#include "wap/logparse.hpp"
#include "wap/mine.hpp"

namespace {

// Command-level validation failures that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

wap::Ratio parse_support(const std::string& text) {
  auto r = wap::Ratio::parse(text);
  if (!r) throw UsageError("invalid support value: " + text);
  if (r->num > r->den) throw UsageError("support must be in [0, 1]: " + text);
  return *r;
}

// "-" selects stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

wap::LogFormat to_format(const std::string& name) {
  return name == "combined" ? wap::LogFormat::kCombined : wap::LogFormat::kClf;
}

struct PreprocessArgs {
  std::string format;
  std::vector<std::string> logs;
  std::string output;
  std::int64_t timeout = 1800;
  bool no_strip_query = false;
  bool strict = false;
  std::string exclude_ext;
  bool exclude_ext_set = false;
  int status_min = 200;
  int status_max = 399;
};

int cmd_preprocess(const PreprocessArgs& args) {
  wap::SessionConfig config;
  config.timeout_seconds = args.timeout;
  config.strip_query = !args.no_strip_query;
  config.status_min = args.status_min;
  config.status_max = args.status_max;
  if (args.exclude_ext_set) {
    config.exclude_extensions.clear();
    for (std::string ext : split_csv(args.exclude_ext)) {
      while (!ext.empty() && ext.front() == '.') ext.erase(ext.begin());
      std::transform(ext.begin(), ext.end(), ext.begin(),
                     [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
      if (!ext.empty()) config.exclude_extensions.insert(ext);
    }
  }

  wap::LogFormat format = to_format(args.format);
  std::vector<wap::LogRecord> records;
  std::uint64_t malformed = 0;
  for (const std::string& path : args.logs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wap::ParseError("cannot open " + path);
    wap::ParsedLog log = wap::parse_log(in, format);
    if (args.strict && !log.errors.empty()) {
      const wap::LineError& e = log.errors.front();
      throw wap::ParseError(path + ":" + std::to_string(e.line) + ": " + e.message);
    }
    for (const wap::LineError& e : log.errors) {
      std::cerr << path << ":" << e.line << ": " << e.message << '\n';
    }
    malformed += log.errors.size();
    std::move(log.records.begin(), log.records.end(), std::back_inserter(records));
  }

  std::uint64_t kept = 0;
  for (const wap::LogRecord& r : records) {
    if (wap::normalize_event(r, config)) ++kept;
  }
  wap::WasDatabase db = wap::sessionize(records, config);

  Output out(args.output);
  wap::write_wasd(db, out.stream());

  std::cerr << "parsed\t" << records.size() << '\n'
            << "malformed\t" << malformed << '\n'
            << "kept\t" << kept << '\n'
            << "sessions\t" << db.m() << '\n';
  return 0;
}

struct MineArgs {
  std::string algo;
  std::string support;
  std::string database;
  std::string output;
  std::uint64_t min_len = 0;
  std::uint64_t max_len = 0;
};

int cmd_mine(const MineArgs& args) {
  wap::Ratio support = parse_support(args.support);
  wap::WasDatabase db = wap::read_wasd_file(args.database);

  wap::PatternSet patterns;
  if (args.algo == "wap") {
    patterns = wap::wap_mine(db, support);
  } else if (args.algo == "gsp") {
    patterns = wap::gsp_mine(db, support);
  } else {
    patterns = wap::brute_force_mine(db, support, args.max_len);
  }

  if (args.min_len > 0 || args.max_len > 0) {
    wap::PatternSet filtered(patterns.denominator());
    for (const auto& [events, count] : patterns.entries()) {
      if (args.min_len > 0 && events.size() < args.min_len) continue;
      if (args.max_len > 0 && events.size() > args.max_len) continue;
      filtered.add_max(events, count);
    }
    patterns = std::move(filtered);
  }

  Output out(args.output);
  wap::write_patterns_tsv(patterns, db.dict, out.stream());
  std::cerr << "patterns\t" << patterns.size() << '\n';
  return 0;
}

struct GenArgs {
  wap::GenSpec spec;
  std::string output;
};

int cmd_gen(const GenArgs& args) {
  wap::WasDatabase db = wap::generate(args.spec);
  Output out(args.output);
  wap::write_wasd(db, out.stream());
  return 0;
}

struct BenchArgs {
  std::string algos = "wap,gsp";
  std::string supports;
  std::string sizes;
  std::string database;
  std::string output;
  int repeats = 1;
  double timeout = 0;
  bool have_gen = false;
  wap::GenSpec spec;
};

int cmd_bench(const BenchArgs& args) {
  if (args.database.empty() == !args.have_gen) {
    throw UsageError("provide either a database file or generator parameters (--n ...)");
  }
  wap::BenchSpec spec;
  for (const std::string& algo : split_csv(args.algos)) {
    if (algo != "wap" && algo != "gsp") throw UsageError("unknown algorithm: " + algo);
    spec.algorithms.push_back(algo);
  }
  if (spec.algorithms.empty()) throw UsageError("no algorithms selected");
  for (const std::string& s : split_csv(args.supports)) {
    spec.supports.push_back(parse_support(s));
  }
  if (spec.supports.empty()) throw UsageError("no support values given");
  if (!args.sizes.empty()) {
    for (const std::string& s : split_csv(args.sizes)) {
      try {
        spec.sizes.push_back(std::stoull(s));
      } catch (const std::exception&) {
        throw UsageError("invalid size: " + s);
      }
    }
  }
  spec.repeats = args.repeats;
  spec.timeout_seconds = args.timeout;

  wap::WasDatabase db =
      args.have_gen ? wap::generate(args.spec) : wap::read_wasd_file(args.database);
  for (std::uint64_t size : spec.sizes) {
    if (size > db.m()) {
      throw UsageError("size " + std::to_string(size) + " exceeds database (" +
                       std::to_string(db.m()) + " sequences)");
    }
  }

  std::vector<wap::BenchResult> results = wap::run_benchmark(db, spec);
  Output out(args.output);
  wap::write_bench_csv(results, out.stream());
  return 0;
}

struct StatsArgs {
  std::string database;
  std::string log;
  std::string format = "clf";
};

int cmd_stats(const StatsArgs& args) {
  if (args.database.empty() == args.log.empty()) {
    throw UsageError("provide either a database file or --log FILE");
  }
  if (!args.log.empty()) {
    std::ifstream in(args.log, std::ios::binary);
    if (!in) throw wap::ParseError("cannot open " + args.log);
    wap::ParsedLog log = wap::parse_log(in, to_format(args.format));
    wap::LogStats stats = wap::log_stats(log.records);
    std::cout << "entries\t" << stats.entries << '\n'
              << "unique_hosts\t" << stats.unique_hosts << '\n'
              << "unique_urls\t" << stats.unique_urls << '\n'
              << "unique_extensions\t" << stats.unique_extensions << '\n'
              << "malformed_lines\t" << log.errors.size() << '\n';
    return 0;
  }
  wap::WasDatabase db = wap::read_wasd_file(args.database);
  std::uint64_t total = 0, max_len = 0;
  std::uint64_t min_len = db.m() == 0 ? 0 : std::numeric_limits<std::uint64_t>::max();
  for (const wap::AccessSequence& s : db.sequences) {
    total += s.size();
    max_len = std::max<std::uint64_t>(max_len, s.size());
    min_len = std::min<std::uint64_t>(min_len, s.size());
  }
  std::cout << "sequences\t" << db.m() << '\n'
            << "distinct_events\t" << db.dict.size() << '\n'
            << "total_events\t" << total << '\n'
            << "min_length\t" << min_len << '\n'
            << "max_length\t" << max_len << '\n';
  char mean[32];
  std::snprintf(mean, sizeof(mean), "%.2f", db.m() ? static_cast<double>(total) / db.m() : 0.0);
  std::cout << "mean_length\t" << mean << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"waplite: sequential access pattern mining for web logs"};
  app.require_subcommand(1);

  PreprocessArgs pre_args;
  CLI::App* pre = app.add_subcommand(
      "preprocess", "Parse access logs and sessionize them into a sequence database");
  pre->add_option("--format", pre_args.format, "Log format")
      ->required()
      ->check(CLI::IsMember({"clf", "combined"}));
  pre->add_option("--session-timeout", pre_args.timeout, "Session gap in seconds")
      ->check(CLI::PositiveNumber);
  pre->add_flag("--no-strip-query", pre_args.no_strip_query, "Keep query strings in events");
  CLI::Option* excl = pre->add_option("--exclude-ext", pre_args.exclude_ext,
                                      "Comma-separated extensions to drop "
                                      "(replaces the default set)");
  pre->add_option("--status-min", pre_args.status_min, "Lowest status kept");
  pre->add_option("--status-max", pre_args.status_max, "Highest status kept");
  pre->add_flag("--strict", pre_args.strict, "Abort on the first malformed line");
  pre->add_option("-o,--output", pre_args.output, "Output .wasd file ('-' for stdout)")
      ->required();
  pre->add_option("logs", pre_args.logs, "Input log files")->required();

  MineArgs mine_args;
  CLI::App* mine = app.add_subcommand("mine", "Mine frequent access patterns");
  mine->add_option("--algo", mine_args.algo, "Mining algorithm")
      ->required()
      ->check(CLI::IsMember({"wap", "gsp", "brute"}));
  mine->add_option("--support", mine_args.support, "Support threshold (fraction or a/b)")
      ->required();
  mine->add_option("--min-len", mine_args.min_len, "Drop patterns shorter than this");
  mine->add_option("--max-len", mine_args.max_len, "Drop patterns longer than this");
  mine->add_option("-o,--output", mine_args.output, "Output .tsv file ('-' for stdout)")
      ->required();
  mine->add_option("database", mine_args.database, "Input .wasd file")->required();

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic sequence database");
  gen->add_option("--n", gen_args.spec.num_sequences, "Number of sequences")->required();
  gen->add_option("--alphabet", gen_args.spec.alphabet_size, "Alphabet size")->required();
  gen->add_option("--mean-len", gen_args.spec.mean_length, "Mean sequence length");
  gen->add_option("--zipf", gen_args.spec.zipf_exponent, "Zipf exponent (0 = uniform)");
  gen->add_option("--seed", gen_args.spec.seed, "PRNG seed");
  gen->add_option("-o,--output", gen_args.output, "Output .wasd file ('-' for stdout)")
      ->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Time mining algorithms over a grid");
  bench->add_option("--algos", bench_args.algos, "Comma-separated algorithms (wap,gsp)");
  bench->add_option("--supports", bench_args.supports, "Comma-separated support thresholds")
      ->required();
  bench->add_option("--sizes", bench_args.sizes, "Comma-separated sequence-count prefixes");
  bench->add_option("--repeats", bench_args.repeats, "Timed runs per cell (median reported)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--timeout", bench_args.timeout, "Per-run timeout in seconds");
  CLI::Option* bench_n =
      bench->add_option("--n", bench_args.spec.num_sequences, "Generate: sequences");
  bench->add_option("--alphabet", bench_args.spec.alphabet_size, "Generate: alphabet size");
  bench->add_option("--mean-len", bench_args.spec.mean_length, "Generate: mean length");
  bench->add_option("--zipf", bench_args.spec.zipf_exponent, "Generate: Zipf exponent");
  bench->add_option("--seed", bench_args.spec.seed, "Generate: PRNG seed");
  bench->add_option("-o,--output", bench_args.output, "Output .csv file ('-' for stdout)")
      ->required();
  bench->add_option("database", bench_args.database, "Input .wasd file");

  StatsArgs stats_args;
  CLI::App* stats = app.add_subcommand("stats", "Describe a database or an access log");
  stats->add_option("--log", stats_args.log, "Access log to summarize instead");
  stats->add_option("--format", stats_args.format, "Log format for --log")
      ->check(CLI::IsMember({"clf", "combined"}));
  stats->add_option("database", stats_args.database, "Input .wasd file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  bench_args.have_gen = bench_n->count() > 0;
  pre_args.exclude_ext_set = excl->count() > 0;

  try {
    if (pre->parsed()) return cmd_preprocess(pre_args);
    if (mine->parsed()) return cmd_mine(mine_args);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (bench->parsed()) return cmd_bench(bench_args);
    if (stats->parsed()) return cmd_stats(stats_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
