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

#include <doctest.h>

#include "test_helpers.hpp"
#include "wap/baselines.hpp"
#include "wap/mine.hpp"

using namespace wap;
using waptest::fixture_db;
using waptest::make_db;
using waptest::pattern_strings;
using waptest::seq_of;

namespace {

const std::vector<std::string> kFixtureGolden = {
    "a:4",     "b:4",     "c:4",     "a a:4",   "a b:4",     "a c:4", "b a:4",
    "b c:4",   "a a c:4", "a b a:4", "a b c:4", "b a c:4",   "a b a c:4",
};

}  // namespace

TEST_CASE("mining the fixture at 3/4 yields the thirteen golden patterns") {
  WasDatabase db = fixture_db();
  PatternSet patterns = wap_mine(db, Ratio{3, 4});
  CHECK(patterns.size() == 13);
  CHECK(patterns.denominator() == 4);
  CHECK(pattern_strings(patterns, db.dict) == kFixtureGolden);
}

TEST_CASE("conditional base of c on the fixture tree") {
  WasDatabase db = fixture_db();
  WapTree tree = build_tree(db, frequent_events(db, Ratio{3, 4}));
  EventId c = *db.dict.find("c");

  auto base = conditional_base(tree, c);
  REQUIRE(base.size() == 4); // the zero-weight entry is dropped
  CHECK(base[0].events == seq_of(db.dict, "a b a"));
  CHECK(base[0].weight == 1);
  CHECK(base[1].events == seq_of(db.dict, "a b c a"));
  CHECK(base[2].events == seq_of(db.dict, "b a b a"));
  CHECK(base[3].events == seq_of(db.dict, "a b a c"));

  auto cfe = conditional_frequent_events(base, 3);
  REQUIRE(cfe.size() == 2);
  CHECK(db.dict.token(cfe[0]) == "a");
  CHECK(db.dict.token(cfe[1]) == "b");

  WapTree ct = conditional_tree(base, cfe);
  CHECK(ct.inserted_weight() == 4);
  CHECK(ct.labeled_node_count() == 7); // a:3-b:3-a:3 plus b:1-a:1-b:1-a:1
  CHECK(ct.event_support(cfe[0]) == 4);
  CHECK(ct.event_support(cfe[1]) == 4);
  CHECK(!ct.single_branch());
}

TEST_CASE("conditional base of a weights by unsubsumed counts") {
  WasDatabase db = fixture_db();
  WapTree tree = build_tree(db, frequent_events(db, Ratio{3, 4}));
  EventId a = *db.dict.find("a");
  auto base = conditional_base(tree, a);
  REQUIRE(base.size() == 3);
  CHECK(base[0].events == seq_of(db.dict, "a b"));
  CHECK(base[0].weight == 2);
  CHECK(base[1].events == seq_of(db.dict, "a b c"));
  CHECK(base[1].weight == 1);
  CHECK(base[2].events == seq_of(db.dict, "b a b"));
  CHECK(base[2].weight == 1);
}

TEST_CASE("single-branch combination counts come from the deepest pick") {
  WasDatabase db = make_db({"a b a", "a b"});
  EventId a = *db.dict.find("a");
  EventId b = *db.dict.find("b");
  std::vector<std::pair<EventId, std::uint64_t>> branch = {{a, 2}, {b, 2}, {a, 1}};

  PatternSet all = single_branch_patterns(branch, 1, 2);
  CHECK(pattern_strings(all, db.dict) ==
        std::vector<std::string>{"a:2", "b:2", "a a:1", "a b:2", "b a:1", "a b a:1"});

  PatternSet thresh2 = single_branch_patterns(branch, 2, 2);
  CHECK(pattern_strings(thresh2, db.dict) ==
        std::vector<std::string>{"a:2", "b:2", "a b:2"});

  CHECK(single_branch_patterns({}, 1, 1).empty());
  CHECK_THROWS_AS(single_branch_patterns({{a, 1}, {b, 2}}, 1, 2), std::invalid_argument);
}

TEST_CASE("a one-path tree mines identically to the ground truth") {
  WasDatabase db = make_db({"a b c", "a b", "a b c"});
  PatternSet via_tree = wap_mine(db, Ratio{1, 3});
  PatternSet truth = brute_force_mine(db, Ratio{1, 3});
  CHECK(via_tree == truth);
  CHECK(via_tree.count_of(seq_of(db.dict, "a b c")) == 2);
}

TEST_CASE("single sequence at full support yields all its subsequences") {
  WasDatabase db = make_db({"a b c"});
  PatternSet patterns = wap_mine(db, Ratio{1, 1});
  CHECK(pattern_strings(patterns, db.dict) ==
        std::vector<std::string>{"a:1", "b:1", "c:1", "a b:1", "a c:1", "b c:1",
                                 "a b c:1"});
}

TEST_CASE("suffix extension appends the conditioning event") {
  WasDatabase db = fixture_db();
  PatternSet ps(4);
  ps.add_max(seq_of(db.dict, "a"), 2);
  ps.add_max(seq_of(db.dict, "b a"), 1);
  PatternSet extended = suffix_extend(ps, *db.dict.find("c"));
  CHECK(pattern_strings(extended, db.dict) ==
        std::vector<std::string>{"a c:2", "b a c:1"});
}

TEST_CASE("support threshold boundary: equality counts as frequent") {
  WasDatabase db = make_db({"x", "x", "x", "y"});
  PatternSet at = wap_mine(db, Ratio{3, 4});
  CHECK(pattern_strings(at, db.dict) == std::vector<std::string>{"x:3"});

  // Any threshold strictly above 3/4 excludes x.
  PatternSet above = wap_mine(db, *Ratio::parse("0.76"));
  CHECK(above.empty());
}

TEST_CASE("no frequent events leaves an empty pattern set") {
  WasDatabase db = make_db({"x", "y"});
  CHECK(wap_mine(db, Ratio{1, 1}).empty());
  WasDatabase empty = make_db({});
  CHECK(wap_mine(empty, Ratio{1, 2}).empty());
}

TEST_CASE("mining is deterministic and reports stats") {
  WasDatabase db = fixture_db();
  MiningStats s1, s2;
  PatternSet p1 = wap_mine(db, Ratio{3, 4}, &s1);
  PatternSet p2 = wap_mine(db, Ratio{3, 4}, &s2);
  CHECK(p1 == p2);
  CHECK(s1.trees_built == s2.trees_built);
  CHECK(s1.nodes_total == s2.nodes_total);
  CHECK(s1.trees_built >= 2);    // at least the top tree plus one conditional
  CHECK(s1.nodes_total >= 13);   // the top tree alone has 13
}

TEST_CASE("an expired deadline aborts mining") {
  WasDatabase db = fixture_db();
  Deadline past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(wap_mine(db, Ratio{3, 4}, nullptr, &past), TimeoutError);
}

TEST_CASE("all three miners agree on the fixture across thresholds") {
  WasDatabase db = fixture_db();
  for (Ratio r : {Ratio{0, 1}, Ratio{1, 4}, Ratio{1, 2}, Ratio{3, 4}, Ratio{1, 1}}) {
    PatternSet wap_result = wap_mine(db, r);
    PatternSet gsp_result = gsp_mine(db, r);
    PatternSet brute_result = brute_force_mine(db, r);
    CHECK(wap_result == gsp_result);
    CHECK(wap_result == brute_result);
  }
}
