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

#include <sstream>

#include <doctest.h>

#include "test_helpers.hpp"
#include "wap/tree.hpp"

using namespace wap;
using waptest::fixture_db;
using waptest::make_db;
using waptest::seq_of;

namespace {

std::vector<std::uint64_t> queue_counts(const WapTree& tree, EventId e) {
  std::vector<std::uint64_t> out;
  for (NodeIndex idx : tree.event_nodes(e)) out.push_back(tree.node(idx).count);
  return out;
}

std::vector<std::uint64_t> unsub_values(const WapTree& tree, EventId e) {
  std::vector<std::uint64_t> out;
  for (auto [idx, u] : tree.unsubsumed_counts(e)) out.push_back(u);
  return out;
}

}  // namespace

TEST_CASE("fixture tree has the expected shape") {
  WasDatabase db = fixture_db();
  std::vector<EventId> fe = frequent_events(db, Ratio{3, 4});
  WapTree tree = build_tree(db, fe);

  // 18 filtered events compress into 13 labeled nodes.
  CHECK(tree.labeled_node_count() == 13);
  CHECK(tree.node_count() == 14);
  CHECK(tree.inserted_weight() == 4);
  CHECK(tree.height() == 6);

  const WapNode& root = tree.node(tree.root());
  REQUIRE(root.children.size() == 2);
  EventId a = *db.dict.find("a");
  EventId b = *db.dict.find("b");
  EventId c = *db.dict.find("c");
  CHECK(root.children[0].first == a);
  CHECK(tree.node(root.children[0].second).count == 3);
  CHECK(root.children[1].first == b);
  CHECK(tree.node(root.children[1].second).count == 1);

  CHECK(queue_counts(tree, a) == std::vector<std::uint64_t>{3, 2, 1, 1, 1});
  CHECK(queue_counts(tree, b) == std::vector<std::uint64_t>{3, 1, 1});
  CHECK(queue_counts(tree, c) == std::vector<std::uint64_t>{2, 1, 1, 1, 1});

  CHECK(tree.event_support(a) == 4);
  CHECK(tree.event_support(b) == 4);
  CHECK(tree.event_support(c) == 4);
}

TEST_CASE("fixture tree dumps to the golden text") {
  WasDatabase db = fixture_db();
  WapTree tree = build_tree(db, frequent_events(db, Ratio{3, 4}));
  std::stringstream out;
  dump_tree(tree, db.dict, out);
  CHECK(out.str() ==
        "root:0\n"
        "  a:3\n"
        "    b:3\n"
        "      a:2\n"
        "        c:2\n"
        "          c:1\n"
        "      c:1\n"
        "        a:1\n"
        "          c:1\n"
        "  b:1\n"
        "    a:1\n"
        "      b:1\n"
        "        a:1\n"
        "          c:1\n");
}

TEST_CASE("unsubsumed counts on the fixture tree") {
  WasDatabase db = fixture_db();
  WapTree tree = build_tree(db, frequent_events(db, Ratio{3, 4}));
  EventId a = *db.dict.find("a");
  EventId b = *db.dict.find("b");
  EventId c = *db.dict.find("c");

  CHECK(unsub_values(tree, a) == std::vector<std::uint64_t>{0, 2, 1, 0, 1});
  CHECK(unsub_values(tree, b) == std::vector<std::uint64_t>{3, 0, 1});
  CHECK(unsub_values(tree, c) == std::vector<std::uint64_t>{1, 0, 1, 1, 1});

  // Partition property: unsubsumed counts add up to the event frequency.
  for (EventId e : {a, b, c}) {
    std::uint64_t sum = 0;
    for (auto [idx, u] : tree.unsubsumed_counts(e)) sum += u;
    CHECK(sum == 4);
  }

  // The two formulations agree node by node.
  for (EventId e : {a, b, c}) {
    auto direct = tree.unsubsumed_counts(e);
    auto recursive = tree.unsubsumed_counts_recursive(e);
    CHECK(direct == recursive);
  }
}

TEST_CASE("unsubsumed b-counts: fully subsumed ancestor drops to zero") {
  // b-queue: b:3 (under a:3), then the two b's of the right branch. The
  // deeper right-branch b subsumes its b ancestor completely, so that
  // ancestor contributes no suffix of its own.
  WasDatabase db = fixture_db();
  WapTree tree = build_tree(db, frequent_events(db, Ratio{3, 4}));
  EventId b = *db.dict.find("b");
  auto unsub = tree.unsubsumed_counts(b);
  REQUIRE(unsub.size() == 3);
  CHECK(tree.node(unsub[1].first).count == 1);
  CHECK(unsub[1].second == 0);
  CHECK(unsub[2].second == 1);
  CHECK(tree.depth_of(unsub[1].first) == 1);
  CHECK(tree.depth_of(unsub[2].first) == 3);
}

TEST_CASE("prefix and depth walk parent links") {
  WasDatabase db = fixture_db();
  WapTree tree = build_tree(db, frequent_events(db, Ratio{3, 4}));
  EventId c = *db.dict.find("c");
  // Queue order is creation order, which interleaves across sequences.
  std::vector<NodeIndex> cnodes = tree.event_nodes(c);
  REQUIRE(cnodes.size() == 5);
  CHECK(tree.prefix_of(cnodes[0]) == seq_of(db.dict, "a b a c"));
  CHECK(tree.prefix_of(cnodes[1]) == seq_of(db.dict, "a b c"));
  CHECK(tree.prefix_of(cnodes[2]) == seq_of(db.dict, "a b c a c"));
  CHECK(tree.prefix_of(cnodes[3]) == seq_of(db.dict, "b a b a c"));
  CHECK(tree.prefix_of(cnodes[4]) == seq_of(db.dict, "a b a c c"));
  CHECK(tree.depth_of(cnodes[4]) == 5);
  CHECK(tree.depth_of(tree.root()) == 0);
  CHECK_THROWS_AS(tree.prefix_of(tree.root()), std::invalid_argument);
}

TEST_CASE("insertion validates its inputs") {
  WapTree tree({0, 2});
  CHECK_THROWS_AS(tree.insert({}), std::invalid_argument);
  CHECK_THROWS_AS(tree.insert({1}), std::invalid_argument);
  CHECK_THROWS_AS(WapTree({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(WapTree({1, 1}), std::invalid_argument);
  CHECK(tree.queue_head(0) == kNoNode);
  CHECK(tree.event_nodes(2).empty());
}

TEST_CASE("weighted insertion accumulates counts and support") {
  WapTree tree({0, 1});
  tree.insert({0, 1}, 2);
  tree.insert({0}, 3);
  tree.insert({0, 1}, 1);
  CHECK(tree.inserted_weight() == 6);
  CHECK(tree.labeled_node_count() == 2);
  const WapNode& root = tree.node(tree.root());
  REQUIRE(root.children.size() == 1);
  NodeIndex n0 = root.children[0].second;
  CHECK(tree.node(n0).count == 6);
  REQUIRE(tree.node(n0).children.size() == 1);
  CHECK(tree.node(tree.node(n0).children[0].second).count == 3);
  CHECK(tree.event_support(0) == 6);
  CHECK(tree.event_support(1) == 3);
}

TEST_CASE("single branch detection and extraction") {
  WasDatabase db = make_db({"a b c", "a b", "a b c"});
  std::vector<EventId> fe = frequent_events(db, Ratio{0, 1});
  WapTree tree = build_tree(db, fe);
  CHECK(tree.single_branch());
  auto branch = tree.branch();
  REQUIRE(branch.size() == 3);
  CHECK(branch[0].second == 3);
  CHECK(branch[1].second == 3);
  CHECK(branch[2].second == 2);

  WasDatabase db2 = make_db({"a b", "b a"});
  WapTree tree2 = build_tree(db2, frequent_events(db2, Ratio{0, 1}));
  CHECK(!tree2.single_branch());
  CHECK_THROWS_AS(tree2.branch(), std::logic_error);

  WapTree empty({0});
  CHECK(empty.single_branch());
  CHECK(empty.branch().empty());
  CHECK(empty.height() == 1);
}

TEST_CASE("fixture tree satisfies the full invariant audit") {
  WasDatabase db = fixture_db();
  std::vector<EventId> fe = frequent_events(db, Ratio{3, 4});
  WapTree tree = build_tree(db, fe);
  waptest::check_tree_invariants(tree, waptest::filtered_inserts(db, fe));
}
