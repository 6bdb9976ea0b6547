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
#include <utility>
#include <vector>

#include "wap/core.hpp"

namespace wap {

using NodeIndex = std::uint32_t;
inline constexpr NodeIndex kNoNode = 0xffffffffu;

/// One tree node. Nodes live in a flat arena inside WapTree and refer to
/// each other by index, so the tree is relocatable and cheap to tear down.
struct WapNode {
  EventId label = 0;       // undefined for the root
  std::uint64_t count = 0; // root keeps 0
  NodeIndex parent = kNoNode;
  NodeIndex queue_next = kNoNode; // next node with the same label, creation order
  std::vector<std::pair<EventId, NodeIndex>> children; // insertion order
};

/// Compressed prefix tree over filtered sequences. Shared prefixes share
/// nodes; every node carries the number of (weighted) sequences through it.
/// A per-label queue links all nodes of one event in creation order, and
/// parent indices allow upward prefix walks, so the structure is navigable
/// in both directions.
class WapTree {
 public:
  /// frequent_events must be strictly ascending. Only these labels may be
  /// inserted.
  explicit WapTree(std::vector<EventId> frequent_events);

  /// Inserts one filtered sequence with the given weight, sharing prefixes
  /// with earlier insertions. Throws std::invalid_argument on an empty
  /// sequence or one containing a non-frequent event.
  void insert(const AccessSequence& filtered, std::uint64_t weight = 1);

  NodeIndex root() const { return 0; }
  const WapNode& node(NodeIndex idx) const { return nodes_[idx]; }
  std::size_t node_count() const { return nodes_.size(); } // includes root
  std::uint64_t labeled_node_count() const { return nodes_.size() - 1; }
  std::uint64_t inserted_weight() const { return inserted_weight_; }

  const std::vector<EventId>& frequent_events() const { return frequent_events_; }

  /// Weighted number of inserted sequences containing e (each sequence
  /// counted once regardless of repetitions).
  std::uint64_t event_support(EventId e) const;

  NodeIndex queue_head(EventId e) const;

  /// All nodes labeled e, in queue (creation) order.
  std::vector<NodeIndex> event_nodes(EventId e) const;

  /// Labels from the root down to idx inclusive. Throws on the root.
  AccessSequence prefix_of(NodeIndex idx) const;

  /// Edge distance from the root (root itself is 0).
  std::size_t depth_of(NodeIndex idx) const;

  /// Nodes on the longest root-to-leaf path, counting the root. 1 for an
  /// empty tree.
  std::size_t height() const;

  /// True iff no node has more than one child.
  bool single_branch() const;

  /// (label, count) top-down for a single-branch tree. Throws
  /// std::logic_error if the tree branches.
  std::vector<std::pair<EventId, std::uint64_t>> branch() const;

  /// Unsubsumed count per node of e, in queue order: the node's count minus
  /// the counts of its nearest e-labeled descendants, i.e. the number of
  /// (weighted) suffixes for which this node is the first e on the path.
  /// Computed by walking each e-node up to its nearest e-labeled ancestor.
  std::vector<std::pair<NodeIndex, std::uint64_t>> unsubsumed_counts(EventId e) const;

  /// Same quantity by the dual recurrence: count minus the unsubsumed
  /// counts of all e-labeled proper descendants. Kept as an independent
  /// cross-check; agrees with unsubsumed_counts on every tree.
  std::vector<std::pair<NodeIndex, std::uint64_t>> unsubsumed_counts_recursive(EventId e) const;

 private:
  struct Queue {
    NodeIndex head = kNoNode;
    NodeIndex tail = kNoNode;
  };

  std::vector<WapNode> nodes_;
  std::vector<EventId> frequent_events_;
  // Per-label state, direct-addressed by label. Labels are dictionary ids,
  // so the tables stay as small as the alphabet; size is max label + 1.
  std::vector<Queue> queues_;
  std::vector<std::uint8_t> is_frequent_;
  std::vector<std::uint64_t> event_support_;
  std::vector<std::uint64_t> last_insert_; // insert serial that last saw the label
  std::uint64_t insert_serial_ = 0;
  std::uint64_t inserted_weight_ = 0;
};

/// Filters every sequence of db down to fe and inserts the non-empty
/// results. fe must be ascending (as produced by frequent_events).
WapTree build_tree(const WasDatabase& db, const std::vector<EventId>& fe);

/// Pre-order dump, children in ascending label order, two spaces per
/// depth level: "root:0" then "<indent><token>:<count>" lines.
void dump_tree(const WapTree& tree, const EventDictionary& dict, std::ostream& out);

}  // namespace wap
