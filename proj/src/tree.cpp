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

#include "wap/tree.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace wap {

WapTree::WapTree(std::vector<EventId> frequent_events)
    : frequent_events_(std::move(frequent_events)) {
  if (!std::is_sorted(frequent_events_.begin(), frequent_events_.end()) ||
      std::adjacent_find(frequent_events_.begin(), frequent_events_.end()) !=
          frequent_events_.end()) {
    throw std::invalid_argument("frequent events must be strictly ascending");
  }
  std::size_t cap = frequent_events_.empty() ? 0 : frequent_events_.back() + 1;
  queues_.resize(cap);
  is_frequent_.assign(cap, 0);
  event_support_.assign(cap, 0);
  last_insert_.assign(cap, 0);
  for (EventId e : frequent_events_) is_frequent_[e] = 1;
  nodes_.emplace_back(); // root
}

void WapTree::insert(const AccessSequence& filtered, std::uint64_t weight) {
  if (filtered.empty()) throw std::invalid_argument("cannot insert empty sequence");
  for (EventId e : filtered) {
    if (e >= is_frequent_.size() || !is_frequent_[e]) {
      throw std::invalid_argument("event " + std::to_string(e) + " is not frequent");
    }
  }
  ++insert_serial_;
  NodeIndex cur = 0;
  for (EventId e : filtered) {
    NodeIndex next = kNoNode;
    for (const auto& [label, child] : nodes_[cur].children) {
      if (label == e) {
        next = child;
        break;
      }
    }
    if (next != kNoNode) {
      cur = next;
      nodes_[cur].count += weight;
    } else {
      NodeIndex idx = static_cast<NodeIndex>(nodes_.size());
      WapNode n;
      n.label = e;
      n.count = weight;
      n.parent = cur;
      nodes_.push_back(std::move(n));
      nodes_[cur].children.emplace_back(e, idx);
      Queue& q = queues_[e];
      if (q.tail == kNoNode) {
        q.head = q.tail = idx;
      } else {
        nodes_[q.tail].queue_next = idx;
        q.tail = idx;
      }
      cur = idx;
    }
    // Each distinct event of the sequence gains the full weight once.
    if (last_insert_[e] != insert_serial_) {
      last_insert_[e] = insert_serial_;
      event_support_[e] += weight;
    }
  }
  inserted_weight_ += weight;
}

std::uint64_t WapTree::event_support(EventId e) const {
  return e < event_support_.size() ? event_support_[e] : 0;
}

NodeIndex WapTree::queue_head(EventId e) const {
  return e < queues_.size() ? queues_[e].head : kNoNode;
}

std::vector<NodeIndex> WapTree::event_nodes(EventId e) const {
  std::vector<NodeIndex> out;
  for (NodeIndex idx = queue_head(e); idx != kNoNode; idx = nodes_[idx].queue_next) {
    out.push_back(idx);
  }
  return out;
}

AccessSequence WapTree::prefix_of(NodeIndex idx) const {
  if (idx == 0) throw std::invalid_argument("root has no prefix");
  AccessSequence out;
  for (NodeIndex cur = idx; cur != 0; cur = nodes_[cur].parent) {
    out.push_back(nodes_[cur].label);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t WapTree::depth_of(NodeIndex idx) const {
  std::size_t d = 0;
  for (NodeIndex cur = idx; cur != 0; cur = nodes_[cur].parent) ++d;
  return d;
}

std::size_t WapTree::height() const {
  std::size_t best = 0;
  for (NodeIndex i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i].children.empty()) best = std::max(best, depth_of(i));
  }
  return best + 1;
}

bool WapTree::single_branch() const {
  for (const WapNode& n : nodes_) {
    if (n.children.size() > 1) return false;
  }
  return true;
}

std::vector<std::pair<EventId, std::uint64_t>> WapTree::branch() const {
  std::vector<std::pair<EventId, std::uint64_t>> out;
  NodeIndex cur = 0;
  while (!nodes_[cur].children.empty()) {
    if (nodes_[cur].children.size() > 1) throw std::logic_error("tree is not a single branch");
    cur = nodes_[cur].children.front().second;
    out.emplace_back(nodes_[cur].label, nodes_[cur].count);
  }
  return out;
}

std::vector<std::pair<NodeIndex, std::uint64_t>> WapTree::unsubsumed_counts(EventId e) const {
  std::vector<NodeIndex> qnodes = event_nodes(e);
  std::unordered_map<NodeIndex, std::uint64_t> unsub;
  unsub.reserve(qnodes.size());
  for (NodeIndex idx : qnodes) unsub.emplace(idx, nodes_[idx].count);
  // Every node's count flows to its nearest e-labeled proper ancestor: that
  // ancestor's occurrences of e are subsumed by this deeper one on the
  // shared paths.
  for (NodeIndex idx : qnodes) {
    for (NodeIndex cur = nodes_[idx].parent; cur != 0; cur = nodes_[cur].parent) {
      if (nodes_[cur].label == e) {
        unsub[cur] -= nodes_[idx].count;
        break;
      }
    }
  }
  std::vector<std::pair<NodeIndex, std::uint64_t>> out;
  out.reserve(qnodes.size());
  for (NodeIndex idx : qnodes) out.emplace_back(idx, unsub[idx]);
  return out;
}

std::vector<std::pair<NodeIndex, std::uint64_t>> WapTree::unsubsumed_counts_recursive(
    EventId e) const {
  std::vector<NodeIndex> qnodes = event_nodes(e);
  // Deepest first, so a node's unsubsumed count is final before it is
  // propagated to the ancestors above it.
  std::vector<std::pair<std::size_t, NodeIndex>> by_depth;
  by_depth.reserve(qnodes.size());
  for (NodeIndex idx : qnodes) by_depth.emplace_back(depth_of(idx), idx);
  std::stable_sort(by_depth.begin(), by_depth.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::unordered_map<NodeIndex, std::uint64_t> subsumed;
  std::unordered_map<NodeIndex, std::uint64_t> unsub;
  for (auto [depth, idx] : by_depth) {
    std::uint64_t u = nodes_[idx].count - subsumed[idx];
    unsub[idx] = u;
    for (NodeIndex cur = nodes_[idx].parent; cur != 0; cur = nodes_[cur].parent) {
      if (nodes_[cur].label == e) subsumed[cur] += u;
    }
  }
  std::vector<std::pair<NodeIndex, std::uint64_t>> out;
  out.reserve(qnodes.size());
  for (NodeIndex idx : qnodes) out.emplace_back(idx, unsub[idx]);
  return out;
}

WapTree build_tree(const WasDatabase& db, const std::vector<EventId>& fe) {
  WapTree tree(fe);
  for (const AccessSequence& s : db.sequences) {
    AccessSequence filtered = filter_sequence(s, fe);
    if (!filtered.empty()) tree.insert(filtered);
  }
  return tree;
}

namespace {

void dump_node(const WapTree& tree, const EventDictionary& dict, NodeIndex idx,
               std::size_t depth, std::ostream& out) {
  auto children = tree.node(idx).children;
  std::sort(children.begin(), children.end());
  for (const auto& [label, child] : children) {
    out << std::string(depth * 2, ' ') << dict.token(label) << ':'
        << tree.node(child).count << '\n';
    dump_node(tree, dict, child, depth + 1, out);
  }
}

}  // namespace

void dump_tree(const WapTree& tree, const EventDictionary& dict, std::ostream& out) {
  out << "root:0\n";
  dump_node(tree, dict, tree.root(), 1, out);
}

}  // namespace wap
