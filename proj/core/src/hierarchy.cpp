// Copyright 2026 The gwl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gwl/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gwl/errors.hpp"

namespace gwl {

ColorHierarchy ColorHierarchy::initial(int vertex_count,
                                       const std::vector<int>& initial_labels) {
  if (static_cast<int>(initial_labels.size()) != vertex_count)
    throw InvalidArgument("initial label count does not match vertex count");
  ColorHierarchy h;
  h.nodes_.push_back({-1, 0});
  h.children_.emplace_back();
  std::vector<int> all(vertex_count);
  std::iota(all.begin(), all.end(), 0);
  h.members_.push_back(std::move(all));
  h.leaf_color_.assign(vertex_count, 0);

  std::map<int, std::vector<int>> by_label;
  for (int v = 0; v < vertex_count; ++v) by_label[initial_labels[v]].push_back(v);
  for (auto& [label, group] : by_label) {
    int color = h.node_count();
    h.nodes_.push_back({0, 1});
    h.children_.emplace_back();
    h.children_[0].push_back(color);
    for (int v : group) h.leaf_color_[v] = color;
    h.members_.push_back(std::move(group));
    h.initial_colors_.emplace_back(label, color);
  }
  return h;
}

std::vector<int> ColorHierarchy::live_colors() const {
  std::vector<int> live;
  if (leaf_color_.empty()) return live;
  live = leaf_color_;
  std::sort(live.begin(), live.end());
  live.erase(std::unique(live.begin(), live.end()), live.end());
  return live;
}

int ColorHierarchy::path_length(int c1, int c2) const {
  int steps = 0;
  while (nodes_[c1].depth > nodes_[c2].depth) c1 = nodes_[c1].parent, ++steps;
  while (nodes_[c2].depth > nodes_[c1].depth) c2 = nodes_[c2].parent, ++steps;
  while (c1 != c2) {
    c1 = nodes_[c1].parent;
    c2 = nodes_[c2].parent;
    steps += 2;
  }
  return steps;
}

int ColorHierarchy::lca_depth(int c1, int c2) const {
  while (nodes_[c1].depth > nodes_[c2].depth) c1 = nodes_[c1].parent;
  while (nodes_[c2].depth > nodes_[c1].depth) c2 = nodes_[c2].parent;
  while (c1 != c2) {
    c1 = nodes_[c1].parent;
    c2 = nodes_[c2].parent;
  }
  return nodes_[c1].depth;
}

std::vector<int> ColorHierarchy::add_children(
    int parent_color, const std::vector<std::vector<int>>& groups) {
  if (!is_leaf(parent_color))
    throw InvalidArgument("add_children: parent is not a leaf color");
  std::size_t total = 0;
  for (const auto& group : groups) {
    if (group.empty()) throw InvalidArgument("add_children: empty group");
    for (int v : group)
      if (leaf_color_[v] != parent_color)
        throw InvalidArgument("add_children: vertex not in parent color");
    total += group.size();
  }
  if (total != members_[parent_color].size())
    throw InvalidArgument("add_children: groups do not cover the parent");

  std::vector<int> ids;
  ids.reserve(groups.size());
  const int child_depth = nodes_[parent_color].depth + 1;
  for (const auto& group : groups) {
    int color = node_count();
    nodes_.push_back({parent_color, child_depth});
    children_.emplace_back();
    children_[parent_color].push_back(color);
    std::vector<int> sorted = group;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) leaf_color_[v] = color;
    members_.push_back(std::move(sorted));
    ids.push_back(color);
  }
  return ids;
}

}  // namespace gwl
