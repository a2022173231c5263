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

#pragma once

#include <utility>
#include <vector>

namespace gwl {

/// Vertex coloring at one refinement iteration: vertex id -> color id.
struct Coloring {
  std::vector<int> colors;
  int iteration = 0;

  bool operator==(const Coloring&) const = default;
};

/// Rooted tree of colors produced across refinement iterations.
///
/// Color 0 is an artificial root holding all vertices; its children are the
/// initial label colors (iteration 0, depth 1). Every later iteration appends
/// children below the current leaf colors, so a node created at iteration i
/// sits at depth i + 1 and the leaf colors always form a partition of the
/// vertex set. Colors are never reused across iterations. The member set of a
/// child is always a subset of its parent's member set.
///
/// The tree doubles as a metric on colors (path length) and as the weight
/// structure of the assignment kernel.
class ColorHierarchy {
 public:
  ColorHierarchy() = default;

  /// Root plus one child per distinct initial label (ascending label order).
  static ColorHierarchy initial(int vertex_count,
                                const std::vector<int>& initial_labels);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return 0; }
  int parent(int color) const { return nodes_[color].parent; }
  int depth(int color) const { return nodes_[color].depth; }
  const std::vector<int>& children(int color) const { return children_[color]; }
  bool is_leaf(int color) const { return children_[color].empty(); }
  /// Vertices holding `color` at its iteration, ascending.
  const std::vector<int>& members(int color) const { return members_[color]; }

  int vertex_count() const { return static_cast<int>(leaf_color_.size()); }
  /// Completed refinement iterations.
  int iterations() const { return iterations_; }

  int leaf_color(int vertex) const { return leaf_color_[vertex]; }
  Coloring leaf_coloring() const { return {leaf_color_, iterations_}; }
  /// Distinct leaf colors, ascending; their member sets partition the
  /// vertex set.
  std::vector<int> live_colors() const;

  /// (initial label value, color id) pairs for the depth-1 colors,
  /// ascending by label.
  const std::vector<std::pair<int, int>>& initial_colors() const {
    return initial_colors_;
  }

  /// Path length between two colors (tree metric).
  int path_length(int c1, int c2) const;
  /// Depth of the lowest common ancestor of two colors.
  int lca_depth(int c1, int c2) const;

  /// Splits leaf color `parent_color` into one child per group. The groups
  /// must partition members(parent_color); each must be non-empty. Returns
  /// the new color ids in group order. Used by refinement updates.
  std::vector<int> add_children(int parent_color,
                                const std::vector<std::vector<int>>& groups);
  void finish_iteration() { ++iterations_; }

  bool operator==(const ColorHierarchy&) const = default;

 private:
  struct Node {
    int parent = -1;
    int depth = 0;
    bool operator==(const Node&) const = default;
  };

  std::vector<Node> nodes_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> members_;
  std::vector<int> leaf_color_;
  std::vector<std::pair<int, int>> initial_colors_;
  int iterations_ = 0;
};

}  // namespace gwl
