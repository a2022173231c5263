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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gwl {

/// Undirected graph with dense 0-based vertex ids, integer vertex labels and
/// optional integer edge labels. No self-loops, no parallel edges. Immutable
/// after construction and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Edges may be given in any order/orientation; they are stored once with
  /// endpoints ordered u < v and sorted. `vertex_labels` defaults to all
  /// zeros. When `edge_labels` is present it must be parallel to `edges`.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
        std::vector<int> vertex_labels = {},
        std::optional<std::vector<int>> edge_labels = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Canonical edge list: endpoints u < v, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& vertex_labels() const { return vertex_labels_; }
  int vertex_label(int v) const { return vertex_labels_[v]; }

  bool has_edge_labels() const { return edge_labels_.has_value(); }
  /// Parallel to edges(); only valid when has_edge_labels().
  const std::vector<int>& edge_labels() const { return *edge_labels_; }

  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  /// Neighbors of v in ascending order.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  /// Labels of the edges to neighbors(v), parallel to neighbors(v).
  /// Only valid when has_edge_labels().
  const std::vector<int>& neighbor_edge_labels(int v) const {
    return adjacency_labels_[v];
  }

  bool has_edge(int u, int v) const;
  /// Label of edge {u, v}; requires the edge to exist. Returns 0 for
  /// unlabeled graphs.
  int edge_label(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> vertex_labels_;
  std::optional<std::vector<int>> edge_labels_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> adjacency_labels_;
};

/// Ordered collection of graphs with one class label per graph. Vertex and
/// edge label alphabets are shared across all member graphs; labels are kept
/// dense (0-based) with the original values retained for export.
struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> class_labels;
  /// Dense label id -> original value as read from the source files. Empty
  /// for datasets constructed without a node label file (all labels 0).
  std::vector<int> vertex_label_values;
  /// Dense edge label id -> original value. Empty when edges are unlabeled.
  std::vector<int> edge_label_values;

  int graph_count() const { return static_cast<int>(graphs.size()); }
  bool has_edge_labels() const;

  /// Number of distinct vertex labels appearing in the dataset (the size of
  /// the initial color alphabet).
  int distinct_vertex_labels() const;

  /// Throws StructuralError when an invariant is violated.
  void validate() const;
};

/// Disjoint union of all graphs of a dataset with bookkeeping to map between
/// global and (graph, local vertex) coordinates.
struct DisjointUnion {
  Graph graph;
  /// global id -> (graph index, local vertex id); a bijection onto all pairs.
  std::vector<std::pair<int, int>> origin;
  /// graph index -> first global id of that graph's vertices.
  std::vector<int> offsets;

  int global_id(int graph_index, int local_vertex) const {
    return offsets[graph_index] + local_vertex;
  }
  /// global id -> graph index, as a flat vector.
  std::vector<int> graph_of_vertex() const;
  /// Global ids of one member graph's vertices, in local order.
  std::vector<int> graph_vertices(int graph_index) const;
};

DisjointUnion disjoint_union(const Dataset& dataset);

}  // namespace gwl
