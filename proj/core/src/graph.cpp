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

#include "gwl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gwl/errors.hpp"

namespace gwl {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<int> vertex_labels,
             std::optional<std::vector<int>> edge_labels)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw StructuralError("negative vertex count");
  if (vertex_labels.empty()) {
    vertex_labels_.assign(vertex_count, 0);
  } else {
    if (static_cast<int>(vertex_labels.size()) != vertex_count)
      throw StructuralError("vertex label count does not match vertex count");
    vertex_labels_ = std::move(vertex_labels);
  }
  for (int label : vertex_labels_)
    if (label < 0) throw StructuralError("negative vertex label");

  if (edge_labels && edge_labels->size() != edges.size())
    throw StructuralError("edge label count does not match edge count");

  // Canonicalize: endpoints ordered u < v, edges sorted, labels carried along.
  std::vector<std::pair<std::pair<int, int>, int>> tagged(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u == v) throw StructuralError("self-loop not allowed");
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw StructuralError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    tagged[i] = {{u, v}, edge_labels ? (*edge_labels)[i] : 0};
  }
  std::sort(tagged.begin(), tagged.end());
  for (std::size_t i = 1; i < tagged.size(); ++i)
    if (tagged[i].first == tagged[i - 1].first)
      throw StructuralError("duplicate edge");

  edges_.reserve(tagged.size());
  for (const auto& [e, label] : tagged) edges_.push_back(e);
  if (edge_labels) {
    std::vector<int> labels;
    labels.reserve(tagged.size());
    for (const auto& [e, label] : tagged) {
      if (label < 0) throw StructuralError("negative edge label");
      labels.push_back(label);
    }
    edge_labels_ = std::move(labels);
  }

  adjacency_.assign(vertex_count_, {});
  adjacency_labels_.assign(edge_labels_ ? vertex_count_ : 0, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    if (edge_labels_) {
      adjacency_labels_[u].push_back((*edge_labels_)[i]);
      adjacency_labels_[v].push_back((*edge_labels_)[i]);
    }
  }
  // Edges are sorted, so adjacency lists come out ascending already; u-side
  // entries of later edges interleave with v-side entries, sort to be sure.
  for (int v = 0; v < vertex_count_; ++v) {
    if (!edge_labels_) {
      std::sort(adjacency_[v].begin(), adjacency_[v].end());
    } else {
      std::vector<std::pair<int, int>> paired(adjacency_[v].size());
      for (std::size_t i = 0; i < paired.size(); ++i)
        paired[i] = {adjacency_[v][i], adjacency_labels_[v][i]};
      std::sort(paired.begin(), paired.end());
      for (std::size_t i = 0; i < paired.size(); ++i) {
        adjacency_[v][i] = paired[i].first;
        adjacency_labels_[v][i] = paired[i].second;
      }
    }
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

int Graph::edge_label(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
  if (it == edges_.end() || *it != std::pair{u, v})
    throw InvalidArgument("edge_label: no such edge");
  if (!edge_labels_) return 0;
  return (*edge_labels_)[static_cast<std::size_t>(it - edges_.begin())];
}

bool Dataset::has_edge_labels() const {
  for (const Graph& g : graphs)
    if (g.has_edge_labels()) return true;
  return false;
}

int Dataset::distinct_vertex_labels() const {
  std::set<int> labels;
  for (const Graph& g : graphs)
    labels.insert(g.vertex_labels().begin(), g.vertex_labels().end());
  return static_cast<int>(labels.size());
}

void Dataset::validate() const {
  if (class_labels.size() != graphs.size())
    throw StructuralError("dataset '" + name +
                          "': class label count does not match graph count");
  bool labeled_edges = has_edge_labels();
  for (const Graph& g : graphs) {
    if (labeled_edges && g.edge_count() > 0 && !g.has_edge_labels())
      throw StructuralError("dataset '" + name +
                            "': mixed edge label presence across graphs");
    if (!vertex_label_values.empty()) {
      for (int label : g.vertex_labels())
        if (label >= static_cast<int>(vertex_label_values.size()))
          throw StructuralError("dataset '" + name +
                                "': vertex label outside dense alphabet");
    }
    if (!edge_label_values.empty() && g.has_edge_labels()) {
      for (int label : g.edge_labels())
        if (label >= static_cast<int>(edge_label_values.size()))
          throw StructuralError("dataset '" + name +
                                "': edge label outside dense alphabet");
    }
  }
}

std::vector<int> DisjointUnion::graph_of_vertex() const {
  std::vector<int> out(origin.size());
  for (std::size_t v = 0; v < origin.size(); ++v) out[v] = origin[v].first;
  return out;
}

std::vector<int> DisjointUnion::graph_vertices(int graph_index) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < origin.size(); ++v)
    if (origin[v].first == graph_index) out.push_back(static_cast<int>(v));
  return out;
}

DisjointUnion disjoint_union(const Dataset& dataset) {
  if (dataset.graphs.empty())
    throw InvalidArgument("disjoint_union: empty dataset");
  DisjointUnion result;
  int total = 0;
  result.offsets.reserve(dataset.graphs.size());
  for (const Graph& g : dataset.graphs) {
    result.offsets.push_back(total);
    total += g.vertex_count();
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<int> labels(total);
  bool labeled_edges = dataset.has_edge_labels();
  std::vector<int> edge_labels;
  result.origin.resize(total);
  for (int gi = 0; gi < dataset.graph_count(); ++gi) {
    const Graph& g = dataset.graphs[gi];
    int off = result.offsets[gi];
    for (int v = 0; v < g.vertex_count(); ++v) {
      labels[off + v] = g.vertex_label(v);
      result.origin[off + v] = {gi, v};
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      auto [u, v] = g.edges()[e];
      edges.emplace_back(off + u, off + v);
      if (labeled_edges)
        edge_labels.push_back(g.has_edge_labels() ? g.edge_labels()[e] : 0);
    }
  }
  result.graph = Graph(total, std::move(edges), std::move(labels),
                       labeled_edges ? std::optional(std::move(edge_labels))
                                     : std::nullopt);
  return result;
}

}  // namespace gwl
