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

#include "gwl/tudataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gwl/errors.hpp"

namespace gwl {
namespace {

namespace fs = std::filesystem;

std::string location(const fs::path& file, int line_number) {
  return file.filename().string() + ":" + std::to_string(line_number);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

// Parses exactly `count` comma- or whitespace-separated integers from a line.
std::vector<long long> parse_ints(const std::string& line, int count,
                                  const fs::path& file, int line_number) {
  std::vector<long long> values;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p != end) {
    while (p != end && (*p == ' ' || *p == '\t' || *p == ',' || *p == '\r'))
      ++p;
    if (p == end) break;
    long long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc())
      throw ParseError(location(file, line_number) + ": expected integer in '" +
                       line + "'");
    values.push_back(value);
    p = next;
  }
  if (static_cast<int>(values.size()) != count)
    throw ParseError(location(file, line_number) + ": expected " +
                     std::to_string(count) + " integer(s) in '" + line + "'");
  return values;
}

// Reads all non-trailing-blank lines of a file as rows of `count` integers.
std::vector<std::vector<long long>> read_int_file(const fs::path& file,
                                                  int count) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());
  std::vector<std::vector<long long>> rows;
  std::string line;
  int line_number = 0;
  int last_content = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (blank(line)) continue;
    if (last_content != line_number - 1 && last_content != 0)
      throw ParseError(location(file, last_content + 1) +
                       ": blank line inside data");
    rows.push_back(parse_ints(line, count, file, line_number));
    last_content = line_number;
  }
  return rows;
}

// Normalizes arbitrary integer labels to a dense 0-based alphabet ordered by
// ascending original value. Returns dense-id -> original value.
std::vector<int> densify(std::vector<int>& labels) {
  std::set<int> values(labels.begin(), labels.end());
  std::vector<int> ordered(values.begin(), values.end());
  std::map<int, int> dense;
  for (std::size_t i = 0; i < ordered.size(); ++i)
    dense[ordered[i]] = static_cast<int>(i);
  for (int& label : labels) label = dense[label];
  return ordered;
}

}  // namespace

Dataset load_tudataset(const fs::path& directory,
                       const std::string& dataset_name) {
  const fs::path a_file = directory / (dataset_name + "_A.txt");
  const fs::path indicator_file =
      directory / (dataset_name + "_graph_indicator.txt");
  const fs::path graph_label_file =
      directory / (dataset_name + "_graph_labels.txt");
  const fs::path node_label_file =
      directory / (dataset_name + "_node_labels.txt");
  const fs::path edge_label_file =
      directory / (dataset_name + "_edge_labels.txt");

  // Graph membership per vertex.
  auto indicator_rows = read_int_file(indicator_file, 1);
  const int total_vertices = static_cast<int>(indicator_rows.size());
  std::vector<int> graph_of(total_vertices);
  int graph_count = 0;
  for (int v = 0; v < total_vertices; ++v) {
    long long gid = indicator_rows[v][0];
    if (gid < 1)
      throw StructuralError(location(indicator_file, v + 1) +
                            ": graph ids are 1-based");
    graph_of[v] = static_cast<int>(gid - 1);
    graph_count = std::max(graph_count, static_cast<int>(gid));
  }

  auto class_rows = read_int_file(graph_label_file, 1);
  if (static_cast<int>(class_rows.size()) != graph_count)
    throw StructuralError(graph_label_file.filename().string() + ": " +
                          std::to_string(class_rows.size()) +
                          " labels for " + std::to_string(graph_count) +
                          " graphs");
  std::vector<int> class_labels(graph_count);
  for (int g = 0; g < graph_count; ++g)
    class_labels[g] = static_cast<int>(class_rows[g][0]);

  // Local re-indexing: vertices of each graph numbered from 0 in global order.
  std::vector<int> local_id(total_vertices);
  std::vector<int> vertex_counts(graph_count, 0);
  for (int v = 0; v < total_vertices; ++v)
    local_id[v] = vertex_counts[graph_of[v]]++;

  // Node labels (all zero when the file is absent).
  std::vector<int> node_labels(total_vertices, 0);
  std::vector<int> vertex_label_values;
  if (fs::exists(node_label_file)) {
    auto rows = read_int_file(node_label_file, 1);
    if (static_cast<int>(rows.size()) != total_vertices)
      throw StructuralError(node_label_file.filename().string() + ": " +
                            std::to_string(rows.size()) + " labels for " +
                            std::to_string(total_vertices) + " vertices");
    for (int v = 0; v < total_vertices; ++v)
      node_labels[v] = static_cast<int>(rows[v][0]);
    vertex_label_values = densify(node_labels);
  }

  // Directed edge lines; each undirected edge must appear in both directions.
  auto edge_rows = read_int_file(a_file, 2);
  const bool labeled_edges = fs::exists(edge_label_file);
  std::vector<int> line_labels;
  if (labeled_edges) {
    auto rows = read_int_file(edge_label_file, 1);
    if (rows.size() != edge_rows.size())
      throw StructuralError(edge_label_file.filename().string() + ": " +
                            std::to_string(rows.size()) + " labels for " +
                            std::to_string(edge_rows.size()) + " edge lines");
    line_labels.reserve(rows.size());
    for (const auto& row : rows) line_labels.push_back(static_cast<int>(row[0]));
  }

  std::map<std::pair<int, int>, int> directed;  // directed pair -> line index
  for (std::size_t i = 0; i < edge_rows.size(); ++i) {
    long long u1 = edge_rows[i][0], v1 = edge_rows[i][1];
    if (u1 < 1 || v1 < 1 || u1 > total_vertices || v1 > total_vertices)
      throw StructuralError(location(a_file, static_cast<int>(i + 1)) +
                            ": vertex id out of range");
    int u = static_cast<int>(u1 - 1), v = static_cast<int>(v1 - 1);
    if (u == v)
      throw StructuralError(location(a_file, static_cast<int>(i + 1)) +
                            ": self-loop");
    if (graph_of[u] != graph_of[v])
      throw StructuralError(location(a_file, static_cast<int>(i + 1)) +
                            ": edge endpoints in different graphs");
    if (!directed.emplace(std::pair{u, v}, static_cast<int>(i)).second)
      throw StructuralError(location(a_file, static_cast<int>(i + 1)) +
                            ": duplicate directed pair");
  }

  std::vector<std::vector<std::pair<int, int>>> edges(graph_count);
  std::vector<std::vector<int>> edge_labels(graph_count);
  for (const auto& [pair, line] : directed) {
    auto [u, v] = pair;
    auto reverse = directed.find({v, u});
    if (reverse == directed.end())
      throw StructuralError(a_file.filename().string() + ": directed pair (" +
                            std::to_string(u + 1) + "," + std::to_string(v + 1) +
                            ") has no reverse");
    if (u > v) continue;  // store each undirected edge once
    int g = graph_of[u];
    edges[g].emplace_back(local_id[u], local_id[v]);
    if (labeled_edges) {
      if (line_labels[line] != line_labels[reverse->second])
        throw StructuralError(edge_label_file.filename().string() +
                              ": labels of the two directions of edge (" +
                              std::to_string(u + 1) + "," +
                              std::to_string(v + 1) + ") differ");
      edge_labels[g].push_back(line_labels[line]);
    }
  }

  std::vector<int> edge_label_values;
  if (labeled_edges) {
    std::vector<int> all;
    for (const auto& labels : edge_labels)
      all.insert(all.end(), labels.begin(), labels.end());
    edge_label_values = densify(all);
    std::size_t pos = 0;
    for (auto& labels : edge_labels)
      for (int& label : labels) label = all[pos++];
  }

  Dataset dataset;
  dataset.name = dataset_name;
  dataset.class_labels = std::move(class_labels);
  dataset.vertex_label_values = std::move(vertex_label_values);
  dataset.edge_label_values = std::move(edge_label_values);
  std::vector<std::vector<int>> labels_per_graph(graph_count);
  for (int v = 0; v < total_vertices; ++v)
    labels_per_graph[graph_of[v]].push_back(node_labels[v]);
  dataset.graphs.reserve(graph_count);
  for (int g = 0; g < graph_count; ++g) {
    dataset.graphs.emplace_back(
        vertex_counts[g], std::move(edges[g]), std::move(labels_per_graph[g]),
        labeled_edges ? std::optional(std::move(edge_labels[g]))
                      : std::nullopt);
  }
  dataset.validate();
  return dataset;
}

void write_tudataset(const Dataset& dataset, const fs::path& directory,
                     const std::string& provenance) {
  dataset.validate();
  fs::create_directories(directory);
  const std::string& name = dataset.name;

  auto original_vertex_label = [&](int dense) {
    return dataset.vertex_label_values.empty()
               ? dense
               : dataset.vertex_label_values[dense];
  };
  auto original_edge_label = [&](int dense) {
    return dataset.edge_label_values.empty() ? dense
                                             : dataset.edge_label_values[dense];
  };

  std::ofstream a(directory / (name + "_A.txt"));
  std::ofstream indicator(directory / (name + "_graph_indicator.txt"));
  std::ofstream graph_labels(directory / (name + "_graph_labels.txt"));

  const bool write_node_labels = !dataset.vertex_label_values.empty();
  const bool write_edge_labels = dataset.has_edge_labels();
  std::ofstream node_labels;
  std::ofstream edge_labels;
  if (write_node_labels)
    node_labels.open(directory / (name + "_node_labels.txt"));
  if (write_edge_labels)
    edge_labels.open(directory / (name + "_edge_labels.txt"));

  int offset = 0;
  for (int gi = 0; gi < dataset.graph_count(); ++gi) {
    const Graph& g = dataset.graphs[gi];
    graph_labels << dataset.class_labels[gi] << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      indicator << (gi + 1) << "\n";
      if (write_node_labels)
        node_labels << original_vertex_label(g.vertex_label(v)) << "\n";
    }
    // Both directions, ascending by (source, target) global id.
    std::vector<std::pair<std::pair<int, int>, int>> directed;
    directed.reserve(2 * g.edges().size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      auto [u, v] = g.edges()[e];
      int label = g.has_edge_labels() ? g.edge_labels()[e] : 0;
      directed.push_back({{offset + u + 1, offset + v + 1}, label});
      directed.push_back({{offset + v + 1, offset + u + 1}, label});
    }
    std::sort(directed.begin(), directed.end());
    for (const auto& [pair, label] : directed) {
      a << pair.first << ", " << pair.second << "\n";
      if (write_edge_labels) edge_labels << original_edge_label(label) << "\n";
    }
    offset += g.vertex_count();
  }

  if (!provenance.empty()) {
    std::ofstream prov(directory / (name + "_provenance.txt"));
    prov << provenance;
    if (provenance.back() != '\n') prov << "\n";
  }
}

}  // namespace gwl
