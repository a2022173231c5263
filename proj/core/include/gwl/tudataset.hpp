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

#include <filesystem>
#include <string>

#include "gwl/graph.hpp"

namespace gwl {

/// Reads a dataset in TUDataset text format from `directory`:
///   <name>_A.txt               edge list, 1-based global vertex ids,
///                              comma separated, each undirected edge listed
///                              in both directions
///   <name>_graph_indicator.txt 1-based graph id per vertex line
///   <name>_graph_labels.txt    class label per graph line
///   <name>_node_labels.txt     optional; vertex label per line (all labels
///                              default to 0 when absent)
///   <name>_edge_labels.txt     optional; label per edge line of _A.txt
///
/// Vertices are re-indexed per graph from 0 and each undirected edge stored
/// once. Node and edge labels are normalized to dense 0-based alphabets; the
/// original values are retained in the returned Dataset for export.
///
/// Throws ParseError for malformed lines (message carries file name and line
/// number) and StructuralError for inconsistent content (edge across graphs,
/// a directed pair without its reverse, self-loops, ...).
Dataset load_tudataset(const std::filesystem::path& directory,
                       const std::string& dataset_name);

/// Writes `dataset` in the same TUDataset text format (both edge directions)
/// under `directory`, using dataset.name as the file prefix. Label files are
/// emitted with the original label values when the dataset carries them, and
/// skipped entirely for unlabeled datasets. When `provenance` is non-empty it
/// is written to `<name>_provenance.txt` alongside the data files.
void write_tudataset(const Dataset& dataset,
                     const std::filesystem::path& directory,
                     const std::string& provenance = "");

}  // namespace gwl
