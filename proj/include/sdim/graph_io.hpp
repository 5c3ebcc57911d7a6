// Copyright 2026 The sdim Authors
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
#include <string_view>

#include "sdim/graph.hpp"

namespace sdim {

enum class GraphFormat { kEdgeJson, kDot };

std::optional<GraphFormat> parse_graph_format(std::string_view name);

// edge-json: {"n": int, "edges": [[int,int],...], "labels": {"id": "name"}}
// with "labels" omitted when the graph carries none. dot: an undirected
// `graph` with quoted ids and a label attribute per labelled vertex.
std::string serialize(const Graph& g, GraphFormat format);

// Only edge-json can be read back. Malformed documents and graph invariant
// violations throw Error with a JSON-path style location.
Graph parse(std::string_view text, GraphFormat format = GraphFormat::kEdgeJson);

}  // namespace sdim
