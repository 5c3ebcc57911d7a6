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

#include "sdim/graph_io.hpp"

#include <sstream>

#include "json.hpp"
#include "sdim/error.hpp"

namespace sdim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string to_edge_json(const Graph& g) {
  ordered_json doc;
  doc["n"] = g.order();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  doc["edges"] = std::move(edges);
  if (!g.labels().empty()) {
    ordered_json labels = ordered_json::object();
    for (const auto& [id, text] : g.labels()) labels[std::to_string(id)] = text;
    doc["labels"] = std::move(labels);
  }
  return doc.dump();
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << dot_quote(std::to_string(v));
    if (auto it = g.labels().find(v); it != g.labels().end()) {
      os << " [label=" << dot_quote(it->second) << "]";
    }
    os << ";\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << dot_quote(std::to_string(e.first)) << " -- "
       << dot_quote(std::to_string(e.second)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kMalformed, where + ": " + what);
}

Vertex read_id(const nlohmann::json& node, const std::string& where) {
  if (!node.is_number_integer()) malformed(where, "expected an integer vertex id");
  const auto value = node.get<std::int64_t>();
  if (value < 0) throw Error(ErrorKind::kOutOfRange, where + ": negative vertex id");
  if (value > std::int64_t{std::numeric_limits<Vertex>::max()}) {
    throw Error(ErrorKind::kOutOfRange, where + ": vertex id too large");
  }
  return static_cast<Vertex>(value);
}

Graph from_edge_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed("$", e.what());
  }
  if (!doc.is_object()) malformed("$", "expected an object");
  if (!doc.contains("n")) malformed("$", "missing \"n\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 0) {
    malformed("$.n", "expected a nonnegative integer");
  }
  const auto n = doc["n"].get<std::size_t>();

  std::vector<std::pair<Vertex, Vertex>> edges;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) malformed("$.edges", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "$.edges[" + std::to_string(i) + "]";
      const auto& item = list[i];
      if (!item.is_array() || item.size() != 2) malformed(where, "expected [int,int]");
      const Vertex a = read_id(item[0], where + "[0]");
      const Vertex b = read_id(item[1], where + "[1]");
      if (a >= n || b >= n) {
        throw Error(ErrorKind::kOutOfRange,
                    where + ": vertex id >= n=" + std::to_string(n));
      }
      edges.emplace_back(a, b);
    }
  }

  LabelMap labels;
  if (doc.contains("labels")) {
    const auto& obj = doc["labels"];
    if (!obj.is_object()) malformed("$.labels", "expected an object");
    for (const auto& [key, value] : obj.items()) {
      const std::string where = "$.labels[\"" + key + "\"]";
      std::size_t used = 0;
      unsigned long id = 0;
      try {
        id = std::stoul(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || key.empty()) malformed(where, "key is not a vertex id");
      if (id >= n) throw Error(ErrorKind::kOutOfRange, where + ": vertex id >= n");
      if (!value.is_string()) malformed(where, "expected a string");
      labels[static_cast<Vertex>(id)] = value.get<std::string>();
    }
  }
  try {
    return build_graph(n, edges, std::move(labels));
  } catch (const Error& e) {
    throw Error(e.kind(), "$.edges: " + e.detail());
  }
}

}  // namespace

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "edge-json" || name == "json") return GraphFormat::kEdgeJson;
  if (name == "dot") return GraphFormat::kDot;
  return std::nullopt;
}

std::string serialize(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeJson: return to_edge_json(g);
    case GraphFormat::kDot: return to_dot(g);
  }
  return {};
}

Graph parse(std::string_view text, GraphFormat format) {
  if (format != GraphFormat::kEdgeJson) {
    throw Error(ErrorKind::kInvalidArgument, "only edge-json input is supported");
  }
  return from_edge_json(text);
}

}  // namespace sdim
