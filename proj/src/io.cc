// Copyright 2026 The hccolour Authors
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

#include "hccolour/io.h"

#include <fstream>
#include <sstream>

#include "hccolour/error.h"

namespace hccolour {
namespace {

template <typename T>
T Get(const Json& json, const char* key) {
  if (!json.contains(key)) Fail(ErrorKind::kIo, std::string("missing key \"") + key + "\"");
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kIo, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

Vertex ParseVertexKey(const std::string& key, std::size_t n) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(key, &used);
  } catch (const std::exception&) {
    Fail(ErrorKind::kIo, "vertex key \"" + key + "\" is not an integer");
  }
  if (used != key.size() || value >= n) {
    Fail(ErrorKind::kIo, "vertex key \"" + key + "\" out of range");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

Graph ReadGraphFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kIo, "cannot open " + path.string());
  return ReadEdgeList(in);
}

void WriteGraphFile(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) Fail(ErrorKind::kIo, "cannot write " + path.string());
  WriteEdgeList(out, g);
  if (!out) Fail(ErrorKind::kIo, "write failed: " + path.string());
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kIo, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kIo, path.string() + ": " + e.what());
  }
}

Json StatsToJson(const OccupancyStats& stats) {
  Json json;
  json["lambda"] = stats.lambda;
  json["log_Z"] = stats.log_partition;
  json["occupancy"] = stats.occupancy;
  Json neighbours = Json::object();
  for (int j = 1; j <= stats.max_distance(); ++j) {
    neighbours[std::to_string(j)] = stats.neighbour_occupancy[j - 1];
  }
  json["neighbour_occupancy"] = std::move(neighbours);
  return json;
}

Json FactCheckToJson(const FactCheckReport& report) {
  return Json{{"fact1_residual", report.fact1_residual},
              {"fact2_residual", report.fact2_residual},
              {"neighbour_residual", report.neighbour_residual}};
}

Json ColouringToJson(const FractionalColouring& col) {
  Json parts = Json::array();
  for (const auto& [set, intervals] : col.parts()) {
    Json list = Json::array();
    for (const Interval& iv : intervals) list.push_back({iv.lo, iv.hi});
    parts.push_back({{"set", std::vector<Vertex>(set.begin(), set.end())},
                     {"intervals", std::move(list)}});
  }
  return Json{{"total", col.total()}, {"parts", std::move(parts)}};
}

FractionalColouring ColouringFromJson(const Json& json) {
  FractionalColouring col;
  const auto parts = Get<std::vector<Json>>(json, "parts");
  for (const Json& part : parts) {
    const auto set = VertexSet::FromUnsorted(Get<std::vector<Vertex>>(part, "set"));
    for (const auto& iv : Get<std::vector<std::pair<double, double>>>(part, "intervals")) {
      col.AddBlock(set, Interval{iv.first, iv.second});
    }
  }
  col.set_total(Get<double>(json, "total"));
  return col;
}

Cover CoverFromJson(const Json& json, const Graph& base) {
  if (json.contains("lists")) {
    std::vector<std::vector<Label>> lists(base.n());
    const Json& object = json.at("lists");
    if (!object.is_object()) Fail(ErrorKind::kIo, "\"lists\" must be an object");
    for (const auto& [key, value] : object.items()) {
      const Vertex u = ParseVertexKey(key, base.n());
      try {
        lists[u] = value.get<std::vector<Label>>();
      } catch (const nlohmann::json::exception& e) {
        Fail(ErrorKind::kIo, "bad list for vertex " + key + ": " + e.what());
      }
    }
    return FromListAssignment(base, lists);
  }
  auto owner = Get<std::vector<Vertex>>(json, "owner");
  auto edges = Get<std::vector<std::pair<ColourNode, ColourNode>>>(json, "cross_edges");
  std::vector<Label> labels;
  if (json.contains("labels")) labels = Get<std::vector<Label>>(json, "labels");
  try {
    return Cover::Make(base, std::move(owner), std::move(edges), std::move(labels));
  } catch (const Error& e) {
    Fail(ErrorKind::kIo, std::string("invalid cover: ") + e.what());
  }
}

Cover ReadCoverFile(const std::filesystem::path& path) {
  const Json json = ReadJsonFile(path);
  std::filesystem::path graph_path = Get<std::string>(json, "graph");
  if (graph_path.is_relative()) graph_path = path.parent_path() / graph_path;
  return CoverFromJson(json, ReadGraphFile(graph_path));
}

Json CoverToJson(const Cover& cover) {
  Json json;
  json["owner"] = std::vector<Vertex>(cover.owners().begin(), cover.owners().end());
  Json edges = Json::array();
  for (const auto& [a, b] : cover.cross_edges()) edges.push_back({a, b});
  json["cross_edges"] = std::move(edges);
  if (cover.has_labels()) {
    json["labels"] = std::vector<Label>(cover.labels().begin(), cover.labels().end());
  }
  return json;
}

Json DpChoiceToJson(const Cover& cover, std::span<const ColourNode> choice) {
  Json json;
  json["choice"] = std::vector<ColourNode>(choice.begin(), choice.end());
  if (cover.has_labels()) json["labels"] = ProjectLabels(cover, choice);
  return json;
}

Json InstanceToJson(const NecessaryInstance& inst) {
  Json json;
  json["delta"] = inst.delta;
  json["level"] = inst.level;
  json["special_vertex"] = inst.special_vertex;
  json["copy_counts"] = inst.copy_counts;
  std::string parts;
  for (char a : inst.in_a) parts.push_back(a ? 'A' : 'B');
  json["parts"] = parts;
  Json lists = Json::object();
  for (std::size_t v = 0; v < inst.lists.size(); ++v) {
    std::vector<std::string> names;
    for (Label c : inst.lists[v]) names.push_back(LabelName(c));
    lists[std::to_string(v)] = std::move(names);
  }
  json["lists"] = std::move(lists);
  return json;
}

}  // namespace hccolour
