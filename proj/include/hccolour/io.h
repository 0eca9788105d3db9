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

#ifndef HCCOLOUR_IO_H_
#define HCCOLOUR_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hccolour/constructions.h"
#include "hccolour/dpcolor.h"
#include "hccolour/fractional.h"
#include "hccolour/graph.h"
#include "hccolour/hardcore.h"

namespace hccolour {

using Json = nlohmann::ordered_json;

// Throws ErrorKind::kIo when the file is missing, unreadable or malformed.
Graph ReadGraphFile(const std::filesystem::path& path);
void WriteGraphFile(const std::filesystem::path& path, const Graph& g);

// {"lambda", "log_Z", "occupancy", "neighbour_occupancy": {"1": [...], ...}}
Json StatsToJson(const OccupancyStats& stats);
Json FactCheckToJson(const FactCheckReport& report);

// {"total", "parts": [{"set": [...], "intervals": [[a, b], ...]}, ...]}
Json ColouringToJson(const FractionalColouring& col);
FractionalColouring ColouringFromJson(const Json& json);

// Cover files are JSON objects with a "graph" edge-list path (relative paths
// resolve against the cover file's directory) and either
//   "lists": {"u": [labels...]}            (list-colouring mode), or
//   "owner": [...], "cross_edges": [[a, b], ...]  (general covers).
Cover ReadCoverFile(const std::filesystem::path& path);
Cover CoverFromJson(const Json& json, const Graph& base);
Json CoverToJson(const Cover& cover);

// {"choice": [...], "labels": [...]} with labels present for list covers.
Json DpChoiceToJson(const Cover& cover, std::span<const ColourNode> choice);

// {"delta", "level", "special_vertex", "copy_counts", "parts": "AB..",
//  "lists": {"v": ["j_i", ...]}}; the graph itself goes to an edge list.
Json InstanceToJson(const NecessaryInstance& inst);

// Parses a whole file as JSON; ErrorKind::kIo on failure.
Json ReadJsonFile(const std::filesystem::path& path);

}  // namespace hccolour

#endif  // HCCOLOUR_IO_H_
