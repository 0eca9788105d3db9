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

#ifndef HCCOLOUR_GRAPH_FAMILY_H_
#define HCCOLOUR_GRAPH_FAMILY_H_

#include <cstddef>
#include <vector>

#include "hccolour/graph.h"

namespace hccolour {

// All triangle-free graphs on exactly n vertices, one per isomorphism class.
// Built by vertex extension: every triangle-free graph on n vertices is a
// triangle-free graph on n-1 vertices plus a vertex joined to an independent
// set. Intended for n <= 10.
std::vector<Graph> AllTriangleFreeGraphs(std::size_t n);

// Same, restricted to connected graphs.
std::vector<Graph> AllConnectedTriangleFreeGraphs(std::size_t n);

bool IsConnected(const Graph& g);

// Exact isomorphism test by colour-refined backtracking (n <= 64).
bool AreIsomorphic(const Graph& a, const Graph& b);

}  // namespace hccolour

#endif  // HCCOLOUR_GRAPH_FAMILY_H_
