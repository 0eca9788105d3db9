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

#ifndef HCCOLOUR_CONSTRUCTIONS_H_
#define HCCOLOUR_CONSTRUCTIONS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hccolour/dpcolor.h"
#include "hccolour/graph.h"
#include "hccolour/hardcore.h"

namespace hccolour {

// Colour j introduced at recursion level i, written j_i.
Label LevelLabel(std::int64_t index, int level);
std::int64_t LabelIndex(Label label);
int LabelLevel(Label label);
std::string LabelName(Label label);

// A bipartite graph with parts A and B and a list assignment that admits no
// proper list colouring although |L(a)| >= deg(a)/log deg(a) on A and
// |L(b)| >= deg(b) on B.
struct NecessaryInstance {
  Graph graph;
  std::vector<std::vector<Label>> lists;
  std::vector<char> in_a;
  int level = 0;
  int delta = 0;
  // The maximum-degree A vertex added last (the star centre at level 0).
  Vertex special_vertex = 0;
  // Copies taken at each recursion step, first step first.
  std::vector<std::size_t> copy_counts;
};

struct ConstructionLimits {
  std::size_t max_vertices = 1'000'000;
};

// exp applied `height` times to x; exp^0(x) = x.
double Tower(int height, double x);

// Copies of G_i used to build G_{i+1}: ceil(exp(t)/t) with t = exp^i(delta).
// Returns +inf when the count is not representable.
double CopyCount(int delta, int level);

// G_0 = K_{1,delta} with centre list {1_0..delta_0} and leaf lists {i_0};
// G_{i+1} joins a new vertex to every B vertex of CopyCount(delta, i) copies
// of G_i, gives it the copy labels, and adds j_{i+1} to the B lists of copy j.
// Throws ErrorKind::kInput unless delta >= 3 and 0 <= level <= delta - 1, and
// ErrorKind::kSize when the result would exceed limits.max_vertices.
NecessaryInstance NecessaryConstruction(int delta, int level,
                                        const ConstructionLimits& limits = {});

struct ConstructionProperties {
  bool bipartite = true;    // A and B independent and covering V
  bool a_degrees = true;    // deg(a) >= delta; special vertex has the max
  bool b_degrees = true;    // deg(b) == level + 1
  bool list_sizes = true;   // natural-log list-size conditions
  std::vector<std::string> failures;

  bool all() const { return bipartite && a_degrees && b_degrees && list_sizes; }
};

ConstructionProperties CheckConstructionProperties(const NecessaryInstance& inst);

struct NonColourabilityReport {
  bool not_colourable = false;
  // Exhaustive search over the whole instance completed within budget.
  bool exhaustive = false;
  // The copy-by-copy argument held: for every label j of the special vertex,
  // the copy carrying j is uncolourable once j is removed (checked
  // recursively down to the star).
  bool structural = false;
  std::size_t nodes = 0;
  std::string note;
};

// Throws ErrorKind::kSize if the exhaustive search exceeds node_budget.
NonColourabilityReport VerifyNotColourable(const NecessaryInstance& inst,
                                           std::size_t node_budget = 10'000'000);

struct SemiBipartiteOptions {
  // Fugacity; n / sum_v log deg(v) over non-isolated v when unset.
  std::optional<double> lambda = std::nullopt;
  std::size_t trials = 64;
  std::uint64_t seed = 0;
  std::size_t cutoff = kDefaultExactCutoff;
  // Glauber updates per trial; 0 selects 50 n.
  std::size_t glauber_steps = 0;
  int threads = 0;
};

struct SemiBipartiteResult {
  VertexSet a;
  VertexSet b;
  std::size_t cut_edges = 0;
  // 2 e(A, B) / n.
  double avg_degree = 0.0;
  double lambda = 0.0;
  bool exact = false;
  // Exact mode only (NaN otherwise): E[X] as sum_v deg(v) Pr(v in I) and as
  // sum_v E|N(v) ∩ I|.
  double expected_cut = 0.0;
  double expected_cut_neighbour_form = 0.0;
  // ExpectedCutLowerBound at ratio = lambda; NaN when some vertex is isolated.
  double lower_bound = 0.0;
};

// Auto fugacity n / sum_v log deg(v). Throws ErrorKind::kHypothesis
// ("degenerate") when the sum is zero.
double AutoFugacity(const Graph& g);

// n lambda (mean log deg + log ratio + log log(1+lambda) + 1) /
//   ((1 + ratio)(1 + lambda) log(1+lambda)); requires min degree >= 1.
double ExpectedCutLowerBound(const Graph& g, Fugacity lambda, double ratio);

// Picks an independent set I maximising X = sum_{v in I} deg(v) = e(I, V\I)
// among exact enumeration (n <= cutoff) or Glauber trials. Ties go to the
// lexicographically smallest I. Throws ErrorKind::kHypothesis for graphs
// with a triangle.
SemiBipartiteResult SemiBipartiteExtract(const Graph& g, const SemiBipartiteOptions& options);

}  // namespace hccolour

#endif  // HCCOLOUR_CONSTRUCTIONS_H_
