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

#include "hccolour/constructions.h"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "hccolour/error.h"
#include "hccolour/graph_family.h"
#include "hccolour/list_colouring.h"
#include "hccolour/numerics.h"
#include "hccolour/rng.h"

namespace hccolour {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct StructuralOutcome {
  bool holds = true;
  std::size_t nodes = 0;
  std::string note;
};

// Copy-by-copy check on an instance whose special vertex is `special`.
StructuralOutcome StructuralCheck(const Graph& g, const std::vector<std::vector<Label>>& lists,
                                  Vertex special, int level, std::size_t budget) {
  StructuralOutcome out;
  if (level == 0) {
    const auto search = FindListColouring(g, lists, budget);
    out.nodes = search.nodes;
    if (search.status == SearchStatus::kBudgetExceeded) {
      Fail(ErrorKind::kSize, "search budget exceeded on the base star");
    }
    out.holds = search.status == SearchStatus::kNotColourable;
    if (!out.holds) out.note = "base star is colourable";
    return out;
  }
  // Copies are the components of G - special.
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v != special) rest.push_back(v);
  }
  const InducedSubgraph without = MakeInducedSubgraph(g, VertexSet::FromUnsorted(rest));
  std::vector<int> component(without.graph.n(), -1);
  int components = 0;
  for (Vertex s = 0; s < without.graph.n(); ++s) {
    if (component[s] >= 0) continue;
    const auto dist = Distances(without.graph, s);
    for (Vertex v = 0; v < without.graph.n(); ++v) {
      if (dist[v] >= 0) component[v] = components;
    }
    ++components;
  }
  for (Label colour : lists[special]) {
    // The copy whose B vertices (the special vertex's neighbours) carry it.
    int copy = -1;
    for (Vertex b : g.neighbours(special)) {
      const auto& lb = lists[b];
      if (std::find(lb.begin(), lb.end(), colour) == lb.end()) continue;
      const Vertex local = static_cast<Vertex>(
          std::lower_bound(without.to_parent.begin(), without.to_parent.end(), b) -
          without.to_parent.begin());
      if (copy >= 0 && copy != component[local]) {
        out.holds = false;
        out.note = LabelName(colour) + " appears in two copies";
        return out;
      }
      copy = component[local];
    }
    if (copy < 0) {
      out.holds = false;
      out.note = LabelName(colour) + " appears in no copy";
      return out;
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < without.graph.n(); ++v) {
      if (component[v] == copy) members.push_back(without.to_parent[v]);
    }
    const InducedSubgraph sub = MakeInducedSubgraph(g, VertexSet::FromUnsorted(members));
    std::vector<std::vector<Label>> sub_lists(sub.graph.n());
    Vertex sub_special = 0;
    std::size_t best_degree = 0;
    for (Vertex i = 0; i < sub.graph.n(); ++i) {
      const Vertex v = sub.to_parent[i];
      const bool is_b = g.has_edge(v, special);
      for (Label c : lists[v]) {
        if (!(is_b && c == colour)) sub_lists[i].push_back(c);
      }
      if (is_b && sub_lists[i].size() == lists[v].size()) {
        out.holds = false;
        out.note = "a B vertex of the copy lacks " + LabelName(colour);
        return out;
      }
      if (!is_b && sub.graph.degree(i) > best_degree) {
        best_degree = sub.graph.degree(i);
        sub_special = i;
      }
    }
    const StructuralOutcome inner =
        StructuralCheck(sub.graph, sub_lists, sub_special, level - 1, budget);
    out.nodes += inner.nodes;
    if (!inner.holds) return inner;
  }
  return out;
}

}  // namespace

Label LevelLabel(std::int64_t index, int level) {
  return (static_cast<Label>(level) << 40) | index;
}
std::int64_t LabelIndex(Label label) { return label & ((Label{1} << 40) - 1); }
int LabelLevel(Label label) { return static_cast<int>(label >> 40); }
std::string LabelName(Label label) {
  return std::to_string(LabelIndex(label)) + "_" + std::to_string(LabelLevel(label));
}

double Tower(int height, double x) {
  for (int i = 0; i < height; ++i) x = std::exp(x);
  return x;
}

double CopyCount(int delta, int level) {
  const double t = Tower(level, static_cast<double>(delta));
  const double count = std::ceil(std::exp(t) / t);
  return std::isfinite(count) ? count : std::numeric_limits<double>::infinity();
}

NecessaryInstance NecessaryConstruction(int delta, int level, const ConstructionLimits& limits) {
  if (delta < 3) {
    Fail(ErrorKind::kInput, "delta must be >= 3 (at delta = 2 the star centre violates "
                            "|L| >= deg/log deg), got " + std::to_string(delta));
  }
  if (level < 0 || level > delta - 1) {
    Fail(ErrorKind::kInput, "level must lie in [0, delta - 1]");
  }
  NecessaryInstance inst;
  inst.delta = delta;
  inst.level = 0;
  // Base star.
  std::vector<Edge> edges;
  const auto d = static_cast<std::size_t>(delta);
  if (d + 1 > limits.max_vertices) Fail(ErrorKind::kSize, "base star exceeds the vertex cap");
  inst.lists.resize(d + 1);
  inst.in_a.assign(d + 1, 0);
  inst.in_a[0] = 1;
  for (Vertex i = 1; i <= d; ++i) {
    edges.emplace_back(0, i);
    inst.lists[0].push_back(LevelLabel(i, 0));
    inst.lists[i] = {LevelLabel(i, 0)};
  }
  inst.special_vertex = 0;
  std::size_t n = d + 1;

  for (int step = 0; step < level; ++step) {
    const double copies_real = CopyCount(delta, step);
    const double size_real = copies_real * static_cast<double>(n) + 1.0;
    if (!(size_real <= static_cast<double>(limits.max_vertices))) {
      char copies_text[64];
      std::snprintf(copies_text, sizeof copies_text, "%.0f", copies_real);
      Fail(ErrorKind::kSize, "level " + std::to_string(step + 1) + " needs " + copies_text +
                                 " copies of level " + std::to_string(step) +
                                 "; exceeds the cap of " + std::to_string(limits.max_vertices) +
                                 " vertices");
    }
    const auto copies = static_cast<std::size_t>(copies_real);
    const std::size_t next_n = copies * n + 1;
    const auto special = static_cast<Vertex>(copies * n);
    std::vector<Edge> next_edges;
    std::vector<std::vector<Label>> next_lists(next_n);
    std::vector<char> next_a(next_n, 0);
    for (std::size_t j = 0; j < copies; ++j) {
      const auto offset = static_cast<Vertex>(j * n);
      for (const auto& [u, v] : edges) next_edges.emplace_back(u + offset, v + offset);
      for (Vertex v = 0; v < n; ++v) {
        next_lists[v + offset] = inst.lists[v];
        next_a[v + offset] = inst.in_a[v];
        if (!inst.in_a[v]) {
          next_lists[v + offset].push_back(LevelLabel(static_cast<std::int64_t>(j + 1), step + 1));
          next_edges.emplace_back(v + offset, special);
        }
      }
    }
    next_a[special] = 1;
    for (std::size_t j = 1; j <= copies; ++j) {
      next_lists[special].push_back(LevelLabel(static_cast<std::int64_t>(j), step + 1));
    }
    edges = std::move(next_edges);
    inst.lists = std::move(next_lists);
    inst.in_a = std::move(next_a);
    inst.special_vertex = special;
    inst.copy_counts.push_back(copies);
    inst.level = step + 1;
    n = next_n;
  }
  inst.graph = Graph::FromEdges(n, edges);
  return inst;
}

ConstructionProperties CheckConstructionProperties(const NecessaryInstance& inst) {
  ConstructionProperties p;
  const Graph& g = inst.graph;
  auto fail = [&](bool& flag, std::string message) {
    flag = false;
    if (p.failures.size() < 32) p.failures.push_back(std::move(message));
  };
  if (inst.in_a.size() != g.n() || inst.lists.size() != g.n()) {
    fail(p.bipartite, "part or list vectors do not match the graph");
    return p;
  }
  for (const auto& [u, v] : g.edges()) {
    if (inst.in_a[u] == inst.in_a[v]) {
      fail(p.bipartite, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " inside one part");
    }
  }
  std::size_t max_a = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (inst.in_a[v]) max_a = std::max(max_a, g.degree(v));
  }
  if (!inst.in_a.at(inst.special_vertex) || g.degree(inst.special_vertex) != max_a) {
    fail(p.a_degrees, "special vertex does not attain the maximum A degree");
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto deg = static_cast<double>(g.degree(v));
    const auto size = static_cast<double>(inst.lists[v].size());
    const std::string name = "vertex " + std::to_string(v);
    if (inst.in_a[v]) {
      if (g.degree(v) < static_cast<std::size_t>(inst.delta)) {
        fail(p.a_degrees, name + " in A has degree " + std::to_string(g.degree(v)));
      }
      if (deg < 2.0 || size < deg / std::log(deg)) {
        fail(p.list_sizes, name + " in A: |L| = " + std::to_string(inst.lists[v].size()) +
                               " < deg/log deg");
      }
    } else {
      if (g.degree(v) != static_cast<std::size_t>(inst.level + 1)) {
        fail(p.b_degrees, name + " in B has degree " + std::to_string(g.degree(v)));
      }
      if (size < deg) fail(p.list_sizes, name + " in B: |L| < deg");
    }
  }
  return p;
}

NonColourabilityReport VerifyNotColourable(const NecessaryInstance& inst,
                                           std::size_t node_budget) {
  NonColourabilityReport report;
  const auto search = FindListColouring(inst.graph, inst.lists, node_budget);
  report.nodes = search.nodes;
  if (search.status == SearchStatus::kBudgetExceeded) {
    Fail(ErrorKind::kSize, "exhaustive search exceeded " + std::to_string(node_budget) +
                               " nodes");
  }
  report.exhaustive = true;
  report.not_colourable = search.status == SearchStatus::kNotColourable;
  const StructuralOutcome structural = StructuralCheck(
      inst.graph, inst.lists, inst.special_vertex, inst.level, node_budget);
  report.structural = structural.holds;
  report.nodes += structural.nodes;
  if (!report.not_colourable) {
    report.note = "found a proper list colouring";
  } else if (!report.structural) {
    report.note = "structural argument failed: " + structural.note;
  } else {
    report.note = "not colourable (exhaustive search and copy-by-copy argument agree)";
  }
  return report;
}

double AutoFugacity(const Graph& g) {
  CompensatedSum sum;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 0) sum.Add(std::log(static_cast<double>(g.degree(v))));
  }
  if (!(sum.value() > 0.0)) {
    Fail(ErrorKind::kHypothesis, "degenerate graph: sum of log degrees is zero, auto fugacity "
                                 "undefined");
  }
  return static_cast<double>(g.n()) / sum.value();
}

double ExpectedCutLowerBound(const Graph& g, Fugacity lambda, double ratio) {
  if (g.n() == 0) return 0.0;
  if (g.min_degree() < 1) Fail(ErrorKind::kInput, "bound needs every vertex to have degree >= 1");
  CompensatedSum sum;
  for (Vertex v = 0; v < g.n(); ++v) sum.Add(std::log(static_cast<double>(g.degree(v))));
  const double n = static_cast<double>(g.n());
  const double mean_log = sum.value() / n;
  const double lam = lambda.value();
  const double l1 = std::log1p(lam);
  return n * lam * (mean_log + std::log(ratio) + std::log(l1) + 1.0) /
         ((1.0 + ratio) * (1.0 + lam) * l1);
}

SemiBipartiteResult SemiBipartiteExtract(const Graph& g, const SemiBipartiteOptions& options) {
  if (!IsTriangleFree(g)) Fail(ErrorKind::kHypothesis, "semi-bipartite extraction needs a triangle-free graph");
  SemiBipartiteResult result;
  const std::size_t n = g.n();
  result.lambda = options.lambda ? *options.lambda : AutoFugacity(g);
  const Fugacity lambda(result.lambda);

  auto score = [&](const VertexSet& s) {
    std::size_t x = 0;
    for (Vertex v : s) x += g.degree(v);
    return x;
  };
  VertexSet best;
  std::size_t best_score = 0;
  bool have_best = false;
  auto offer = [&](VertexSet s) {
    const std::size_t x = score(s);
    if (!have_best || x > best_score || (x == best_score && s < best)) {
      best = std::move(s);
      best_score = x;
      have_best = true;
    }
  };

  if (n <= std::min<std::size_t>(options.cutoff, 64)) {
    result.exact = true;
    ForEachIndependentSet(g, [&](std::uint64_t mask) { offer(VertexSet::FromMask(mask)); },
                          options.cutoff);
    const OccupancyStats stats = EnumerateStats(g, lambda, 1, {.cutoff = options.cutoff,
                                                              .threads = options.threads});
    CompensatedSum degree_form;
    CompensatedSum neighbour_form;
    for (Vertex v = 0; v < n; ++v) {
      degree_form.Add(static_cast<double>(g.degree(v)) * stats.occupancy[v]);
      neighbour_form.Add(stats.NeighbourOccupancy(v, 1));
    }
    result.expected_cut = degree_form.value();
    result.expected_cut_neighbour_form = neighbour_form.value();
  } else {
    const std::size_t steps = options.glauber_steps > 0 ? options.glauber_steps : 50 * n;
    const std::size_t trials = std::max<std::size_t>(options.trials, 1);
    std::vector<VertexSet> samples(trials);
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
    const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      samples[t] = GlauberSample(g, lambda, steps, DeriveSeed(options.seed, t));
    }
    for (VertexSet& s : samples) offer(std::move(s));
    result.expected_cut = kNaN;
    result.expected_cut_neighbour_form = kNaN;
  }

  result.a = best;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!best.contains(v)) rest.push_back(v);
  }
  result.b = VertexSet::FromUnsorted(std::move(rest));
  result.cut_edges = best_score;
  result.avg_degree = n == 0 ? 0.0 : 2.0 * static_cast<double>(best_score) / static_cast<double>(n);
  result.lower_bound = (n > 0 && g.min_degree() >= 1)
                           ? ExpectedCutLowerBound(g, lambda, result.lambda)
                           : kNaN;
  return result;
}

}  // namespace hccolour
