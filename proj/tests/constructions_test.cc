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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hccolour/error.h"
#include "hccolour/graph_family.h"
#include "hccolour/list_colouring.h"
#include "support/oracles.h"

namespace hccolour {
namespace {

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

TEST(LabelTest, RoundTrip) {
  const Label l = LevelLabel(17, 2);
  EXPECT_EQ(LabelIndex(l), 17);
  EXPECT_EQ(LabelLevel(l), 2);
  EXPECT_EQ(LabelName(l), "17_2");
  EXPECT_NE(LevelLabel(1, 0), LevelLabel(1, 1));
}

TEST(TowerTest, CopyCounts) {
  EXPECT_EQ(Tower(0, 3.0), 3.0);
  EXPECT_DOUBLE_EQ(Tower(1, 3.0), std::exp(3.0));
  EXPECT_EQ(CopyCount(3, 0), 7.0);
  EXPECT_EQ(CopyCount(3, 1), std::ceil(std::exp(std::exp(3.0)) / std::exp(3.0)));
  EXPECT_TRUE(std::isinf(CopyCount(3, 2)));
}

TEST(NecessaryConstructionTest, BaseStar) {
  const NecessaryInstance inst = NecessaryConstruction(3, 0);
  EXPECT_EQ(inst.graph, generators::Star(3));
  EXPECT_EQ(inst.special_vertex, 0u);
  EXPECT_EQ(inst.lists[0].size(), 3u);
  EXPECT_GE(3.0, 3.0 / std::log(3.0));
  const ConstructionProperties p = CheckConstructionProperties(inst);
  EXPECT_TRUE(p.all()) << (p.failures.empty() ? "" : p.failures[0]);
  const NonColourabilityReport r = VerifyNotColourable(inst);
  EXPECT_TRUE(r.not_colourable);
  EXPECT_TRUE(r.structural);
  EXPECT_FALSE(testing::BruteListColourable(inst.graph, inst.lists));
}

TEST(NecessaryConstructionTest, LevelOne) {
  const NecessaryInstance inst = NecessaryConstruction(3, 1);
  EXPECT_EQ(inst.copy_counts, (std::vector<std::size_t>{7}));
  EXPECT_EQ(inst.graph.n(), 29u);
  EXPECT_EQ(inst.graph.degree(inst.special_vertex), 21u);
  EXPECT_EQ(inst.lists[inst.special_vertex].size(), 7u);
  EXPECT_GE(7.0, 21.0 / std::log(21.0));
  const ConstructionProperties p = CheckConstructionProperties(inst);
  EXPECT_TRUE(p.all()) << (p.failures.empty() ? "" : p.failures[0]);
  const NonColourabilityReport r = VerifyNotColourable(inst);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.not_colourable);
  EXPECT_TRUE(r.structural) << r.note;
}

TEST(NecessaryConstructionTest, LevelOneBoundary) {
  const NecessaryInstance inst = NecessaryConstruction(3, 1);
  std::set<Label> extras = {LevelLabel(8, 1), LevelLabel(99, 5)};
  for (const auto& l : inst.lists) extras.insert(l.begin(), l.end());
  const auto& own = inst.lists[inst.special_vertex];
  for (Label extra : extras) {
    if (std::find(own.begin(), own.end(), extra) != own.end()) continue;
    auto lists = inst.lists;
    lists[inst.special_vertex].push_back(extra);
    const auto r = FindListColouring(inst.graph, lists, 1'000'000);
    ASSERT_EQ(r.status, SearchStatus::kColourable) << LabelName(extra);
    EXPECT_TRUE(IsProperListColouring(inst.graph, lists, r.colouring));
  }
}

TEST(NecessaryConstructionTest, BaseStarWithExtraColourIsColourable) {
  NecessaryInstance inst = NecessaryConstruction(3, 0);
  inst.lists[0].push_back(LevelLabel(4, 0));
  EXPECT_FALSE(VerifyNotColourable(inst).not_colourable);
  EXPECT_TRUE(testing::BruteListColourable(inst.graph, inst.lists));
}

TEST(NecessaryConstructionTest, LargerDeltaBaseAndLevelOneProperties) {
  for (int delta = 3; delta <= 6; ++delta) {
    const NecessaryInstance base = NecessaryConstruction(delta, 0);
    EXPECT_TRUE(CheckConstructionProperties(base).all()) << delta;
    EXPECT_TRUE(VerifyNotColourable(base).not_colourable);
  }
  const NecessaryInstance four = NecessaryConstruction(4, 1);
  EXPECT_EQ(four.copy_counts[0], static_cast<std::size_t>(std::ceil(std::exp(4.0) / 4.0)));
  EXPECT_TRUE(CheckConstructionProperties(four).all());
  EXPECT_TRUE(VerifyNotColourable(four).not_colourable);
}

TEST(NecessaryConstructionTest, Preconditions) {
  EXPECT_EQ(KindOf([] { NecessaryConstruction(2, 0); }), ErrorKind::kInput);
  EXPECT_EQ(KindOf([] { NecessaryConstruction(3, 3); }), ErrorKind::kInput);
  EXPECT_EQ(KindOf([] { NecessaryConstruction(3, -1); }), ErrorKind::kInput);
  EXPECT_EQ(KindOf([] { NecessaryConstruction(3, 2); }), ErrorKind::kSize);
  EXPECT_EQ(KindOf([] { NecessaryConstruction(3, 1, {.max_vertices = 28}); }), ErrorKind::kSize);
}

TEST(NecessaryConstructionTest, PropertyCheckCatchesDamage) {
  NecessaryInstance inst = NecessaryConstruction(3, 1);
  inst.lists[inst.special_vertex].pop_back();
  inst.lists[inst.special_vertex].pop_back();
  EXPECT_FALSE(CheckConstructionProperties(inst).list_sizes);
  inst.in_a[inst.special_vertex] = 0;
  EXPECT_FALSE(CheckConstructionProperties(inst).bipartite);
}

TEST(NecessaryConstructionTest, BudgetExceededIsASizeError) {
  EXPECT_EQ(KindOf([] { VerifyNotColourable(NecessaryConstruction(3, 1), 0); }), ErrorKind::kSize);
}

TEST(SemiBipartiteTest, EdgelessGraph) {
  const Graph g = generators::Edgeless(4);
  EXPECT_EQ(KindOf([&] { AutoFugacity(g); }), ErrorKind::kHypothesis);
  EXPECT_EQ(KindOf([&] { SemiBipartiteExtract(g, {}); }), ErrorKind::kHypothesis);
  const SemiBipartiteResult r = SemiBipartiteExtract(g, {.lambda = 1.0});
  EXPECT_EQ(r.avg_degree, 0.0);
  EXPECT_EQ(r.cut_edges, 0u);
}

TEST(SemiBipartiteTest, FiveCycleExpectation) {
  const SemiBipartiteResult r = SemiBipartiteExtract(generators::Cycle(5), {.lambda = 1.0});
  EXPECT_TRUE(r.exact);
  EXPECT_NEAR(r.expected_cut, 30.0 / 11, 1e-14);
  EXPECT_NEAR(r.expected_cut_neighbour_form, 30.0 / 11, 1e-14);
  EXPECT_EQ(r.cut_edges, 4u);
  EXPECT_EQ(r.a, VertexSet({0, 2}));
  EXPECT_NEAR(r.avg_degree, 8.0 / 5, 1e-15);
}

TEST(SemiBipartiteTest, StarExpectation) {
  const SemiBipartiteResult r = SemiBipartiteExtract(generators::Star(3), {.lambda = 1.0});
  EXPECT_NEAR(r.expected_cut, 5.0 / 3, 1e-14);
  EXPECT_NEAR(r.expected_cut_neighbour_form, 5.0 / 3, 1e-14);
  EXPECT_EQ(r.cut_edges, 3u);
}

TEST(SemiBipartiteTest, TriangleIsRejected) {
  EXPECT_EQ(KindOf([] { SemiBipartiteExtract(generators::Complete(3), {.lambda = 1.0}); }),
            ErrorKind::kHypothesis);
}

TEST(SemiBipartiteTest, AutoFugacityValue) {
  const Graph g = generators::Petersen();
  EXPECT_NEAR(AutoFugacity(g), 10.0 / (10 * std::log(3.0)), 1e-15);
}

TEST(SemiBipartiteTest, ResultIsASemiBipartiteSplit) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = generators::RandomTriangleFree(seed % 2 ? 18 : 60, 0.15, seed);
    const SemiBipartiteResult r = SemiBipartiteExtract(g, {.trials = 16, .seed = seed});
    EXPECT_TRUE(g.is_independent(r.a.members()));
    EXPECT_EQ(r.a.size() + r.b.size(), g.n());
    std::size_t across = 0;
    for (const auto& [u, v] : g.edges()) across += r.a.contains(u) != r.a.contains(v);
    EXPECT_EQ(across, r.cut_edges);
    EXPECT_NEAR(r.avg_degree, 2.0 * across / g.n(), 1e-15);
    EXPECT_EQ(r.exact, g.n() <= kDefaultExactCutoff);
  }
}

TEST(SemiBipartiteTest, SampledModeIsThreadIndependent) {
  const Graph g = generators::RandomTriangleFree(50, 0.1, 4);
  const auto one = SemiBipartiteExtract(g, {.trials = 32, .seed = 9, .threads = 1});
  const auto four = SemiBipartiteExtract(g, {.trials = 32, .seed = 9, .threads = 4});
  EXPECT_FALSE(one.exact);
  EXPECT_EQ(one.a, four.a);
  EXPECT_TRUE(std::isnan(one.expected_cut));
}

TEST(SemiBipartiteTest, ExactExpectationMatchesBruteForce) {
  const Graph g = generators::RandomTriangleFree(12, 0.3, 8);
  const double lambda = AutoFugacity(g);
  const testing::BruteStats s = testing::BruteHardCore(g, lambda);
  long double expected = 0;
  for (Vertex v = 0; v < g.n(); ++v) expected += g.degree(v) * s.occupancy[v];
  const SemiBipartiteResult r = SemiBipartiteExtract(g, {});
  EXPECT_NEAR(r.lambda, lambda, 0);
  EXPECT_NEAR(r.expected_cut, static_cast<double>(expected), 1e-12);
}

TEST(SemiBipartiteTest, LowerBoundHoldsOnSmallFamily) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const Graph& g : AllTriangleFreeGraphs(n)) {
      if (g.min_degree() < 2) continue;
      const SemiBipartiteResult r = SemiBipartiteExtract(g, {});
      EXPECT_GE(r.expected_cut, r.lower_bound - 1e-9);
      EXPECT_NEAR(r.expected_cut, r.expected_cut_neighbour_form, 1e-12);
    }
  }
}

}  // namespace
}  // namespace hccolour
