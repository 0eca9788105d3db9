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

#include "hccolour/dpcolor.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "hccolour/error.h"
#include "hccolour/list_colouring.h"

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

std::vector<int> Constant(std::size_t n, int value) { return std::vector<int>(n, value); }

// Minimum of x e^{-1.4 S} - 1/(l1 l2) over cross edges, where S sums x over
// every cross edge touching either endpoint's list.
double OracleLllSlack(const Cover& c, const std::vector<int>& ell) {
  double best = std::numeric_limits<double>::infinity();
  const auto edges = c.cross_edges();
  for (const auto& [a, b] : edges) {
    const Vertex u1 = c.owner(a), u2 = c.owner(b);
    double sum = 0;
    for (const auto& [p, q] : edges) {
      const Vertex o1 = c.owner(p), o2 = c.owner(q);
      if (o1 == u1 || o1 == u2 || o2 == u1 || o2 == u2) sum += 3.0 / (ell[o1] * ell[o2]);
    }
    const double x = 3.0 / (ell[u1] * ell[u2]);
    best = std::min(best, x * std::exp(-1.4 * sum) - 1.0 / (ell[u1] * ell[u2]));
  }
  return best;
}

Cover ThreeByThreeSingleEdge() {
  return Cover::Make(generators::Complete(2), {0, 0, 0, 1, 1, 1}, {{1, 4}});
}

TEST(CoverTest, ListConversionExamples) {
  const Graph edge = generators::Complete(2);
  const Cover c = FromListAssignment(edge, {{1, 2}, {2, 3}});
  EXPECT_TRUE(ValidateCover(c).valid);
  ASSERT_EQ(c.cross_edges().size(), 1u);
  const auto [a, b] = c.cross_edges()[0];
  EXPECT_EQ(c.label(a), 2);
  EXPECT_EQ(c.label(b), 2);
  EXPECT_EQ(StarDegree(c, a), 1u);
  EXPECT_EQ(StarDegree(c, 0), 0u);

  EXPECT_TRUE(FromListAssignment(edge, {{1, 2}, {3, 4}}).cross_edges().empty());

  const Graph c5 = generators::Cycle(5);
  const Cover full = FromListAssignment(c5, std::vector<std::vector<Label>>(5, {1, 2, 3}));
  EXPECT_EQ(full.node_count(), 15u);
  EXPECT_EQ(full.cross_edges().size(), 15u);
  for (ColourNode x = 0; x < 15; ++x) EXPECT_EQ(StarDegree(full, x), 2u);
}

TEST(CoverTest, AxiomViolations) {
  EXPECT_TRUE(ValidateCover(Cover::Make(Graph{}, {}, {})).valid);

  const Graph edge = generators::Complete(2);
  const CoverReport matching = ValidateCover(Cover::Make(edge, {0, 0, 1, 1}, {{0, 2}, {0, 3}}));
  EXPECT_FALSE(matching.valid);
  EXPECT_EQ(matching.axiom, 4);

  const CoverReport non_edge =
      ValidateCover(Cover::Make(generators::Edgeless(2), {0, 1}, {{0, 1}}));
  EXPECT_EQ(non_edge.axiom, 3);

  const CoverReport same_owner = ValidateCover(Cover::Make(edge, {0, 0, 1}, {{0, 1}}));
  EXPECT_EQ(same_owner.axiom, 2);

  EXPECT_EQ(KindOf([&] { Cover::Make(edge, {0, 2}, {}); }), ErrorKind::kInput);
  EXPECT_EQ(KindOf([&] { Cover::Make(edge, {0, 1}, {{0, 5}}); }), ErrorKind::kInput);
  EXPECT_EQ(KindOf([&] { Cover::Make(edge, {0, 1}, {{1, 1}}); }), ErrorKind::kInput);
}

TEST(CoverTest, AdjacencyIncludesImplicitCliques) {
  const Cover c = ThreeByThreeSingleEdge();
  EXPECT_TRUE(c.adjacent(0, 2));
  EXPECT_TRUE(c.adjacent(1, 4));
  EXPECT_FALSE(c.adjacent(0, 3));
  EXPECT_FALSE(c.adjacent(0, 0));
}

TEST(HypothesisTest, Examples) {
  const Cover none = Cover::Make(generators::Path(3), {0, 0, 0, 1, 1, 1, 2, 2, 2}, {});
  EXPECT_TRUE(FinishingBlowHypothesis(none, Constant(3, 3)).pass);

  const Cover edge = FromListAssignment(generators::Complete(2), {{1, 2}, {2, 3}});
  const HypothesisReport small = FinishingBlowHypothesis(edge, Constant(2, 3));
  EXPECT_FALSE(small.pass);
  EXPECT_FALSE(small.witnesses.empty());

  const Cover single = ThreeByThreeSingleEdge();
  const HypothesisReport r = FinishingBlowHypothesis(single, Constant(2, 3));
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.max_star_ratio, 8.0 / 3, 1e-12);

  EXPECT_FALSE(FinishingBlowHypothesis(none, Constant(3, 2)).pass);
  EXPECT_FALSE(FinishingBlowHypothesis(none, Constant(3, 4)).pass);
}

TEST(HypothesisTest, RandomCoversWithSmallStarDegreePass) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Cover c = RandomCover({.vertices = 80, .edge_probability = 0.1, .seed = seed});
    EXPECT_TRUE(ValidateCover(c).valid);
    for (ColourNode x = 0; x < c.node_count(); ++x) EXPECT_LE(StarDegree(c, x), 3u);
    EXPECT_TRUE(FinishingBlowHypothesis(c, Constant(80, 24)).pass);
  }
}

TEST(LllTest, NoCrossEdgesIsVacuouslyCertified) {
  const Cover none = Cover::Make(generators::Path(3), {0, 0, 0, 1, 1, 1, 2, 2, 2}, {});
  const LllReport r = LllCertify(none, Constant(3, 3));
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.events, 0u);
}

TEST(LllTest, SingleEdgeMatchesDirectEvaluation) {
  const Cover c = ThreeByThreeSingleEdge();
  EXPECT_EQ(KindOf([&] { LllCertify(c, Constant(2, 3)); }), ErrorKind::kHypothesis);
  const LllReport r = LllCertify(c, Constant(2, 3), {.check_hypothesis = false});
  const double expected = (3.0 / 9) * std::exp(-1.4 * (3.0 / 9)) - 1.0 / 9;
  EXPECT_NEAR(r.min_slack, expected, 1e-15);
  EXPECT_NEAR(r.worst_gamma_sum, 3.0 / 9, 1e-15);
  EXPECT_TRUE(r.certified);
}

TEST(LllTest, RandomCoversAgreeWithOracle) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Cover c = RandomCover({.vertices = 60, .edge_probability = 0.15, .seed = seed});
    const auto ell = Constant(60, 24);
    const LllReport r = LllCertify(c, ell);
    EXPECT_TRUE(r.certified);
    EXPECT_GT(r.min_slack, 0.0);
    EXPECT_GT(r.min_glll_slack, 0.0);
    EXPECT_NEAR(r.min_slack, OracleLllSlack(c, ell), 1e-15);
  }
}

TEST(TruncateTest, KeepsLowestIdsAndInternalEdges) {
  const Cover c = Cover::Make(generators::Complete(2), {0, 0, 0, 0, 1, 1, 1, 1},
                              {{0, 4}, {3, 5}, {1, 7}});
  const TruncatedCover t = TruncateLists(c, std::vector<int>{3, 3});
  EXPECT_EQ(t.cover.node_count(), 6u);
  EXPECT_EQ(t.to_original, (std::vector<ColourNode>{0, 1, 2, 4, 5, 6}));
  ASSERT_EQ(t.cover.cross_edges().size(), 1u);
  EXPECT_EQ(t.cover.cross_edges()[0], (CrossEdge{0, 3}));
}

TEST(SolveTest, NoCrossEdgesNeedsNoResampling) {
  const Cover none = Cover::Make(generators::Path(3), {0, 0, 1, 1, 2, 2}, {});
  const SolveResult r = Solve(none, 1);
  EXPECT_EQ(r.resamples, 0u);
  EXPECT_TRUE(VerifyDpColouring(none, r.choice).ok);
}

TEST(SolveTest, FullCorrespondenceOnAnEdge) {
  const Graph k2 = generators::Complete(2);
  const Cover c = FromListAssignment(k2, {{1, 2, 3}, {1, 2, 3}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SolveResult r = Solve(c, seed);
    EXPECT_TRUE(VerifyDpColouring(c, r.choice).ok);
    const auto labels = ProjectLabels(c, r.choice);
    EXPECT_NE(labels[0], labels[1]);
  }
}

TEST(SolveTest, CertifiedRandomInstance) {
  const Cover c = RandomCover({.vertices = 200, .edge_probability = 0.05, .seed = 7});
  const auto ell = Constant(200, 24);
  ASSERT_TRUE(LllCertify(c, ell).certified);
  const SolveResult r = Solve(c, 7, {.ell = ell});
  const DpVerification v = VerifyDpColouring(c, r.choice);
  EXPECT_TRUE(v.ok) << v.message;
  EXPECT_EQ(Solve(c, 7, {.ell = ell}).choice, r.choice);
}

TEST(SolveTest, ErrorCases) {
  const Graph k2 = generators::Complete(2);
  EXPECT_EQ(KindOf([&] { Solve(Cover::Make(k2, {0}, {}), 1); }), ErrorKind::kInput);
  const Cover impossible = Cover::Make(k2, {0, 1}, {{0, 1}});
  EXPECT_EQ(KindOf([&] { Solve(impossible, 1, {.max_resamples = 100}); }), ErrorKind::kGiveUp);
}

TEST(VerifyTest, RejectsBadSelections) {
  const Cover c = ThreeByThreeSingleEdge();
  EXPECT_TRUE(VerifyDpColouring(c, std::vector<ColourNode>{0, 3}).ok);
  EXPECT_FALSE(VerifyDpColouring(c, std::vector<ColourNode>{1, 4}).ok);
  EXPECT_FALSE(VerifyDpColouring(c, std::vector<ColourNode>{3, 0}).ok);
  EXPECT_FALSE(VerifyDpColouring(c, std::vector<ColourNode>{0}).ok);
}

TEST(ListRoundTripTest, SolutionsAreProperListColourings) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = generators::RandomTriangleFree(60, 0.1, seed);
    const auto lists = RandomListAssignment(g, 24, 400, 3, seed);
    const Cover c = FromListAssignment(g, lists);
    ASSERT_TRUE(FinishingBlowHypothesis(c, Constant(g.n(), 24)).pass);
    const SolveResult r = Solve(c, seed);
    const auto labels = ProjectLabels(c, r.choice);
    EXPECT_TRUE(IsProperListColouring(g, lists, labels));
  }
}

TEST(ListRoundTripTest, PaletteTooSmallIsAnInputError) {
  EXPECT_EQ(KindOf([] { RandomListAssignment(generators::Complete(2), 5, 3, 0, 1); }),
            ErrorKind::kInput);
}

TEST(PartialStateTest, IncrementalResidualsMatchRecomputation) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Cover c = RandomCover({.vertices = 30, .edge_probability = 0.2, .list_size = 6,
                                 .max_star_degree = 4, .seed = seed});
    PartialDpState state(c);
    std::mt19937_64 rng(seed);
    for (Vertex u = 0; u < c.base().n(); ++u) {
      const auto residual = state.Residual(u);
      if (residual.empty() || rng() % 2) continue;
      state.Choose(u, residual[rng() % residual.size()]);
      for (Vertex v = 0; v < c.base().n(); ++v) {
        EXPECT_EQ(state.Residual(v), state.ResidualFromScratch(v));
      }
    }
    const ResidualCover rc = state.MakeResidualCover();
    EXPECT_TRUE(ValidateCover(rc.cover).valid);
    EXPECT_EQ(rc.to_base.size(), c.base().n() - state.size());
    for (Vertex u = 0; u < rc.to_base.size(); ++u) {
      std::vector<ColourNode> mapped;
      for (ColourNode x : rc.cover.list(u)) mapped.push_back(rc.to_original[x]);
      EXPECT_EQ(mapped, state.Residual(rc.to_base[u]));
    }
  }
}

TEST(PartialStateTest, ChooseRejectsInvalidMoves) {
  const Cover c = ThreeByThreeSingleEdge();
  PartialDpState state(c);
  state.Choose(0, 1);
  EXPECT_EQ(KindOf([&] { state.Choose(0, 2); }), ErrorKind::kState);
  EXPECT_EQ(KindOf([&] { state.Choose(1, 4); }), ErrorKind::kState);
  EXPECT_EQ(KindOf([&] { state.Choose(1, 0); }), ErrorKind::kState);
  EXPECT_EQ(state.Residual(1), (std::vector<ColourNode>{3, 5}));
}

TEST(TwoPhaseTest, NoCrossEdges) {
  const Cover none = Cover::Make(generators::Path(3), {0, 0, 0, 1, 1, 1, 2, 2, 2}, {});
  const TwoPhaseResult r = TwoPhaseColour(none, Constant(3, 3), {.seed = 1});
  EXPECT_TRUE(r.success);
  EXPECT_TRUE(r.certified);
  EXPECT_TRUE(VerifyDpColouring(none, r.choice).ok);
}

TEST(TwoPhaseTest, FiveCycleWithThreeColours) {
  const Graph c5 = generators::Cycle(5);
  const auto lists = std::vector<std::vector<Label>>(5, {1, 2, 3});
  ASSERT_EQ(FindListColouring(c5, lists, 1000).status, SearchStatus::kColourable);
  const Cover c = FromListAssignment(c5, lists);
  const TwoPhaseResult r = TwoPhaseColour(c, Constant(5, 3), {.seed = 3});
  ASSERT_TRUE(r.success) << r.report;
  EXPECT_TRUE(VerifyDpColouring(c, r.choice).ok);
  EXPECT_TRUE(IsProperListColouring(c5, lists, ProjectLabels(c, r.choice)));
}

TEST(TwoPhaseTest, RandomTriangleFreeListCovers) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = generators::RandomTriangleFree(100, 0.08, seed);
    const Cover c = FromListAssignment(g, RandomListAssignment(g, 32, 400, 3, seed));
    const TwoPhaseResult r = TwoPhaseColour(c, Constant(100, 24), {.seed = seed});
    ASSERT_TRUE(r.success) << r.report;
    EXPECT_TRUE(r.certified);
    EXPECT_GT(r.phase1_coloured, 0u);
    EXPECT_TRUE(VerifyDpColouring(c, r.choice).ok);
  }
}

TEST(TwoPhaseTest, TriangleIsRejected) {
  const Cover c = FromListAssignment(generators::Complete(3),
                                     std::vector<std::vector<Label>>(3, {1, 2, 3}));
  EXPECT_EQ(KindOf([&] { TwoPhaseColour(c, Constant(3, 3), {}); }), ErrorKind::kHypothesis);
}

}  // namespace
}  // namespace hccolour
