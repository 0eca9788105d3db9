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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "hccolour/constructions.h"
#include "hccolour/dpcolor.h"
#include "hccolour/error.h"
#include "hccolour/fractional.h"
#include "hccolour/graph.h"
#include "hccolour/graph_family.h"
#include "hccolour/hardcore.h"
#include "hccolour/list_colouring.h"
#include "hccolour/numerics.h"

namespace hccolour {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::vector<Graph> ConnectedFamilyUpTo(std::size_t max_n) {
  std::vector<Graph> family;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (Graph& g : AllConnectedTriangleFreeGraphs(n)) family.push_back(std::move(g));
  }
  return family;
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

Outcome FactsOnSmallFamily() {
  const auto family = ConnectedFamilyUpTo(9);
  double worst1 = 0, worst2 = 0;
  for (const Graph& g : family) {
    for (double lambda : {0.5, 1.0, 2.0}) {
      const FactCheckReport r = ConditionalFactCheck(g, Fugacity(lambda));
      worst1 = std::max(worst1, r.fact1_residual);
      worst2 = std::max(worst2, r.fact2_residual);
    }
  }
  return {worst1 <= 1e-12 && worst2 <= 1e-12,
          std::to_string(family.size()) + " graphs; " +
              Fmt("max residuals %.2e / %.2e", worst1, worst2)};
}

Outcome OccupancyBoundOnSmallFamily() {
  const auto family = ConnectedFamilyUpTo(9);
  const std::pair<double, double> grid[] = {{1, 1}, {10, 1}, {1, 10}, {std::numbers::e, 1}};
  double worst = std::numeric_limits<double>::infinity();
  std::size_t checks = 0;
  for (const Graph& g : family) {
    for (double lambda : {0.25, 0.5, 1.0, 2.0}) {
      const OccupancyStats s = EnumerateStats(g, Fugacity(lambda), 1);
      for (Vertex v = 0; v < g.n(); ++v) {
        for (const auto& [alpha, beta] : grid) {
          const double lhs = alpha * s.occupancy[v] + beta * s.NeighbourOccupancy(v, 1);
          worst = std::min(worst, lhs - HcmLowerBound(Fugacity(lambda), alpha, beta));
          ++checks;
        }
      }
    }
  }
  return {worst >= -1e-10, std::to_string(checks) + " vertex checks; " + Fmt("min slack %.3e", worst)};
}

Outcome GreedyTraces() {
  Outcome out;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) {
      out.pass = false;
      out.detail += what + " mismatch; ";
    }
  };
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
  {
    const Graph g = generators::Edgeless(1);
    const GreedyResult r = GreedyFractionalColouring(g, LocalWeights::Make(g, {{2.0}}),
                                                     HardCoreOracle(Fugacity(1.0)));
    const auto w = r.colouring.VertexIntervals(0);
    check(r.iterations.size() == 1 && close(r.iterations[0].tau, 2.0), "K1 tau");
    check(close(r.colouring.total(), 2.0) && close(r.vertex_weight[0], 1.0), "K1 totals");
    check(w.size() == 1 && close(w[0].lo, 0.0) && close(w[0].hi, 1.0), "K1 w(v)");
  }
  {
    const Graph g = generators::Complete(2);
    const GreedyResult r = GreedyFractionalColouring(
        g, LocalWeights::Make(g, {{3.0, 0.0}, {3.0, 0.0}}), HardCoreOracle(Fugacity(1.0)));
    check(r.iterations.size() == 1 && close(r.iterations[0].tau, 3.0), "K2 tau");
    for (const VertexSet& s : {VertexSet{}, VertexSet({0}), VertexSet({1})}) {
      check(close(r.colouring.SetMeasure(s), 1.0), "K2 set measure");
    }
    check(close(r.colouring.total(), 3.0), "K2 total");
    check(ValidateColouring(g, r.colouring, {3.0, 3.0}).ok, "K2 disjointness");
  }
  {
    const Graph g = generators::Cycle(5);
    const std::vector<VertexSet> sets = {VertexSet({0, 2}), VertexSet({0, 3}), VertexSet({1, 3}),
                                         VertexSet({1, 4}), VertexSet({2, 4})};
    const GreedyResult r = GreedyFractionalColouring(
        g, LocalWeights::Make(g, std::vector<std::vector<double>>(5, {2.5, 0.0})),
        UniformSetsOracle(sets));
    check(r.iterations.size() == 1 && close(r.iterations[0].tau, 2.5), "C5 tau");
    for (const VertexSet& s : sets) check(close(r.colouring.SetMeasure(s), 0.5), "C5 set measure");
    for (Vertex v = 0; v < 5; ++v) check(close(r.vertex_weight[v], 1.0), "C5 w(v)");
    check(close(r.colouring.total(), 2.5), "C5 total");
  }
  if (out.pass) out.detail = "K1, K2 and C5 traces reproduced; C5 total 5/2";
  return out;
}

struct PipelineRun {
  Graph graph;
  FractionalColouring colouring;
};

std::vector<PipelineRun>& PipelineRuns() {
  static std::vector<PipelineRun> runs;
  return runs;
}

Outcome LocalBoundPipeline() {
  Outcome out;
  std::size_t graphs = 0;
  double worst_unit = 0, min_slack = std::numeric_limits<double>::infinity();
  std::size_t max_iterations_ratio_violations = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const std::size_t n = 10 + seed % 16;
    const double p = 0.1 + 0.05 * static_cast<double>(seed % 5);
    const Graph g = generators::RandomTriangleFree(n, p, 1000 + seed);
    ++graphs;
    for (double epsilon : {1.0, 2.0, 4.0}) {
      const WeightChoice choice = ChooseLocalWeights(g, epsilon);
      const double lam = choice.lambda.value();
      for (Vertex v = 0; v < g.n(); ++v) {
        worst_unit = std::max(
            worst_unit, std::abs(HcmLowerBound(choice.lambda, choice.alpha[v], choice.beta[v]) - 1));
      }
      const GreedyResult r =
          GreedyFractionalColouring(g, choice.weights, HardCoreOracle(choice.lambda));
      if (r.iterations.size() > g.n()) ++max_iterations_ratio_violations;
      std::vector<double> bound(g.n());
      double largest = 1;
      for (Vertex v = 0; v < g.n(); ++v) {
        bound[v] = g.degree(v) > 0
                       ? (1 + lam) / lam * std::exp(LambertW(g.degree(v) * std::log1p(lam)))
                       : choice.weights.gamma[v];
        largest = std::max(largest, bound[v]);
      }
      const ColouringReport report = ValidateColouring(g, r.colouring, bound, 1e-9 * largest);
      if (!report.ok) {
        out.pass = false;
        out.detail = "seed " + std::to_string(seed) + ": " + report.failures.front() + "; ";
      }
      min_slack = std::min(min_slack, report.min_slack);
      PipelineRuns().push_back({g, r.colouring});
    }
  }
  if (worst_unit > 1e-9 || max_iterations_ratio_violations > 0) out.pass = false;
  out.detail += std::to_string(graphs) + " graphs x 3 epsilons; " +
                Fmt("max |bound - 1| %.2e; min slack %.3e", worst_unit, min_slack);
  return out;
}

// Independent check of an H-colouring: one node per vertex, owned by it, and
// no cross edge with both ends selected.
bool IndependentDpCheck(const Cover& c, const std::vector<ColourNode>& choice) {
  if (choice.size() != c.base().n()) return false;
  std::vector<char> selected(c.node_count(), 0);
  for (Vertex u = 0; u < choice.size(); ++u) {
    if (choice[u] >= c.node_count() || c.owner(choice[u]) != u) return false;
    selected[choice[u]] = 1;
  }
  for (const auto& [a, b] : c.cross_edges()) {
    if (selected[a] && selected[b]) return false;
  }
  return true;
}

Outcome FinishingBlow() {
  std::size_t certified = 0, solved = 0, failures = 0, max_resamples = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 20 + (seed * 37) % 181;
    const Cover c = RandomCover({.vertices = n,
                                 .edge_probability = 8.0 / static_cast<double>(n),
                                 .list_size = 24,
                                 .max_star_degree = 3,
                                 .seed = seed});
    const std::vector<int> ell(n, 24);
    if (!FinishingBlowHypothesis(c, ell).pass) {
      ++failures;
      continue;
    }
    const LllReport lll = LllCertify(c, ell);
    if (lll.certified && (lll.events == 0 || lll.min_slack > 0)) ++certified;
    if (lll.events > 0) min_slack = std::min(min_slack, lll.min_slack);
    try {
      const SolveResult r = Solve(c, seed, {.max_resamples = 1'000'000, .ell = ell});
      max_resamples = std::max(max_resamples, r.resamples);
      if (IndependentDpCheck(c, r.choice) && VerifyDpColouring(c, r.choice).ok) {
        ++solved;
      } else {
        ++failures;
      }
    } catch (const Error&) {
      ++failures;
    }
  }
  return {certified == 100 && solved == 100 && failures == 0,
          std::to_string(certified) + "/100 certified, " + std::to_string(solved) +
              "/100 solved; " + Fmt("min slack %.3e; max resamples %.0f", min_slack,
                                    static_cast<double>(max_resamples))};
}

Outcome ListColouringRoundTrip() {
  std::size_t proper = 0, hypothesis = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const std::size_t n = 30 + seed * 3;
    const Graph g = generators::RandomTriangleFree(n, 10.0 / static_cast<double>(n), seed);
    const auto lists = RandomListAssignment(g, 24, 300, 3, seed);
    const Cover c = FromListAssignment(g, lists);
    if (FinishingBlowHypothesis(c, std::vector<int>(n, 24)).pass) ++hypothesis;
    const SolveResult r = Solve(c, seed);
    const std::vector<Label> labels = ProjectLabels(c, r.choice);
    bool ok = labels.size() == n;
    for (Vertex v = 0; ok && v < n; ++v) {
      ok = std::find(lists[v].begin(), lists[v].end(), labels[v]) != lists[v].end();
    }
    for (const auto& [u, v] : g.edges()) ok = ok && labels[u] != labels[v];
    proper += ok;
  }
  return {proper == 50 && hypothesis == 50, std::to_string(hypothesis) +
                                                "/50 meet the hypothesis, " +
                                                std::to_string(proper) + "/50 proper"};
}

Outcome TowerLevelOne() {
  const NecessaryInstance inst = NecessaryConstruction(3, 1);
  const ConstructionProperties props = CheckConstructionProperties(inst);
  const NonColourabilityReport report = VerifyNotColourable(inst);
  std::set<Label> extras = {LevelLabel(8, 1), LevelLabel(1, 7)};
  for (const auto& list : inst.lists) extras.insert(list.begin(), list.end());
  const auto& own = inst.lists[inst.special_vertex];
  std::size_t tried = 0, colourable = 0;
  for (Label extra : extras) {
    if (std::find(own.begin(), own.end(), extra) != own.end()) continue;
    auto lists = inst.lists;
    lists[inst.special_vertex].push_back(extra);
    const auto r = FindListColouring(inst.graph, lists, 10'000'000);
    ++tried;
    colourable += r.status == SearchStatus::kColourable &&
                  IsProperListColouring(inst.graph, lists, r.colouring);
  }
  const bool shape = inst.graph.n() == 29 && inst.copy_counts == std::vector<std::size_t>{7} &&
                     inst.graph.degree(inst.special_vertex) == 21 && own.size() == 7;
  return {shape && props.all() && report.exhaustive && report.not_colourable &&
              colourable == tried,
          std::string("29 vertices, deg(v1) = 21, |L(v1)| = 7; properties ") +
              (props.all() ? "hold" : "FAIL") + "; not colourable: " +
              (report.not_colourable ? "true" : "false") + "; " + std::to_string(colourable) +
              "/" + std::to_string(tried) + " one-colour extensions colourable"};
}

Outcome SemiBipartiteInequality() {
  std::size_t graphs = 0;
  double worst = std::numeric_limits<double>::infinity(), worst_forms = 0;
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const Graph& g : AllTriangleFreeGraphs(n)) {
      if (g.min_degree() < 2) continue;
      ++graphs;
      double sum_log = 0;
      for (Vertex v = 0; v < n; ++v) sum_log += std::log(static_cast<double>(g.degree(v)));
      const double lam = static_cast<double>(n) / sum_log;
      const double mean_log = sum_log / static_cast<double>(n);
      const OccupancyStats s = EnumerateStats(g, Fugacity(lam), 1);
      double by_degree = 0, by_neighbours = 0;
      for (Vertex v = 0; v < n; ++v) {
        by_degree += static_cast<double>(g.degree(v)) * s.occupancy[v];
        by_neighbours += s.NeighbourOccupancy(v, 1);
      }
      const double l1 = std::log1p(lam);
      const double bound = static_cast<double>(n) * lam *
                           (mean_log + std::log(lam) + std::log(l1) + 1) /
                           ((1 + lam) * (1 + lam) * l1);
      worst = std::min(worst, by_degree - bound);
      worst_forms = std::max(worst_forms, std::abs(by_degree - by_neighbours));
      const SemiBipartiteResult r = SemiBipartiteExtract(g, {});
      worst_forms = std::max(worst_forms, std::abs(r.expected_cut - by_degree));
    }
  }
  return {worst >= -1e-9 && worst_forms <= 1e-12,
          std::to_string(graphs) + " graphs; " +
              Fmt("min slack %.3e; max form gap %.2e", worst, worst_forms)};
}

Outcome Extraction() {
  if (PipelineRuns().empty()) return {false, "criterion 4 produced no colourings"};
  std::size_t ok = 0;
  for (const PipelineRun& run : PipelineRuns()) {
    const VertexSet s = ExtractIndependentSet(run.graph, run.colouring);
    const double need = std::ceil(static_cast<double>(run.graph.n()) / run.colouring.total() - 1e-9);
    ok += run.graph.is_independent(s.members()) && static_cast<double>(s.size()) >= need;
  }
  return {ok == PipelineRuns().size(),
          std::to_string(ok) + "/" + std::to_string(PipelineRuns().size()) + " colourings"};
}

Outcome LambertGrid() {
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double w = 20.0 * i / 999.0;
    worst = std::max(worst, std::abs(LambertW(w * std::exp(w)) - w));
  }
  const double at_e = std::abs(LambertW(std::numbers::e) - 1.0);
  return {worst <= 1e-10 && LambertW(0.0) == 0.0 && at_e <= 1e-14,
          Fmt("max round-trip error %.2e; |W(e) - 1| = %.1e", worst, at_e)};
}

int Main() {
  const std::vector<Criterion> criteria = {
      {1, "Hard-core conditional facts on connected triangle-free graphs, n <= 9", 120,
       FactsOnSmallFamily},
      {2, "Occupancy lower bound on the same family", 300, OccupancyBoundOnSmallFamily},
      {3, "Greedy fractional colouring traces", 60, GreedyTraces},
      {4, "Local-weight pipeline on 50 random triangle-free graphs", 600, LocalBoundPipeline},
      {5, "Local lemma certificate and resampling on 100 random covers", 300, FinishingBlow},
      {6, "List colouring through covers on 50 instances", 300, ListColouringRoundTrip},
      {7, "Tower construction, delta 3, level 1", 120, TowerLevelOne},
      {8, "Semi-bipartite expectation bound, min degree >= 2, n <= 9", 300,
       SemiBipartiteInequality},
      {9, "Independent-set extraction from criterion 4 colourings", 60, Extraction},
      {10, "Lambert W round trip and exact points", 60, LambertGrid},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit_s) {
      outcome.pass = false;
      outcome.detail += Fmt("; over the %.0f s limit", c.time_limit_s);
    }
    failed += !outcome.pass;
    std::printf("[%s] criterion %2d: %s: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.title, outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}

}  // namespace
}  // namespace hccolour

int main() { return hccolour::Main(); }
