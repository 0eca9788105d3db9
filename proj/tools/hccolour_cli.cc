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

// Command-line driver: hard-core statistics, fractional colouring,
// correspondence colouring, the lower-bound construction and semi-bipartite
// extraction.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hccolour/constructions.h"
#include "hccolour/dpcolor.h"
#include "hccolour/error.h"
#include "hccolour/fractional.h"
#include "hccolour/graph.h"
#include "hccolour/hardcore.h"
#include "hccolour/io.h"

namespace hccolour {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kInput:
    case ErrorKind::kDomain:
    case ErrorKind::kHypothesis:
      return kExitPrecondition;
    case ErrorKind::kSize:
    case ErrorKind::kGiveUp:
      return kExitResource;
    case ErrorKind::kNumeric:
    case ErrorKind::kState:
    case ErrorKind::kInternal:
      return kExitInternal;
  }
  return kExitInternal;
}

struct Common {
  std::string input;
  std::string output;
  std::string format = "json";
  std::size_t cutoff = kDefaultExactCutoff;
  int threads = 0;
  std::uint64_t seed = 0;
};

void Emit(const Common& common, const std::string& text) {
  if (common.output.empty() || common.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output);
  if (!out) Fail(ErrorKind::kIo, "cannot write " + common.output);
  out << text;
  if (!out) Fail(ErrorKind::kIo, "write failed: " + common.output);
}

void EmitJson(const Common& common, const Json& json) { Emit(common, json.dump(2) + "\n"); }

std::string FormatDouble(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

Graph LoadGraph(const Common& common) {
  if (common.input.empty()) Fail(ErrorKind::kIo, "--input is required");
  return ReadGraphFile(common.input);
}

// --- stats -----------------------------------------------------------------

struct StatsArgs {
  double lambda = 1.0;
  int max_distance = 1;
  bool fact_check = false;
  std::size_t chains = 200;
  std::size_t steps = 0;
};

int RunStats(const Common& common, const StatsArgs& args) {
  const Graph g = LoadGraph(common);
  const Fugacity lambda(args.lambda);
  if (args.max_distance < 1) Fail(ErrorKind::kInput, "--max-distance must be >= 1");
  Json json;
  std::ostringstream tsv;
  if (g.n() <= common.cutoff) {
    const OccupancyStats stats = EnumerateStats(
        g, lambda, args.max_distance, {.cutoff = common.cutoff, .threads = common.threads});
    json = StatsToJson(stats);
    json["mode"] = "exact";
    tsv << "vertex\tdegree\toccupancy";
    for (int j = 1; j <= args.max_distance; ++j) tsv << "\tneighbour_" << j;
    tsv << "\n";
    for (Vertex v = 0; v < g.n(); ++v) {
      tsv << v << "\t" << g.degree(v) << "\t" << FormatDouble(stats.occupancy[v]);
      for (int j = 1; j <= args.max_distance; ++j) {
        tsv << "\t" << FormatDouble(stats.NeighbourOccupancy(v, j));
      }
      tsv << "\n";
    }
  } else {
    if (args.fact_check) {
      Fail(ErrorKind::kSize, "--fact-check needs exact enumeration; graph has " +
                                 std::to_string(g.n()) + " vertices, cutoff is " +
                                 std::to_string(common.cutoff));
    }
    const std::size_t steps = args.steps > 0 ? args.steps : 50 * g.n();
    const GlauberEstimate est =
        EstimateOccupancyByGlauber(g, lambda, args.chains, steps, common.seed, common.threads);
    json["lambda"] = args.lambda;
    json["mode"] = "glauber";
    json["chains"] = est.chains;
    json["steps"] = steps;
    json["occupancy"] = est.occupancy;
    json["std_error"] = est.std_error;
    tsv << "vertex\tdegree\toccupancy\tstd_error\n";
    for (Vertex v = 0; v < g.n(); ++v) {
      tsv << v << "\t" << g.degree(v) << "\t" << FormatDouble(est.occupancy[v]) << "\t"
          << FormatDouble(est.std_error[v]) << "\n";
    }
  }
  if (args.fact_check) {
    json["fact_check"] = FactCheckToJson(ConditionalFactCheck(g, lambda, common.cutoff));
  }
  if (common.format == "tsv") {
    Emit(common, tsv.str());
  } else {
    EmitJson(common, json);
  }
  return kExitOk;
}

// --- frac ------------------------------------------------------------------

struct FracArgs {
  double epsilon = 1.0;
  std::string plot;
};

int RunFrac(const Common& common, const FracArgs& args) {
  const Graph g = LoadGraph(common);
  if (!IsTriangleFree(g)) Fail(ErrorKind::kHypothesis, "input graph has a triangle");
  if (g.n() > common.cutoff) {
    Fail(ErrorKind::kSize, "fractional colouring uses exact enumeration; graph has " +
                               std::to_string(g.n()) + " vertices, cutoff is " +
                               std::to_string(common.cutoff));
  }
  const WeightChoice choice = ChooseLocalWeights(g, args.epsilon);
  const GreedyResult result = GreedyFractionalColouring(
      g, choice.weights, HardCoreOracle(choice.lambda, common.cutoff));
  const std::vector<double>& bound = choice.weights.gamma;
  double largest = 1.0;
  for (double b : bound) largest = std::max(largest, b);
  const ColouringReport report = ValidateColouring(g, result.colouring, bound, 1e-9 * largest);
  if (!report.ok) {
    Fail(ErrorKind::kInternal, "colouring failed validation: " + report.failures.front());
  }
  const VertexSet independent = ExtractIndependentSet(g, result.colouring);

  std::ostringstream plot;
  plot << "vertex\tdegree\tsup_w\tbound\tslack\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto intervals = result.colouring.VertexIntervals(v);
    const double sup = intervals.empty() ? 0.0 : intervals.back().hi;
    plot << v << "\t" << g.degree(v) << "\t" << FormatDouble(sup) << "\t"
         << FormatDouble(bound[v]) << "\t" << FormatDouble(bound[v] - sup) << "\n";
  }
  if (!args.plot.empty()) {
    std::ofstream out(args.plot);
    if (!out) Fail(ErrorKind::kIo, "cannot write " + args.plot);
    out << plot.str();
  }
  if (common.format == "tsv") {
    Emit(common, plot.str());
    return kExitOk;
  }
  Json json;
  json["lambda"] = choice.lambda.value();
  json["epsilon"] = args.epsilon;
  json["iterations"] = result.iterations.size();
  json["colouring"] = ColouringToJson(result.colouring);
  json["validation"] = {{"ok", report.ok},
                        {"min_slack", g.n() == 0 ? 0.0 : report.min_slack}};
  json["independent_set"] = std::vector<Vertex>(independent.begin(), independent.end());
  EmitJson(common, json);
  return kExitOk;
}

// --- dp --------------------------------------------------------------------

struct DpArgs {
  std::optional<int> ell;
  std::size_t max_resamples = 1'000'000;
  int rounds = 0;
  bool generate = false;
  std::size_t vertices = 100;
  double edge_probability = 0.05;
  std::size_t list_size = 24;
  std::size_t max_star_degree = 3;
};

int RunDp(const Common& common, const DpArgs& args) {
  Cover cover;
  if (args.generate) {
    cover = RandomCover({.vertices = args.vertices,
                         .edge_probability = args.edge_probability,
                         .list_size = args.list_size,
                         .max_star_degree = args.max_star_degree,
                         .seed = common.seed});
  } else {
    if (common.input.empty()) Fail(ErrorKind::kIo, "--input (a cover file) or --generate is required");
    cover = ReadCoverFile(common.input);
  }
  const CoverReport valid = ValidateCover(cover);
  if (!valid.valid) {
    Fail(ErrorKind::kInput, "cover violates axiom " + std::to_string(valid.axiom) + ": " +
                                valid.first_violation);
  }
  const Graph& g = cover.base();
  std::vector<int> ell(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    ell[u] = args.ell ? *args.ell : static_cast<int>(cover.list(u).size());
  }
  const HypothesisReport hyp = FinishingBlowHypothesis(cover, ell);
  Json json;
  json["vertices"] = g.n();
  json["colour_nodes"] = cover.node_count();
  json["cross_edges"] = cover.cross_edges().size();
  json["hypothesis"] = {{"pass", hyp.pass}, {"max_star_ratio", hyp.max_star_ratio}};
  if (!hyp.witnesses.empty()) json["hypothesis"]["witness"] = hyp.witnesses.front();
  bool lists_long_enough = true;
  for (Vertex u = 0; u < g.n(); ++u) lists_long_enough &= cover.list(u).size() >= std::size_t(std::max(ell[u], 0));
  if (lists_long_enough && g.n() > 0) {
    bool ell_ok = true;
    for (int l : ell) ell_ok &= l >= 1;
    if (ell_ok) {
      const LllReport lll = LllCertify(cover, ell, {.check_hypothesis = false});
      json["lll"] = {{"certified", lll.certified && hyp.pass},
                     {"events", lll.events},
                     {"min_slack", lll.events ? lll.min_slack : 0.0},
                     {"min_glll_slack", lll.events ? lll.min_glll_slack : 0.0},
                     {"max_weight", lll.max_weight}};
    }
  }

  std::vector<ColourNode> choice;
  if (args.rounds > 0) {
    const TwoPhaseResult r = TwoPhaseColour(
        cover, ell, {.rounds = args.rounds, .seed = common.seed, .max_resamples = args.max_resamples});
    json["two_phase"] = {{"success", r.success},
                         {"certified", r.certified},
                         {"used_fallback", r.used_fallback},
                         {"rounds_used", r.rounds_used},
                         {"phase1_coloured", r.phase1_coloured},
                         {"min_list_surplus", r.min_list_surplus},
                         {"max_star_degree", r.max_star_degree},
                         {"report", r.report}};
    if (!r.success) {
      EmitJson(common, json);
      Fail(ErrorKind::kGiveUp, "two-phase colouring failed: " + r.report);
    }
    choice = r.choice;
  } else {
    SolveOptions options{.max_resamples = args.max_resamples};
    if (args.ell) options.ell = ell;
    const SolveResult solved = Solve(cover, common.seed, options);
    json["resamples"] = solved.resamples;
    choice = solved.choice;
  }
  const DpVerification check = VerifyDpColouring(cover, choice);
  if (!check.ok) Fail(ErrorKind::kInternal, "solution failed verification: " + check.message);
  json["verified"] = true;
  json["solution"] = DpChoiceToJson(cover, choice);
  EmitJson(common, json);
  return kExitOk;
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
  int delta = 3;
  int level = 0;
  std::size_t budget = 10'000'000;
  std::size_t max_vertices = 1'000'000;
  bool verify = true;
  std::string graph_output;
};

int RunConstruct(const Common& common, const ConstructArgs& args) {
  const NecessaryInstance inst =
      NecessaryConstruction(args.delta, args.level, {.max_vertices = args.max_vertices});
  const ConstructionProperties props = CheckConstructionProperties(inst);
  Json json = InstanceToJson(inst);
  json["vertices"] = inst.graph.n();
  json["edges"] = inst.graph.edge_count();
  json["properties"] = {{"bipartite", props.bipartite},
                        {"a_degrees", props.a_degrees},
                        {"b_degrees", props.b_degrees},
                        {"list_sizes", props.list_sizes},
                        {"failures", props.failures}};
  bool pass = props.all();
  std::string summary;
  if (args.verify) {
    const NonColourabilityReport report = VerifyNotColourable(inst, args.budget);
    json["verification"] = {{"not_colourable", report.not_colourable},
                            {"exhaustive", report.exhaustive},
                            {"structural", report.structural},
                            {"nodes", report.nodes},
                            {"note", report.note}};
    pass = pass && report.not_colourable && report.structural;
    summary = std::string("not colourable: ") + (report.not_colourable ? "true" : "false") + "\n";
  }
  json["pass"] = pass;
  if (!args.graph_output.empty()) WriteGraphFile(args.graph_output, inst.graph);
  EmitJson(common, json);
  (common.output.empty() || common.output == "-" ? std::cerr : std::cout) << summary;
  return pass ? kExitOk : kExitPrecondition;
}

// --- semibip ---------------------------------------------------------------

struct SemiArgs {
  std::optional<double> lambda;
  std::size_t trials = 64;
  std::size_t steps = 0;
};

int RunSemi(const Common& common, const SemiArgs& args) {
  const Graph g = LoadGraph(common);
  const SemiBipartiteResult r = SemiBipartiteExtract(g, {.lambda = args.lambda,
                                                         .trials = args.trials,
                                                         .seed = common.seed,
                                                         .cutoff = common.cutoff,
                                                         .glauber_steps = args.steps,
                                                         .threads = common.threads});
  if (!g.is_independent(r.a.members())) Fail(ErrorKind::kInternal, "extracted part is not independent");
  if (common.format == "tsv") {
    std::ostringstream tsv;
    tsv << "vertex\tpart\tdegree\n";
    for (Vertex v = 0; v < g.n(); ++v) {
      tsv << v << "\t" << (r.a.contains(v) ? "A" : "B") << "\t" << g.degree(v) << "\n";
    }
    Emit(common, tsv.str());
    return kExitOk;
  }
  auto number_or_null = [](double x) { return std::isnan(x) ? Json(nullptr) : Json(x); };
  Json json;
  json["lambda"] = r.lambda;
  json["exact"] = r.exact;
  json["a"] = std::vector<Vertex>(r.a.begin(), r.a.end());
  json["b"] = std::vector<Vertex>(r.b.begin(), r.b.end());
  json["cut_edges"] = r.cut_edges;
  json["avg_degree"] = r.avg_degree;
  json["expected_cut"] = number_or_null(r.expected_cut);
  json["expected_cut_neighbour_form"] = number_or_null(r.expected_cut_neighbour_form);
  json["lower_bound"] = number_or_null(r.lower_bound);
  EmitJson(common, json);
  return kExitOk;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string family = "random";
  std::size_t n = 20;
  double p = 0.2;
};

int RunGenerate(const Common& common, const GenerateArgs& args) {
  Graph g;
  if (args.family == "random") {
    g = generators::RandomTriangleFree(args.n, args.p, common.seed);
  } else if (args.family == "cycle") {
    g = generators::Cycle(args.n);
  } else if (args.family == "path") {
    g = generators::Path(args.n);
  } else if (args.family == "star") {
    g = generators::Star(args.n);
  } else if (args.family == "complete") {
    g = generators::Complete(args.n);
  } else {
    g = generators::Petersen();
  }
  std::ostringstream out;
  WriteEdgeList(out, g);
  Emit(common, out.str());
  return kExitOk;
}

void AddCommon(CLI::App* cmd, Common& common, bool input, bool format) {
  if (input) cmd->add_option("-i,--input", common.input, "Input file")->required();
  cmd->add_option("-o,--output", common.output, "Output path (default: stdout)");
  if (format) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
  }
  cmd->add_option("--cutoff", common.cutoff,
                  "Largest vertex count handled by exact enumeration (env HCCHROMA_CUTOFF)")
      ->envname("HCCHROMA_CUTOFF")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}))
      ->capture_default_str();
  cmd->add_option("--threads", common.threads, "OpenMP threads (0: runtime default)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--seed", common.seed, "Random seed")->capture_default_str();
}

int Main(int argc, char** argv) {
  CLI::App app{"Hard-core model statistics and colouring tools for triangle-free graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  Common common;

  StatsArgs stats;
  CLI::App* stats_cmd = app.add_subcommand("stats", "Hard-core occupancy statistics");
  AddCommon(stats_cmd, common, true, true);
  stats_cmd->add_option("-l,--lambda", stats.lambda, "Fugacity")->capture_default_str();
  stats_cmd->add_option("--max-distance", stats.max_distance, "Largest j for E|N^j(v) ∩ I|")
      ->capture_default_str();
  stats_cmd->add_flag("--fact-check", stats.fact_check,
                      "Also check the conditional occupancy facts (triangle-free only)");
  stats_cmd->add_option("--trials", stats.chains, "Glauber chains above the cutoff")
      ->capture_default_str();
  stats_cmd->add_option("--steps", stats.steps, "Updates per chain (0: 50 n)")
      ->capture_default_str();

  FracArgs frac;
  CLI::App* frac_cmd = app.add_subcommand("frac", "Greedy fractional colouring with local weights");
  AddCommon(frac_cmd, common, true, true);
  frac_cmd->add_option("-e,--epsilon", frac.epsilon, "Epsilon in (0, 4]; lambda = epsilon/2")
      ->capture_default_str();
  frac_cmd->add_option("--plot", frac.plot, "Write per-vertex bound slack as TSV");

  DpArgs dp;
  CLI::App* dp_cmd = app.add_subcommand("dp", "Correspondence colouring by resampling");
  AddCommon(dp_cmd, common, false, false);
  dp_cmd->add_option("-i,--input", common.input, "Cover file (JSON)");
  dp_cmd->add_option("--ell", dp.ell, "Target list size for every vertex (default: list size)");
  dp_cmd->add_option("--max-resamples", dp.max_resamples, "Resampling budget")
      ->capture_default_str();
  dp_cmd->add_option("--rounds", dp.rounds, "Two-phase rounds (0: solve directly)")
      ->capture_default_str();
  dp_cmd->add_flag("--generate", dp.generate, "Use a random cover instead of --input");
  dp_cmd->add_option("--vertices", dp.vertices, "Random cover: base vertices")->capture_default_str();
  dp_cmd->add_option("--edge-probability", dp.edge_probability, "Random cover: edge probability")
      ->capture_default_str();
  dp_cmd->add_option("--list-size", dp.list_size, "Random cover: list size")->capture_default_str();
  dp_cmd->add_option("--max-star-degree", dp.max_star_degree, "Random cover: deg* cap")
      ->capture_default_str();

  ConstructArgs construct;
  CLI::App* construct_cmd =
      app.add_subcommand("construct", "Build and verify the non-colourable tower instance");
  AddCommon(construct_cmd, common, false, false);
  construct_cmd->add_option("--delta", construct.delta, "Minimum A degree (>= 3)")
      ->capture_default_str();
  construct_cmd->add_option("--level", construct.level, "Recursion level (<= delta - 1)")
      ->capture_default_str();
  construct_cmd->add_option("--budget", construct.budget, "Search node budget")
      ->capture_default_str();
  construct_cmd->add_option("--max-vertices", construct.max_vertices, "Size cap")
      ->capture_default_str();
  construct_cmd->add_option("--graph-output", construct.graph_output, "Write the edge list here");
  construct_cmd->add_flag("!--no-verify", construct.verify, "Skip the non-colourability check");

  SemiArgs semi;
  CLI::App* semi_cmd = app.add_subcommand("semibip", "Semi-bipartite induced subgraph extraction");
  AddCommon(semi_cmd, common, true, true);
  semi_cmd->add_option("-l,--lambda", semi.lambda, "Fugacity (default: n / sum log deg)");
  semi_cmd->add_option("--trials", semi.trials, "Glauber samples above the cutoff")
      ->capture_default_str();
  semi_cmd->add_option("--steps", semi.steps, "Updates per sample (0: 50 n)")->capture_default_str();

  GenerateArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Write a test graph as an edge list");
  AddCommon(gen_cmd, common, false, false);
  gen_cmd->add_option("--family", gen.family, "Graph family")
      ->check(CLI::IsMember({"random", "cycle", "path", "star", "complete", "petersen"}))
      ->capture_default_str();
  gen_cmd->add_option("-n,--vertices", gen.n, "Vertex count (leaves for star)")
      ->capture_default_str();
  gen_cmd->add_option("-p,--probability", gen.p, "Edge probability before triangle removal")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*stats_cmd) return RunStats(common, stats);
    if (*frac_cmd) return RunFrac(common, frac);
    if (*dp_cmd) return RunDp(common, dp);
    if (*construct_cmd) return RunConstruct(common, construct);
    if (*semi_cmd) return RunSemi(common, semi);
    if (*gen_cmd) return RunGenerate(common, gen);
  } catch (const Error& e) {
    std::cerr << "error (" << ErrorKindName(e.kind()) << "): " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace
}  // namespace hccolour

int main(int argc, char** argv) { return hccolour::Main(argc, argv); }
