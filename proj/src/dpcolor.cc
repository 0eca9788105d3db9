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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hccolour/error.h"
#include "hccolour/rng.h"

namespace hccolour {
namespace {

constexpr std::size_t kMaxWitnesses = 32;

void CheckEll(const Cover& cover, std::span<const int> ell) {
  if (ell.size() != cover.base().n()) {
    Fail(ErrorKind::kInput, "ell must have one entry per base vertex");
  }
}

std::string NodeName(ColourNode c) { return "colour node " + std::to_string(c); }

}  // namespace

Cover Cover::Make(Graph base, std::vector<Vertex> owner, std::vector<CrossEdge> cross_edges,
                  std::vector<Label> labels) {
  Cover c;
  const std::size_t nodes = owner.size();
  if (!labels.empty() && labels.size() != nodes) {
    Fail(ErrorKind::kInput, "labels must be empty or one per colour node");
  }
  c.lists_.resize(base.n());
  for (ColourNode x = 0; x < nodes; ++x) {
    if (owner[x] >= base.n()) {
      Fail(ErrorKind::kInput, NodeName(x) + " has out-of-range owner " + std::to_string(owner[x]));
    }
    c.lists_[owner[x]].push_back(x);
  }
  for (auto& [a, b] : cross_edges) {
    if (a >= nodes || b >= nodes) Fail(ErrorKind::kInput, "cross edge with out-of-range node");
    if (a == b) Fail(ErrorKind::kInput, "cross edge loop at " + NodeName(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(cross_edges.begin(), cross_edges.end());
  cross_edges.erase(std::unique(cross_edges.begin(), cross_edges.end()), cross_edges.end());
  c.cross_adj_.resize(nodes);
  c.incident_.resize(nodes);
  for (std::size_t e = 0; e < cross_edges.size(); ++e) {
    const auto [a, b] = cross_edges[e];
    c.cross_adj_[a].push_back(b);
    c.cross_adj_[b].push_back(a);
    c.incident_[a].push_back(e);
    c.incident_[b].push_back(e);
  }
  for (auto& adj : c.cross_adj_) std::sort(adj.begin(), adj.end());
  c.base_ = std::move(base);
  c.owner_ = std::move(owner);
  c.cross_edges_ = std::move(cross_edges);
  c.labels_ = std::move(labels);
  return c;
}

bool Cover::adjacent(ColourNode a, ColourNode b) const {
  if (a == b) return false;
  if (owner_[a] == owner_[b]) return true;
  const auto& adj = cross_adj_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

CoverReport ValidateCover(const Cover& cover) {
  CoverReport report;
  auto fail = [&](int axiom, std::string message) {
    report.valid = false;
    report.axiom = axiom;
    report.first_violation = std::move(message);
  };
  const Graph& g = cover.base();
  std::size_t listed = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (ColourNode c : cover.list(u)) {
      if (cover.owner(c) != u) {
        fail(1, NodeName(c) + " listed under the wrong vertex");
        return report;
      }
    }
    listed += cover.list(u).size();
  }
  if (listed != cover.node_count()) {
    fail(1, "lists do not partition the colour nodes");
    return report;
  }
  for (const auto& [a, b] : cover.cross_edges()) {
    const Vertex u = cover.owner(a);
    const Vertex v = cover.owner(b);
    if (u == v) {
      fail(2, "cross edge " + std::to_string(a) + "-" + std::to_string(b) +
                  " inside L(" + std::to_string(u) + "); list cliques are implicit");
      return report;
    }
    if (!g.has_edge(u, v)) {
      fail(3, "cross edge " + std::to_string(a) + "-" + std::to_string(b) +
                  " joins lists of non-adjacent vertices " + std::to_string(u) + " and " +
                  std::to_string(v));
      return report;
    }
  }
  for (ColourNode c = 0; c < cover.node_count(); ++c) {
    std::vector<Vertex> owners;
    for (ColourNode d : cover.cross_neighbours(c)) owners.push_back(cover.owner(d));
    std::sort(owners.begin(), owners.end());
    const auto dup = std::adjacent_find(owners.begin(), owners.end());
    if (dup != owners.end()) {
      fail(4, NodeName(c) + " has two cross edges into L(" + std::to_string(*dup) +
                  "); not a matching");
      return report;
    }
  }
  return report;
}

Cover FromListAssignment(const Graph& g, const std::vector<std::vector<Label>>& lists) {
  if (lists.size() != g.n()) Fail(ErrorKind::kInput, "one list per vertex required");
  std::vector<Vertex> owner;
  std::vector<Label> labels;
  // (vertex, label) -> node
  std::vector<std::map<Label, ColourNode>> index(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    std::vector<Label> sorted = lists[u];
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Label c : sorted) {
      index[u][c] = static_cast<ColourNode>(owner.size());
      owner.push_back(u);
      labels.push_back(c);
    }
  }
  std::vector<CrossEdge> cross;
  for (const auto& [u, v] : g.edges()) {
    const auto& small = index[u].size() <= index[v].size() ? index[u] : index[v];
    const auto& large = &small == &index[u] ? index[v] : index[u];
    for (const auto& [label, node] : small) {
      auto it = large.find(label);
      if (it != large.end()) cross.emplace_back(node, it->second);
    }
  }
  return Cover::Make(g, std::move(owner), std::move(cross), std::move(labels));
}

std::size_t StarDegree(const Cover& cover, ColourNode c) {
  if (c >= cover.node_count()) Fail(ErrorKind::kInput, NodeName(c) + " out of range");
  return cover.cross_neighbours(c).size();
}

HypothesisReport FinishingBlowHypothesis(const Cover& cover, std::span<const int> ell) {
  CheckEll(cover, ell);
  HypothesisReport report;
  auto witness = [&](std::string message) {
    report.pass = false;
    if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(message));
  };
  const Graph& g = cover.base();
  for (Vertex u = 0; u < g.n(); ++u) {
    const std::string name = "vertex " + std::to_string(u);
    if (ell[u] < 3) witness(name + ": ell = " + std::to_string(ell[u]) + " < 3");
    if (cover.list(u).size() < static_cast<std::size_t>(std::max(ell[u], 0))) {
      witness(name + ": |L| = " + std::to_string(cover.list(u).size()) + " < ell = " +
              std::to_string(ell[u]));
    }
    if (g.degree(u) == 0) continue;
    int min_ell = ell[g.neighbours(u)[0]];
    for (Vertex v : g.neighbours(u)) min_ell = std::min(min_ell, ell[v]);
    for (ColourNode c : cover.list(u)) {
      const std::size_t d = cover.cross_neighbours(c).size();
      if (min_ell > 0) {
        report.max_star_ratio =
            std::max(report.max_star_ratio, 8.0 * static_cast<double>(d) / min_ell);
      }
      if (8 * static_cast<long long>(d) > static_cast<long long>(min_ell)) {
        witness(name + ": " + NodeName(c) + " has deg* = " + std::to_string(d) + " > " +
                std::to_string(min_ell) + "/8");
      }
    }
  }
  return report;
}

TruncatedCover TruncateLists(const Cover& cover, std::span<const int> ell) {
  CheckEll(cover, ell);
  constexpr ColourNode kDropped = ~ColourNode{0};
  std::vector<ColourNode> remap(cover.node_count(), kDropped);
  for (Vertex u = 0; u < cover.base().n(); ++u) {
    const auto list = cover.list(u);
    const std::size_t keep = std::min<std::size_t>(list.size(), std::max(ell[u], 0));
    for (std::size_t i = 0; i < keep; ++i) remap[list[i]] = 0;
  }
  TruncatedCover out;
  std::vector<Vertex> owner;
  std::vector<Label> labels;
  for (ColourNode c = 0; c < cover.node_count(); ++c) {
    if (remap[c] == kDropped) continue;
    remap[c] = static_cast<ColourNode>(owner.size());
    owner.push_back(cover.owner(c));
    out.to_original.push_back(c);
    if (cover.has_labels()) labels.push_back(cover.label(c));
  }
  std::vector<CrossEdge> cross;
  for (const auto& [a, b] : cover.cross_edges()) {
    if (remap[a] != kDropped && remap[b] != kDropped) cross.emplace_back(remap[a], remap[b]);
  }
  out.cover = Cover::Make(cover.base(), std::move(owner), std::move(cross), std::move(labels));
  return out;
}

LllReport LllCertify(const Cover& cover, std::span<const int> ell, const LllOptions& options) {
  CheckEll(cover, ell);
  if (options.check_hypothesis) {
    const HypothesisReport hyp = FinishingBlowHypothesis(cover, ell);
    if (!hyp.pass) {
      Fail(ErrorKind::kHypothesis, "finishing-blow hypothesis fails: " +
                                       (hyp.witnesses.empty() ? std::string() : hyp.witnesses[0]));
    }
  }
  TruncatedCover truncated;
  const Cover* work = &cover;
  if (options.truncate) {
    truncated = TruncateLists(cover, ell);
    work = &truncated.cover;
  }
  const Graph& g = work->base();
  const auto edges = work->cross_edges();
  LllReport report;
  report.events = edges.size();

  auto list_size = [&](Vertex u) { return static_cast<double>(work->list(u).size()); };
  std::vector<double> weight(edges.size());
  std::vector<double> log_complement(edges.size());
  // Sums over cross edges meeting L(u), and over edges between each pair.
  std::vector<double> touch(g.n(), 0.0);
  std::vector<double> touch_log(g.n(), 0.0);
  std::map<std::pair<Vertex, Vertex>, std::pair<double, double>> between;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Vertex u1 = work->owner(edges[e].first);
    Vertex u2 = work->owner(edges[e].second);
    if (u1 > u2) std::swap(u1, u2);
    weight[e] = options.k / (list_size(u1) * list_size(u2));
    log_complement[e] = weight[e] < 1.0 ? std::log1p(-weight[e])
                                        : -std::numeric_limits<double>::infinity();
    report.max_weight = std::max(report.max_weight, weight[e]);
    touch[u1] += weight[e];
    touch[u2] += weight[e];
    touch_log[u1] += log_complement[e];
    touch_log[u2] += log_complement[e];
    auto& pair = between[{u1, u2}];
    pair.first += weight[e];
    pair.second += log_complement[e];
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Vertex u1 = work->owner(edges[e].first);
    Vertex u2 = work->owner(edges[e].second);
    if (u1 > u2) std::swap(u1, u2);
    const auto& pair = between[{u1, u2}];
    const double gamma_sum = touch[u1] + touch[u2] - pair.first;
    const double gamma_log = touch_log[u1] + touch_log[u2] - pair.second;
    const double p = 1.0 / (list_size(u1) * list_size(u2));
    const double slack = weight[e] * std::exp(-1.4 * gamma_sum) - p;
    const double glll_slack = weight[e] * std::exp(gamma_log) - p;
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.worst_gamma_sum = gamma_sum;
    }
    report.min_glll_slack = std::min(report.min_glll_slack, glll_slack);
  }
  report.certified = report.min_slack >= 0.0 && report.max_weight < 0.5;
  return report;
}

SolveResult Solve(const Cover& cover, std::uint64_t seed, const SolveOptions& options) {
  TruncatedCover truncated;
  const Cover* work = &cover;
  if (options.ell) {
    truncated = TruncateLists(cover, *options.ell);
    work = &truncated.cover;
  }
  const std::size_t n = work->base().n();
  for (Vertex u = 0; u < n; ++u) {
    if (work->list(u).empty()) Fail(ErrorKind::kInput, "empty list at vertex " + std::to_string(u));
  }
  std::mt19937_64 rng(seed);
  std::vector<ColourNode> choice(n);
  std::vector<char> chosen(work->node_count(), 0);
  const auto edges = work->cross_edges();
  std::set<std::size_t> violated;

  auto draw = [&](Vertex u) {
    const auto list = work->list(u);
    std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
    return list[pick(rng)];
  };
  auto place = [&](Vertex u, ColourNode c) {
    choice[u] = c;
    chosen[c] = 1;
    for (std::size_t e : work->incident_edges(c)) {
      const ColourNode other = edges[e].first == c ? edges[e].second : edges[e].first;
      if (chosen[other]) violated.insert(e);
    }
  };
  auto lift = [&](Vertex u) {
    const ColourNode c = choice[u];
    for (std::size_t e : work->incident_edges(c)) violated.erase(e);
    chosen[c] = 0;
  };

  for (Vertex u = 0; u < n; ++u) place(u, draw(u));
  SolveResult result;
  while (!violated.empty()) {
    if (result.resamples >= options.max_resamples) {
      Fail(ErrorKind::kGiveUp, "no colouring after " + std::to_string(result.resamples) +
                                   " resamples");
    }
    const auto [a, b] = edges[*violated.begin()];
    const Vertex u1 = work->owner(a);
    const Vertex u2 = work->owner(b);
    lift(u1);
    lift(u2);
    place(u1, draw(u1));
    place(u2, draw(u2));
    ++result.resamples;
  }
  if (options.ell) {
    for (ColourNode& c : choice) c = truncated.to_original[c];
  }
  result.choice = std::move(choice);
  return result;
}

DpVerification VerifyDpColouring(const Cover& cover, std::span<const ColourNode> choice) {
  DpVerification out;
  const std::size_t n = cover.base().n();
  if (choice.size() != n) {
    out.ok = false;
    out.message = "selection has " + std::to_string(choice.size()) + " nodes for " +
                  std::to_string(n) + " vertices";
    return out;
  }
  std::vector<char> chosen(cover.node_count(), 0);
  for (Vertex u = 0; u < n; ++u) {
    const ColourNode c = choice[u];
    if (c >= cover.node_count() || cover.owner(c) != u) {
      out.ok = false;
      out.message = "vertex " + std::to_string(u) + " chose a node outside L(u)";
      return out;
    }
    chosen[c] = 1;
  }
  for (const auto& [a, b] : cover.cross_edges()) {
    if (chosen[a] && chosen[b]) {
      out.ok = false;
      out.message = "cross edge " + std::to_string(a) + "-" + std::to_string(b) +
                    " has both ends chosen";
      return out;
    }
  }
  return out;
}

std::vector<Label> ProjectLabels(const Cover& cover, std::span<const ColourNode> choice) {
  if (!cover.has_labels()) Fail(ErrorKind::kState, "cover has no labels");
  std::vector<Label> out;
  out.reserve(choice.size());
  for (ColourNode c : choice) out.push_back(cover.label(c));
  return out;
}

PartialDpState::PartialDpState(const Cover& cover)
    : cover_(&cover), chosen_(cover.base().n()), blocked_(cover.node_count(), 0) {}

void PartialDpState::Choose(Vertex u, ColourNode c) {
  if (u >= chosen_.size()) Fail(ErrorKind::kInput, "vertex out of range");
  if (chosen_[u]) Fail(ErrorKind::kState, "vertex " + std::to_string(u) + " already coloured");
  if (c >= cover_->node_count() || cover_->owner(c) != u) {
    Fail(ErrorKind::kState, NodeName(c) + " is not in L(" + std::to_string(u) + ")");
  }
  if (blocked_[c] > 0) Fail(ErrorKind::kState, NodeName(c) + " is adjacent to the partial colouring");
  chosen_[u] = c;
  ++size_;
  for (ColourNode d : cover_->cross_neighbours(c)) ++blocked_[d];
}

std::vector<ColourNode> PartialDpState::Residual(Vertex u) const {
  std::vector<ColourNode> out;
  for (ColourNode c : cover_->list(u)) {
    if (blocked_[c] == 0) out.push_back(c);
  }
  return out;
}

std::vector<ColourNode> PartialDpState::ResidualFromScratch(Vertex u) const {
  std::vector<ColourNode> out;
  for (ColourNode c : cover_->list(u)) {
    bool hit = false;
    for (const auto& pick : chosen_) {
      if (pick && cover_->owner(*pick) != u && cover_->adjacent(c, *pick)) {
        hit = true;
        break;
      }
    }
    if (!hit) out.push_back(c);
  }
  return out;
}

ResidualCover PartialDpState::MakeResidualCover() const {
  const Graph& g = cover_->base();
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!chosen_[u]) keep.push_back(u);
  }
  InducedSubgraph sub = MakeInducedSubgraph(g, VertexSet::FromUnsorted(keep));
  constexpr ColourNode kDropped = ~ColourNode{0};
  std::vector<ColourNode> remap(cover_->node_count(), kDropped);
  ResidualCover out;
  std::vector<Vertex> owner;
  std::vector<Label> labels;
  for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
    for (ColourNode c : Residual(sub.to_parent[i])) {
      remap[c] = static_cast<ColourNode>(owner.size());
      owner.push_back(i);
      out.to_original.push_back(c);
      if (cover_->has_labels()) labels.push_back(cover_->label(c));
    }
  }
  std::vector<CrossEdge> cross;
  for (const auto& [a, b] : cover_->cross_edges()) {
    if (remap[a] != kDropped && remap[b] != kDropped) cross.emplace_back(remap[a], remap[b]);
  }
  out.to_base = sub.to_parent;
  out.cover = Cover::Make(std::move(sub.graph), std::move(owner), std::move(cross),
                          std::move(labels));
  return out;
}

TwoPhaseResult TwoPhaseColour(const Cover& cover, std::span<const int> ell,
                              const TwoPhaseOptions& options) {
  CheckEll(cover, ell);
  const Graph& g = cover.base();
  if (!IsTriangleFree(g)) Fail(ErrorKind::kHypothesis, "two-phase colouring needs a triangle-free graph");
  TwoPhaseResult result;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), Vertex{0});

  for (int round = 0; round < options.rounds; ++round) {
    result.rounds_used = round + 1;
    PartialDpState state(cover);
    std::shuffle(order.begin(), order.end(), rng);
    for (Vertex u : order) {
      if (unit(rng) >= options.activation) continue;
      const auto residual = state.Residual(u);
      if (residual.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, residual.size() - 1);
      state.Choose(u, residual[pick(rng)]);
    }
    const ResidualCover rc = state.MakeResidualCover();
    std::vector<int> ell_r(rc.to_base.size());
    result.min_list_surplus = 0;
    result.max_star_degree = 0;
    for (Vertex i = 0; i < rc.to_base.size(); ++i) {
      ell_r[i] = ell[rc.to_base[i]];
      const auto surplus = static_cast<std::ptrdiff_t>(rc.cover.list(i).size()) - ell_r[i];
      result.min_list_surplus = i == 0 ? surplus : std::min(result.min_list_surplus, surplus);
    }
    for (ColourNode c = 0; c < rc.cover.node_count(); ++c) {
      result.max_star_degree = std::max(result.max_star_degree, rc.cover.cross_neighbours(c).size());
    }
    result.phase1_coloured = state.size();
    const HypothesisReport hyp = FinishingBlowHypothesis(rc.cover, ell_r);
    if (!hyp.pass) {
      result.report = hyp.witnesses.empty() ? "hypothesis failed" : hyp.witnesses.front();
      continue;
    }
    SolveResult solved;
    try {
      solved = Solve(rc.cover, DeriveSeed(options.seed, round),
                     {.max_resamples = options.max_resamples, .ell = ell_r});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kGiveUp) throw;
      result.report = e.what();
      continue;
    }
    std::vector<ColourNode> choice(g.n());
    for (Vertex u = 0; u < g.n(); ++u) {
      if (state.chosen()[u]) choice[u] = *state.chosen()[u];
    }
    for (Vertex i = 0; i < rc.to_base.size(); ++i) {
      choice[rc.to_base[i]] = rc.to_original[solved.choice[i]];
    }
    const DpVerification check = VerifyDpColouring(cover, choice);
    if (!check.ok) Fail(ErrorKind::kInternal, "two-phase output failed verification: " + check.message);
    result.success = true;
    result.certified = true;
    result.choice = std::move(choice);
    result.report = "phase 2 certified by the finishing-blow hypothesis";
    return result;
  }

  if (options.fallback) {
    try {
      SolveResult solved = Solve(cover, DeriveSeed(options.seed, options.rounds),
                                 {.max_resamples = options.max_resamples, .ell = std::nullopt});
      const DpVerification check = VerifyDpColouring(cover, solved.choice);
      if (!check.ok) Fail(ErrorKind::kInternal, "fallback output failed verification: " + check.message);
      result.success = true;
      result.used_fallback = true;
      result.choice = std::move(solved.choice);
      result.report = "uncertified: found by direct resampling on the full cover";
      return result;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kGiveUp) throw;
      result.report += "; fallback: " + std::string(e.what());
    }
  }
  return result;
}

Cover RandomCover(const RandomCoverSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> base_edges;
  for (Vertex u = 0; u < spec.vertices; ++u) {
    for (Vertex v = u + 1; v < spec.vertices; ++v) {
      if (unit(rng) < spec.edge_probability) base_edges.emplace_back(u, v);
    }
  }
  Graph base = Graph::FromEdges(spec.vertices, base_edges);
  const std::size_t size = spec.list_size;
  std::vector<Vertex> owner(spec.vertices * size);
  for (std::size_t x = 0; x < owner.size(); ++x) owner[x] = static_cast<Vertex>(x / size);
  std::vector<std::size_t> degree(owner.size(), 0);
  std::vector<CrossEdge> cross;
  std::vector<std::size_t> pu(size);
  std::vector<std::size_t> pv(size);
  for (const auto& [u, v] : base_edges) {
    std::iota(pu.begin(), pu.end(), 0);
    std::iota(pv.begin(), pv.end(), 0);
    std::shuffle(pu.begin(), pu.end(), rng);
    std::shuffle(pv.begin(), pv.end(), rng);
    for (std::size_t t = 0; t < size; ++t) {
      const auto a = static_cast<ColourNode>(u * size + pu[t]);
      const auto b = static_cast<ColourNode>(v * size + pv[t]);
      if (degree[a] < spec.max_star_degree && degree[b] < spec.max_star_degree) {
        cross.emplace_back(a, b);
        ++degree[a];
        ++degree[b];
      }
    }
  }
  return Cover::Make(std::move(base), std::move(owner), std::move(cross));
}

std::vector<std::vector<Label>> RandomListAssignment(const Graph& g, std::size_t list_size,
                                                     std::size_t palette,
                                                     std::size_t max_shared,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = g.n();
  // shared[u][c]: neighbours of u whose list already holds c.
  std::vector<std::vector<std::uint32_t>> shared(n, std::vector<std::uint32_t>(palette, 0));
  std::vector<std::vector<char>> has(n, std::vector<char>(palette, 0));
  std::vector<std::vector<Label>> lists(n);
  std::vector<Label> eligible;
  for (Vertex u = 0; u < n; ++u) {
    eligible.clear();
    for (std::size_t c = 0; c < palette; ++c) {
      if (shared[u][c] > max_shared) continue;
      bool ok = true;
      for (Vertex v : g.neighbours(u)) {
        if (has[v][c] && shared[v][c] + 1 > max_shared) {
          ok = false;
          break;
        }
      }
      if (ok) eligible.push_back(static_cast<Label>(c));
    }
    if (eligible.size() < list_size) {
      Fail(ErrorKind::kInput, "palette of " + std::to_string(palette) +
                                  " labels too small at vertex " + std::to_string(u));
    }
    std::shuffle(eligible.begin(), eligible.end(), rng);
    eligible.resize(list_size);
    std::sort(eligible.begin(), eligible.end());
    for (Label c : eligible) {
      has[u][c] = 1;
      for (Vertex v : g.neighbours(u)) ++shared[v][c];
    }
    lists[u] = eligible;
  }
  return lists;
}

}  // namespace hccolour
