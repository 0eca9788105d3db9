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

#include "hccolour/fractional.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hccolour/error.h"
#include "hccolour/numerics.h"

namespace hccolour {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxReportedFailures = 64;

std::string VertexName(Vertex v) { return "vertex " + std::to_string(v); }

void AddFailure(ColouringReport& report, std::string message) {
  report.ok = false;
  if (report.failures.size() < kMaxReportedFailures) {
    report.failures.push_back(std::move(message));
  }
}

}  // namespace

std::vector<WeightedSet> HardCoreOracle::Distribution(const InducedSubgraph& h) const {
  std::vector<WeightedSet> out;
  for (const auto& [mask, p] : HardCoreDistribution(h.graph, lambda_, cutoff_)) {
    out.push_back({VertexSet::FromMask(mask), p});
  }
  return out;
}

UniformSetsOracle::UniformSetsOracle(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
  if (sets_.empty()) Fail(ErrorKind::kInput, "UniformSetsOracle needs at least one set");
}

std::vector<WeightedSet> UniformSetsOracle::Distribution(const InducedSubgraph& h) const {
  Vertex max_parent = 0;
  for (Vertex p : h.to_parent) max_parent = std::max(max_parent, p);
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(h.to_parent.empty() ? 0 : max_parent + 1, kAbsent);
  for (Vertex i = 0; i < h.to_parent.size(); ++i) local[h.to_parent[i]] = i;
  const double p = 1.0 / static_cast<double>(sets_.size());
  std::vector<WeightedSet> out;
  out.reserve(sets_.size());
  for (const VertexSet& s : sets_) {
    std::vector<Vertex> members;
    for (Vertex v : s) {
      if (v < local.size() && local[v] != kAbsent) members.push_back(local[v]);
    }
    out.push_back({VertexSet::FromUnsorted(std::move(members)), p});
  }
  return out;
}

OccupancyStats StatsOfDistribution(const Graph& h, const std::vector<WeightedSet>& dist,
                                   int max_distance) {
  std::vector<CompensatedSum> occ(h.n());
  CompensatedSum mass;
  for (const WeightedSet& ws : dist) {
    if (!(ws.probability >= 0.0)) {
      Fail(ErrorKind::kHypothesis, "oracle returned a negative probability");
    }
    for (Vertex v : ws.set) {
      if (v >= h.n()) Fail(ErrorKind::kHypothesis, "oracle set has an out-of-range vertex");
    }
    if (!h.is_independent(ws.set.members())) {
      Fail(ErrorKind::kHypothesis, "oracle returned a set that is not independent");
    }
    mass.Add(ws.probability);
    for (Vertex v : ws.set) occ[v].Add(ws.probability);
  }
  if (std::abs(mass.value() - 1.0) > 1e-9) {
    Fail(ErrorKind::kHypothesis, "oracle probabilities sum to " + std::to_string(mass.value()));
  }
  OccupancyStats stats;
  stats.lambda = std::numeric_limits<double>::quiet_NaN();
  stats.occupancy.resize(h.n());
  for (Vertex v = 0; v < h.n(); ++v) stats.occupancy[v] = occ[v].value();
  FillNeighbourOccupancy(h, std::max(max_distance, 1), stats);
  return stats;
}

LocalWeights LocalWeights::Make(const Graph& g, std::vector<std::vector<double>> alpha) {
  if (alpha.size() != g.n()) Fail(ErrorKind::kInput, "one weight list per vertex required");
  LocalWeights w;
  w.r = alpha.empty() ? 0 : static_cast<int>(alpha.front().size()) - 1;
  if (w.r < 0) Fail(ErrorKind::kInput, "weight lists must be non-empty");
  w.gamma.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (static_cast<int>(alpha[v].size()) != w.r + 1) {
      Fail(ErrorKind::kInput, "all weight lists must have length r + 1");
    }
    const std::vector<int> dist = Distances(g, v);
    std::vector<std::size_t> layer(w.r + 1, 0);
    for (int d : dist) {
      if (d >= 0 && d <= w.r) ++layer[d];
    }
    CompensatedSum gamma;
    for (int j = 0; j <= w.r; ++j) gamma.Add(alpha[v][j] * static_cast<double>(layer[j]));
    w.gamma[v] = gamma.value();
  }
  w.alpha = std::move(alpha);
  return w;
}

double FractionalColouring::SetMeasure(const VertexSet& set) const {
  auto it = parts_.find(set);
  if (it == parts_.end()) return 0.0;
  CompensatedSum sum;
  for (const Interval& iv : it->second) sum.Add(iv.length());
  return sum.value();
}

std::vector<Interval> FractionalColouring::VertexIntervals(Vertex v) const {
  std::vector<Interval> out;
  for (const auto& [set, intervals] : parts_) {
    if (set.contains(v)) out.insert(out.end(), intervals.begin(), intervals.end());
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  return out;
}

double FractionalColouring::VertexMeasure(Vertex v) const {
  CompensatedSum sum;
  for (const Interval& iv : VertexIntervals(v)) sum.Add(iv.length());
  return sum.value();
}

void FractionalColouring::AddBlock(const VertexSet& set, Interval block) {
  parts_[set].push_back(block);
}

GreedyResult GreedyFractionalColouring(const Graph& g, const LocalWeights& weights,
                                       const DistributionOracle& oracle) {
  const std::size_t n = g.n();
  if (weights.alpha.size() != n || weights.gamma.size() != n) {
    Fail(ErrorKind::kInput, "weights do not match the graph");
  }
  const int r = weights.r;
  GreedyResult result;
  result.vertex_weight.assign(n, 0.0);
  std::vector<double>& w = result.vertex_weight;
  CompensatedSum total;

  std::vector<Vertex> live(n);
  for (Vertex v = 0; v < n; ++v) live[v] = v;

  while (!live.empty()) {
    if (result.iterations.size() >= n) {
      Fail(ErrorKind::kInternal, "greedy colouring exceeded |V(G)| rounds");
    }
    const std::size_t round = result.iterations.size();
    const InducedSubgraph h = MakeInducedSubgraph(g, VertexSet::FromUnsorted(live));
    const std::vector<WeightedSet> dist = oracle.Distribution(h);
    const OccupancyStats stats = StatsOfDistribution(h.graph, dist, std::max(r, 1));

    for (Vertex i = 0; i < h.graph.n(); ++i) {
      const Vertex v = h.to_parent[i];
      CompensatedSum lhs;
      for (int j = 0; j <= r; ++j) lhs.Add(weights.alpha[v][j] * stats.NeighbourOccupancy(i, j));
      if (lhs.value() < 1.0 - kSaturationTolerance) {
        Fail(ErrorKind::kHypothesis,
             "oracle hypothesis fails at " + VertexName(v) + " in round " +
                 std::to_string(round) + ": sum_j alpha_j E|N^j ∩ I| = " +
                 std::to_string(lhs.value()) + " < 1");
      }
    }

    const double used = total.value();
    double tau_list = kInf;
    double tau_gamma = kInf;
    Vertex gamma_vertex = 0;
    for (Vertex i = 0; i < h.graph.n(); ++i) {
      const Vertex v = h.to_parent[i];
      const double occ = stats.occupancy[i];
      if (occ > 0.0) tau_list = std::min(tau_list, (1.0 - w[v]) / occ);
      const double room = weights.gamma[v] - used;
      if (room < tau_gamma) {
        tau_gamma = room;
        gamma_vertex = v;
      }
    }
    GreedyIteration it;
    it.live_vertices = live.size();
    it.tau = std::min(tau_list, tau_gamma);
    it.gamma_limited = tau_gamma <= tau_list;
    if (!(it.tau > 0.0) || !std::isfinite(it.tau)) {
      Fail(ErrorKind::kInternal, "greedy colouring computed step " + std::to_string(it.tau) +
                                     " in round " + std::to_string(round));
    }

    // Blocks in canonical order over [used, used + tau).
    std::map<VertexSet, double, CanonicalSetOrder> mass;
    for (const WeightedSet& ws : dist) {
      if (ws.probability <= 0.0) continue;
      std::vector<Vertex> members;
      members.reserve(ws.set.size());
      for (Vertex i : ws.set) members.push_back(h.to_parent[i]);
      mass[VertexSet::FromUnsorted(std::move(members))] += ws.probability;
    }
    CompensatedSum cumulative;
    double lo = used;
    std::size_t remaining = mass.size();
    for (const auto& [set, p] : mass) {
      cumulative.Add(p);
      const double hi = --remaining == 0 ? used + it.tau : used + it.tau * cumulative.value();
      if (hi > lo) result.colouring.AddBlock(set, {lo, hi});
      lo = std::max(lo, hi);
    }

    for (Vertex i = 0; i < h.graph.n(); ++i) w[h.to_parent[i]] += stats.occupancy[i] * it.tau;
    total.Add(it.tau);
    it.total_after = total.value();

    if (it.gamma_limited && r == 1) {
      const Vertex v = gamma_vertex;
      CompensatedSum middle;
      middle.Add(weights.alpha[v][0] * w[v]);
      for (Vertex u : g.neighbours(v)) middle.Add(weights.alpha[v][1] * w[u]);
      const double gap = std::max(std::abs(weights.gamma[v] - middle.value()),
                                  std::abs(middle.value() - it.total_after));
      result.max_chain_gap = std::max(result.max_chain_gap, gap);
    }

    std::vector<Vertex> next;
    for (Vertex v : live) {
      if (w[v] > 1.0 + 1e-12) {
        Fail(ErrorKind::kInternal, VertexName(v) + " received measure " + std::to_string(w[v]));
      }
      if (w[v] < 1.0 - kSaturationTolerance) next.push_back(v);
    }
    it.saturated = live.size() - next.size();
    live.swap(next);
    result.iterations.push_back(it);
  }
  result.colouring.set_total(total.value());
  return result;
}

double AlphaOnUnitCurve(Fugacity lambda, double beta) {
  const double lam = lambda.value();
  const double log1p_lam = std::log1p(lam);
  return beta * std::exp(log1p_lam * (1.0 + lam) / (beta * lam)) /
         (std::numbers::e * log1p_lam);
}

double OptimalColourBound(Fugacity lambda, std::size_t degree) {
  const double lam = lambda.value();
  return (1.0 + lam) / lam *
         std::exp(LambertW(static_cast<double>(degree) * std::log1p(lam)));
}

WeightChoice ChooseLocalWeights(const Graph& g, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 4.0)) {
    Fail(ErrorKind::kInput, "epsilon must lie in (0, 4], got " + std::to_string(epsilon));
  }
  const Fugacity lambda(epsilon / 2.0);
  const double lam = lambda.value();
  const double log1p_lam = std::log1p(lam);
  std::vector<double> alpha(g.n());
  std::vector<double> beta(g.n());
  std::vector<std::vector<double>> coefficients(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    // Isolated vertices use the degree-1 optimum: it keeps the unit-curve
    // condition and gives alpha_v lambda/(1+lambda) = e^W/(1+W) >= 1.
    const std::size_t d = std::max<std::size_t>(g.degree(v), 1);
    const double wd = LambertW(static_cast<double>(d) * log1p_lam);
    beta[v] = (1.0 + lam) / lam * log1p_lam / (1.0 + wd);
    alpha[v] = AlphaOnUnitCurve(lambda, beta[v]);
    coefficients[v] = {alpha[v], beta[v]};
  }
  return WeightChoice{lambda, LocalWeights::Make(g, std::move(coefficients)), std::move(alpha),
                      std::move(beta)};
}

ColouringReport ValidateColouring(const Graph& g, const FractionalColouring& col,
                                  const std::vector<double>& bound, double tol) {
  ColouringReport report;
  const std::size_t n = g.n();
  if (bound.size() != n) AddFailure(report, "bound has wrong length");
  const double total = col.total();
  const double eps = 1e-9 * std::max(1.0, std::abs(total));

  struct Piece {
    Interval iv;
    const VertexSet* set;
  };
  std::vector<Piece> pieces;
  for (const auto& [set, intervals] : col.parts()) {
    bool in_range = true;
    for (Vertex v : set) in_range = in_range && v < n;
    if (!in_range) {
      AddFailure(report, "set with out-of-range vertex");
      continue;
    }
    if (!g.is_independent(set.members())) {
      AddFailure(report, "keyed set is not independent");
    }
    for (const Interval& iv : intervals) {
      if (!(iv.hi >= iv.lo)) AddFailure(report, "interval with hi < lo");
      if (iv.hi > iv.lo) pieces.push_back({iv, &set});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.iv.lo < b.iv.lo; });
  double cursor = 0.0;
  for (const Piece& p : pieces) {
    if (p.iv.lo < cursor - eps) {
      AddFailure(report, "blocks overlap near " + std::to_string(p.iv.lo));
    } else if (p.iv.lo > cursor + eps) {
      AddFailure(report, "gap in [0, total) at " + std::to_string(cursor));
    }
    cursor = std::max(cursor, p.iv.hi);
  }
  if (std::abs(cursor - total) > eps) {
    AddFailure(report, "blocks end at " + std::to_string(cursor) + ", total is " +
                           std::to_string(total));
  }

  std::vector<std::vector<Interval>> per_vertex(n);
  for (Vertex v = 0; v < n; ++v) per_vertex[v] = col.VertexIntervals(v);

  report.slack.assign(n, kInf);
  report.min_slack = kInf;
  for (Vertex v = 0; v < n; ++v) {
    CompensatedSum measure;
    double sup = -kInf;
    double inf = kInf;
    for (const Interval& iv : per_vertex[v]) {
      measure.Add(iv.length());
      sup = std::max(sup, iv.hi);
      inf = std::min(inf, iv.lo);
    }
    if (measure.value() < 1.0 - kSaturationTolerance) {
      AddFailure(report, VertexName(v) + " has measure " + std::to_string(measure.value()));
    }
    if (per_vertex[v].empty() || bound.size() != n) continue;
    report.slack[v] = bound[v] - sup;
    report.min_slack = std::min(report.min_slack, report.slack[v]);
    if (inf < -eps || sup > bound[v] + tol) {
      AddFailure(report, VertexName(v) + " coloured up to " + std::to_string(sup) +
                             ", bound " + std::to_string(bound[v]));
    }
  }

  for (const auto& [u, v] : g.edges()) {
    const auto& a = per_vertex[u];
    const auto& b = per_vertex[v];
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      if (std::max(a[i].lo, b[j].lo) < std::min(a[i].hi, b[j].hi) - eps) {
        AddFailure(report, "adjacent vertices " + std::to_string(u) + " and " +
                               std::to_string(v) + " share colour");
        break;
      }
      if (a[i].hi < b[j].hi) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return report;
}

VertexSet ExtractIndependentSet(const Graph& g, const FractionalColouring& col) {
  const std::size_t n = g.n();
  struct Event {
    double at;
    int delta;
    Vertex v;
  };
  std::vector<Event> events;
  for (Vertex v = 0; v < n; ++v) {
    const auto intervals = col.VertexIntervals(v);
    CompensatedSum measure;
    for (const Interval& iv : intervals) measure.Add(iv.length());
    if (measure.value() < 1.0 - kSaturationTolerance) {
      Fail(ErrorKind::kState, "colouring incomplete at " + VertexName(v));
    }
    for (const Interval& iv : intervals) {
      if (iv.hi <= iv.lo) continue;
      events.push_back({iv.lo, +1, v});
      events.push_back({iv.hi, -1, v});
    }
  }
  // Closings sort before openings at the same point: intervals are half-open.
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.at < b.at || (a.at == b.at && a.delta < b.delta);
  });
  std::vector<int> depth(n, 0);
  std::size_t active = 0;
  std::size_t best_size = 0;
  double best_point = 0.0;
  for (std::size_t k = 0; k < events.size();) {
    const double at = events[k].at;
    for (; k < events.size() && events[k].at == at; ++k) {
      const Event& e = events[k];
      if (e.delta > 0 && depth[e.v]++ == 0) ++active;
      if (e.delta < 0 && --depth[e.v] == 0) --active;
    }
    // Elementary interval [at, next event).
    if (k < events.size() && active > best_size) {
      best_size = active;
      best_point = 0.5 * (at + events[k].at);
    }
  }
  std::vector<Vertex> members;
  if (best_size > 0) {
    for (Vertex v = 0; v < n; ++v) {
      for (const Interval& iv : col.VertexIntervals(v)) {
        if (iv.lo <= best_point && best_point < iv.hi) {
          members.push_back(v);
          break;
        }
      }
    }
  }
  return VertexSet::FromUnsorted(std::move(members));
}

}  // namespace hccolour
