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

#include "hccolour/hardcore.h"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "hccolour/error.h"
#include "hccolour/numerics.h"
#include "hccolour/rng.h"

namespace hccolour {
namespace {

using Mask = std::uint64_t;

constexpr Mask Bit(std::size_t v) { return Mask{1} << v; }

void RequireExactSize(const Graph& g, std::size_t cutoff) {
  const std::size_t limit = std::min<std::size_t>(cutoff, 64);
  if (g.n() > limit) {
    Fail(ErrorKind::kSize, "graph has " + std::to_string(g.n()) +
                               " vertices, above the exact-mode cutoff of " +
                               std::to_string(limit) +
                               "; use the Glauber sampler instead");
  }
}

Mask FullMask(std::size_t n) { return n == 64 ? ~Mask{0} : Bit(n) - 1; }

// Branching vertex: maximum degree inside `remaining`, lowest id on ties.
// Returns -1 when the remainder has no edges.
int BranchVertex(const std::vector<Mask>& adj, Mask remaining) {
  int best = -1;
  int best_degree = 0;
  for (Mask m = remaining; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const int d = std::popcount(adj[v] & remaining);
    if (d > best_degree) {
      best = v;
      best_degree = d;
    }
  }
  return best;
}

// Every independent set is S ∪ T for exactly one leaf (S, R) and one T ⊆ R.
template <typename Leaf>
void Branch(const std::vector<Mask>& adj, Mask chosen, Mask remaining, Leaf& leaf) {
  const int v = BranchVertex(adj, remaining);
  if (v < 0) {
    leaf(chosen, remaining);
    return;
  }
  Branch(adj, chosen, remaining & ~Bit(v), leaf);
  Branch(adj, chosen | Bit(v), remaining & ~Bit(v) & ~adj[v], leaf);
}

struct Task {
  Mask chosen;
  Mask remaining;
};

// Tasks in the same depth-first order the serial recursion visits them.
void SplitTasks(const std::vector<Mask>& adj, Mask chosen, Mask remaining,
                int depth, std::vector<Task>& tasks) {
  const int v = depth > 0 ? BranchVertex(adj, remaining) : -1;
  if (v < 0) {
    tasks.push_back({chosen, remaining});
    return;
  }
  SplitTasks(adj, chosen, remaining & ~Bit(v), depth - 1, tasks);
  SplitTasks(adj, chosen | Bit(v), remaining & ~Bit(v) & ~adj[v], depth - 1, tasks);
}

// Weights are scaled by (1+lambda)^-n so every leaf contribution is <= 1.
struct WeightTables {
  std::vector<double> chosen_weight;     // lambda^s (1+lambda)^-n
  std::vector<double> remainder_weight;  // (1+lambda)^r
  double occupied_fraction;              // lambda / (1+lambda)
  double log_scale;                      // n log(1+lambda)

  WeightTables(std::size_t n, double lambda) {
    const double log_lambda = std::log(lambda);
    const double log_one_plus = std::log1p(lambda);
    chosen_weight.resize(n + 1);
    remainder_weight.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      chosen_weight[k] = std::exp(static_cast<double>(k) * log_lambda -
                                  static_cast<double>(n) * log_one_plus);
      remainder_weight[k] = std::exp(static_cast<double>(k) * log_one_plus);
    }
    occupied_fraction = lambda / (1.0 + lambda);
    log_scale = static_cast<double>(n) * log_one_plus;
  }
};

struct Accumulator {
  CompensatedSum partition;
  std::vector<CompensatedSum> occupied;

  explicit Accumulator(std::size_t n) : occupied(n) {}

  void AddLeaf(const WeightTables& tables, Mask chosen, Mask remaining) {
    const double w = tables.chosen_weight[std::popcount(chosen)] *
                     tables.remainder_weight[std::popcount(remaining)];
    partition.Add(w);
    for (Mask m = chosen; m; m &= m - 1) occupied[std::countr_zero(m)].Add(w);
    const double wr = w * tables.occupied_fraction;
    for (Mask m = remaining; m; m &= m - 1) occupied[std::countr_zero(m)].Add(wr);
  }

  void Merge(const Accumulator& other) {
    partition.Merge(other.partition);
    for (std::size_t v = 0; v < occupied.size(); ++v) occupied[v].Merge(other.occupied[v]);
  }
};

OccupancyStats Finish(const Graph& g, double lambda, int max_distance,
                      const WeightTables& tables, const Accumulator& acc) {
  OccupancyStats stats;
  stats.lambda = lambda;
  const double z = acc.partition.value();
  stats.log_partition = std::log(z) + tables.log_scale;
  stats.occupancy.resize(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) stats.occupancy[v] = acc.occupied[v].value() / z;
  FillNeighbourOccupancy(g, max_distance, stats);
  return stats;
}

void CheckDistance(int max_distance) {
  if (max_distance < 1) Fail(ErrorKind::kInput, "max_distance must be >= 1");
}

}  // namespace

Fugacity::Fugacity(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    Fail(ErrorKind::kInput, "fugacity must be finite and > 0, got " +
                                std::to_string(lambda));
  }
}

double OccupancyStats::NeighbourOccupancy(Vertex v, int j) const {
  if (j == 0) return occupancy.at(v);
  if (j < 0 || j > max_distance()) {
    Fail(ErrorKind::kInput, "distance " + std::to_string(j) + " not computed");
  }
  return neighbour_occupancy[j - 1].at(v);
}

void FillNeighbourOccupancy(const Graph& g, int max_distance, OccupancyStats& stats) {
  stats.neighbour_occupancy.assign(max_distance, std::vector<double>(g.n(), 0.0));
  if (max_distance == 1) {
    for (Vertex v = 0; v < g.n(); ++v) {
      CompensatedSum sum;
      for (Vertex u : g.neighbours(v)) sum.Add(stats.occupancy[u]);
      stats.neighbour_occupancy[0][v] = sum.value();
    }
    return;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    const std::vector<int> dist = Distances(g, v);
    std::vector<CompensatedSum> sums(max_distance);
    for (Vertex u = 0; u < g.n(); ++u) {
      if (dist[u] >= 1 && dist[u] <= max_distance) sums[dist[u] - 1].Add(stats.occupancy[u]);
    }
    for (int j = 0; j < max_distance; ++j) stats.neighbour_occupancy[j][v] = sums[j].value();
  }
}

OccupancyStats EnumerateStats(const Graph& g, Fugacity lambda, int max_distance,
                              const ExactOptions& options) {
  CheckDistance(max_distance);
  RequireExactSize(g, options.cutoff);
  const std::size_t n = g.n();
  const auto adj = AdjacencyMasks(g);
  const WeightTables tables(n, lambda.value());

  std::vector<Task> tasks;
  SplitTasks(adj, 0, FullMask(n), options.split_depth, tasks);
  std::vector<Accumulator> partial(tasks.size(), Accumulator(n));
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  const auto task_count = static_cast<std::ptrdiff_t>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t t = 0; t < task_count; ++t) {
    Accumulator& acc = partial[t];
    auto leaf = [&](Mask chosen, Mask remaining) { acc.AddLeaf(tables, chosen, remaining); };
    Branch(adj, tasks[t].chosen, tasks[t].remaining, leaf);
  }

  Accumulator total(n);
  for (const Accumulator& acc : partial) total.Merge(acc);
  return Finish(g, lambda.value(), max_distance, tables, total);
}

OccupancyStats EnumerateStatsSerial(const Graph& g, Fugacity lambda, int max_distance,
                                    std::size_t cutoff) {
  CheckDistance(max_distance);
  RequireExactSize(g, cutoff);
  const std::size_t n = g.n();
  const auto adj = AdjacencyMasks(g);
  const WeightTables tables(n, lambda.value());
  Accumulator acc(n);
  auto leaf = [&](Mask chosen, Mask remaining) { acc.AddLeaf(tables, chosen, remaining); };
  Branch(adj, 0, FullMask(n), leaf);
  return Finish(g, lambda.value(), max_distance, tables, acc);
}

void ForEachIndependentSet(const Graph& g, const std::function<void(std::uint64_t)>& visit,
                           std::size_t cutoff) {
  RequireExactSize(g, cutoff);
  const auto adj = AdjacencyMasks(g);
  auto leaf = [&](Mask chosen, Mask remaining) {
    // All submasks of the edgeless remainder, including the empty one.
    Mask sub = remaining;
    while (true) {
      visit(chosen | sub);
      if (sub == 0) break;
      sub = (sub - 1) & remaining;
    }
  };
  Branch(adj, 0, FullMask(g.n()), leaf);
}

std::vector<std::pair<std::uint64_t, double>> HardCoreDistribution(const Graph& g,
                                                                   Fugacity lambda,
                                                                   std::size_t cutoff) {
  const WeightTables tables(g.n(), lambda.value());
  std::vector<std::pair<std::uint64_t, double>> out;
  CompensatedSum z;
  ForEachIndependentSet(
      g,
      [&](std::uint64_t set) {
        const double w = tables.chosen_weight[std::popcount(set)];
        out.emplace_back(set, w);
        z.Add(w);
      },
      cutoff);
  const double total = z.value();
  for (auto& entry : out) entry.second /= total;
  return out;
}

VertexSet GlauberSample(const Graph& g, Fugacity lambda, std::size_t steps,
                        std::uint64_t seed, bool check_each_step) {
  if (steps < 1) Fail(ErrorKind::kInput, "Glauber: steps must be >= 1");
  const std::size_t n = g.n();
  if (n == 0) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p_occupy = lambda.value() / (1.0 + lambda.value());
  std::vector<char> occupied(n, 0);
  // occupied_neighbours[v] = |N(v) ∩ I|
  std::vector<std::uint32_t> occupied_neighbours(n, 0);
  for (std::size_t step = 0; step < steps; ++step) {
    const auto v = static_cast<Vertex>(pick(rng));
    const bool occupy = occupied_neighbours[v] == 0 && unit(rng) < p_occupy;
    if (occupy != static_cast<bool>(occupied[v])) {
      occupied[v] = occupy;
      for (Vertex u : g.neighbours(v)) {
        if (occupy) {
          ++occupied_neighbours[u];
        } else {
          --occupied_neighbours[u];
        }
      }
    }
    if (check_each_step) {
      for (Vertex u = 0; u < n; ++u) {
        if (!occupied[u]) continue;
        for (Vertex w : g.neighbours(u)) {
          if (occupied[w]) Fail(ErrorKind::kInternal, "Glauber state left the independent sets");
        }
      }
    }
  }
  std::vector<Vertex> members;
  for (Vertex u = 0; u < n; ++u) {
    if (occupied[u]) members.push_back(u);
  }
  return VertexSet::FromUnsorted(std::move(members));
}

GlauberEstimate EstimateOccupancyByGlauber(const Graph& g, Fugacity lambda,
                                           std::size_t chains, std::size_t steps,
                                           std::uint64_t seed, int threads) {
  if (chains < 1) Fail(ErrorKind::kInput, "Glauber: chains must be >= 1");
  const std::size_t n = g.n();
  std::vector<VertexSet> samples(chains);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(chains);
#pragma omp parallel for schedule(static) num_threads(nthreads)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    samples[c] = GlauberSample(g, lambda, steps, DeriveSeed(seed, c));
  }
  std::vector<std::size_t> hits(n, 0);
  for (const VertexSet& s : samples) {
    for (Vertex v : s) ++hits[v];
  }
  GlauberEstimate est;
  est.chains = chains;
  est.occupancy.resize(n);
  est.std_error.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double p = static_cast<double>(hits[v]) / static_cast<double>(chains);
    est.occupancy[v] = p;
    est.std_error[v] = std::sqrt(p * (1.0 - p) / static_cast<double>(chains));
  }
  return est;
}

FactCheckReport ConditionalFactCheck(const Graph& g, Fugacity lambda, std::size_t cutoff) {
  if (!IsTriangleFree(g)) {
    Fail(ErrorKind::kHypothesis, "conditional facts require a triangle-free graph");
  }
  RequireExactSize(g, cutoff);
  const std::size_t n = g.n();
  const auto adj = AdjacencyMasks(g);
  const WeightTables tables(n, lambda.value());

  std::vector<CompensatedSum> occupied(n);
  std::vector<CompensatedSum> uncovered(n);
  std::vector<CompensatedSum> expected_z(n);
  std::vector<CompensatedSum> expected_nbr(n);
  // [v][j]: Pr(Z_v = j) and Pr(Z_v = j, v uncovered), unnormalised.
  std::vector<std::vector<CompensatedSum>> z_count(n);
  std::vector<std::vector<CompensatedSum>> z_uncovered(n);
  for (std::size_t v = 0; v < n; ++v) {
    z_count[v].resize(g.degree(v) + 1);
    z_uncovered[v].resize(g.degree(v) + 1);
  }
  CompensatedSum partition;

  ForEachIndependentSet(
      g,
      [&](Mask set) {
        const double w = tables.chosen_weight[std::popcount(set)];
        partition.Add(w);
        Mask covered = 0;
        for (Mask m = set; m; m &= m - 1) covered |= adj[std::countr_zero(m)];
        const Mask open = ~covered;
        for (std::size_t v = 0; v < n; ++v) {
          const bool is_uncovered = (covered & Bit(v)) == 0;
          const int z = std::popcount(adj[v] & open);
          if (set & Bit(v)) occupied[v].Add(w);
          if (is_uncovered) {
            uncovered[v].Add(w);
            z_uncovered[v][z].Add(w);
          }
          z_count[v][z].Add(w);
          expected_z[v].Add(w * z);
          expected_nbr[v].Add(w * std::popcount(adj[v] & set));
        }
      },
      cutoff);

  FactCheckReport report;
  const double lam = lambda.value();
  const double p_occupy = lam / (1.0 + lam);
  const double z = partition.value();
  for (std::size_t v = 0; v < n; ++v) {
    // v is uncovered with positive probability (the empty set).
    const double fact1 = occupied[v].value() / uncovered[v].value();
    report.fact1_residual = std::max(report.fact1_residual, std::abs(fact1 - p_occupy));
    for (std::size_t j = 0; j < z_count[v].size(); ++j) {
      const double pj = z_count[v][j].value();
      if (pj <= 0.0) continue;
      const double fact2 = z_uncovered[v][j].value() / pj;
      const double expected = std::pow(1.0 + lam, -static_cast<double>(j));
      report.fact2_residual = std::max(report.fact2_residual, std::abs(fact2 - expected));
    }
    const double lhs = expected_nbr[v].value() / z;
    const double rhs = p_occupy * expected_z[v].value() / z;
    report.neighbour_residual = std::max(report.neighbour_residual, std::abs(lhs - rhs));
  }
  return report;
}

double HcmLowerBound(Fugacity lambda, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    Fail(ErrorKind::kInput, "HcmLowerBound: alpha and beta must be > 0");
  }
  const double lam = lambda.value();
  const double log1p_lam = std::log1p(lam);
  return beta * lam * (std::log(alpha / beta) + std::log(log1p_lam) + 1.0) /
         ((1.0 + lam) * log1p_lam);
}

RationalStats EnumerateStatsRational(const Graph& g, std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) Fail(ErrorKind::kInput, "rational fugacity must be positive");
  if (g.n() > 12) Fail(ErrorKind::kSize, "rational mode is limited to n <= 12");
  const Rational lambda(num, den);
  std::vector<Rational> powers(g.n() + 1);
  powers[0] = 1;
  for (std::size_t k = 1; k <= g.n(); ++k) powers[k] = powers[k - 1] * lambda;
  RationalStats stats;
  stats.partition = 0;
  stats.occupancy.assign(g.n(), Rational(0));
  ForEachIndependentSet(g, [&](Mask set) {
    const Rational& w = powers[std::popcount(set)];
    stats.partition += w;
    for (Mask m = set; m; m &= m - 1) stats.occupancy[std::countr_zero(m)] += w;
  });
  for (auto& occ : stats.occupancy) occ /= stats.partition;
  return stats;
}

}  // namespace hccolour
