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

#ifndef HCCOLOUR_HARDCORE_H_
#define HCCOLOUR_HARDCORE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hccolour/graph.h"

namespace hccolour {

// Exact enumeration is refused above this many vertices.
inline constexpr std::size_t kDefaultExactCutoff = 30;

class Fugacity {
 public:
  // Throws ErrorKind::kInput unless lambda is finite and > 0.
  explicit Fugacity(double lambda);
  double value() const { return lambda_; }

 private:
  double lambda_;
};

// Hard-core statistics. neighbour_occupancy[j - 1][v] = E|N^j(v) ∩ I| for
// j = 1..max_distance.
struct OccupancyStats {
  double lambda = 0.0;
  double log_partition = 0.0;
  std::vector<double> occupancy;
  std::vector<std::vector<double>> neighbour_occupancy;

  int max_distance() const { return static_cast<int>(neighbour_occupancy.size()); }
  // j = 0 gives occupancy(v).
  double NeighbourOccupancy(Vertex v, int j) const;
};

struct ExactOptions {
  std::size_t cutoff = kDefaultExactCutoff;
  // 0 selects the OpenMP default.
  int threads = 0;
  // Depth to which the branch tree is expanded into independent tasks.
  // The reduction runs over tasks in a fixed order, so results do not
  // depend on the thread count.
  int split_depth = 8;
};

// Exact hard-core statistics by branch-and-bound over independent sets,
// branching on a maximum-degree vertex of the remaining graph and closing
// edgeless remainders in closed form. Parallel over branch subtrees.
OccupancyStats EnumerateStats(const Graph& g, Fugacity lambda, int max_distance,
                              const ExactOptions& options = {});

// Single-threaded reference for EnumerateStats: plain recursion, one set of
// accumulators.
OccupancyStats EnumerateStatsSerial(const Graph& g, Fugacity lambda,
                                    int max_distance,
                                    std::size_t cutoff = kDefaultExactCutoff);

// Fills neighbour_occupancy from occupancy (linearity of expectation).
void FillNeighbourOccupancy(const Graph& g, int max_distance, OccupancyStats& stats);

// Calls visit(mask) once per independent set of g, including the empty set.
void ForEachIndependentSet(const Graph& g,
                           const std::function<void(std::uint64_t)>& visit,
                           std::size_t cutoff = kDefaultExactCutoff);

// Pr(I = set) for every independent set, as (mask, probability) pairs.
std::vector<std::pair<std::uint64_t, double>> HardCoreDistribution(
    const Graph& g, Fugacity lambda, std::size_t cutoff = kDefaultExactCutoff);

// Single-site heat-bath dynamics from the empty set. When check_each_step is
// set the state is asserted to stay independent after every update.
VertexSet GlauberSample(const Graph& g, Fugacity lambda, std::size_t steps,
                        std::uint64_t seed, bool check_each_step = false);

struct GlauberEstimate {
  std::vector<double> occupancy;
  std::vector<double> std_error;
  std::size_t chains = 0;
};

// Empirical occupancy from `chains` independent chains of `steps` updates;
// chain i is seeded from (seed, i). Chains run in parallel; the estimate is
// independent of the thread count.
GlauberEstimate EstimateOccupancyByGlauber(const Graph& g, Fugacity lambda,
                                           std::size_t chains, std::size_t steps,
                                           std::uint64_t seed, int threads = 0);

struct FactCheckReport {
  // max_v |Pr(v in I | v uncovered) - lambda/(1+lambda)|
  double fact1_residual = 0.0;
  // max_{v,j} |Pr(v uncovered | j uncovered neighbours) - (1+lambda)^-j|
  double fact2_residual = 0.0;
  // max_v |E|N(v) ∩ I| - lambda/(1+lambda) E Z_v|
  double neighbour_residual = 0.0;
};

// Checks the two conditional facts by exact enumeration. Throws
// ErrorKind::kHypothesis when g has a triangle and ErrorKind::kSize above
// the cutoff.
FactCheckReport ConditionalFactCheck(const Graph& g, Fugacity lambda,
                                     std::size_t cutoff = kDefaultExactCutoff);

// beta lambda (log(alpha/beta) + log log(1+lambda) + 1) /
//   ((1+lambda) log(1+lambda)), a lower bound on
// alpha Pr(v in I) + beta E|N(v) ∩ I| in triangle-free graphs.
double HcmLowerBound(Fugacity lambda, double alpha, double beta);

using Rational = boost::multiprecision::cpp_rational;

struct RationalStats {
  Rational partition;
  std::vector<Rational> occupancy;
};

// Exact rational partition function and occupancies at lambda = num/den.
// Limited to n <= 12; used to validate the floating-point path.
RationalStats EnumerateStatsRational(const Graph& g, std::int64_t num,
                                     std::int64_t den);

}  // namespace hccolour

#endif  // HCCOLOUR_HARDCORE_H_
