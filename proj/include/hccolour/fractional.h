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

#ifndef HCCOLOUR_FRACTIONAL_H_
#define HCCOLOUR_FRACTIONAL_H_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hccolour/graph.h"
#include "hccolour/hardcore.h"

namespace hccolour {

// Canonical order on independent sets used for laying out blocks:
// non-empty sets lexicographically by member list, the empty set last.
struct CanonicalSetOrder {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    if (a.empty() != b.empty()) return b.empty();
    return a < b;
  }
};

struct WeightedSet {
  VertexSet set;
  double probability = 0.0;
};

// A probability distribution on the independent sets of each induced
// subgraph it is asked about. Sets are in the subgraph's local ids.
class DistributionOracle {
 public:
  virtual ~DistributionOracle() = default;
  virtual std::vector<WeightedSet> Distribution(const InducedSubgraph& h) const = 0;
};

// The hard-core model at a fixed fugacity, by exact enumeration.
class HardCoreOracle : public DistributionOracle {
 public:
  explicit HardCoreOracle(Fugacity lambda, std::size_t cutoff = kDefaultExactCutoff)
      : lambda_(lambda), cutoff_(cutoff) {}
  std::vector<WeightedSet> Distribution(const InducedSubgraph& h) const override;

 private:
  Fugacity lambda_;
  std::size_t cutoff_;
};

// Uniform over a fixed list of independent sets of the full graph; on an
// induced subgraph H each set is replaced by its intersection with V(H).
class UniformSetsOracle : public DistributionOracle {
 public:
  explicit UniformSetsOracle(std::vector<VertexSet> sets);
  std::vector<WeightedSet> Distribution(const InducedSubgraph& h) const override;

 private:
  std::vector<VertexSet> sets_;
};

// Caller-supplied table.
class TableOracle : public DistributionOracle {
 public:
  using Table = std::function<std::vector<WeightedSet>(const InducedSubgraph&)>;
  explicit TableOracle(Table table) : table_(std::move(table)) {}
  std::vector<WeightedSet> Distribution(const InducedSubgraph& h) const override {
    return table_(h);
  }

 private:
  Table table_;
};

// Occupancy statistics of an explicit distribution on I(H), up to distance r.
// Throws ErrorKind::kHypothesis if a set is not independent in H or the
// probabilities do not sum to 1 (within 1e-9).
OccupancyStats StatsOfDistribution(const Graph& h, const std::vector<WeightedSet>& dist,
                                   int max_distance);

// Per-vertex coefficients alpha[v][j], j = 0..r, and
// gamma(v) = sum_j alpha[v][j] |N^j_G(v)|.
struct LocalWeights {
  int r = 0;
  std::vector<std::vector<double>> alpha;
  std::vector<double> gamma;

  // Computes gamma from alpha and the graph. Every alpha[v] must have
  // length r + 1.
  static LocalWeights Make(const Graph& g, std::vector<std::vector<double>> alpha);
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class FractionalColouring {
 public:
  using Parts = std::map<VertexSet, std::vector<Interval>, CanonicalSetOrder>;

  FractionalColouring() = default;
  FractionalColouring(Parts parts, double total) : parts_(std::move(parts)), total_(total) {}

  const Parts& parts() const { return parts_; }
  double total() const { return total_; }
  // mu(w(I)) for a keyed set; 0 if absent.
  double SetMeasure(const VertexSet& set) const;
  // w(v) as a sorted interval list.
  std::vector<Interval> VertexIntervals(Vertex v) const;
  // mu(w(v)).
  double VertexMeasure(Vertex v) const;

  void AddBlock(const VertexSet& set, Interval block);
  void set_total(double total) { total_ = total; }

 private:
  Parts parts_;
  double total_ = 0.0;
};

struct GreedyIteration {
  std::size_t live_vertices = 0;
  double tau = 0.0;
  // True when tau came from min_v gamma(v) - w(G) rather than list exhaustion.
  bool gamma_limited = false;
  double total_after = 0.0;
  std::size_t saturated = 0;
};

struct GreedyResult {
  FractionalColouring colouring;
  std::vector<GreedyIteration> iterations;
  // Per-vertex accumulated measure sum_k Pr(v in I_{H_k}) tau_k.
  std::vector<double> vertex_weight;
  // Largest gap in the chain gamma(v) >= sum_j alpha_j sum_{N^j(v)} w(u)
  // >= w(G) evaluated whenever tau is gamma-limited (r = 1 only; the chain
  // is an equality in exact arithmetic).
  double max_chain_gap = 0.0;
};

inline constexpr double kSaturationTolerance = 1e-9;

// The greedy fractional colouring algorithm. Each round asks the oracle for
// a distribution on the live induced subgraph H, takes
//   tau = min( min_v (1 - w(v)) / Pr(v in I_H), min_v gamma(v) - w(G) ),
// lays out blocks of length Pr(I_H = I) tau on [w(G), w(G) + tau) in
// canonical set order, and removes vertices with w(v) >= 1 - 1e-9.
//
// Throws ErrorKind::kHypothesis, naming the vertex, when some live v has
// sum_j alpha_j(v) E|N^j_H(v) ∩ I_H| < 1 - 1e-9, and ErrorKind::kInternal if
// more than |V(G)| rounds are needed.
GreedyResult GreedyFractionalColouring(const Graph& g, const LocalWeights& weights,
                                       const DistributionOracle& oracle);

struct WeightChoice {
  Fugacity lambda;
  LocalWeights weights;
  std::vector<double> alpha;  // alpha_v = weights.alpha[v][0]
  std::vector<double> beta;   // beta_v = weights.alpha[v][1]
};

// lambda = epsilon/2 and, for deg(v) >= 1,
//   beta_v  = ((1+lambda)/lambda) log(1+lambda) / (1 + W(deg(v) log(1+lambda)))
//   alpha_v = beta_v (1+lambda)^((1+lambda)/(beta_v lambda)) / (e log(1+lambda)),
// the minimiser of alpha_v + beta_v deg(v) subject to HcmLowerBound = 1.
// Isolated vertices take the degree-1 pair. Requires epsilon in (0, 4].
WeightChoice ChooseLocalWeights(const Graph& g, double epsilon);

// alpha as a function of beta on the curve HcmLowerBound(lambda, alpha, beta) = 1.
double AlphaOnUnitCurve(Fugacity lambda, double beta);

// ((1+lambda)/lambda) e^{W(d log(1+lambda))}: alpha_v + beta_v d at the optimum.
double OptimalColourBound(Fugacity lambda, std::size_t degree);

struct ColouringReport {
  bool ok = true;
  std::vector<std::string> failures;
  // bound(v) - sup w(v); +inf for vertices with empty w(v).
  std::vector<double> slack;
  double min_slack = 0.0;
};

// Checks every structural property of a completed fractional colouring:
// keys independent, blocks disjoint and tiling [0, total), w(v) >= 1 - 1e-9,
// w(u) ∩ w(v) empty on edges, and w(v) ⊆ [0, bound(v) + tol).
ColouringReport ValidateColouring(const Graph& g, const FractionalColouring& col,
                                  const std::vector<double>& bound, double tol = 0.0);

// Largest colour class {v : t in w(v)} over one sample point per elementary
// interval. Throws ErrorKind::kState if some w(v) < 1 - 1e-9.
VertexSet ExtractIndependentSet(const Graph& g, const FractionalColouring& col);

}  // namespace hccolour

#endif  // HCCOLOUR_FRACTIONAL_H_
