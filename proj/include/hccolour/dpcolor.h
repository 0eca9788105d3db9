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

#ifndef HCCOLOUR_DPCOLOR_H_
#define HCCOLOUR_DPCOLOR_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hccolour/graph.h"

namespace hccolour {

using ColourNode = std::uint32_t;
using Label = std::int64_t;
using CrossEdge = std::pair<ColourNode, ColourNode>;

// A cover (L, H) of a base graph G. Colour nodes are 0..node_count()-1 and
// L(u) is the preimage of u under owner(). Same-owner adjacency is implicit
// and never stored; cross_edges() holds exactly the edges of H*.
class Cover {
 public:
  Cover() = default;
  // Rejects out-of-range ids and loops with ErrorKind::kInput; duplicate
  // cross edges are merged. Axioms are checked by ValidateCover, not here.
  // `labels`, when non-empty, names each colour node (list-colouring covers).
  static Cover Make(Graph base, std::vector<Vertex> owner, std::vector<CrossEdge> cross_edges,
                    std::vector<Label> labels = {});

  const Graph& base() const { return base_; }
  std::size_t node_count() const { return owner_.size(); }
  Vertex owner(ColourNode c) const { return owner_[c]; }
  std::span<const Vertex> owners() const { return owner_; }
  // Sorted colour nodes of L(u).
  std::span<const ColourNode> list(Vertex u) const { return lists_[u]; }
  // Sorted, each (a, b) with a < b.
  std::span<const CrossEdge> cross_edges() const { return cross_edges_; }
  std::span<const ColourNode> cross_neighbours(ColourNode c) const { return cross_adj_[c]; }
  // Indices into cross_edges() of the edges at c.
  std::span<const std::size_t> incident_edges(ColourNode c) const { return incident_[c]; }
  // Adjacency in H: distinct nodes of one list, or a cross edge.
  bool adjacent(ColourNode a, ColourNode b) const;
  bool has_labels() const { return !labels_.empty(); }
  Label label(ColourNode c) const { return labels_.at(c); }
  std::span<const Label> labels() const { return labels_; }

 private:
  Graph base_;
  std::vector<Vertex> owner_;
  std::vector<std::vector<ColourNode>> lists_;
  std::vector<CrossEdge> cross_edges_;
  std::vector<std::vector<ColourNode>> cross_adj_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Label> labels_;
};

struct CoverReport {
  bool valid = true;
  // 0 when valid, else the axiom (1-4) the first violation breaks.
  int axiom = 0;
  std::string first_violation;
};

// The four cover axioms: owners partition the nodes, lists are cliques
// (implicit), cross edges join lists of adjacent base vertices, and between
// two lists the cross edges form a matching.
CoverReport ValidateCover(const Cover& cover);

// One colour node per (vertex, label), in vertex then label order; a cross
// edge joins (u, c) and (v, c) iff uv is an edge.
Cover FromListAssignment(const Graph& g, const std::vector<std::vector<Label>>& lists);

// deg*(c): the number of cross edges at c.
std::size_t StarDegree(const Cover& cover, ColourNode c);

struct HypothesisReport {
  bool pass = true;
  std::vector<std::string> witnesses;
  // max over nodes of deg*(c) / (min_{v in N(u)} ell(v) / 8); <= 1 on pass.
  double max_star_ratio = 0.0;
};

// ell(u) >= 3, |L(u)| >= ell(u), and deg*(c) <= min_{v in N(u)} ell(v) / 8
// for every c in L(u). The last condition is vacuous for isolated u.
HypothesisReport FinishingBlowHypothesis(const Cover& cover, std::span<const int> ell);

struct TruncatedCover {
  Cover cover;
  // Original id of each node of `cover`.
  std::vector<ColourNode> to_original;
};

// Keeps the ell(u) lowest-id nodes of each list (all of them when the list is
// shorter) and the cross edges among kept nodes.
TruncatedCover TruncateLists(const Cover& cover, std::span<const int> ell);

struct LllOptions {
  bool check_hypothesis = true;
  bool truncate = true;
  // x_e = k / (ell(u1) ell(u2)).
  double k = 3.0;
};

struct LllReport {
  bool certified = true;
  std::size_t events = 0;
  // min over bad events of x e^{-1.4 sum_Gamma x'} - 1/(ell(u1) ell(u2)).
  double min_slack = std::numeric_limits<double>::infinity();
  // min over bad events of x prod_Gamma (1 - x') - 1/(ell(u1) ell(u2)).
  double min_glll_slack = std::numeric_limits<double>::infinity();
  double max_weight = 0.0;
  // Gamma sum at the event attaining min_slack.
  double worst_gamma_sum = 0.0;
};

// Evaluates the local lemma certificate edge by edge. For the cross edge
// c1c2 between L(u1) and L(u2), Gamma(c1c2) is the set of cross edges with an
// end in L(u1) or L(u2), including c1c2 itself. Certified iff every event
// has min_slack >= 0 and x < 1/2.
// Throws ErrorKind::kHypothesis when check_hypothesis is set and
// FinishingBlowHypothesis fails.
LllReport LllCertify(const Cover& cover, std::span<const int> ell, const LllOptions& options = {});

struct SolveOptions {
  std::size_t max_resamples = 1'000'000;
  // When set, lists are truncated to ell(u) before sampling.
  std::optional<std::vector<int>> ell = std::nullopt;
};

struct SolveResult {
  // choice[u] is the chosen node of L(u) (original ids).
  std::vector<ColourNode> choice;
  std::size_t resamples = 0;
};

// Moser-Tardos resampling: one uniform node per list; while some cross edge
// has both ends chosen, redraw both owners of the first such edge in
// canonical edge order. Throws ErrorKind::kInput for an empty list and
// ErrorKind::kGiveUp past max_resamples.
SolveResult Solve(const Cover& cover, std::uint64_t seed, const SolveOptions& options = {});

struct DpVerification {
  bool ok = true;
  std::string message;
};

// One node per base vertex, owned by it, with no cross edge inside the
// selection.
DpVerification VerifyDpColouring(const Cover& cover, std::span<const ColourNode> choice);

// Labels of a selection on a list-colouring cover.
std::vector<Label> ProjectLabels(const Cover& cover, std::span<const ColourNode> choice);

struct ResidualCover {
  Cover cover;
  // Base vertices of G_I in the original graph.
  std::vector<Vertex> to_base;
  // Original ids of the residual colour nodes.
  std::vector<ColourNode> to_original;
};

// A partial H-colouring I with dom(I) and residual lists L_I(u) = L(u) \ N_H(I).
class PartialDpState {
 public:
  explicit PartialDpState(const Cover& cover);

  bool in_domain(Vertex u) const { return chosen_[u].has_value(); }
  const std::vector<std::optional<ColourNode>>& chosen() const { return chosen_; }
  std::size_t size() const { return size_; }
  // Requires u outside dom(I) and c in L_I(u); throws ErrorKind::kState.
  void Choose(Vertex u, ColourNode c);
  // Maintained incrementally.
  std::vector<ColourNode> Residual(Vertex u) const;
  // Recomputed from the chosen set alone.
  std::vector<ColourNode> ResidualFromScratch(Vertex u) const;
  // The cover H_I of G_I = G - dom(I).
  ResidualCover MakeResidualCover() const;

 private:
  const Cover* cover_;
  std::vector<std::optional<ColourNode>> chosen_;
  std::vector<std::uint32_t> blocked_;
  std::size_t size_ = 0;
};

struct TwoPhaseOptions {
  int rounds = 10;
  std::uint64_t seed = 0;
  // Probability that phase 1 tries to colour a given vertex.
  double activation = 0.5;
  std::size_t max_resamples = 1'000'000;
  // After `rounds` failed attempts, run Solve on the whole cover.
  bool fallback = true;
};

struct TwoPhaseResult {
  bool success = false;
  std::vector<ColourNode> choice;
  // Phase 2 ran on a residual cover that met the finishing-blow hypothesis.
  bool certified = false;
  bool used_fallback = false;
  int rounds_used = 0;
  std::size_t phase1_coloured = 0;
  // Diagnostics of the last residual cover examined.
  std::ptrdiff_t min_list_surplus = 0;  // min_u |L_I(u)| - ell(u)
  std::size_t max_star_degree = 0;
  std::string report;
};

// Random partial colouring followed by the finishing blow on the residual
// cover. Requires a triangle-free base graph (ErrorKind::kHypothesis).
// Any returned colouring has passed VerifyDpColouring.
TwoPhaseResult TwoPhaseColour(const Cover& cover, std::span<const int> ell,
                              const TwoPhaseOptions& options);

struct RandomCoverSpec {
  std::size_t vertices = 100;
  double edge_probability = 0.05;
  std::size_t list_size = 24;
  std::size_t max_star_degree = 3;
  std::uint64_t seed = 0;
};

// Base graph G(n, p); lists of list_size nodes; for each base edge a random
// matching between the two lists, keeping only pairs whose ends stay at
// star degree <= max_star_degree.
Cover RandomCover(const RandomCoverSpec& spec);

// Lists of list_size labels from {0..palette-1} such that for every u and
// c in L(u) at most max_shared neighbours of u have c. Throws
// ErrorKind::kInput when the palette is too small to finish.
std::vector<std::vector<Label>> RandomListAssignment(const Graph& g, std::size_t list_size,
                                                     std::size_t palette,
                                                     std::size_t max_shared,
                                                     std::uint64_t seed);

}  // namespace hccolour

#endif  // HCCOLOUR_DPCOLOR_H_
