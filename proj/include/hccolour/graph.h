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

#ifndef HCCOLOUR_GRAPH_H_
#define HCCOLOUR_GRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace hccolour {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// A sorted set of distinct vertex ids. Ordering is lexicographic on the
// member list, so a VertexSet can key ordered containers.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  // Sorts and removes duplicates.
  static VertexSet FromUnsorted(std::vector<Vertex> members);
  // Bit i of `mask` set <=> vertex i is a member.
  static VertexSet FromMask(std::uint64_t mask);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  // Rejects loops, duplicate edges and ids >= n with ErrorKind::kInput.
  static Graph FromEdges(std::size_t n, std::span<const Edge> edges);
  static Graph FromEdges(std::size_t n, std::initializer_list<Edge> edges) {
    return FromEdges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t n() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  bool is_independent(std::span<const Vertex> set) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> Distances(const Graph& g, Vertex source);

// Vertices at distance exactly j from v.
VertexSet NeighbourhoodAtDistance(const Graph& g, Vertex v, int j);

bool IsTriangleFree(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // to_parent[i] is the id in the parent graph of local vertex i.
  std::vector<Vertex> to_parent;
};

InducedSubgraph MakeInducedSubgraph(const Graph& g, const VertexSet& keep);

// Bitmask adjacency for graphs with at most 64 vertices.
std::vector<std::uint64_t> AdjacencyMasks(const Graph& g);

namespace generators {

Graph Edgeless(std::size_t n);
Graph Path(std::size_t n);
Graph Cycle(std::size_t n);
Graph Complete(std::size_t n);
// K_{1,k}; vertex 0 is the centre.
Graph Star(std::size_t k);
Graph CompleteBipartite(std::size_t a, std::size_t b);
// Outer cycle 0..4, spokes i -> i+5, inner pentagram on 5..9.
Graph Petersen();
// G(n, p) followed by deleting, for each triangle met in a lexicographic
// scan of triples, its lowest-indexed edge.
Graph RandomTriangleFree(std::size_t n, double p, std::uint64_t seed);

}  // namespace generators

// Edge-list text format: header "n m", then m lines "u v", '#' comments.
Graph ReadEdgeList(std::istream& in);
void WriteEdgeList(std::ostream& out, const Graph& g);

}  // namespace hccolour

#endif  // HCCOLOUR_GRAPH_H_
