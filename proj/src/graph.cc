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

#include "hccolour/graph.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <string>

#include "hccolour/error.h"

namespace hccolour {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput: return "input";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kNumeric: return "numeric";
    case ErrorKind::kSize: return "size";
    case ErrorKind::kHypothesis: return "hypothesis";
    case ErrorKind::kState: return "state";
    case ErrorKind::kGiveUp: return "give-up";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(FromUnsorted(std::vector<Vertex>(members))) {}

VertexSet VertexSet::FromUnsorted(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  VertexSet set;
  set.members_ = std::move(members);
  return set;
}

VertexSet VertexSet::FromMask(std::uint64_t mask) {
  VertexSet set;
  set.members_.reserve(std::popcount(mask));
  while (mask != 0) {
    set.members_.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return set;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::FromEdges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      Fail(ErrorKind::kInput, "edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range for n=" +
                                  std::to_string(n));
    }
    if (u == v) Fail(ErrorKind::kInput, "loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      Fail(ErrorKind::kInput,
           "duplicate edge at vertex " + std::to_string(v));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n() || v >= n()) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u]
                                                               : adjacency_[v];
  const Vertex target = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

std::size_t Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t best = adjacency_.front().size();
  for (const auto& adj : adjacency_) best = std::min(best, adj.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_independent(std::span<const Vertex> set) const {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (has_edge(set[i], set[j])) return false;
    }
  }
  return true;
}

std::vector<int> Distances(const Graph& g, Vertex source) {
  if (source >= g.n()) {
    Fail(ErrorKind::kInput, "vertex " + std::to_string(source) +
                                " out of range for n=" + std::to_string(g.n()));
  }
  std::vector<int> dist(g.n(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbours(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

VertexSet NeighbourhoodAtDistance(const Graph& g, Vertex v, int j) {
  if (j < 0) Fail(ErrorKind::kInput, "negative distance");
  const std::vector<int> dist = Distances(g, v);
  std::vector<Vertex> layer;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (dist[u] == j) layer.push_back(u);
  }
  return VertexSet::FromUnsorted(std::move(layer));
}

bool IsTriangleFree(const Graph& g) {
  // For every edge uv with u < v, look for a common neighbour w > v.
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (v <= u) continue;
      auto a = g.neighbours(u);
      auto b = g.neighbours(v);
      auto ia = std::upper_bound(a.begin(), a.end(), v);
      auto ib = std::upper_bound(b.begin(), b.end(), v);
      while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return false;
        if (*ia < *ib) {
          ++ia;
        } else {
          ++ib;
        }
      }
    }
  }
  return true;
}

InducedSubgraph MakeInducedSubgraph(const Graph& g, const VertexSet& keep) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(g.n(), kAbsent);
  InducedSubgraph sub;
  sub.to_parent.reserve(keep.size());
  for (Vertex v : keep) {
    if (v >= g.n()) {
      Fail(ErrorKind::kInput, "vertex " + std::to_string(v) +
                                  " out of range for n=" +
                                  std::to_string(g.n()));
    }
    local[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : keep) {
    for (Vertex w : g.neighbours(v)) {
      if (v < w && local[w] != kAbsent) edges.emplace_back(local[v], local[w]);
    }
  }
  sub.graph = Graph::FromEdges(keep.size(), edges);
  return sub;
}

std::vector<std::uint64_t> AdjacencyMasks(const Graph& g) {
  if (g.n() > 64) {
    Fail(ErrorKind::kSize, "bitmask adjacency needs n <= 64, got n=" +
                               std::to_string(g.n()));
  }
  std::vector<std::uint64_t> masks(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex w : g.neighbours(v)) masks[v] |= std::uint64_t{1} << w;
  }
  return masks;
}

namespace generators {

Graph Edgeless(std::size_t n) { return Graph::FromEdges(n, {}); }

Graph Path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(n, edges);
}

Graph Cycle(std::size_t n) {
  if (n < 3) return Path(n);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::FromEdges(n, edges);
}

Graph Complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::FromEdges(n, edges);
}

Graph Star(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph::FromEdges(k + 1, edges);
}

Graph CompleteBipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) {
      edges.emplace_back(i, static_cast<Vertex>(a + j));
    }
  }
  return Graph::FromEdges(a + b, edges);
}

Graph Petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  return Graph::FromEdges(10, edges);
}

Graph RandomTriangleFree(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) Fail(ErrorKind::kInput, "edge probability not in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit(rng) < p) adj[i][j] = adj[j][i] = 1;
    }
  }
  // Deleting edges never creates triangles, so one scan suffices.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (adj[i][j] && adj[i][k] && adj[j][k]) adj[i][j] = adj[j][i] = 0;
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adj[i][j]) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace generators

namespace {

// Next non-blank, non-comment line; false at end of input.
bool NextDataLine(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph ReadEdgeList(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!NextDataLine(in, line, line_no)) {
    Fail(ErrorKind::kIo, "edge list: missing 'n m' header");
  }
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) {
      Fail(ErrorKind::kIo, "edge list: bad header on line " +
                               std::to_string(line_no));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    if (!NextDataLine(in, line, line_no)) {
      Fail(ErrorKind::kIo, "edge list: expected " + std::to_string(m) +
                               " edges, found " + std::to_string(e));
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0 || u >= n || v >= n) {
      Fail(ErrorKind::kIo, "edge list: bad edge on line " +
                               std::to_string(line_no));
    }
    if (u > v) std::swap(u, v);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph::FromEdges(static_cast<std::size_t>(n), edges);
  } catch (const Error& e) {
    Fail(ErrorKind::kIo, std::string("edge list: ") + e.what());
  }
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace hccolour
