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

#include "hccolour/graph_family.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "hccolour/error.h"

namespace hccolour {
namespace {

using Masks = std::vector<std::uint64_t>;

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finaliser over the running hash.
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

// Colour refinement; colours are deterministic functions of structure, so
// they agree on corresponding vertices of isomorphic graphs.
std::vector<std::uint64_t> RefinedColours(const Masks& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint64_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = std::popcount(adj[v]);
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> nbr;
  for (int round = 0; round < 3; ++round) {
    for (std::size_t v = 0; v < n; ++v) {
      nbr.clear();
      for (std::uint64_t m = adj[v]; m; m &= m - 1) {
        nbr.push_back(colour[std::countr_zero(m)]);
      }
      std::sort(nbr.begin(), nbr.end());
      std::uint64_t h = Mix(0, colour[v]);
      for (std::uint64_t c : nbr) h = Mix(h, c);
      next[v] = h;
    }
    colour.swap(next);
  }
  return colour;
}

std::string InvariantKey(const std::vector<std::uint64_t>& colours) {
  std::vector<std::uint64_t> sorted = colours;
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (std::uint64_t c : sorted) key.append(reinterpret_cast<const char*>(&c), sizeof c);
  return key;
}

bool IsomorphicMasks(const Masks& a, const std::vector<std::uint64_t>& ca,
                     const Masks& b, const std::vector<std::uint64_t>& cb) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  // Map rare colour classes first.
  std::map<std::uint64_t, int> freq;
  for (auto c : ca) ++freq[c];
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return freq[ca[x]] < freq[ca[y]];
  });
  std::vector<int> image(n, -1);
  std::uint64_t used = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t x = order[depth];
    for (std::size_t y = 0; y < n; ++y) {
      if ((used >> y) & 1) continue;
      if (cb[y] != ca[x]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t px = order[d];
        const bool ea = (a[x] >> px) & 1;
        const bool eb = (b[y] >> image[px]) & 1;
        ok = ea == eb;
      }
      if (!ok) continue;
      image[x] = static_cast<int>(y);
      used |= std::uint64_t{1} << y;
      if (extend(depth + 1)) return true;
      used &= ~(std::uint64_t{1} << y);
      image[x] = -1;
    }
    return false;
  };
  return extend(0);
}

Graph FromMasks(const Masks& adj) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::uint64_t m = adj[u]; m; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(adj.size(), edges);
}

}  // namespace

bool IsConnected(const Graph& g) {
  if (g.n() == 0) return true;
  const auto dist = Distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool AreIsomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  const Masks ma = AdjacencyMasks(a);
  const Masks mb = AdjacencyMasks(b);
  const auto ca = RefinedColours(ma);
  const auto cb = RefinedColours(mb);
  if (InvariantKey(ca) != InvariantKey(cb)) return false;
  return IsomorphicMasks(ma, ca, mb, cb);
}

std::vector<Graph> AllTriangleFreeGraphs(std::size_t n) {
  if (n > 12) Fail(ErrorKind::kSize, "exhaustive family limited to n <= 12");
  if (n == 0) return {Graph()};
  std::vector<Masks> level = {Masks{0}};
  for (std::size_t k = 2; k <= n; ++k) {
    struct Entry {
      Masks adj;
      std::vector<std::uint64_t> colours;
    };
    std::map<std::string, std::vector<Entry>> buckets;
    std::vector<Masks> next;
    const std::size_t old_n = k - 1;
    for (const Masks& base : level) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << old_n); ++s) {
        bool independent = true;
        for (std::uint64_t m = s; m && independent; m &= m - 1) {
          independent = (base[std::countr_zero(m)] & s) == 0;
        }
        if (!independent) continue;
        Masks adj = base;
        adj.push_back(s);
        for (std::uint64_t m = s; m; m &= m - 1) {
          adj[std::countr_zero(m)] |= std::uint64_t{1} << old_n;
        }
        auto colours = RefinedColours(adj);
        auto& bucket = buckets[InvariantKey(colours)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const Entry& e) {
          return IsomorphicMasks(e.adj, e.colours, adj, colours);
        });
        if (seen) continue;
        next.push_back(adj);
        bucket.push_back({std::move(adj), std::move(colours)});
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const Masks& adj : level) out.push_back(FromMasks(adj));
  return out;
}

std::vector<Graph> AllConnectedTriangleFreeGraphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : AllTriangleFreeGraphs(n)) {
    if (IsConnected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace hccolour
