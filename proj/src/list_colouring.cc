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

#include "hccolour/list_colouring.h"

#include <algorithm>
#include <map>

#include "hccolour/error.h"

namespace hccolour {
namespace {

class Search {
 public:
  Search(const Graph& g, const std::vector<std::vector<Label>>& lists, std::size_t budget)
      : g_(g), budget_(budget) {
    // Labels are renumbered densely so domains are small sorted index vectors.
    std::map<Label, int> ids;
    for (const auto& list : lists) {
      for (Label c : list) ids.emplace(c, 0);
    }
    for (auto& [label, id] : ids) {
      id = static_cast<int>(labels_.size());
      labels_.push_back(label);
    }
    root_.domains.resize(g.n());
    root_.assigned.assign(g.n(), -1);
    for (Vertex v = 0; v < g.n(); ++v) {
      auto& d = root_.domains[v];
      for (Label c : lists[v]) d.push_back(ids.at(c));
      std::sort(d.begin(), d.end());
      d.erase(std::unique(d.begin(), d.end()), d.end());
    }
  }

  ListColouringSearch Run() {
    ListColouringSearch out;
    std::vector<Vertex> forced;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (root_.domains[v].size() <= 1) forced.push_back(v);
    }
    const bool found = Propagate(root_, forced) && Recurse(root_);
    out.nodes = nodes_;
    if (exceeded_) {
      out.status = SearchStatus::kBudgetExceeded;
    } else if (found) {
      out.status = SearchStatus::kColourable;
      for (int id : solution_) out.colouring.push_back(labels_[id]);
    } else {
      out.status = SearchStatus::kNotColourable;
    }
    return out;
  }

 private:
  struct State {
    std::vector<std::vector<int>> domains;
    std::vector<int> assigned;
  };

  // Fixes v to c and removes c from its unassigned neighbours' domains.
  bool Assign(State& s, Vertex v, int c, std::vector<Vertex>& forced) const {
    s.assigned[v] = c;
    s.domains[v] = {c};
    for (Vertex u : g_.neighbours(v)) {
      if (s.assigned[u] >= 0) {
        if (s.assigned[u] == c) return false;
        continue;
      }
      auto& du = s.domains[u];
      auto it = std::lower_bound(du.begin(), du.end(), c);
      if (it == du.end() || *it != c) continue;
      du.erase(it);
      if (du.size() <= 1) forced.push_back(u);
    }
    return true;
  }

  // Assigns singleton domains until none remain.
  bool Propagate(State& s, std::vector<Vertex>& forced) const {
    while (!forced.empty()) {
      const Vertex v = forced.back();
      forced.pop_back();
      if (s.assigned[v] >= 0) continue;
      if (s.domains[v].empty()) return false;
      if (!Assign(s, v, s.domains[v][0], forced)) return false;
    }
    return true;
  }

  bool Recurse(const State& s) {
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return false;
    }
    // Smallest domain per unassigned neighbour; vertices with no unassigned
    // neighbour can always be finished and go last.
    Vertex pick = 0;
    bool any = false;
    std::size_t best_dom = 0;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (s.assigned[v] >= 0) continue;
      std::size_t deg = 0;
      for (Vertex u : g_.neighbours(v)) deg += s.assigned[u] < 0;
      const std::size_t dom = s.domains[v].size();
      const bool better = !any || (deg > 0 && best_deg == 0) ||
                          (deg > 0 && dom * best_deg < best_dom * deg) ||
                          (deg == 0 && best_deg == 0 && dom < best_dom);
      if (better) {
        pick = v;
        best_dom = dom;
        best_deg = deg;
        any = true;
      }
    }
    if (!any) {
      solution_ = s.assigned;
      return true;
    }
    for (int c : s.domains[pick]) {
      State next = s;
      std::vector<Vertex> forced;
      if (Assign(next, pick, c, forced) && Propagate(next, forced) && Recurse(next)) return true;
      if (exceeded_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t budget_;
  std::vector<Label> labels_;
  State root_;
  std::vector<int> solution_;
  std::size_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace

ListColouringSearch FindListColouring(const Graph& g, const std::vector<std::vector<Label>>& lists,
                                      std::size_t node_budget) {
  if (lists.size() != g.n()) Fail(ErrorKind::kInput, "one list per vertex required");
  return Search(g, lists, node_budget).Run();
}

bool IsProperListColouring(const Graph& g, const std::vector<std::vector<Label>>& lists,
                           const std::vector<Label>& colouring) {
  if (colouring.size() != g.n() || lists.size() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (std::find(lists[v].begin(), lists[v].end(), colouring[v]) == lists[v].end()) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (colouring[u] == colouring[v]) return false;
  }
  return true;
}

}  // namespace hccolour
