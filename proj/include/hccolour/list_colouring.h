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

#ifndef HCCOLOUR_LIST_COLOURING_H_
#define HCCOLOUR_LIST_COLOURING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hccolour/dpcolor.h"
#include "hccolour/graph.h"

namespace hccolour {

enum class SearchStatus { kColourable, kNotColourable, kBudgetExceeded };

struct ListColouringSearch {
  SearchStatus status = SearchStatus::kNotColourable;
  // A proper list colouring when status == kColourable.
  std::vector<Label> colouring;
  std::size_t nodes = 0;
};

// Exhaustive backtracking over list colourings. Branches on a vertex with the
// fewest remaining colours per uncoloured neighbour and propagates forced
// (singleton) choices to a fixpoint before each branch.
ListColouringSearch FindListColouring(const Graph& g, const std::vector<std::vector<Label>>& lists,
                                      std::size_t node_budget);

// True iff labels are drawn from the lists and differ across every edge.
bool IsProperListColouring(const Graph& g, const std::vector<std::vector<Label>>& lists,
                           const std::vector<Label>& colouring);

}  // namespace hccolour

#endif  // HCCOLOUR_LIST_COLOURING_H_
