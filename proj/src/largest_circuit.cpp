// Copyright 2026 The Authors.
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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basis_relabel/errors.hpp"
#include "basis_relabel/models.hpp"
#include "basis_relabel/reconfig.hpp"

namespace basis_relabel {
namespace {

class CircuitSearch {
 public:
  CircuitSearch(const MatroidHandle& m, std::uint64_t budget)
      : m_(m), pool_(m.elements()), budget_(budget) {}

  ElementSet run() {
    std::vector<Element> current;
    grow(current, 0);
    return best_;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) {
      throw BudgetExceededError("largest_circuit: search budget of " +
                                std::to_string(budget_) + " nodes exceeded");
    }
  }

  bool done() const {
    return static_cast<int>(best_.size()) == m_.rank() + 1;
  }

  // `current` is independent and uses only pool positions below `next`.
  void grow(std::vector<Element>& current, std::size_t next) {
    tick();
    const int size = static_cast<int>(current.size());
    const int left = static_cast<int>(pool_.size() - next);
    if (std::min(m_.rank(), size + left) + 1 <= static_cast<int>(best_.size())) {
      return;
    }
    const ElementSet base = make_set(current);
    for (std::size_t i = next; i < pool_.size() && !done(); ++i) {
      const Element y = pool_[i];
      current.push_back(y);
      const bool indep = m_.is_independent(current);
      current.pop_back();
      if (indep) {
        current.push_back(y);
        grow(current, i + 1);
        current.pop_back();
      } else if (size + 1 > static_cast<int>(best_.size())) {
        tick();
        ElementSet c = m_.fundamental_circuit_unchecked(base, y);
        if (static_cast<int>(c.size()) == size + 1) best_ = std::move(c);
      }
    }
  }

  const MatroidHandle& m_;
  ElementSet pool_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  ElementSet best_;
};

}  // namespace

std::optional<Circuit> largest_circuit(const MatroidHandle& m,
                                       std::uint64_t node_budget) {
  if (as_graphic(m) != nullptr) {
    const MinorGraph mg = minor_graph(m);
    auto cycle = longest_cycle(mg.graph, node_budget);
    if (!cycle) return std::nullopt;
    ElementSet members;
    for (int id : *cycle) members.push_back(mg.element_of_edge[id]);
    return Circuit{make_set(std::move(members))};
  }
  ElementSet best = CircuitSearch(m, node_budget).run();
  if (best.empty()) return std::nullopt;
  return Circuit{std::move(best)};
}

}  // namespace basis_relabel
