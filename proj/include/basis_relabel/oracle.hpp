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

#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "basis_relabel/labelled.hpp"
#include "basis_relabel/matroid.hpp"

namespace basis_relabel {

inline constexpr int kDefaultEnumerationCap = 14;
// Largest view the labelled state space accepts (K6 has 15 edges).
inline constexpr int kStateSpaceCap = 15;

// All bases in ascending lexicographic order. Throws BudgetExceededError
// when the view has more than `cap` elements.
std::vector<ElementSet> enumerate_bases(const MatroidHandle& m,
                                        int cap = kDefaultEnumerationCap);

// All circuits, found using independence queries only, in ascending
// lexicographic order of their members.
std::vector<Circuit> enumerate_circuits(const MatroidHandle& m,
                                        int cap = kDefaultEnumerationCap);

// Labelled bases and single exchanges between them, explored lazily.
class ReconfigGraph {
 public:
  explicit ReconfigGraph(const MatroidHandle& m, int cap = kStateSpaceCap);

  int rank() const { return rank_; }
  std::size_t basis_count() const { return basis_count_; }

  // Exact exchange distance, nullopt when unreachable.
  std::optional<int> distance(const LabelledBasis& from,
                              const LabelledBasis& to) const;
  bool reachable(const LabelledBasis& from, const LabelledBasis& to);
  // Component index of the state; components are labelled on first use.
  int component_of(const LabelledBasis& t);
  // Every valid exchange out of `t`.
  std::vector<ExchangeStep> exchanges(const LabelledBasis& t) const;
  std::size_t explored_states() const { return component_.size(); }

 private:
  using Key = std::uint64_t;

  Key encode(const LabelledBasis& t) const;
  template <typename Visit>
  void for_each_neighbour(Key key, Visit&& visit) const;

  ElementSet elements_;
  std::vector<int> local_;  // element id -> local index, -1 outside the view
  int rank_ = 0;
  std::vector<char> is_basis_;  // indexed by local subset mask
  std::size_t basis_count_ = 0;
  std::unordered_map<Key, int> component_;
  int component_count_ = 0;
};

std::optional<int> bfs_distance(const MatroidHandle& m, const LabelledBasis& t1,
                                const LabelledBasis& t2,
                                int cap = kStateSpaceCap);

}  // namespace basis_relabel
