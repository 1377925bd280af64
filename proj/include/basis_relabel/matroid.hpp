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

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "basis_relabel/element_set.hpp"

namespace basis_relabel {

// The element set E of a base matroid: ids 0..size-1 plus display names.
struct GroundSet {
  int size = 0;
  std::vector<std::string> names;

  static GroundSet numbered(int size);
};

// Independence oracle over the full ground set of a base matroid.
//
// Implementations must be pure and safe to query from several threads at
// once. Every independence decision, including those made inside the bulk
// helpers below, is charged to an internal counter so that callers can report
// oracle-call budgets; overrides of the helpers must charge the same amounts
// as the defaults.
class IndependenceOracle {
 public:
  explicit IndependenceOracle(GroundSet ground);
  virtual ~IndependenceOracle() = default;

  IndependenceOracle(const IndependenceOracle&) = delete;
  IndependenceOracle& operator=(const IndependenceOracle&) = delete;

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size; }
  virtual std::string_view kind() const = 0;

  // Elements of `x` must be distinct and in range.
  bool independent(std::span<const Element> x) const;

  // Starting from the independent set `base`, scans `candidates` in order and
  // keeps each one that preserves independence. Returns the kept candidates.
  ElementSet greedy_extend(std::span<const Element> base,
                           std::span<const Element> candidates) const;

  // For independent `indep` with `indep + extra` dependent, the unique
  // circuit inside `indep + extra`. Empty when `indep + extra` is independent.
  ElementSet circuit_in(std::span<const Element> indep, Element extra) const;

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual bool do_independent(std::span<const Element> x) const = 0;
  virtual ElementSet do_greedy_extend(std::span<const Element> base,
                                      std::span<const Element> candidates) const;
  virtual ElementSet do_circuit_in(std::span<const Element> indep,
                                   Element extra) const;

  void charge(std::uint64_t n) const {
    calls_.fetch_add(n, std::memory_order_relaxed);
  }

 private:
  GroundSet ground_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

// A circuit: a minimal dependent set.
struct Circuit {
  ElementSet members;

  bool operator==(const Circuit&) const = default;
};

// An immutable view M / T \ D over a base oracle. Element ids are those of
// the base ground set; the view's own ground set is `elements()`.
class MatroidHandle {
 public:
  explicit MatroidHandle(std::shared_ptr<const IndependenceOracle> oracle);

  const IndependenceOracle& oracle() const { return *oracle_; }
  const std::shared_ptr<const IndependenceOracle>& oracle_ptr() const {
    return oracle_;
  }

  const ElementSet& elements() const { return elements_; }
  const ElementSet& contracted() const { return contracted_; }
  const ElementSet& deleted() const { return deleted_; }
  // A basis of the contracted set, in the base matroid.
  const ElementSet& contracted_basis() const { return contracted_basis_; }

  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(Element e) const;

  // Throws DomainError for ids outside the view.
  bool is_independent(std::span<const Element> x) const;
  int rank(std::span<const Element> x) const;
  int rank() const { return rank_; }

  // Greedy maximal independent subset of `x`, scanning ascending ids.
  ElementSet maximal_independent(std::span<const Element> x) const;
  ElementSet greedy_basis() const;
  bool is_basis(std::span<const Element> x) const;

  // The unique circuit in basis + {e}. Throws UsageError if e is in the
  // basis and PreconditionError if `basis` is not a basis of the view.
  Circuit fundamental_circuit(const ElementSet& basis, Element e) const;
  // Same, without validating the basis. Used by hot loops that already
  // established the precondition.
  ElementSet fundamental_circuit_unchecked(const ElementSet& basis,
                                           Element e) const;

  MatroidHandle contract(std::span<const Element> t) const;
  MatroidHandle remove(std::span<const Element> d) const;
  MatroidHandle restrict_to(std::span<const Element> x) const;

  std::uint64_t oracle_calls() const { return oracle_->calls(); }

 private:
  MatroidHandle() = default;
  void require_in_view(std::span<const Element> x) const;
  std::vector<Element> with_contracted(std::span<const Element> x) const;

  std::shared_ptr<const IndependenceOracle> oracle_;
  ElementSet elements_;
  ElementSet contracted_;
  ElementSet deleted_;
  ElementSet contracted_basis_;
  std::vector<char> member_;
  int rank_ = 0;
};

// Partition of a view's elements into connected components. Ids are
// assigned in order of each component's smallest element; elements outside
// the view get -1.
struct ComponentPartition {
  std::vector<int> id;
  int count = 0;

  std::vector<ElementSet> classes() const;
};

// The bipartite exchange graph of a basis. `adjacency` is indexed by element id over
// the base ground set; elements outside the view have no neighbours.
struct FundamentalGraph {
  ElementSet basis;
  ElementSet vertices;
  std::vector<ElementSet> adjacency;

  std::size_t edge_count() const;
};

struct SimplifyResult {
  MatroidHandle view;
  ElementSet removed;
};

// Loops of the view (elements of rank 0).
ElementSet loops(const MatroidHandle& m);

// Deletes loops and all but the smallest id of each parallel class.
SimplifyResult simplify(const MatroidHandle& m);

// Parallel classes of size >= 2 among the non-loop elements.
std::vector<ElementSet> parallel_classes(const MatroidHandle& m);

// Components via connectivity of the fundamental graph of the greedy basis.
// Throws PreconditionError if the view has loops.
ComponentPartition components(const MatroidHandle& m);

// Builds the fundamental graph, one fundamental circuit per non-basis element. The circuits
// are computed in parallel; the serial variant is kept as a reference.
FundamentalGraph fundamental_graph(const MatroidHandle& m,
                                   const ElementSet& basis);
FundamentalGraph fundamental_graph_serial(const MatroidHandle& m,
                                          const ElementSet& basis);

// BFS distances from `sources` in S; -1 where unreachable.
std::vector<int> graph_distances(const FundamentalGraph& s,
                                 std::span<const Element> sources);

// Shortest-path length between e and f, or nullopt when unreachable.
std::optional<int> graph_distance(const FundamentalGraph& s, Element e,
                                  Element f);

// Shortest path e..f in S (ties broken towards smaller ids), empty when
// unreachable.
std::vector<Element> shortest_path(const FundamentalGraph& s, Element e,
                                   Element f);

// Largest finite distance between two vertices of S. The parallel variant
// runs one BFS per source concurrently.
int diameter(const FundamentalGraph& s);
int diameter_serial(const FundamentalGraph& s);

}  // namespace basis_relabel
