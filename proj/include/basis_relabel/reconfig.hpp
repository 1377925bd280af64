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
#include <string>
#include <string_view>
#include <vector>

#include "basis_relabel/graph.hpp"
#include "basis_relabel/labelled.hpp"
#include "basis_relabel/matroid.hpp"

namespace basis_relabel {

enum class Algorithm { kGeneric, kGraphicFast, kMatroidFast, kAuto };

std::string_view algorithm_name(Algorithm a);
// Throws UsageError for unknown names.
Algorithm parse_algorithm(std::string_view name);

struct PlannerConfig {
  Algorithm algorithm = Algorithm::kAuto;
  // Node budget for the exact circuit and linking-set searches.
  std::uint64_t search_budget = 2'000'000;
  // Largest linking set the exhaustive search will try.
  int max_linking_size = 8;
  // matroid-fast falls back to generic when a search budget trips.
  bool allow_fallback = true;
  std::uint64_t seed = 1;
};

struct LabelDiagnosis {
  int label = 0;
  Element source = -1;
  Element target = -1;
  int source_component = -1;
  int target_component = -1;

  bool ok() const { return source_component == target_component; }
};

struct PlanReport {
  bool feasible = false;
  std::vector<LabelDiagnosis> labels;
  ExchangeSequence sequence;
  Algorithm algorithm = Algorithm::kGeneric;
  // Upper bound the emitted length is checked against.
  long long declared_bound = 0;
  // Diameter of the fundamental graph the label swaps ran on.
  std::optional<int> diameter;
  int layer_count = 0;
  // The fast planners also try the route through the target's own basis and
  // keep it when strictly shorter.
  bool direct_route = false;
  bool fell_back = false;
  std::string fallback_reason;
  std::uint64_t oracle_calls = 0;
  double wall_ms = 0.0;
};

// Verdict and per-label component diagnosis only. Throws UsageError when the
// two labelled bases have different sizes.
PlanReport feasible(const MatroidHandle& m, const LabelledBasis& t1,
                    const LabelledBasis& t2);

// Swaps the labels of basis elements e and f, leaving the basis and every
// other label as they were. Exactly 3t - 3 steps for fundamental-graph distance t. Throws
// InfeasibleError when e and f are not connected in the fundamental graph.
ExchangeSequence swap_labels(const MatroidHandle& m, const LabelledBasis& t,
                             Element e, Element f);
// Same, reusing a precomputed fundamental graph of t's basis.
ExchangeSequence swap_labels(const FundamentalGraph& s, const LabelledBasis& t,
                             Element e, Element f);

// At most |B1 - B2| steps turning b1 into b2. Labels ride along with the
// exchanged elements, starting from `t1`'s labelling.
ExchangeSequence reconfigure_unlabelled(const MatroidHandle& m,
                                        const LabelledBasis& t1,
                                        const ElementSet& b2);

// Throws InfeasibleError (with the per-label diagnosis in the message) when
// the pair is not reconfigurable.
PlanReport plan_generic(const MatroidHandle& m, const LabelledBasis& t1,
                        const LabelledBasis& t2);
PlanReport plan_graphic(const MatroidHandle& m, const LabelledBasis& t1,
                        const LabelledBasis& t2,
                        const PlannerConfig& config = {});
PlanReport plan_matroid_fast(const MatroidHandle& m, const LabelledBasis& t1,
                             const LabelledBasis& t2,
                             const PlannerConfig& config = {});
// Dispatches on config.algorithm; kAuto picks graphic-fast for graphic
// matroids and matroid-fast for everything else.
PlanReport plan(const MatroidHandle& m, const LabelledBasis& t1,
                const LabelledBasis& t2, const PlannerConfig& config = {});

// Local search for a cycle whose contraction leaves blocks of at most m/2
// edges. Needs a simple 2-connected graph with at least three edges.
struct HalvingCycle {
  std::vector<int> cycle;  // edge ids, sorted
  int iterations = 0;
  // Largest block size of G/C before each improvement, then the final one.
  std::vector<int> max_block_trace;
};
HalvingCycle find_halving_cycle(const Graph& g);

// Sizes of the blocks of G/C, largest first.
std::vector<int> contracted_block_sizes(const Graph& g,
                                        const std::vector<int>& cycle);

// Maximum-cardinality circuit, nullopt when the view has no circuit. Graphic
// views search for a longest cycle; others enumerate circuits by branch and
// bound. Throws BudgetExceededError after `node_budget` search nodes.
std::optional<Circuit> largest_circuit(const MatroidHandle& m,
                                       std::uint64_t node_budget = 2'000'000);

// Witness that a set P links `prev` to A. Accepted when P is independent and
// skew to both, prev + A + P has co-rank 1, and its unique circuit meets prev
// and A while containing P.
struct LinkingCertificate {
  ElementSet linking;
  int overlap = 0;  // |prev| + |A| + |P| - rank(prev + A + P)
  bool independent = false;
  bool skew_to_prev = false;
  bool skew_to_a = false;
  ElementSet circuit;

  bool accepted(const ElementSet& prev, const ElementSet& a) const;
};

// Evaluates the certificate conditions for a given P in H.
LinkingCertificate make_linking_certificate(const MatroidHandle& h,
                                            const ElementSet& prev,
                                            const ElementSet& a,
                                            const ElementSet& p);

// Smallest P, drawn from `candidates` (all of H - prev - A when empty) in
// increasing size, whose certificate is accepted. Throws PreconditionError
// for disconnected H and BudgetExceededError when the search gives up.
LinkingCertificate linking_set(const MatroidHandle& h, const ElementSet& prev,
                               const ElementSet& a,
                               const ElementSet& candidates = {},
                               std::uint64_t node_budget = 2'000'000,
                               int max_size = 8);

// One processed component of one layer in a layered basis construction.
struct LayerRecord {
  int layer = 0;             // 1-based iteration
  int parent = -1;           // record of the previous-layer component
  ElementSet component;      // parallel copies included
  ElementSet simple;         // component after simplification
  ElementSet circuit;        // empty when the component is a single element
  std::optional<Element> excluded;          // circuit element left out
  ElementSet linking;
  std::optional<Element> linking_excluded;  // linking element left out
  ElementSet witness;                       // circuit through both layers
  std::optional<LinkingCertificate> certificate;
  ElementSet added;  // this component's share of its layer
  int halving_iterations = 0;
  std::vector<int> halving_trace;
};

struct ConstructionState {
  ElementSet basis;
  std::vector<ElementSet> layers;  // first layer first
  std::vector<LayerRecord> records;

  int layer_count() const { return static_cast<int>(layers.size()); }
};

// Spanning forest whose fundamental graph has logarithmic diameter, built
// by repeatedly contracting halving cycles. Works block by block, so any
// graph is accepted.
ConstructionState build_log_diameter_tree(const Graph& g);
ConstructionState build_log_diameter_tree(const MatroidHandle& graphic);

// Basis whose fundamental graph has O(sqrt r) diameter, built by repeatedly
// contracting largest circuits and linking consecutive layers.
ConstructionState build_sqrt_diameter_basis(const MatroidHandle& m,
                                            const PlannerConfig& config = {});

// Largest fundamental-graph distance from an element of a record's share to the
// nearest element of its parent's share, over all records with a parent.
int max_layer_distance(const FundamentalGraph& s,
                       const ConstructionState& state);

}  // namespace basis_relabel
