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
#include <chrono>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "basis_relabel/errors.hpp"
#include "basis_relabel/models.hpp"
#include "basis_relabel/reconfig.hpp"

namespace basis_relabel {
namespace {

using Clock = std::chrono::steady_clock;

std::string describe_failures(const PlanReport& report) {
  std::string out = "labelled bases are not reconfigurable:";
  for (const LabelDiagnosis& d : report.labels) {
    if (d.ok()) continue;
    out += " label " + std::to_string(d.label) + " (element " +
           std::to_string(d.source) + " in component " +
           std::to_string(d.source_component) + ", element " +
           std::to_string(d.target) + " in component " +
           std::to_string(d.target_component) + ")";
  }
  return out;
}

PlanReport require_feasible(const MatroidHandle& m, const LabelledBasis& t1,
                            const LabelledBasis& t2) {
  PlanReport report = feasible(m, t1, t2);
  if (!report.feasible) throw InfeasibleError(describe_failures(report));
  return report;
}

long long label_fix_allowance(int rank, int diam) {
  return static_cast<long long>(rank) * std::max(0, 3 * diam - 3);
}

// t1 -> hub unlabelled, label fixing on the hub, then t2's route to the hub
// in reverse.
ExchangeSequence plan_through(const MatroidHandle& m, const LabelledBasis& t1,
                              const LabelledBasis& t2, const ElementSet& hub,
                              std::optional<int>* hub_diameter) {
  ExchangeSequence to_hub = reconfigure_unlabelled(m, t1, hub);
  ExchangeSequence from_target = reconfigure_unlabelled(m, t2, hub);
  LabelledBasis current = t1;
  for (const ExchangeStep& s : to_hub) current = apply_unchecked(current, s);
  LabelledBasis goal = t2;
  for (const ExchangeStep& s : from_target) goal = apply_unchecked(goal, s);

  const FundamentalGraph graph = fundamental_graph(m, hub);
  if (hub_diameter != nullptr) *hub_diameter = diameter(graph);
  ExchangeSequence seq = std::move(to_hub);
  for (int label = 1; label <= current.rank(); ++label) {
    const Element have = current.element(label);
    const Element want = goal.element(label);
    if (have == want) continue;
    for (const ExchangeStep& s : swap_labels(graph, current, have, want)) {
      seq.push_back(s);
      current = apply_unchecked(current, s);
    }
  }
  for (const ExchangeStep& s : reverse_sequence(from_target)) seq.push_back(s);
  return seq;
}

void keep_shorter_direct_route(const MatroidHandle& m, const LabelledBasis& t1,
                               const LabelledBasis& t2, PlanReport& report) {
  ExchangeSequence direct = plan_through(m, t1, t2, t2.basis(), nullptr);
  if (direct.size() < report.sequence.size()) {
    report.sequence = std::move(direct);
    report.direct_route = true;
  }
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kGeneric:
      return "generic";
    case Algorithm::kGraphicFast:
      return "graphic-fast";
    case Algorithm::kMatroidFast:
      return "matroid-fast";
    case Algorithm::kAuto:
      return "auto";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kGeneric, Algorithm::kGraphicFast,
                      Algorithm::kMatroidFast, Algorithm::kAuto}) {
    if (algorithm_name(a) == name) return a;
  }
  throw UsageError("unknown algorithm '" + std::string(name) + "'");
}

PlanReport feasible(const MatroidHandle& m, const LabelledBasis& t1,
                    const LabelledBasis& t2) {
  if (t1.rank() != t2.rank()) {
    throw UsageError("labelled bases have different ranks (" +
                     std::to_string(t1.rank()) + " and " +
                     std::to_string(t2.rank()) + ")");
  }
  validate_labelled_basis(m, t1);
  validate_labelled_basis(m, t2);
  const ComponentPartition parts = components(m.remove(loops(m)));
  PlanReport report;
  report.feasible = true;
  for (int label = 1; label <= t1.rank(); ++label) {
    LabelDiagnosis d;
    d.label = label;
    d.source = t1.element(label);
    d.target = t2.element(label);
    d.source_component = parts.id[d.source];
    d.target_component = parts.id[d.target];
    report.feasible = report.feasible && d.ok();
    report.labels.push_back(d);
  }
  return report;
}

ExchangeSequence swap_labels(const FundamentalGraph& s, const LabelledBasis& t,
                             Element e, Element f) {
  if (e == f) throw UsageError("swap_labels: the two elements must differ");
  if (t.basis() != s.basis) {
    throw UsageError("swap_labels: fundamental graph is for another basis");
  }
  if (!set_contains(s.basis, e) || !set_contains(s.basis, f)) {
    throw UsageError("swap_labels: both elements must be in the basis");
  }
  const std::vector<Element> path = shortest_path(s, e, f);
  if (path.empty()) {
    throw InfeasibleError("swap_labels: elements " + std::to_string(e) +
                          " and " + std::to_string(f) +
                          " lie in different components");
  }
  std::unordered_map<Element, int> label;
  for (std::size_t i = 0; i < path.size(); i += 2) {
    label[path[i]] = *t.label_of(path[i]);
  }
  const int hops = static_cast<int>(path.size()) - 1;
  ExchangeSequence seq;
  // Swaps the labels at path[j] and path[j + 2] through path[j + 1].
  auto rotate = [&](int j) {
    const Element x = path[j], y = path[j + 1], z = path[j + 2];
    seq.push_back({x, y, label[x]});
    seq.push_back({z, x, label[z]});
    seq.push_back({y, z, label[x]});
    std::swap(label[x], label[z]);
  };
  for (int j = 0; j + 2 <= hops; j += 2) rotate(j);
  for (int j = hops - 4; j >= 0; j -= 2) rotate(j);
  return seq;
}

ExchangeSequence swap_labels(const MatroidHandle& m, const LabelledBasis& t,
                             Element e, Element f) {
  validate_labelled_basis(m, t);
  return swap_labels(fundamental_graph(m, t.basis()), t, e, f);
}

ExchangeSequence reconfigure_unlabelled(const MatroidHandle& m,
                                        const LabelledBasis& t1,
                                        const ElementSet& b2) {
  validate_labelled_basis(m, t1);
  if (!m.is_basis(b2)) {
    throw PreconditionError("reconfigure_unlabelled: target is not a basis");
  }
  const ElementSet target = make_set(b2);
  LabelledBasis current = t1;
  ElementSet basis = current.basis();
  ExchangeSequence seq;
  for (Element in : set_minus(target, basis)) {
    const ElementSet circuit = m.fundamental_circuit_unchecked(basis, in);
    Element out = -1;
    for (Element x : circuit) {
      if (x != in && !set_contains(target, x)) {
        out = x;
        break;
      }
    }
    if (out < 0) {
      throw std::logic_error("reconfigure_unlabelled: target is dependent");
    }
    const ExchangeStep step{out, in, *current.label_of(out)};
    current = apply_unchecked(current, step);
    basis = set_with(set_without(basis, out), in);
    seq.push_back(step);
  }
  return seq;
}

PlanReport plan_generic(const MatroidHandle& m, const LabelledBasis& t1,
                        const LabelledBasis& t2) {
  const auto start = Clock::now();
  const std::uint64_t calls = m.oracle_calls();
  PlanReport report = require_feasible(m, t1, t2);
  report.algorithm = Algorithm::kGeneric;
  report.sequence = plan_through(m, t1, t2, t2.basis(), &report.diameter);
  const long long r = t1.rank();
  report.declared_bound = 6 * r * r;
  report.oracle_calls = m.oracle_calls() - calls;
  report.wall_ms = elapsed_ms(start);
  return report;
}

PlanReport plan_graphic(const MatroidHandle& m, const LabelledBasis& t1,
                        const LabelledBasis& t2, const PlannerConfig&) {
  if (as_graphic(m) == nullptr) {
    throw UsageError("graphic-fast planner needs a graphic matroid");
  }
  const auto start = Clock::now();
  const std::uint64_t calls = m.oracle_calls();
  PlanReport report = require_feasible(m, t1, t2);
  report.algorithm = Algorithm::kGraphicFast;
  const ConstructionState state = build_log_diameter_tree(m);
  report.layer_count = state.layer_count();
  report.sequence = plan_through(m, t1, t2, state.basis, &report.diameter);
  keep_shorter_direct_route(m, t1, t2, report);
  const long long n = minor_graph(m).graph.vertex_count;
  report.declared_bound =
      2 * n + label_fix_allowance(t1.rank(), report.diameter.value_or(0));
  report.oracle_calls = m.oracle_calls() - calls;
  report.wall_ms = elapsed_ms(start);
  return report;
}

PlanReport plan_matroid_fast(const MatroidHandle& m, const LabelledBasis& t1,
                             const LabelledBasis& t2,
                             const PlannerConfig& config) {
  const auto start = Clock::now();
  const std::uint64_t calls = m.oracle_calls();
  PlanReport report = require_feasible(m, t1, t2);
  report.algorithm = Algorithm::kMatroidFast;
  ConstructionState state;
  try {
    state = build_sqrt_diameter_basis(m, config);
  } catch (const BudgetExceededError& err) {
    if (!config.allow_fallback) throw;
    PlanReport fallback = plan_generic(m, t1, t2);
    fallback.fell_back = true;
    fallback.fallback_reason = err.what();
    fallback.oracle_calls = m.oracle_calls() - calls;
    fallback.wall_ms = elapsed_ms(start);
    return fallback;
  }
  report.layer_count = state.layer_count();
  report.sequence = plan_through(m, t1, t2, state.basis, &report.diameter);
  keep_shorter_direct_route(m, t1, t2, report);
  const long long r = t1.rank();
  report.declared_bound =
      2 * r + label_fix_allowance(t1.rank(), report.diameter.value_or(0));
  report.oracle_calls = m.oracle_calls() - calls;
  report.wall_ms = elapsed_ms(start);
  return report;
}

PlanReport plan(const MatroidHandle& m, const LabelledBasis& t1,
                const LabelledBasis& t2, const PlannerConfig& config) {
  switch (config.algorithm) {
    case Algorithm::kGeneric:
      return plan_generic(m, t1, t2);
    case Algorithm::kGraphicFast:
      return plan_graphic(m, t1, t2, config);
    case Algorithm::kMatroidFast:
      return plan_matroid_fast(m, t1, t2, config);
    case Algorithm::kAuto:
      break;
  }
  return as_graphic(m) != nullptr ? plan_graphic(m, t1, t2, config)
                                  : plan_matroid_fast(m, t1, t2, config);
}

}  // namespace basis_relabel
