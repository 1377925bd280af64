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
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "basis_relabel/errors.hpp"
#include "basis_relabel/models.hpp"
#include "reconfig_internal.hpp"

namespace basis_relabel {
namespace {

// Choices that differ between the graphic and the general construction.
class LayerStrategy {
 public:
  virtual ~LayerStrategy() = default;
  virtual void begin_iteration(const MatroidHandle& view) = 0;
  // Components of the current view without its loops, parallel copies kept.
  virtual std::vector<ElementSet> components() = 0;
  virtual ElementSet simplify(const ElementSet& component) = 0;
  virtual ElementSet choose_circuit(const ElementSet& simple,
                                    LayerRecord& record) = 0;
  // Links `prev` to `a` inside the previous view `h`.
  virtual LinkingCertificate link(const MatroidHandle& h,
                                  const ElementSet& prev, const ElementSet& a,
                                  const ElementSet& circuit,
                                  std::optional<Element> excluded,
                                  const ElementSet& candidates) = 0;
};

class GraphicStrategy : public LayerStrategy {
 public:
  GraphicStrategy(std::uint64_t budget, int max_size)
      : budget_(budget), max_size_(max_size) {}

  void begin_iteration(const MatroidHandle& view) override {
    previous_ = std::move(current_);
    current_ = minor_graph(view);
  }

  std::vector<ElementSet> components() override {
    std::vector<ElementSet> out;
    for (const auto& block : biconnected_blocks(current_.graph).blocks) {
      ElementSet comp;
      for (int id : block) comp.push_back(current_.element_of_edge[id]);
      out.push_back(make_set(std::move(comp)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ElementSet simplify(const ElementSet& component) override {
    std::map<std::pair<int, int>, Element> first;
    for (Element x : component) {
      auto [u, v] = current_.graph.edges[current_.edge_of_element[x]];
      first.emplace(std::make_pair(std::min(u, v), std::max(u, v)), x);
    }
    ElementSet out;
    for (const auto& [key, x] : first) out.push_back(x);
    return make_set(std::move(out));
  }

  ElementSet choose_circuit(const ElementSet& simple,
                            LayerRecord& record) override {
    std::map<int, int> local;
    Graph g;
    for (Element x : simple) {
      auto [u, v] = current_.graph.edges[current_.edge_of_element[x]];
      for (int w : {u, v}) {
        if (local.emplace(w, g.vertex_count).second) ++g.vertex_count;
      }
      g.add_edge(local[u], local[v]);
    }
    const HalvingCycle cycle = find_halving_cycle(g);
    record.halving_iterations = cycle.iterations;
    record.halving_trace = cycle.max_block_trace;
    ElementSet out;
    for (int id : cycle.cycle) out.push_back(simple[id]);
    return make_set(std::move(out));
  }

  LinkingCertificate link(const MatroidHandle& h, const ElementSet& prev,
                          const ElementSet& a, const ElementSet& circuit,
                          std::optional<Element> excluded,
                          const ElementSet& candidates) override {
    if (excluded && h.is_independent(circuit)) {
      LinkingCertificate cert =
          make_linking_certificate(h, prev, a, ElementSet{*excluded});
      if (cert.accepted(prev, a)) return cert;
    }
    const Graph& whole = previous_.graph;
    Graph sub(whole.vertex_count);
    std::vector<Element> element_of;
    for (Element x : candidates) {
      auto [u, v] = whole.edges[previous_.edge_of_element[x]];
      sub.add_edge(u, v);
      element_of.push_back(x);
    }
    auto endpoints = [&](const ElementSet& xs) {
      std::vector<int> out;
      for (Element x : xs) {
        auto [u, v] = whole.edges[previous_.edge_of_element[x]];
        out.push_back(u);
        out.push_back(v);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    try {
      const DisjointPaths paths = two_disjoint_paths(
          sub, endpoints(prev), endpoints(circuit.empty() ? a : circuit));
      ElementSet p;
      for (int id : paths.edges) p.push_back(element_of[id]);
      p = make_set(std::move(p));
      if (p.empty() && excluded) p = {*excluded};
      LinkingCertificate cert = make_linking_certificate(h, prev, a, p);
      if (cert.accepted(prev, a)) return cert;
    } catch (const ConnectivityError&) {
    }
    return internal::search_linking(h, prev, a, candidates, excluded, budget_,
                                    max_size_);
  }

 private:
  std::uint64_t budget_;
  int max_size_;
  MinorGraph current_;
  MinorGraph previous_;
};

class GeneralStrategy : public LayerStrategy {
 public:
  explicit GeneralStrategy(const PlannerConfig& config) : config_(config) {}

  void begin_iteration(const MatroidHandle& view) override {
    view_ = std::make_unique<MatroidHandle>(view);
  }

  std::vector<ElementSet> components() override {
    const MatroidHandle loopless = view_->remove(loops(*view_));
    std::vector<ElementSet> out;
    for (ElementSet& cls : basis_relabel::components(loopless).classes()) {
      if (!cls.empty()) out.push_back(std::move(cls));
    }
    return out;
  }

  ElementSet simplify(const ElementSet& component) override {
    return basis_relabel::simplify(view_->restrict_to(component)).view.elements();
  }

  ElementSet choose_circuit(const ElementSet& simple, LayerRecord&) override {
    auto c = largest_circuit(view_->restrict_to(simple), config_.search_budget);
    if (!c) throw std::logic_error("layered basis: component has no circuit");
    return c->members;
  }

  LinkingCertificate link(const MatroidHandle& h, const ElementSet& prev,
                          const ElementSet& a, const ElementSet&,
                          std::optional<Element> excluded,
                          const ElementSet& candidates) override {
    return internal::search_linking(h, prev, a, candidates, excluded,
                                    config_.search_budget,
                                    config_.max_linking_size);
  }

 private:
  PlannerConfig config_;
  std::unique_ptr<MatroidHandle> view_;
};

ConstructionState run_layers(const MatroidHandle& m, LayerStrategy& strategy) {
  ConstructionState state;
  const int ground = m.oracle().ground_size();
  std::optional<MatroidHandle> previous_view;
  std::vector<int> previous_owner;

  for (int layer = 1;; ++layer) {
    const MatroidHandle view = m.contract(state.basis);
    strategy.begin_iteration(view);
    const std::vector<ElementSet> parts = strategy.components();
    if (parts.empty()) break;

    std::vector<int> owner(ground, -1);
    ElementSet layer_added;
    for (const ElementSet& part : parts) {
      LayerRecord rec;
      rec.layer = layer;
      rec.component = part;
      rec.simple = strategy.simplify(part);
      ElementSet a;
      if (rec.simple.size() == 1) {
        a = rec.simple;
      } else {
        rec.circuit = strategy.choose_circuit(rec.simple, rec);
        rec.excluded = rec.circuit.front();
        a = set_without(rec.circuit, *rec.excluded);
      }
      rec.added = a;
      if (layer > 1) {
        rec.parent = previous_owner[part.front()];
        const ElementSet& prev = state.records[rec.parent].added;
        LinkingCertificate cert =
            strategy.link(*previous_view, prev, a, rec.circuit, rec.excluded,
                          set_minus(part, a));
        rec.linking = cert.linking;
        rec.witness = cert.circuit;
        Element f = cert.linking.front();
        if (rec.excluded && set_contains(cert.linking, *rec.excluded)) {
          f = *rec.excluded;
        }
        rec.linking_excluded = f;
        rec.added = set_union(a, set_without(cert.linking, f));
        rec.certificate = std::move(cert);
      }
      layer_added = set_union(layer_added, rec.added);
      const int index = static_cast<int>(state.records.size());
      for (Element x : part) owner[x] = index;
      state.records.push_back(std::move(rec));
    }
    if (!view.is_independent(layer_added)) {
      throw std::logic_error("layered basis: layer is not independent");
    }
    state.layers.push_back(layer_added);
    state.basis = set_union(state.basis, layer_added);
    previous_view.emplace(view);
    previous_owner = std::move(owner);
  }
  if (!m.is_basis(state.basis)) {
    throw std::logic_error("layered basis: result is not a basis");
  }
  return state;
}

}  // namespace

ConstructionState build_log_diameter_tree(const MatroidHandle& graphic) {
  if (as_graphic(graphic) == nullptr) {
    throw UsageError("build_log_diameter_tree: the matroid is not graphic");
  }
  const PlannerConfig defaults;
  GraphicStrategy strategy(defaults.search_budget, defaults.max_linking_size);
  return run_layers(graphic, strategy);
}

ConstructionState build_log_diameter_tree(const Graph& g) {
  return build_log_diameter_tree(graphic_matroid(g));
}

ConstructionState build_sqrt_diameter_basis(const MatroidHandle& m,
                                            const PlannerConfig& config) {
  GeneralStrategy strategy(config);
  return run_layers(m, strategy);
}

int max_layer_distance(const FundamentalGraph& s,
                       const ConstructionState& state) {
  int worst = 0;
  for (const LayerRecord& rec : state.records) {
    if (rec.parent < 0) continue;
    const std::vector<int> dist =
        graph_distances(s, state.records[rec.parent].added);
    for (Element x : rec.added) {
      if (dist[x] < 0) {
        throw std::logic_error("layer element unreachable from its parent");
      }
      worst = std::max(worst, dist[x]);
    }
  }
  return worst;
}

}  // namespace basis_relabel
