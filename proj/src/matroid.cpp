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

#include "basis_relabel/matroid.hpp"

#include <map>
#include <numeric>
#include <utility>

#include "basis_relabel/errors.hpp"

namespace basis_relabel {

GroundSet GroundSet::numbered(int size) {
  GroundSet g;
  g.size = size;
  g.names.reserve(size);
  for (int i = 0; i < size; ++i) g.names.push_back("e" + std::to_string(i));
  return g;
}

IndependenceOracle::IndependenceOracle(GroundSet ground)
    : ground_(std::move(ground)) {
  if (ground_.size < 0) throw UsageError("negative ground set size");
  if (static_cast<int>(ground_.names.size()) != ground_.size) {
    ground_.names = GroundSet::numbered(ground_.size).names;
  }
}

bool IndependenceOracle::independent(std::span<const Element> x) const {
  charge(1);
  return do_independent(x);
}

ElementSet IndependenceOracle::greedy_extend(
    std::span<const Element> base, std::span<const Element> candidates) const {
  return do_greedy_extend(base, candidates);
}

ElementSet IndependenceOracle::circuit_in(std::span<const Element> indep,
                                          Element extra) const {
  return do_circuit_in(indep, extra);
}

ElementSet IndependenceOracle::do_greedy_extend(
    std::span<const Element> base, std::span<const Element> candidates) const {
  std::vector<Element> current(base.begin(), base.end());
  ElementSet kept;
  for (Element c : candidates) {
    current.push_back(c);
    if (do_independent(current)) {
      kept.push_back(c);
    } else {
      current.pop_back();
    }
  }
  charge(candidates.size());
  return kept;
}

ElementSet IndependenceOracle::do_circuit_in(std::span<const Element> indep,
                                             Element extra) const {
  std::vector<Element> x(indep.begin(), indep.end());
  x.push_back(extra);
  charge(1 + indep.size());
  if (do_independent(x)) return {};
  ElementSet circuit{extra};
  for (std::size_t i = 0; i < indep.size(); ++i) {
    // Swap the candidate out for `extra`; independence means it is in C.
    std::vector<Element> y(indep.begin(), indep.end());
    y[i] = extra;
    if (do_independent(y)) circuit.push_back(indep[i]);
  }
  return make_set(std::move(circuit));
}

MatroidHandle::MatroidHandle(std::shared_ptr<const IndependenceOracle> oracle)
    : oracle_(std::move(oracle)) {
  const int m = oracle_->ground_size();
  elements_.resize(m);
  std::iota(elements_.begin(), elements_.end(), 0);
  member_.assign(m, 1);
  rank_ = static_cast<int>(oracle_->greedy_extend({}, elements_).size());
}

bool MatroidHandle::contains(Element e) const {
  return e >= 0 && e < static_cast<int>(member_.size()) && member_[e];
}

void MatroidHandle::require_in_view(std::span<const Element> x) const {
  for (Element e : x) {
    if (!contains(e)) {
      throw DomainError("element " + std::to_string(e) +
                        " is not in the ground set of this view");
    }
  }
}

std::vector<Element> MatroidHandle::with_contracted(
    std::span<const Element> x) const {
  std::vector<Element> all(contracted_basis_);
  ElementSet xs = make_set(x);
  all.insert(all.end(), xs.begin(), xs.end());
  return all;
}

bool MatroidHandle::is_independent(std::span<const Element> x) const {
  require_in_view(x);
  return oracle_->independent(with_contracted(x));
}

int MatroidHandle::rank(std::span<const Element> x) const {
  return static_cast<int>(maximal_independent(x).size());
}

ElementSet MatroidHandle::maximal_independent(
    std::span<const Element> x) const {
  require_in_view(x);
  ElementSet xs = make_set(x);
  return oracle_->greedy_extend(contracted_basis_, xs);
}

ElementSet MatroidHandle::greedy_basis() const {
  return oracle_->greedy_extend(contracted_basis_, elements_);
}

bool MatroidHandle::is_basis(std::span<const Element> x) const {
  ElementSet xs = make_set(x);
  if (static_cast<int>(xs.size()) != rank_ || xs.size() != x.size()) {
    require_in_view(x);
    return false;
  }
  return is_independent(xs);
}

Circuit MatroidHandle::fundamental_circuit(const ElementSet& basis,
                                           Element e) const {
  require_in_view(basis);
  require_in_view(std::span<const Element>(&e, 1));
  if (set_contains(basis, e)) {
    throw UsageError("element " + std::to_string(e) +
                     " is in the basis; it has no fundamental circuit");
  }
  if (!is_basis(basis)) {
    throw PreconditionError("fundamental_circuit: argument is not a basis");
  }
  return Circuit{fundamental_circuit_unchecked(basis, e)};
}

ElementSet MatroidHandle::fundamental_circuit_unchecked(const ElementSet& basis,
                                                        Element e) const {
  std::vector<Element> base(contracted_basis_);
  base.insert(base.end(), basis.begin(), basis.end());
  ElementSet c = oracle_->circuit_in(base, e);
  return set_minus(make_set(std::move(c)), make_set(contracted_basis_));
}

MatroidHandle MatroidHandle::contract(std::span<const Element> t) const {
  require_in_view(t);
  ElementSet ts = make_set(t);
  MatroidHandle out;
  out.oracle_ = oracle_;
  out.contracted_ = set_union(contracted_, ts);
  out.deleted_ = deleted_;
  out.elements_ = set_minus(elements_, ts);
  ElementSet kept = oracle_->greedy_extend(contracted_basis_, ts);
  out.contracted_basis_ = contracted_basis_;
  out.contracted_basis_.insert(out.contracted_basis_.end(), kept.begin(),
                               kept.end());
  out.member_ = member_;
  for (Element e : ts) out.member_[e] = 0;
  out.rank_ = rank_ - static_cast<int>(kept.size());
  return out;
}

MatroidHandle MatroidHandle::remove(std::span<const Element> d) const {
  require_in_view(d);
  ElementSet ds = make_set(d);
  MatroidHandle out;
  out.oracle_ = oracle_;
  out.contracted_ = contracted_;
  out.contracted_basis_ = contracted_basis_;
  out.deleted_ = set_union(deleted_, ds);
  out.elements_ = set_minus(elements_, ds);
  out.member_ = member_;
  for (Element e : ds) out.member_[e] = 0;
  out.rank_ = static_cast<int>(
      oracle_->greedy_extend(contracted_basis_, out.elements_).size());
  return out;
}

MatroidHandle MatroidHandle::restrict_to(std::span<const Element> x) const {
  require_in_view(x);
  return remove(set_minus(elements_, make_set(x)));
}

std::vector<ElementSet> ComponentPartition::classes() const {
  std::vector<ElementSet> out(count);
  for (int e = 0; e < static_cast<int>(id.size()); ++e) {
    if (id[e] >= 0) out[id[e]].push_back(e);
  }
  return out;
}

std::size_t FundamentalGraph::edge_count() const {
  std::size_t total = 0;
  for (Element b : basis) total += adjacency[b].size();
  return total;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

FundamentalGraph build_fundamental_graph(const MatroidHandle& m,
                                         const ElementSet& basis,
                                         bool parallel) {
  if (!m.is_basis(basis)) {
    throw PreconditionError("fundamental_graph: argument is not a basis");
  }
  FundamentalGraph s;
  s.basis = make_set(basis);
  s.vertices = m.elements();
  s.adjacency.assign(m.oracle().ground_size(), {});
  const ElementSet outside = set_minus(m.elements(), s.basis);
  std::vector<ElementSet> circuits(outside.size());
  const int count = static_cast<int>(outside.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (int i = 0; i < count; ++i) {
    circuits[i] = m.fundamental_circuit_unchecked(s.basis, outside[i]);
  }
  for (int i = 0; i < count; ++i) {
    const Element f = outside[i];
    for (Element b : circuits[i]) {
      if (b == f) continue;
      s.adjacency[f].push_back(b);
      s.adjacency[b].push_back(f);
    }
  }
  for (auto& adj : s.adjacency) std::sort(adj.begin(), adj.end());
  return s;
}

// Single-source BFS into caller-provided buffers; returns the eccentricity.
int bfs_eccentricity(const FundamentalGraph& s, Element source,
                     std::vector<int>& dist, std::vector<Element>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  int far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (Element v : s.adjacency[u]) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      far = std::max(far, dist[v]);
      queue.push_back(v);
    }
  }
  return far;
}

}  // namespace

ElementSet loops(const MatroidHandle& m) {
  ElementSet out;
  for (Element e : m.elements()) {
    if (m.rank(std::span<const Element>(&e, 1)) == 0) out.push_back(e);
  }
  return out;
}

std::vector<ElementSet> parallel_classes(const MatroidHandle& m) {
  const ElementSet loop_set = loops(m);
  const ElementSet basis = m.greedy_basis();
  const ElementSet sorted_basis = make_set(basis);
  // Parallel elements are clones, so they share the basis part of their
  // fundamental circuits. Group by that signature, then confirm pairwise.
  std::map<ElementSet, ElementSet> groups;
  for (Element f : set_minus(m.elements(), set_union(sorted_basis, loop_set))) {
    ElementSet key = set_without(m.fundamental_circuit_unchecked(sorted_basis, f), f);
    groups[key].push_back(f);
  }
  DisjointSets sets(m.oracle().ground_size());
  for (auto& [key, members] : groups) {
    if (key.size() == 1) {
      for (Element f : members) sets.unite(key[0], f);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (sets.find(members[i]) == sets.find(members[j])) continue;
        const Element pair[2] = {members[i], members[j]};
        if (m.rank(pair) == 1) sets.unite(members[i], members[j]);
      }
    }
  }
  std::map<int, ElementSet> by_root;
  for (Element e : set_minus(m.elements(), loop_set)) {
    by_root[sets.find(e)].push_back(e);
  }
  std::vector<ElementSet> out;
  for (auto& [root, members] : by_root) {
    if (members.size() >= 2) out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplifyResult simplify(const MatroidHandle& m) {
  ElementSet removed = loops(m);
  for (const ElementSet& cls : parallel_classes(m)) {
    removed.insert(removed.end(), cls.begin() + 1, cls.end());
  }
  removed = make_set(std::move(removed));
  return SimplifyResult{m.remove(removed), removed};
}

ComponentPartition components(const MatroidHandle& m) {
  if (!loops(m).empty()) {
    throw PreconditionError("components: the view has loops; simplify first");
  }
  const FundamentalGraph s = fundamental_graph(m, m.greedy_basis());
  const int n = m.oracle().ground_size();
  DisjointSets sets(n);
  for (Element b : s.basis) {
    for (Element f : s.adjacency[b]) sets.unite(b, f);
  }
  ComponentPartition p;
  p.id.assign(n, -1);
  std::vector<int> root_id(n, -1);
  for (Element e : m.elements()) {
    const int r = sets.find(e);
    if (root_id[r] < 0) root_id[r] = p.count++;
    p.id[e] = root_id[r];
  }
  return p;
}

FundamentalGraph fundamental_graph(const MatroidHandle& m,
                                   const ElementSet& basis) {
  return build_fundamental_graph(m, basis, true);
}

FundamentalGraph fundamental_graph_serial(const MatroidHandle& m,
                                          const ElementSet& basis) {
  return build_fundamental_graph(m, basis, false);
}

std::vector<int> graph_distances(const FundamentalGraph& s,
                                 std::span<const Element> sources) {
  std::vector<int> dist(s.adjacency.size(), -1);
  std::vector<Element> queue;
  for (Element src : sources) {
    if (src < 0 || src >= static_cast<int>(dist.size())) {
      throw DomainError("graph_distances: unknown element");
    }
    if (dist[src] < 0) {
      dist[src] = 0;
      queue.push_back(src);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (Element v : s.adjacency[u]) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

std::optional<int> graph_distance(const FundamentalGraph& s, Element e,
                                  Element f) {
  const std::vector<int> dist = graph_distances(s, std::span<const Element>(&e, 1));
  if (f < 0 || f >= static_cast<int>(dist.size())) {
    throw DomainError("graph_distance: unknown element");
  }
  if (dist[f] < 0) return std::nullopt;
  return dist[f];
}

std::vector<Element> shortest_path(const FundamentalGraph& s, Element e,
                                   Element f) {
  const int n = static_cast<int>(s.adjacency.size());
  if (e < 0 || e >= n || f < 0 || f >= n) {
    throw DomainError("shortest_path: unknown element");
  }
  std::vector<Element> parent(n, -2);
  std::vector<Element> queue{e};
  parent[e] = -1;
  for (std::size_t head = 0; head < queue.size() && parent[f] == -2; ++head) {
    const Element u = queue[head];
    for (Element v : s.adjacency[u]) {
      if (parent[v] != -2) continue;
      parent[v] = u;
      queue.push_back(v);
    }
  }
  if (parent[f] == -2) return {};
  std::vector<Element> path;
  for (Element x = f; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

int diameter(const FundamentalGraph& s) {
  const int count = static_cast<int>(s.vertices.size());
  int best = 0;
#pragma omp parallel
  {
    std::vector<int> dist(s.adjacency.size());
    std::vector<Element> queue;
    int local = 0;
#pragma omp for schedule(dynamic, 4) nowait
    for (int i = 0; i < count; ++i) {
      local = std::max(local, bfs_eccentricity(s, s.vertices[i], dist, queue));
    }
#pragma omp critical
    best = std::max(best, local);
  }
  return best;
}

int diameter_serial(const FundamentalGraph& s) {
  std::vector<int> dist(s.adjacency.size());
  std::vector<Element> queue;
  int best = 0;
  for (Element v : s.vertices) {
    best = std::max(best, bfs_eccentricity(s, v, dist, queue));
  }
  return best;
}

}  // namespace basis_relabel
