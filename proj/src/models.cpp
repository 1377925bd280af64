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

#include "basis_relabel/models.hpp"

#include <memory>
#include <numeric>
#include <string>
#include <utility>

#include "basis_relabel/errors.hpp"

namespace basis_relabel {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

GroundSet edge_names(const Graph& g) {
  GroundSet ground;
  ground.size = g.edge_count();
  for (auto [u, v] : g.edges) {
    ground.names.push_back(std::to_string(u) + "-" + std::to_string(v));
  }
  return ground;
}

}  // namespace

GraphicOracle::GraphicOracle(Graph g)
    : IndependenceOracle(edge_names(g)), graph_(std::move(g)) {
  graph_.validate();
}

bool GraphicOracle::do_independent(std::span<const Element> x) const {
  std::vector<int> parent(graph_.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (Element e : x) {
    auto [u, v] = graph_.edges[e];
    const int a = find_root(parent, u);
    const int b = find_root(parent, v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

ElementSet GraphicOracle::do_greedy_extend(
    std::span<const Element> base, std::span<const Element> candidates) const {
  std::vector<int> parent(graph_.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (Element e : base) {
    auto [u, v] = graph_.edges[e];
    parent[find_root(parent, u)] = find_root(parent, v);
  }
  ElementSet kept;
  for (Element c : candidates) {
    auto [u, v] = graph_.edges[c];
    const int a = find_root(parent, u);
    const int b = find_root(parent, v);
    if (a == b) continue;
    parent[a] = b;
    kept.push_back(c);
  }
  charge(candidates.size());
  return kept;
}

ElementSet GraphicOracle::do_circuit_in(std::span<const Element> indep,
                                        Element extra) const {
  charge(1 + indep.size());
  auto [from, to] = graph_.edges[extra];
  if (from == to) return {extra};
  // The tree path between the endpoints of `extra` in the forest `indep`.
  std::vector<std::vector<std::pair<int, Element>>> adj(graph_.vertex_count);
  for (Element e : indep) {
    auto [u, v] = graph_.edges[e];
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  std::vector<Element> via(graph_.vertex_count, -1);
  std::vector<int> prev(graph_.vertex_count, -1);
  std::vector<int> queue{from};
  prev[from] = from;
  for (std::size_t head = 0; head < queue.size() && prev[to] < 0; ++head) {
    const int u = queue[head];
    for (auto [w, e] : adj[u]) {
      if (prev[w] >= 0) continue;
      prev[w] = u;
      via[w] = e;
      queue.push_back(w);
    }
  }
  if (prev[to] < 0) return {};
  ElementSet circuit{extra};
  for (int v = to; v != from; v = prev[v]) circuit.push_back(via[v]);
  return make_set(std::move(circuit));
}

Matrix::Matrix(Field f, int r, int c)
    : field(f), rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

Gf2Oracle::Gf2Oracle(const Matrix& a)
    : IndependenceOracle(GroundSet::numbered(a.cols)),
      words_((a.rows + 63) / 64),
      columns_(a.cols, std::vector<std::uint64_t>((a.rows + 63) / 64, 0)) {
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) {
      const mpq_class& v = a.at(r, c);
      if (v == 1) {
        columns_[c][r / 64] |= std::uint64_t{1} << (r % 64);
      } else if (v != 0) {
        throw ParseError("GF(2) entries must be 0 or 1", r + 1, c + 1);
      }
    }
  }
}

bool Gf2Oracle::do_independent(std::span<const Element> x) const {
  // XOR basis keyed by the highest set bit of each stored vector.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<int> pivots;
  auto leading = [&](const std::vector<std::uint64_t>& v) {
    for (int w = words_ - 1; w >= 0; --w) {
      if (v[w]) return w * 64 + 63 - __builtin_clzll(v[w]);
    }
    return -1;
  };
  for (Element e : x) {
    std::vector<std::uint64_t> v = columns_[e];
    int lead = leading(v);
    while (lead >= 0) {
      auto it = std::find(pivots.begin(), pivots.end(), lead);
      if (it == pivots.end()) break;
      const auto& b = basis[it - pivots.begin()];
      for (int w = 0; w < words_; ++w) v[w] ^= b[w];
      lead = leading(v);
    }
    if (lead < 0) return false;
    basis.push_back(std::move(v));
    pivots.push_back(lead);
  }
  return true;
}

RationalOracle::RationalOracle(const Matrix& a)
    : IndependenceOracle(GroundSet::numbered(a.cols)),
      rows_(a.rows),
      columns_(a.cols, std::vector<mpq_class>(a.rows)) {
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) columns_[c][r] = a.at(r, c);
  }
}

bool RationalOracle::do_independent(std::span<const Element> x) const {
  const int k = static_cast<int>(x.size());
  if (k > rows_) return false;
  // Row echelon form of the rows_ x k submatrix; independent iff rank k.
  std::vector<std::vector<mpq_class>> m(rows_, std::vector<mpq_class>(k));
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < rows_; ++r) m[r][c] = columns_[x[c]][r];
  }
  int row = 0;
  for (int c = 0; c < k; ++c) {
    int pivot = -1;
    for (int r = row; r < rows_; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(m[row], m[pivot]);
    for (int r = row + 1; r < rows_; ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class factor = m[r][c] / m[row][c];
      for (int j = c; j < k; ++j) m[r][j] -= factor * m[row][j];
    }
    ++row;
  }
  return true;
}

UniformOracle::UniformOracle(int k, int n)
    : IndependenceOracle(GroundSet::numbered(n)), k_(k) {
  if (k < 0 || k > n) {
    throw UsageError("uniform matroid needs 0 <= k <= n (got k=" +
                     std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
}

bool UniformOracle::do_independent(std::span<const Element> x) const {
  return static_cast<int>(x.size()) <= k_;
}

MatroidHandle graphic_matroid(Graph g) {
  return MatroidHandle(std::make_shared<GraphicOracle>(std::move(g)));
}

MatroidHandle linear_matroid(const Matrix& a) {
  if (static_cast<int>(a.entries.size()) != a.rows * a.cols) {
    throw ParseError("matrix entry count does not match its shape", 1, 1);
  }
  if (a.field == Field::kGf2) {
    return MatroidHandle(std::make_shared<Gf2Oracle>(a));
  }
  return MatroidHandle(std::make_shared<RationalOracle>(a));
}

MatroidHandle uniform_matroid(int k, int n) {
  return MatroidHandle(std::make_shared<UniformOracle>(k, n));
}

const GraphicOracle* as_graphic(const MatroidHandle& m) {
  return dynamic_cast<const GraphicOracle*>(&m.oracle());
}

MinorGraph minor_graph(const MatroidHandle& m) {
  const GraphicOracle* graphic = as_graphic(m);
  if (graphic == nullptr) {
    throw UsageError("minor_graph: the matroid is not graphic");
  }
  const Graph& g = graphic->graph();
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (Element e : m.contracted()) {
    auto [u, v] = g.edges[e];
    const int a = find_root(parent, u);
    const int b = find_root(parent, v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  MinorGraph out;
  out.vertex_of.assign(g.vertex_count, -1);
  std::vector<int> id_of_root(g.vertex_count, -1);
  int count = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    const int r = find_root(parent, v);
    if (id_of_root[r] < 0) id_of_root[r] = count++;
    out.vertex_of[v] = id_of_root[r];
  }
  out.graph = Graph(count);
  out.edge_of_element.assign(g.edge_count(), -1);
  for (Element e : m.elements()) {
    auto [u, v] = g.edges[e];
    out.edge_of_element[e] = out.graph.add_edge(out.vertex_of[u], out.vertex_of[v]);
    out.element_of_edge.push_back(e);
  }
  return out;
}

}  // namespace basis_relabel
