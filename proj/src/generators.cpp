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

#include "basis_relabel/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "basis_relabel/errors.hpp"

namespace basis_relabel {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw UsageError("Rng::below: empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

Graph cycle_graph(int n) {
  if (n < 1) throw UsageError("cycle_graph: need at least one vertex");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw UsageError("path_graph: need at least one vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph bowtie_graph() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(2, 4);
  return g;
}

Graph random_two_connected(int n, std::uint64_t seed) {
  if (n < 3) throw UsageError("random_two_connected: need n >= 3");
  Rng rng(seed);
  Graph g(n);
  std::set<std::pair<int, int>> present;
  auto connect = [&](int u, int v) {
    g.add_edge(u, v);
    present.insert({std::min(u, v), std::max(u, v)});
  };
  connect(0, 1);
  connect(1, 2);
  connect(0, 2);
  int used = 3;
  while (used < n) {
    const int length = std::min(n - used, rng.between(1, 3));
    const int u = static_cast<int>(rng.below(used));
    int v = static_cast<int>(rng.below(used - 1));
    if (v >= u) ++v;
    int last = u;
    for (int k = 0; k < length; ++k) {
      connect(last, used);
      last = used++;
    }
    connect(last, v);
    // Occasional chord between two existing, non-adjacent vertices.
    if (rng.below(4) == 0) {
      const int a = static_cast<int>(rng.below(used));
      const int b = static_cast<int>(rng.below(used));
      if (a != b && !present.count({std::min(a, b), std::max(a, b)})) {
        connect(a, b);
      }
    }
  }
  return g;
}

Graph random_multigraph(int n, int m, Rng& rng) {
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    g.add_edge(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)));
  }
  return g;
}

Matrix random_gf2_matrix(int rows, int cols, Rng& rng) {
  Matrix a(Field::kGf2, rows, cols);
  for (auto& x : a.entries) x = rng.coin() ? 1 : 0;
  return a;
}

Matrix random_rational_matrix(int rows, int cols, int magnitude, Rng& rng) {
  Matrix a(Field::kRational, rows, cols);
  for (auto& x : a.entries) {
    const int num = rng.between(-magnitude, magnitude);
    const int den = rng.between(1, magnitude);
    x = mpq_class(num, den);
    x.canonicalize();
  }
  return a;
}

ElementSet random_basis(const MatroidHandle& m, Rng& rng) {
  std::vector<Element> order = m.elements();
  rng.shuffle(order);
  std::vector<Element> chosen;
  for (Element e : order) {
    chosen.push_back(e);
    if (!m.is_independent(chosen)) chosen.pop_back();
  }
  return make_set(std::move(chosen));
}

LabelledBasis random_labelling(const ElementSet& basis, Rng& rng) {
  std::vector<Element> order = basis;
  rng.shuffle(order);
  return LabelledBasis(std::move(order));
}

LabelledBasis random_compatible_target(const MatroidHandle& m,
                                       const LabelledBasis& source, Rng& rng) {
  const ComponentPartition parts = components(m.remove(loops(m)));
  const ElementSet target = random_basis(m, rng);
  std::vector<std::vector<Element>> pool(parts.count);
  for (Element e : target) pool[parts.id[e]].push_back(e);
  for (auto& p : pool) rng.shuffle(p);
  std::vector<Element> by_label(source.rank());
  for (int label = 1; label <= source.rank(); ++label) {
    auto& p = pool[parts.id[source.element(label)]];
    by_label[label - 1] = p.back();
    p.pop_back();
  }
  return LabelledBasis(std::move(by_label));
}

}  // namespace basis_relabel
