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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "basis_relabel/generators.hpp"
#include "basis_relabel/graph.hpp"
#include "basis_relabel/labelled.hpp"
#include "basis_relabel/matroid.hpp"
#include "basis_relabel/models.hpp"
#include "basis_relabel/oracle.hpp"

namespace basis_relabel::testing {

// Simple graphs on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> graphs_up_to_isomorphism(int n) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      index[i][j] = index[j][i] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  }
  const int p = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> maps;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> map(p);
    for (int k = 0; k < p; ++k) {
      map[k] = index[perm[pairs[k].first]][perm[pairs[k].second]];
    }
    maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    bool canonical = true;
    for (const auto& map : maps) {
      std::uint32_t image = 0;
      for (int k = 0; k < p; ++k) {
        if (mask >> k & 1u) image |= 1u << map[k];
      }
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    Graph g(n);
    for (int k = 0; k < p; ++k) {
      if (mask >> k & 1u) g.add_edge(pairs[k].first, pairs[k].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

struct NamedMatroid {
  std::string name;
  MatroidHandle matroid;
};

// Random graphic, uniform, GF(2) and rational matroids on at most
// `max_elements` elements.
inline std::vector<NamedMatroid> random_matroid_suite(int count,
                                                      std::uint64_t seed,
                                                      int max_elements = 10) {
  Rng rng(seed);
  std::vector<NamedMatroid> out;
  for (int i = 0; i < count; ++i) {
    const std::string tag = std::to_string(i);
    switch (i % 4) {
      case 0: {
        const int n = rng.between(2, 6);
        const int m = rng.between(1, max_elements);
        out.push_back({"graph-" + tag,
                       graphic_matroid(random_multigraph(n, m, rng))});
        break;
      }
      case 1: {
        const int n = rng.between(1, max_elements);
        const int k = rng.between(0, n);
        out.push_back({"uniform-" + tag, uniform_matroid(k, n)});
        break;
      }
      case 2: {
        const int cols = rng.between(2, max_elements);
        const int rows = rng.between(1, std::min(cols, 5));
        out.push_back({"gf2-" + tag,
                       linear_matroid(random_gf2_matrix(rows, cols, rng))});
        break;
      }
      default: {
        const int cols = rng.between(2, std::min(max_elements, 8));
        const int rows = rng.between(1, std::min(cols, 4));
        out.push_back({"rational-" + tag,
                       linear_matroid(random_rational_matrix(rows, cols, 2, rng))});
        break;
      }
    }
  }
  return out;
}

// Connectivity classes computed from brute-force circuit enumeration:
// two elements are related when some circuit contains both.
inline std::vector<int> circuit_classes(const MatroidHandle& m) {
  const int n = m.oracle().ground_size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Circuit& c : enumerate_circuits(m)) {
    for (Element e : c.members) parent[find(e)] = find(c.members.front());
  }
  std::vector<int> cls(n, -1);
  for (Element e : m.elements()) cls[e] = find(e);
  return cls;
}

// True when two partitions of `elements` agree up to renaming.
inline bool same_partition(const ElementSet& elements, const std::vector<int>& a,
                           const std::vector<int>& b) {
  for (Element x : elements) {
    for (Element y : elements) {
      if ((a[x] == a[y]) != (b[x] == b[y])) return false;
    }
  }
  return true;
}

inline ElementSet random_subset(const ElementSet& from, Rng& rng) {
  ElementSet out;
  for (Element e : from) {
    if (rng.coin()) out.push_back(e);
  }
  return out;
}

}  // namespace basis_relabel::testing
