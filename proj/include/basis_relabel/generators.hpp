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
#include <random>
#include <utility>
#include <vector>

#include "basis_relabel/graph.hpp"
#include "basis_relabel/labelled.hpp"
#include "basis_relabel/matroid.hpp"
#include "basis_relabel/models.hpp"

namespace basis_relabel {

// Seeded random source whose draws are identical on every platform: the
// bounded draw and the shuffle are written out rather than delegated to
// std distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  bool coin() { return (next() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::swap(xs[i - 1], xs[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
// Two triangles sharing one vertex.
Graph bowtie_graph();
// Simple 2-connected graph on n >= 3 vertices grown by random ears, with
// occasional chords.
Graph random_two_connected(int n, std::uint64_t seed);
// Random multigraph with loops allowed, for small property tests.
Graph random_multigraph(int n, int m, Rng& rng);

Matrix random_gf2_matrix(int rows, int cols, Rng& rng);
Matrix random_rational_matrix(int rows, int cols, int magnitude, Rng& rng);

// A basis found greedily over a random ordering of the view's elements.
ElementSet random_basis(const MatroidHandle& m, Rng& rng);
LabelledBasis random_labelling(const ElementSet& basis, Rng& rng);
// A random labelled basis whose labels sit in the same components as
// `source`'s, so the pair is reconfigurable.
LabelledBasis random_compatible_target(const MatroidHandle& m,
                                       const LabelledBasis& source, Rng& rng);

}  // namespace basis_relabel
