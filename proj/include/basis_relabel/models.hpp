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

#include <gmpxx.h>

#include <cstdint>
#include <string_view>
#include <vector>

#include "basis_relabel/graph.hpp"
#include "basis_relabel/matroid.hpp"

namespace basis_relabel {

// Forests of a multigraph. A self-loop is a loop of the matroid.
class GraphicOracle : public IndependenceOracle {
 public:
  explicit GraphicOracle(Graph g);

  const Graph& graph() const { return graph_; }
  std::string_view kind() const override { return "graph"; }

 protected:
  bool do_independent(std::span<const Element> x) const override;
  ElementSet do_greedy_extend(std::span<const Element> base,
                              std::span<const Element> candidates) const override;
  ElementSet do_circuit_in(std::span<const Element> indep,
                           Element extra) const override;

 private:
  Graph graph_;
};

enum class Field { kGf2, kRational };

// Column-per-element matrix. Entries are exact; GF(2) matrices hold 0/1.
struct Matrix {
  Field field = Field::kGf2;
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> entries;  // row-major

  Matrix() = default;
  Matrix(Field f, int r, int c);

  mpq_class& at(int r, int c) { return entries[r * cols + c]; }
  const mpq_class& at(int r, int c) const { return entries[r * cols + c]; }
  bool operator==(const Matrix&) const = default;
};

// Column independence over GF(2), columns packed into 64-bit words.
class Gf2Oracle : public IndependenceOracle {
 public:
  explicit Gf2Oracle(const Matrix& a);
  std::string_view kind() const override { return "matrix-gf2"; }

 protected:
  bool do_independent(std::span<const Element> x) const override;

 private:
  int words_ = 0;
  std::vector<std::vector<std::uint64_t>> columns_;
};

// Column independence over the rationals by exact elimination.
class RationalOracle : public IndependenceOracle {
 public:
  explicit RationalOracle(const Matrix& a);
  std::string_view kind() const override { return "matrix-rational"; }

 protected:
  bool do_independent(std::span<const Element> x) const override;

 private:
  int rows_ = 0;
  std::vector<std::vector<mpq_class>> columns_;
};

class UniformOracle : public IndependenceOracle {
 public:
  UniformOracle(int k, int n);
  int k() const { return k_; }
  std::string_view kind() const override { return "uniform"; }

 protected:
  bool do_independent(std::span<const Element> x) const override;

 private:
  int k_;
};

MatroidHandle graphic_matroid(Graph g);
// Throws ParseError for a GF(2) matrix with entries other than 0 and 1.
MatroidHandle linear_matroid(const Matrix& a);
// Throws UsageError unless 0 <= k <= n.
MatroidHandle uniform_matroid(int k, int n);

// The base oracle as a graphic one, or nullptr.
const GraphicOracle* as_graphic(const MatroidHandle& m);

// The graph of a graphic view: contracted edges merged into their
// endpoints, deleted edges dropped. Edge i of `graph` is view element
// `element_of_edge[i]`; original vertex v became `vertex_of[v]`.
struct MinorGraph {
  Graph graph;
  std::vector<Element> element_of_edge;
  std::vector<int> edge_of_element;
  std::vector<int> vertex_of;
};

// Throws UsageError when the view is not over a graphic oracle.
MinorGraph minor_graph(const MatroidHandle& m);

}  // namespace basis_relabel
