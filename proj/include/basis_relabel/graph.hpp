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
#include <span>
#include <utility>
#include <vector>

namespace basis_relabel {

// Undirected multigraph. Edge ids are dense; self-loops and parallel edges
// are allowed.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  explicit Graph(int n) : vertex_count(n) {}

  int add_edge(int u, int v);
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_loop(int edge) const { return edges[edge].first == edges[edge].second; }

  // Throws PreconditionError on out-of-range endpoints.
  void validate() const;

  // Per vertex, (neighbour, edge id) pairs in ascending edge id. A self-loop
  // appears once.
  std::vector<std::vector<std::pair<int, int>>> incidence() const;

  bool operator==(const Graph&) const = default;
};

struct BlockDecomposition {
  // Edge ids of each block, sorted; blocks ordered by smallest edge id.
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;
};

// Lowpoint decomposition into 2-connected blocks. Bridges come out as
// single-edge blocks; self-loops belong to no block.
BlockDecomposition biconnected_blocks(const Graph& g);

// Loopless, no isolated vertices, at least two edges, and a single block.
bool is_two_connected(const Graph& g);

bool is_simple(const Graph& g);

struct DisjointPaths {
  // Edge ids of each path in order from its S end to its T end. A path with
  // no edges is a single vertex of S intersect T.
  std::vector<std::vector<int>> paths;
  std::vector<int> starts;
  std::vector<int> ends;
  // Union of the paths' edges, sorted.
  std::vector<int> edges;
};

// Two internally vertex-disjoint paths between auxiliary vertices s (joined
// to every vertex of `sources`) and t (joined to every vertex of `targets`),
// with the auxiliary edges stripped and each path trimmed so that only its
// endpoints touch sources or targets. Unit vertex capacities, augmenting
// paths explored in edge-id order. Throws ConnectivityError when fewer than
// two such paths exist.
DisjointPaths two_disjoint_paths(const Graph& g, std::span<const int> sources,
                                 std::span<const int> targets);

// Edge ids of a longest cycle (sorted), or nullopt for a forest. Exact
// branch and bound; throws BudgetExceededError after `node_budget` search
// nodes.
std::optional<std::vector<int>> longest_cycle(const Graph& g,
                                              std::uint64_t node_budget);

// Vertices of the cycle formed by `cycle_edges`, in traversal order starting
// from its smallest vertex. The edge list must form one simple cycle.
std::vector<int> cycle_vertex_order(const Graph& g,
                                    std::span<const int> cycle_edges);

}  // namespace basis_relabel
