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
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "basis_relabel/errors.hpp"
#include "basis_relabel/reconfig.hpp"

namespace basis_relabel {
namespace {

// G/C with every cycle vertex merged into the smallest one.
Graph contract_cycle(const Graph& g, const std::vector<char>& in_cycle_edge,
                     std::vector<int>& merged) {
  merged.assign(g.vertex_count, 0);
  std::iota(merged.begin(), merged.end(), 0);
  int hub = -1;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!in_cycle_edge[i]) continue;
    for (int v : {g.edges[i].first, g.edges[i].second}) {
      if (hub < 0 || v < hub) hub = v;
    }
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!in_cycle_edge[i]) continue;
    merged[g.edges[i].first] = hub;
    merged[g.edges[i].second] = hub;
  }
  Graph out(g.vertex_count);
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges[i];
    // Cycle edges and chords become loops, which belong to no block.
    out.add_edge(merged[u], merged[v]);
  }
  return out;
}

std::vector<char> edge_mask(const Graph& g, const std::vector<int>& cycle) {
  std::vector<char> mask(g.edge_count(), 0);
  for (int id : cycle) mask[id] = 1;
  return mask;
}

// Fundamental cycle of the smallest-id non-tree edge of a DFS tree rooted
// at vertex 0.
std::vector<int> initial_cycle(const Graph& g) {
  const auto inc = g.incidence();
  const int n = g.vertex_count;
  std::vector<int> parent_edge(n, -2), depth(n, 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<int> stack{0};
  parent_edge[0] = -1;
  std::vector<char> tree(g.edge_count(), 0);
  while (!stack.empty()) {
    const int v = stack.back();
    if (cursor[v] == inc[v].size()) {
      stack.pop_back();
      continue;
    }
    auto [w, id] = inc[v][cursor[v]++];
    if (parent_edge[w] != -2) continue;
    parent_edge[w] = id;
    depth[w] = depth[v] + 1;
    tree[id] = 1;
    stack.push_back(w);
  }
  int chord = -1;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!tree[i]) {
      chord = i;
      break;
    }
  }
  if (chord < 0) throw PreconditionError("find_halving_cycle: graph is a tree");
  auto [u, v] = g.edges[chord];
  std::vector<int> cycle{chord};
  auto up = [&](int x) {
    const int id = parent_edge[x];
    cycle.push_back(id);
    return g.edges[id].first == x ? g.edges[id].second : g.edges[id].first;
  };
  while (depth[u] > depth[v]) u = up(u);
  while (depth[v] > depth[u]) v = up(v);
  while (u != v) {
    u = up(u);
    v = up(v);
  }
  std::sort(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

std::vector<int> contracted_block_sizes(const Graph& g,
                                        const std::vector<int>& cycle) {
  std::vector<int> merged;
  const Graph gc = contract_cycle(g, edge_mask(g, cycle), merged);
  std::vector<int> sizes;
  for (const auto& block : biconnected_blocks(gc).blocks) {
    sizes.push_back(static_cast<int>(block.size()));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

HalvingCycle find_halving_cycle(const Graph& g) {
  g.validate();
  const int m = g.edge_count();
  if (m < 3 || !is_simple(g) || !is_two_connected(g)) {
    throw PreconditionError(
        "find_halving_cycle: needs a simple 2-connected graph with at least "
        "three edges");
  }
  HalvingCycle result;
  result.cycle = initial_cycle(g);
  const auto inc = g.incidence();

  while (true) {
    const std::vector<char> in_cycle = edge_mask(g, result.cycle);
    std::vector<int> merged;
    const Graph gc = contract_cycle(g, in_cycle, merged);
    const auto blocks = biconnected_blocks(gc).blocks;
    std::size_t largest = 0;
    for (std::size_t b = 1; b < blocks.size(); ++b) {
      if (blocks[b].size() > blocks[largest].size()) largest = b;
    }
    const int worst = blocks.empty() ? 0 : static_cast<int>(blocks[largest].size());
    result.max_block_trace.push_back(worst);
    if (2 * worst <= m) break;
    if (result.iterations >= m) {
      throw std::logic_error("find_halving_cycle: iteration bound exceeded");
    }
    if (result.iterations > 0 &&
        worst >= result.max_block_trace[result.max_block_trace.size() - 2]) {
      throw std::logic_error("find_halving_cycle: largest block did not shrink");
    }

    const std::vector<int>& heavy = blocks[largest];
    std::vector<char> in_heavy(m, 0);
    for (int id : heavy) in_heavy[id] = 1;
    const std::vector<int> order = cycle_vertex_order(g, result.cycle);
    const int len = static_cast<int>(order.size());
    std::vector<int> position(g.vertex_count, -1);
    for (int i = 0; i < len; ++i) position[order[i]] = i;

    std::vector<char> attached(len, 0);
    for (int id : heavy) {
      for (int v : {g.edges[id].first, g.edges[id].second}) {
        if (position[v] >= 0) attached[position[v]] = 1;
      }
    }
    std::vector<int> attach;
    for (int i = 0; i < len; ++i) {
      if (attached[i]) attach.push_back(i);
    }
    // Consecutive attachment pair with the widest empty arc between them.
    int best_gap = -1, from = 0, to = 0;
    for (std::size_t j = 0; j < attach.size(); ++j) {
      const int a = attach[j];
      const int b = attach[(j + 1) % attach.size()];
      const int gap = ((b - a) % len + len) % len;
      if (gap > best_gap) {
        best_gap = gap;
        from = a;
        to = b;
      }
    }
    const int v1 = order[from];
    const int v2 = order[to];

    // Arc from v2 forward around to v1; it carries every attachment vertex.
    std::vector<int> next_cycle;
    auto cycle_edge_between = [&](int x, int y) {
      for (auto [w, id] : inc[x]) {
        if (w == y && in_cycle[id]) return id;
      }
      throw std::logic_error("find_halving_cycle: broken cycle order");
    };
    for (int i = to; i != from; i = (i + 1) % len) {
      next_cycle.push_back(cycle_edge_between(order[i], order[(i + 1) % len]));
    }

    // Path v1 .. v2 through the heavy block, avoiding other cycle vertices.
    std::vector<int> via(g.vertex_count, -2);
    std::vector<int> queue{v1};
    via[v1] = -1;
    for (std::size_t head = 0; head < queue.size() && via[v2] == -2; ++head) {
      const int x = queue[head];
      if (x != v1 && position[x] >= 0) continue;
      for (auto [w, id] : inc[x]) {
        if (!in_heavy[id] || via[w] != -2) continue;
        via[w] = id;
        queue.push_back(w);
      }
    }
    if (via[v2] == -2) {
      throw std::logic_error("find_halving_cycle: no path through the block");
    }
    for (int x = v2; x != v1;) {
      const int id = via[x];
      next_cycle.push_back(id);
      x = g.edges[id].first == x ? g.edges[id].second : g.edges[id].first;
    }
    std::sort(next_cycle.begin(), next_cycle.end());
    result.cycle = std::move(next_cycle);
    ++result.iterations;
  }
  return result;
}

}  // namespace basis_relabel
