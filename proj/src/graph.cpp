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

#include "basis_relabel/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "basis_relabel/errors.hpp"

namespace basis_relabel {

int Graph::add_edge(int u, int v) {
  edges.emplace_back(u, v);
  return edge_count() - 1;
}

void Graph::validate() const {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  for (int i = 0; i < edge_count(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw PreconditionError("edge " + std::to_string(i) +
                              " has an endpoint out of range");
    }
  }
}

std::vector<std::vector<std::pair<int, int>>> Graph::incidence() const {
  std::vector<std::vector<std::pair<int, int>>> inc(vertex_count);
  for (int i = 0; i < edge_count(); ++i) {
    auto [u, v] = edges[i];
    inc[u].emplace_back(v, i);
    if (u != v) inc[v].emplace_back(u, i);
  }
  return inc;
}

BlockDecomposition biconnected_blocks(const Graph& g) {
  g.validate();
  const auto inc = g.incidence();
  const int n = g.vertex_count;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  std::set<int> cuts;
  BlockDecomposition out;
  int timer = 0;

  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    int root_children = 0;
    std::vector<Frame> frames{{root, -1, 0}};
    while (!frames.empty()) {
      Frame& top = frames.back();
      const int v = top.v;
      if (top.next < inc[v].size()) {
        auto [w, id] = inc[v][top.next++];
        if (id == top.parent_edge || w == v) continue;
        if (disc[w] < 0) {
          edge_stack.push_back(id);
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          frames.push_back({w, id, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(id);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const int parent_edge = top.parent_edge;
      frames.pop_back();
      if (frames.empty()) break;
      const int u = frames.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        if (u != root) cuts.insert(u);
        std::vector<int> block;
        while (true) {
          const int e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
    if (root_children >= 2) cuts.insert(root);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  out.cut_vertices.assign(cuts.begin(), cuts.end());
  return out;
}

bool is_simple(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
  }
  return true;
}

bool is_two_connected(const Graph& g) {
  if (g.edge_count() < 2) return false;
  std::vector<int> degree(g.vertex_count, 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (g.is_loop(i)) return false;
    ++degree[g.edges[i].first];
    ++degree[g.edges[i].second];
  }
  for (int d : degree) {
    if (d == 0) return false;
  }
  return biconnected_blocks(g).blocks.size() == 1;
}

namespace {

struct Arc {
  int to;
  int cap;
  int rev;
  int edge;  // graph edge id, -1 for auxiliary or vertex arcs
};

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  void add_arc(int from, int to, int cap, int edge) {
    adj_[from].push_back({to, cap, static_cast<int>(adj_[to].size()), edge});
    adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1, edge});
  }

  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> via(adj_.size(), {-1, -1});
    std::vector<int> queue{s};
    via[s] = {s, -1};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int i = 0; i < static_cast<int>(adj_[u].size()); ++i) {
        const Arc& a = adj_[u][i];
        if (a.cap <= 0 || via[a.to].first >= 0) continue;
        via[a.to] = {u, i};
        queue.push_back(a.to);
      }
    }
    if (via[t].first < 0) return false;
    for (int v = t; v != s;) {
      auto [u, i] = via[v];
      Arc& a = adj_[u][i];
      a.cap -= 1;
      adj_[v][a.rev].cap += 1;
      v = u;
    }
    return true;
  }

  const std::vector<Arc>& arcs(int node) const { return adj_[node]; }

 private:
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

DisjointPaths two_disjoint_paths(const Graph& g, std::span<const int> sources,
                                 std::span<const int> targets) {
  g.validate();
  if (sources.empty() || targets.empty()) {
    throw PreconditionError("two_disjoint_paths: S and T must be nonempty");
  }
  const int n = g.vertex_count;
  const std::set<int> s_set(sources.begin(), sources.end());
  const std::set<int> t_set(targets.begin(), targets.end());
  for (int v : s_set) {
    if (v < 0 || v >= n) throw PreconditionError("source vertex out of range");
  }
  for (int v : t_set) {
    if (v < 0 || v >= n) throw PreconditionError("target vertex out of range");
  }
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  const int s = 2 * n;
  const int t = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (int v : s_set) net.add_arc(s, in(v), 1, -1);
  for (int v = 0; v < n; ++v) net.add_arc(in(v), out(v), 1, -1);
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges[i];
    if (u == v) continue;
    net.add_arc(out(u), in(v), 1, i);
    net.add_arc(out(v), in(u), 1, i);
  }
  for (int v : t_set) net.add_arc(out(v), t, 1, -1);

  int flow = 0;
  while (flow < 2 && net.augment(s, t)) ++flow;
  if (flow < 2) {
    throw ConnectivityError(
        "two_disjoint_paths: fewer than two disjoint paths exist");
  }

  // Net flow per graph edge and direction; opposite flows cancel.
  std::map<std::pair<int, int>, int> edge_flow;  // (edge, from vertex)
  for (int v = 0; v < n; ++v) {
    for (const Arc& a : net.arcs(out(v))) {
      if (a.edge < 0 || a.to % 2 != 0) continue;
      const int used = 1 - a.cap;
      if (used > 0) edge_flow[{a.edge, v}] += used;
    }
  }
  for (auto& [key, f] : edge_flow) {
    auto [edge, from] = key;
    auto [u, v] = g.edges[edge];
    const int other = from == u ? v : u;
    auto it = edge_flow.find({edge, other});
    if (f > 0 && it != edge_flow.end() && it->second > 0) {
      f = 0;
      it->second = 0;
    }
  }
  std::vector<std::vector<std::pair<int, int>>> next(n);  // (edge, to)
  for (const auto& [key, f] : edge_flow) {
    if (f <= 0) continue;
    auto [edge, from] = key;
    auto [u, v] = g.edges[edge];
    next[from].emplace_back(edge, from == u ? v : u);
  }

  DisjointPaths result;
  for (const Arc& a : net.arcs(s)) {
    if (a.cap != 0 || a.edge != -1) continue;
    const int start = a.to / 2;
    std::vector<int> verts{start};
    std::vector<int> path_edges;
    int v = start;
    std::set<int> seen{start};
    while (!(t_set.count(v) && next[v].empty())) {
      if (next[v].empty()) break;
      auto [edge, w] = next[v].back();
      next[v].pop_back();
      if (!seen.insert(w).second) break;
      path_edges.push_back(edge);
      verts.push_back(w);
      v = w;
    }
    // Keep the segment from the last S vertex to the first T vertex after it.
    std::size_t first = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (s_set.count(verts[i])) first = i;
    }
    std::size_t last = first;
    while (!t_set.count(verts[last])) ++last;
    result.starts.push_back(verts[first]);
    result.ends.push_back(verts[last]);
    result.paths.emplace_back(path_edges.begin() + first,
                              path_edges.begin() + last);
  }
  for (const auto& p : result.paths) {
    result.edges.insert(result.edges.end(), p.begin(), p.end());
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

std::optional<std::vector<int>> longest_cycle(const Graph& g,
                                              std::uint64_t node_budget) {
  g.validate();
  const int n = g.vertex_count;
  std::vector<int> best;
  std::optional<int> loop_edge;
  std::map<std::pair<int, int>, int> first_edge;
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges[i];
    if (u == v) {
      if (!loop_edge) loop_edge = i;
      continue;
    }
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    auto it = first_edge.find(key);
    if (it == first_edge.end()) {
      first_edge[key] = i;
    } else if (best.empty()) {
      best = {it->second, i};
    }
  }

  // Simple-graph adjacency: one (smallest-id) edge per neighbour.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& [key, id] : first_edge) {
    adj[key.first].emplace_back(key.second, id);
    adj[key.second].emplace_back(key.first, id);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::uint64_t nodes = 0;
  std::vector<char> visited(n, 0);
  std::vector<int> path_edges;
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(best.size()) >= n - s) break;
    if (adj[s].size() < 2) continue;
    int remaining = 0;  // unvisited vertices above s
    for (int v = s + 1; v < n; ++v) remaining += adj[v].empty() ? 0 : 1;
    visited[s] = 1;
    std::function<void(int)> dfs = [&](int v) {
      if (++nodes > node_budget) {
        throw BudgetExceededError("longest_cycle: search budget of " +
                                  std::to_string(node_budget) +
                                  " nodes exceeded");
      }
      const int len = static_cast<int>(path_edges.size());
      for (auto [w, id] : adj[v]) {
        if (w == s && len >= 2 && len + 1 > static_cast<int>(best.size())) {
          best = path_edges;
          best.push_back(id);
        }
        if (w <= s || visited[w]) continue;
        if (len + 1 + remaining <= static_cast<int>(best.size())) continue;
        visited[w] = 1;
        --remaining;
        path_edges.push_back(id);
        dfs(w);
        path_edges.pop_back();
        ++remaining;
        visited[w] = 0;
      }
    };
    dfs(s);
    visited[s] = 0;
  }
  if (best.empty() && loop_edge) best = {*loop_edge};
  if (best.empty()) return std::nullopt;
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<int> cycle_vertex_order(const Graph& g,
                                    std::span<const int> cycle_edges) {
  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (int id : cycle_edges) {
    auto [u, v] = g.edges[id];
    adj[u].emplace_back(v, id);
    adj[v].emplace_back(u, id);
  }
  if (adj.empty()) return {};
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() != 2) {
      throw PreconditionError("cycle_vertex_order: edges do not form a cycle");
    }
  }
  std::vector<int> order{adj.begin()->first};
  int prev_edge = -1;
  int v = order.front();
  while (true) {
    const auto& nbrs = adj[v];
    auto [w, id] = nbrs[0].second != prev_edge ? nbrs[0] : nbrs[1];
    prev_edge = id;
    if (w == order.front()) break;
    order.push_back(w);
    v = w;
  }
  if (order.size() != adj.size()) {
    throw PreconditionError("cycle_vertex_order: edges form several cycles");
  }
  return order;
}

}  // namespace basis_relabel
