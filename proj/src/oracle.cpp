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

#include "basis_relabel/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "basis_relabel/errors.hpp"

namespace basis_relabel {
namespace {

void require_cap(const MatroidHandle& m, int cap, const char* what) {
  if (m.size() > cap) {
    throw BudgetExceededError(std::string(what) + ": " +
                              std::to_string(m.size()) +
                              " elements exceed the enumeration cap of " +
                              std::to_string(cap));
  }
}

// Visits independent sets in ascending lexicographic order.
template <typename Visit>
void walk_independent(const MatroidHandle& m, std::vector<Element>& current,
                      std::size_t next, Visit& visit) {
  visit(current, next);
  const ElementSet& pool = m.elements();
  for (std::size_t i = next; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    if (m.is_independent(current)) walk_independent(m, current, i + 1, visit);
    current.pop_back();
  }
}

constexpr int kBitsPerLabel = 4;

}  // namespace

std::vector<ElementSet> enumerate_bases(const MatroidHandle& m, int cap) {
  require_cap(m, cap, "enumerate_bases");
  std::vector<ElementSet> out;
  std::vector<Element> current;
  auto visit = [&](const std::vector<Element>& s, std::size_t) {
    if (static_cast<int>(s.size()) == m.rank()) out.push_back(s);
  };
  walk_independent(m, current, 0, visit);
  return out;
}

std::vector<Circuit> enumerate_circuits(const MatroidHandle& m, int cap) {
  require_cap(m, cap, "enumerate_circuits");
  std::vector<Circuit> out;
  std::vector<Element> current;
  const ElementSet& pool = m.elements();
  // Each circuit is found once, from its members other than the largest.
  auto visit = [&](const std::vector<Element>& s, std::size_t next) {
    for (std::size_t i = next; i < pool.size(); ++i) {
      std::vector<Element> c = s;
      c.push_back(pool[i]);
      if (m.is_independent(c)) continue;
      bool minimal = true;
      for (std::size_t j = 0; j + 1 < c.size() && minimal; ++j) {
        std::vector<Element> rest = c;
        rest.erase(rest.begin() + j);
        minimal = m.is_independent(rest);
      }
      if (minimal) out.push_back(Circuit{c});
    }
  };
  walk_independent(m, current, 0, visit);
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
    return a.members < b.members;
  });
  return out;
}

ReconfigGraph::ReconfigGraph(const MatroidHandle& m, int cap)
    : elements_(m.elements()), rank_(m.rank()) {
  require_cap(m, std::min(cap, kStateSpaceCap), "ReconfigGraph");
  local_.assign(m.oracle().ground_size(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    local_[elements_[i]] = static_cast<int>(i);
  }
  is_basis_.assign(std::size_t{1} << elements_.size(), 0);
  for (const ElementSet& b : enumerate_bases(m, kStateSpaceCap)) {
    std::size_t mask = 0;
    for (Element e : b) mask |= std::size_t{1} << local_[e];
    is_basis_[mask] = 1;
    ++basis_count_;
  }
}

ReconfigGraph::Key ReconfigGraph::encode(const LabelledBasis& t) const {
  if (t.rank() != rank_) {
    throw UsageError("labelled basis rank does not match the matroid");
  }
  Key key = 0;
  std::size_t mask = 0;
  for (int i = 0; i < rank_; ++i) {
    const Element e = t.element(i + 1);
    if (e < 0 || e >= static_cast<int>(local_.size()) || local_[e] < 0) {
      throw DomainError("element " + std::to_string(e) + " is not in the view");
    }
    key |= static_cast<Key>(local_[e]) << (kBitsPerLabel * i);
    mask |= std::size_t{1} << local_[e];
  }
  if (!is_basis_[mask]) throw PreconditionError("labelled set is not a basis");
  return key;
}

template <typename Visit>
void ReconfigGraph::for_each_neighbour(Key key, Visit&& visit) const {
  std::size_t mask = 0;
  for (int i = 0; i < rank_; ++i) {
    mask |= std::size_t{1} << ((key >> (kBitsPerLabel * i)) & 0xF);
  }
  const int k = static_cast<int>(elements_.size());
  for (int i = 0; i < rank_; ++i) {
    const int shift = kBitsPerLabel * i;
    const int out = static_cast<int>((key >> shift) & 0xF);
    for (int in = 0; in < k; ++in) {
      if (mask & (std::size_t{1} << in)) continue;
      const std::size_t next = (mask & ~(std::size_t{1} << out)) |
                               (std::size_t{1} << in);
      if (!is_basis_[next]) continue;
      const Key moved = (key & ~(Key{0xF} << shift)) |
                        (static_cast<Key>(in) << shift);
      visit(moved, out, in, i + 1);
    }
  }
}

std::vector<ExchangeStep> ReconfigGraph::exchanges(
    const LabelledBasis& t) const {
  std::vector<ExchangeStep> out;
  for_each_neighbour(encode(t), [&](Key, int from, int to, int label) {
    out.push_back({elements_[from], elements_[to], label});
  });
  return out;
}

std::optional<int> ReconfigGraph::distance(const LabelledBasis& from,
                                           const LabelledBasis& to) const {
  const Key start = encode(from);
  const Key goal = encode(to);
  if (start == goal) return 0;
  std::unordered_map<Key, int> dist{{start, 0}};
  std::vector<Key> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Key u = queue[head];
    const int d = dist[u];
    bool found = false;
    for_each_neighbour(u, [&](Key v, int, int, int) {
      if (found || !dist.emplace(v, d + 1).second) return;
      if (v == goal) found = true;
      queue.push_back(v);
    });
    if (found) return d + 1;
  }
  return std::nullopt;
}

int ReconfigGraph::component_of(const LabelledBasis& t) {
  const Key start = encode(t);
  if (auto it = component_.find(start); it != component_.end()) {
    return it->second;
  }
  const int id = component_count_++;
  component_.emplace(start, id);
  std::vector<Key> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for_each_neighbour(queue[head], [&](Key v, int, int, int) {
      if (component_.emplace(v, id).second) queue.push_back(v);
    });
  }
  return id;
}

bool ReconfigGraph::reachable(const LabelledBasis& from,
                              const LabelledBasis& to) {
  return component_of(from) == component_of(to);
}

std::optional<int> bfs_distance(const MatroidHandle& m, const LabelledBasis& t1,
                                const LabelledBasis& t2, int cap) {
  return ReconfigGraph(m, cap).distance(t1, t2);
}

}  // namespace basis_relabel
