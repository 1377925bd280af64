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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basis_relabel/errors.hpp"
#include "reconfig_internal.hpp"

namespace basis_relabel {
namespace {

bool meets(const ElementSet& a, const ElementSet& b) {
  return !set_intersection(a, b).empty();
}

class LinkingSearch {
 public:
  LinkingSearch(const MatroidHandle& h, const ElementSet& prev,
                const ElementSet& a, const ElementSet& pool,
                std::uint64_t budget)
      : h_(h), prev_(prev), a_(a), pool_(pool), budget_(budget) {}

  std::optional<LinkingCertificate> run(int max_size) {
    for (int size = 1; size <= max_size && size <= static_cast<int>(pool_.size());
         ++size) {
      std::vector<Element> chosen;
      if (auto found = extend(chosen, 0, size)) return found;
    }
    return std::nullopt;
  }

 private:
  std::optional<LinkingCertificate> extend(std::vector<Element>& chosen,
                                           std::size_t next, int size) {
    for (std::size_t i = next; i < pool_.size(); ++i) {
      if (++nodes_ > budget_) {
        throw BudgetExceededError("linking_set: search budget of " +
                                  std::to_string(budget_) + " nodes exceeded");
      }
      chosen.push_back(pool_[i]);
      const ElementSet p = make_set(chosen);
      LinkingCertificate cert = make_linking_certificate(h_, prev_, a_, p);
      const bool alive = cert.independent && cert.skew_to_prev && cert.skew_to_a;
      if (alive && static_cast<int>(chosen.size()) == size) {
        if (cert.accepted(prev_, a_)) return cert;
      } else if (alive && cert.overlap == 0) {
        // Larger sets can only keep or raise the co-rank, so only sets that
        // are still fully independent are worth extending.
        if (auto found = extend(chosen, i + 1, size)) return found;
      }
      chosen.pop_back();
    }
    return std::nullopt;
  }

  const MatroidHandle& h_;
  const ElementSet& prev_;
  const ElementSet& a_;
  const ElementSet& pool_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

void check_linking_inputs(const MatroidHandle& h, const ElementSet& prev,
                          const ElementSet& a) {
  if (meets(prev, a)) {
    throw PreconditionError("linking_set: the two sets must be disjoint");
  }
  if (!h.is_independent(prev) || !h.is_independent(a)) {
    throw PreconditionError("linking_set: both sets must be independent");
  }
}

}  // namespace

bool LinkingCertificate::accepted(const ElementSet& prev,
                                  const ElementSet& a) const {
  return independent && skew_to_prev && skew_to_a && overlap == 1 &&
         !circuit.empty() && is_subset(linking, circuit) &&
         meets(circuit, prev) && meets(circuit, a);
}

LinkingCertificate make_linking_certificate(const MatroidHandle& h,
                                            const ElementSet& prev,
                                            const ElementSet& a,
                                            const ElementSet& p) {
  LinkingCertificate cert;
  cert.linking = p;
  const int rank_p = h.rank(p);
  cert.independent = rank_p == static_cast<int>(p.size());
  cert.skew_to_prev = h.rank(set_union(prev, p)) == h.rank(prev) + rank_p;
  cert.skew_to_a = h.rank(set_union(a, p)) == h.rank(a) + rank_p;
  const ElementSet all = set_union(set_union(prev, a), p);
  const int rank_all = h.rank(all);
  cert.overlap = static_cast<int>(prev.size() + a.size() + p.size()) - rank_all;
  if (static_cast<int>(all.size()) - rank_all == 1) {
    for (Element x : all) {
      if (h.is_independent(set_without(all, x))) cert.circuit.push_back(x);
    }
  }
  return cert;
}

namespace internal {

LinkingCertificate search_linking(const MatroidHandle& h,
                                  const ElementSet& prev, const ElementSet& a,
                                  const ElementSet& candidates,
                                  std::optional<Element> preferred,
                                  std::uint64_t node_budget, int max_size) {
  if (preferred) {
    LinkingCertificate cert =
        make_linking_certificate(h, prev, a, ElementSet{*preferred});
    if (cert.accepted(prev, a)) return cert;
  }
  const ElementSet pool = set_minus(set_minus(candidates, prev), a);
  if (auto found = LinkingSearch(h, prev, a, pool, node_budget).run(max_size)) {
    return *found;
  }
  throw BudgetExceededError("linking_set: no linking set with at most " +
                            std::to_string(max_size) + " elements");
}

}  // namespace internal

LinkingCertificate linking_set(const MatroidHandle& h, const ElementSet& prev,
                               const ElementSet& a,
                               const ElementSet& candidates,
                               std::uint64_t node_budget, int max_size) {
  check_linking_inputs(h, prev, a);
  const ElementSet nonloops = set_minus(h.elements(), loops(h));
  if (components(h.restrict_to(nonloops)).count > 1 ||
      nonloops.size() != h.elements().size()) {
    throw PreconditionError("linking_set: the matroid must be connected");
  }
  const ElementSet pool = candidates.empty() ? h.elements() : candidates;
  return internal::search_linking(h, prev, a, pool, std::nullopt, node_budget,
                                  max_size);
}

}  // namespace basis_relabel
