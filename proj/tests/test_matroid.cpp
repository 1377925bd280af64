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

#include <gtest/gtest.h>

#include "basis_relabel/errors.hpp"
#include "support.hpp"

namespace basis_relabel {
namespace {

using testing::random_matroid_suite;

MatroidHandle k3() { return graphic_matroid(complete_graph(3)); }
MatroidHandle p3() { return graphic_matroid(path_graph(3)); }

TEST(MatroidView, EmptySetIsIndependent) {
  for (const auto& [name, m] : random_matroid_suite(40, 11)) {
    EXPECT_TRUE(m.is_independent({})) << name;
  }
}

TEST(MatroidView, IndependenceIsHereditary) {
  Rng rng(5);
  for (const auto& [name, m] : random_matroid_suite(60, 12)) {
    for (int trial = 0; trial < 20; ++trial) {
      const ElementSet x = testing::random_subset(m.elements(), rng);
      if (!m.is_independent(x)) continue;
      const ElementSet y = testing::random_subset(x, rng);
      EXPECT_TRUE(m.is_independent(y)) << name;
    }
  }
}

TEST(MatroidView, ContractionRankFollowsTheRankIdentity) {
  const MatroidHandle m = k3();
  const MatroidHandle c = m.contract(ElementSet{0});
  EXPECT_EQ(c.rank(ElementSet{1, 2}), 1);
  EXPECT_EQ(c.rank(), 1);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.size(), 3);
}

TEST(MatroidView, ViewsKeepBaseIdsAndRejectOutsiders) {
  const MatroidHandle c = k3().contract(ElementSet{0});
  EXPECT_EQ(c.elements(), (ElementSet{1, 2}));
  EXPECT_EQ(c.contracted(), (ElementSet{0}));
  EXPECT_THROW(c.is_independent(ElementSet{0}), DomainError);
  const MatroidHandle d = c.remove(ElementSet{2});
  EXPECT_EQ(d.elements(), (ElementSet{1}));
  EXPECT_EQ(d.deleted(), (ElementSet{2}));
}

TEST(MatroidView, RankIdentityOnRandomContractions) {
  Rng rng(21);
  const auto suite = random_matroid_suite(200, 13);
  for (const auto& [name, m] : suite) {
    const ElementSet t = testing::random_subset(m.elements(), rng);
    const MatroidHandle c = m.contract(t);
    const ElementSet x = testing::random_subset(c.elements(), rng);
    EXPECT_EQ(c.rank(x), m.rank(set_union(x, t)) - m.rank(t)) << name;
  }
}

TEST(MatroidView, AugmentationThroughContraction) {
  Rng rng(22);
  for (const auto& [name, m] : random_matroid_suite(200, 14)) {
    const ElementSet t = m.maximal_independent(
        testing::random_subset(m.elements(), rng));
    const MatroidHandle c = m.contract(t);
    const ElementSet a = c.maximal_independent(
        testing::random_subset(c.elements(), rng));
    EXPECT_TRUE(m.is_independent(set_union(t, a))) << name;
  }
}

TEST(MatroidView, FundamentalCircuitsAreExactlyTheExchangePartners) {
  for (const auto& [name, m] : random_matroid_suite(80, 15)) {
    for (const ElementSet& b : enumerate_bases(m)) {
      for (Element e : set_minus(m.elements(), b)) {
        ElementSet partners;
        for (Element x : b) {
          if (m.is_basis(set_with(set_without(b, x), e))) partners.push_back(x);
        }
        const Circuit c = m.fundamental_circuit(b, e);
        EXPECT_TRUE(set_contains(c.members, e)) << name;
        EXPECT_EQ(set_without(c.members, e), partners) << name;
      }
    }
  }
}

TEST(MatroidView, FundamentalCircuitPreconditions) {
  const MatroidHandle m = k3();
  EXPECT_THROW(m.fundamental_circuit(ElementSet{0}, 2), PreconditionError);
  EXPECT_THROW(m.fundamental_circuit(ElementSet{0, 1}, 0), UsageError);
}

TEST(Simplify, ContractedUniformCollapsesToOneElement) {
  const MatroidHandle m = uniform_matroid(2, 4).contract(ElementSet{0});
  const SimplifyResult s = simplify(m);
  EXPECT_EQ(s.view.size(), 1);
  EXPECT_TRUE(is_subset(s.view.elements(), ElementSet{1, 2, 3}));
  EXPECT_EQ(s.removed.size(), 2u);
}

TEST(Simplify, SelfLoopIsRemoved) {
  Graph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  const MatroidHandle m = graphic_matroid(g);
  EXPECT_EQ(loops(m), (ElementSet{1}));
  const SimplifyResult s = simplify(m);
  EXPECT_EQ(s.view.elements(), (ElementSet{0}));
  EXPECT_EQ(s.removed, (ElementSet{1}));
}

TEST(Simplify, ParallelClassesOfAMultigraph) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(1, 2);
  g.add_edge(0, 1);
  const auto classes = parallel_classes(graphic_matroid(g));
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0], (ElementSet{0, 1, 3}));
}

TEST(Components, SmallGraphs) {
  EXPECT_EQ(components(k3()).count, 1);
  const ComponentPartition path = components(p3());
  EXPECT_EQ(path.count, 2);
  EXPECT_NE(path.id[0], path.id[1]);
  const ComponentPartition bowtie = components(graphic_matroid(bowtie_graph()));
  ASSERT_EQ(bowtie.count, 2);
  for (const ElementSet& cls : bowtie.classes()) EXPECT_EQ(cls.size(), 3u);
}

TEST(Components, LoopsAreRejected) {
  Graph g(1);
  g.add_edge(0, 0);
  EXPECT_THROW(components(graphic_matroid(g)), PreconditionError);
}

TEST(Components, MatchCircuitClosureOnRandomMatroids) {
  for (const auto& [name, full] : random_matroid_suite(200, 16)) {
    const MatroidHandle m = full.remove(loops(full));
    const ComponentPartition parts = components(m);
    EXPECT_TRUE(testing::same_partition(m.elements(), parts.id,
                                        testing::circuit_classes(m)))
        << name;
  }
}

TEST(FundamentalGraph, TriangleIsAPathOfLengthTwo) {
  const MatroidHandle m = k3();
  const FundamentalGraph s = fundamental_graph(m, ElementSet{0, 1});
  EXPECT_EQ(s.edge_count(), 2u);
  EXPECT_EQ(diameter(s), 2);
  EXPECT_EQ(graph_distance(s, 0, 1), 2);
  EXPECT_EQ(graph_distance(s, 2, 2), 0);
  EXPECT_EQ(shortest_path(s, 0, 1), (std::vector<Element>{0, 2, 1}));
}

TEST(FundamentalGraph, CycleWithPathBasisIsAStar) {
  for (int n : {4, 7, 16}) {
    const MatroidHandle m = graphic_matroid(cycle_graph(n));
    const FundamentalGraph s = fundamental_graph(m, m.greedy_basis());
    EXPECT_EQ(s.edge_count(), static_cast<std::size_t>(n - 1));
    EXPECT_EQ(diameter(s), 2);
  }
}

TEST(FundamentalGraph, PathHasNoEdges) {
  const MatroidHandle m = p3();
  const FundamentalGraph s = fundamental_graph(m, ElementSet{0, 1});
  EXPECT_EQ(s.edge_count(), 0u);
  EXPECT_FALSE(graph_distance(s, 0, 1).has_value());
}

TEST(FundamentalGraph, RejectsNonBasis) {
  EXPECT_THROW(fundamental_graph(k3(), ElementSet{0}), PreconditionError);
}

TEST(FundamentalGraph, NeighbourhoodsAreFundamentalCircuits) {
  for (const auto& [name, m] : random_matroid_suite(60, 17)) {
    const ElementSet b = m.greedy_basis();
    const FundamentalGraph s = fundamental_graph(m, b);
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      const Element v = s.vertices[i];
      for (Element w : s.adjacency[i]) {
        const auto j = std::lower_bound(s.vertices.begin(), s.vertices.end(), w) -
                       s.vertices.begin();
        EXPECT_TRUE(set_contains(s.adjacency[j], v)) << name;
        EXPECT_NE(set_contains(b, v), set_contains(b, w)) << name;
      }
      if (!set_contains(b, v)) {
        EXPECT_EQ(s.adjacency[i],
                  set_without(m.fundamental_circuit(b, v).members, v))
            << name;
      }
    }
  }
}

TEST(FundamentalGraph, ParallelKernelsMatchSerial) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const MatroidHandle m = graphic_matroid(random_two_connected(40, seed));
    Rng rng(seed);
    const ElementSet b = random_basis(m, rng);
    const FundamentalGraph par = fundamental_graph(m, b);
    const FundamentalGraph ser = fundamental_graph_serial(m, b);
    EXPECT_EQ(par.vertices, ser.vertices);
    EXPECT_EQ(par.adjacency, ser.adjacency);
    EXPECT_EQ(diameter(par), diameter_serial(ser));
  }
}

}  // namespace
}  // namespace basis_relabel
