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

// K3 edges: a = 0, b = 1, c = 2.
MatroidHandle k3() { return graphic_matroid(complete_graph(3)); }

TEST(LabelledBasis, LabelsAreOneBased) {
  const LabelledBasis t({4, 2});
  EXPECT_EQ(t.element(1), 4);
  EXPECT_EQ(t.element(2), 2);
  EXPECT_EQ(t.label_of(2), 2);
  EXPECT_FALSE(t.label_of(3).has_value());
  EXPECT_EQ(t.basis(), (ElementSet{2, 4}));
  EXPECT_THROW(t.element(3), UsageError);
  EXPECT_THROW(LabelledBasis({1, 1}), UsageError);
}

TEST(LabelledBasis, ValidationErrors) {
  const MatroidHandle m = k3();
  EXPECT_NO_THROW(validate_labelled_basis(m, LabelledBasis({0, 1})));
  EXPECT_THROW(validate_labelled_basis(m, LabelledBasis({0})), PreconditionError);
  EXPECT_THROW(validate_labelled_basis(m, LabelledBasis({0, 7})), DomainError);
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_THROW(validate_labelled_basis(graphic_matroid(g), LabelledBasis({0, 1})),
               PreconditionError);
}

TEST(ApplyStep, CarriesTheLabelOfTheRemovedElement) {
  const LabelledBasis next = apply_step(k3(), LabelledBasis({0, 1}), {0, 2, 1});
  EXPECT_EQ(next, LabelledBasis({2, 1}));
}

TEST(ApplyStep, RejectsLabelMismatch) {
  EXPECT_THROW(apply_step(k3(), LabelledBasis({0, 1}), {0, 2, 2}),
               InvalidStepError);
}

TEST(ApplyStep, RejectsEveryStepOnASingleBasisMatroid) {
  const MatroidHandle p3 = graphic_matroid(path_graph(3));
  EXPECT_THROW(apply_step(p3, LabelledBasis({0, 1}), {0, 1, 1}),
               InvalidStepError);
  EXPECT_THROW(apply_step(p3, LabelledBasis({0, 1}), {0, 0, 1}),
               InvalidStepError);
}

TEST(ApplyStep, RejectsElementsOutsideTheGroundSet) {
  EXPECT_THROW(apply_step(k3(), LabelledBasis({0, 1}), {0, 9, 1}),
               InvalidStepError);
}

TEST(VerifySequence, TriangleSwapInThreeSteps) {
  const ExchangeSequence seq{{0, 2, 1}, {1, 0, 2}, {2, 1, 1}};
  const Verdict v =
      verify_sequence(k3(), LabelledBasis({0, 1}), seq, LabelledBasis({1, 0}));
  EXPECT_TRUE(v.ok) << v.reason;
  EXPECT_EQ(v.steps, 3u);
}

TEST(VerifySequence, EmptySequence) {
  const LabelledBasis t({0, 1});
  const Verdict v = verify_sequence(k3(), t, {}, t);
  EXPECT_TRUE(v.ok);
  EXPECT_EQ(v.steps, 0u);
}

TEST(VerifySequence, ReportsTheFirstBadIndex) {
  // K4 edges 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3); star basis at 0.
  const MatroidHandle k4 = graphic_matroid(complete_graph(4));
  const LabelledBasis start({0, 1, 2});
  // After the first step, edge 5 closes a triangle with edges 1 and 2.
  const ExchangeSequence seq{{0, 4, 1}, {4, 5, 1}};
  const Verdict v = verify_sequence(k4, start, seq, start);
  EXPECT_FALSE(v.ok);
  ASSERT_TRUE(v.failing_index.has_value());
  EXPECT_EQ(*v.failing_index, 1u);
}

TEST(VerifySequence, WrongFinalStateIsRejected) {
  const LabelledBasis t({0, 1});
  const Verdict v = verify_sequence(k3(), t, {{0, 2, 1}}, t);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.failing_index.has_value());
}

TEST(ReverseSequence, UndoesASequence) {
  const MatroidHandle m = k3();
  const ExchangeSequence seq{{0, 2, 1}, {1, 0, 2}, {2, 1, 1}};
  const Verdict v = verify_sequence(m, LabelledBasis({1, 0}), reverse_sequence(seq),
                                    LabelledBasis({0, 1}));
  EXPECT_TRUE(v.ok) << v.reason;
}

}  // namespace
}  // namespace basis_relabel
