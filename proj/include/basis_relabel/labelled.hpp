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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "basis_relabel/element_set.hpp"
#include "basis_relabel/matroid.hpp"

namespace basis_relabel {

// A basis together with a bijection from labels 1..r onto its elements.
// Equality is exact: same elements carrying the same labels.
class LabelledBasis {
 public:
  LabelledBasis() = default;
  // by_label[i] carries label i + 1. Throws UsageError on repeated elements.
  explicit LabelledBasis(std::vector<Element> by_label);

  // Labels assigned in ascending element order.
  static LabelledBasis in_order(const ElementSet& basis);

  int rank() const { return static_cast<int>(by_label_.size()); }
  // Label is 1-based.
  Element element(int label) const;
  std::optional<int> label_of(Element e) const;
  ElementSet basis() const { return make_set(by_label_); }
  const std::vector<Element>& by_label() const { return by_label_; }

  bool operator==(const LabelledBasis&) const = default;

 private:
  std::vector<Element> by_label_;
};

// Replace `out` (which carries `label`) by `in`; `in` inherits the label.
struct ExchangeStep {
  Element out = -1;
  Element in = -1;
  int label = 0;

  bool operator==(const ExchangeStep&) const = default;
};

using ExchangeSequence = std::vector<ExchangeStep>;

// Throws PreconditionError unless `t` is a labelled basis of `m`.
void validate_labelled_basis(const MatroidHandle& m, const LabelledBasis& t);

// Applies one exchange using only the independence oracle. Throws
// InvalidStepError naming the violated condition.
LabelledBasis apply_step(const MatroidHandle& m, const LabelledBasis& t,
                         const ExchangeStep& step);

// Applies steps without validation. Planners use this for bookkeeping.
LabelledBasis apply_unchecked(const LabelledBasis& t, const ExchangeStep& step);

struct Verdict {
  bool ok = false;
  std::size_t steps = 0;
  std::optional<std::size_t> failing_index;
  std::string reason;
};

// Replays `seq` from `start` and compares the result with `target`.
Verdict verify_sequence(const MatroidHandle& m, const LabelledBasis& start,
                        const ExchangeSequence& seq,
                        const LabelledBasis& target);

// Each step inverted, in reverse order: undoes `seq`.
ExchangeSequence reverse_sequence(const ExchangeSequence& seq);

}  // namespace basis_relabel
