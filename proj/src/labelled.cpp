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

#include "basis_relabel/labelled.hpp"

#include <algorithm>
#include <utility>

#include "basis_relabel/errors.hpp"

namespace basis_relabel {

LabelledBasis::LabelledBasis(std::vector<Element> by_label)
    : by_label_(std::move(by_label)) {
  if (make_set(by_label_).size() != by_label_.size()) {
    throw UsageError("labelled basis repeats an element");
  }
}

LabelledBasis LabelledBasis::in_order(const ElementSet& basis) {
  return LabelledBasis(std::vector<Element>(basis.begin(), basis.end()));
}

Element LabelledBasis::element(int label) const {
  if (label < 1 || label > rank()) {
    throw UsageError("label " + std::to_string(label) + " out of range 1.." +
                     std::to_string(rank()));
  }
  return by_label_[label - 1];
}

std::optional<int> LabelledBasis::label_of(Element e) const {
  auto it = std::find(by_label_.begin(), by_label_.end(), e);
  if (it == by_label_.end()) return std::nullopt;
  return static_cast<int>(it - by_label_.begin()) + 1;
}

void validate_labelled_basis(const MatroidHandle& m, const LabelledBasis& t) {
  if (t.rank() != m.rank()) {
    throw PreconditionError("labelled basis has " + std::to_string(t.rank()) +
                            " labels but the matroid has rank " +
                            std::to_string(m.rank()));
  }
  for (Element e : t.by_label()) {
    if (!m.contains(e)) {
      throw DomainError("labelled basis uses unknown element " +
                        std::to_string(e));
    }
  }
  if (!m.is_independent(t.by_label())) {
    throw PreconditionError("labelled basis is not independent");
  }
}

LabelledBasis apply_unchecked(const LabelledBasis& t, const ExchangeStep& step) {
  std::vector<Element> next = t.by_label();
  next[step.label - 1] = step.in;
  return LabelledBasis(std::move(next));
}

LabelledBasis apply_step(const MatroidHandle& m, const LabelledBasis& t,
                         const ExchangeStep& step) {
  if (step.out == step.in) {
    throw InvalidStepError("out and in are the same element");
  }
  if (step.label < 1 || step.label > t.rank()) {
    throw InvalidStepError("label " + std::to_string(step.label) +
                           " is out of range");
  }
  if (!m.contains(step.out) || !m.contains(step.in)) {
    throw InvalidStepError("step names an element outside the ground set");
  }
  const std::optional<int> out_label = t.label_of(step.out);
  if (!out_label) {
    throw InvalidStepError("out element " + std::to_string(step.out) +
                           " is not in the basis");
  }
  if (*out_label != step.label) {
    throw InvalidStepError("label mismatch: out element " +
                           std::to_string(step.out) + " carries label " +
                           std::to_string(*out_label) + ", step says " +
                           std::to_string(step.label));
  }
  if (t.label_of(step.in)) {
    throw InvalidStepError("in element " + std::to_string(step.in) +
                           " is already in the basis");
  }
  LabelledBasis next = apply_unchecked(t, step);
  if (!m.is_independent(next.by_label())) {
    throw InvalidStepError("exchange does not yield a basis (in element " +
                           std::to_string(step.in) +
                           " is not in the fundamental circuit)");
  }
  return next;
}

Verdict verify_sequence(const MatroidHandle& m, const LabelledBasis& start,
                        const ExchangeSequence& seq,
                        const LabelledBasis& target) {
  Verdict v;
  LabelledBasis current = start;
  if (start.rank() != m.rank() || !m.is_independent(start.by_label())) {
    v.reason = "start is not a labelled basis";
    return v;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      current = apply_step(m, current, seq[i]);
    } catch (const Error& err) {
      v.failing_index = i;
      v.reason = err.what();
      v.steps = i;
      return v;
    }
  }
  v.steps = seq.size();
  if (!(current == target)) {
    v.reason = "final labelled basis differs from the target";
    return v;
  }
  v.ok = true;
  return v;
}

ExchangeSequence reverse_sequence(const ExchangeSequence& seq) {
  ExchangeSequence out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    out.push_back({it->in, it->out, it->label});
  }
  return out;
}

}  // namespace basis_relabel
