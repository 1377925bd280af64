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
#include <string>
#include <string_view>
#include <vector>

#include "basis_relabel/graph.hpp"
#include "basis_relabel/labelled.hpp"
#include "basis_relabel/matroid.hpp"
#include "basis_relabel/models.hpp"

namespace basis_relabel {

enum class Format { kText, kJson };

// Throws UsageError for anything other than "text" or "json".
Format parse_format(std::string_view name);

enum class MatroidKind { kGraph, kMatrixGf2, kMatrixRational, kUniform };

std::string_view kind_name(MatroidKind kind);

struct InstanceFile {
  MatroidKind kind = MatroidKind::kGraph;
  Graph graph;
  Matrix matrix;
  int uniform_rank = 0;
  int uniform_size = 0;
  // Element carrying each label, label 1 first.
  std::optional<std::vector<Element>> start;
  std::optional<std::vector<Element>> target;

  int element_count() const;
  MatroidHandle matroid() const;
  bool operator==(const InstanceFile&) const = default;
};

// Text or JSON; JSON is recognised by a leading '{'. Throws ParseError with
// the offending line and column.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& instance,
                               Format format = Format::kText);

std::uint64_t fnv1a64(std::string_view bytes);
// Hash of the canonical text serialization.
std::uint64_t instance_hash(const InstanceFile& instance);
std::string hex64(std::uint64_t value);

struct SequenceFile {
  std::uint64_t instance_hash = 0;
  std::string algorithm;
  long long bound = 0;
  ExchangeSequence steps;

  bool operator==(const SequenceFile&) const = default;
};

SequenceFile parse_sequence(std::string_view text);
std::string serialize_sequence(const SequenceFile& sequence,
                               Format format = Format::kText);

}  // namespace basis_relabel
