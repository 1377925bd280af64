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

#include "basis_relabel/reconfig.hpp"

namespace basis_relabel::internal {

// Linking-set search without the connectivity precondition check. Tries
// `preferred` as a singleton before the exhaustive search.
LinkingCertificate search_linking(const MatroidHandle& h,
                                  const ElementSet& prev, const ElementSet& a,
                                  const ElementSet& candidates,
                                  std::optional<Element> preferred,
                                  std::uint64_t node_budget, int max_size);

}  // namespace basis_relabel::internal
