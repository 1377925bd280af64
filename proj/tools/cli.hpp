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
#include <iosfwd>
#include <string>
#include <vector>

#include "basis_relabel/io.hpp"

namespace basis_relabel::cli {

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,  // infeasible instance or invalid sequence
  kBadInput = 2,  // parse or usage error
  kBudget = 3,    // search budget exceeded and no fallback allowed
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Seeded instance of a named family with a reconfigurable labelled pair.
// Families: cycle, path, complete, random-2conn, uniform, gf2.
InstanceFile family_instance(const std::string& family, int size,
                             std::uint64_t seed, int uniform_rank = 2);

// "8,16,32", "4..10" (step 1) or "8..512*2" (geometric).
std::vector<int> parse_sizes(const std::string& text);

}  // namespace basis_relabel::cli
