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

// Include this instead of <omp.h> so kernels still compile without OpenMP.

#if defined(_OPENMP)
#include <omp.h>
namespace basis_relabel {
inline constexpr bool kUseOpenMP = true;
}  // namespace basis_relabel
#else
#pragma GCC diagnostic ignored "-Wunknown-pragmas"
namespace basis_relabel {
inline constexpr bool kUseOpenMP = false;
}  // namespace basis_relabel
inline int omp_get_thread_num() { return 0; }
inline int omp_get_max_threads() { return 1; }
#endif
