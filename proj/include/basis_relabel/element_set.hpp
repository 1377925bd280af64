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

#include <algorithm>
#include <iterator>
#include <span>
#include <vector>

namespace basis_relabel {

// Elements are dense integer ids into the ground set of the base matroid.
using Element = int;

// A set of elements, kept sorted ascending without duplicates.
using ElementSet = std::vector<Element>;

inline ElementSet make_set(std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline ElementSet make_set(std::span<const Element> xs) {
  return make_set(std::vector<Element>(xs.begin(), xs.end()));
}

inline bool set_contains(const ElementSet& s, Element x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline ElementSet set_minus(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElementSet set_with(ElementSet s, Element x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) s.insert(it, x);
  return s;
}

inline ElementSet set_without(ElementSet s, Element x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it != s.end() && *it == x) s.erase(it);
  return s;
}

}  // namespace basis_relabel
