// Copyright 2026 The cartesian-codes Authors.
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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cartesian/arith.hpp"
#include "cartesian/error.hpp"
#include "cartesian/finite_field.hpp"

namespace cartesian {

/// The cartesian product X* = A_1 x ... x A_n of finite subsets of F_q.
/// Each A_i is stored sorted by code. Duplicates are rejected rather than
/// merged.
class EvaluationGrid {
 public:
  EvaluationGrid(FieldSpec field, std::vector<std::vector<Code>> sets)
      : field_(std::move(field)), sets_(std::move(sets)) {
    if (sets_.empty()) throw Error(Errc::empty_set, "a grid needs at least one coordinate set");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      auto& s = sets_[i];
      if (s.empty()) throw Error(Errc::empty_set, "set A_" + std::to_string(i + 1) + " is empty");
      for (Code c : s)
        if (!field_.contains(c))
          throw Error(Errc::element_out_of_field, "code " + std::to_string(c) + " in A_" +
                                                      std::to_string(i + 1) + " is not in F_" +
                                                      std::to_string(field_.q()));
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw Error(Errc::duplicate_element, "set A_" + std::to_string(i + 1) + " repeats an element");
    }
    point_count_ = 1;
    for (const auto& s : sets_) point_count_ = checked_mul(point_count_, s.size());
  }

  const FieldSpec& field() const { return field_; }
  std::size_t arity() const { return sets_.size(); }
  const std::vector<std::vector<Code>>& sets() const { return sets_; }
  const std::vector<Code>& set(std::size_t i) const { return sets_[i]; }

  std::vector<std::size_t> cards() const {
    std::vector<std::size_t> out;
    out.reserve(sets_.size());
    for (const auto& s : sets_) out.push_back(s.size());
    return out;
  }

  std::uint64_t point_count() const { return point_count_; }

  /// Visits every point in lexicographic order, A_1 slowest and A_n fastest.
  template <typename Fn>
  void for_each_point(Fn&& fn) const {
    const std::size_t n = sets_.size();
    std::vector<std::size_t> idx(n, 0);
    std::vector<Code> pt(n);
    for (std::size_t i = 0; i < n; ++i) pt[i] = sets_[i][0];
    for (;;) {
      fn(std::span<const Code>(pt));
      std::size_t j = n;
      while (j > 0) {
        --j;
        if (++idx[j] < sets_[j].size()) {
          pt[j] = sets_[j][idx[j]];
          break;
        }
        idx[j] = 0;
        pt[j] = sets_[j][0];
        if (j == 0) return;
      }
    }
  }

 private:
  FieldSpec field_;
  std::vector<std::vector<Code>> sets_;
  std::uint64_t point_count_ = 0;
};

inline std::vector<std::vector<Code>> enumerate_points(const EvaluationGrid& g) {
  std::vector<std::vector<Code>> out;
  out.reserve(g.point_count());
  g.for_each_point([&](std::span<const Code> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

}  // namespace cartesian
