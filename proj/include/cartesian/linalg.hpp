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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cartesian/error.hpp"
#include "cartesian/finite_field.hpp"

namespace cartesian {

/// Incremental row echelon basis over F_q. Every stored row has a pivot
/// (its first nonzero column) equal to 1, and is zero at the pivots of all
/// earlier rows, so reduction is one forward pass.
class Echelon {
 public:
  Echelon(FieldSpec field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  std::vector<Code> reduce(std::vector<Code> row) const {
    if (row.size() != cols_)
      throw Error(Errc::length_mismatch, "row length " + std::to_string(row.size()) + " != " +
                                             std::to_string(cols_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t pc = pivots_[i];
      const Code f = row[pc];
      if (f == 0) continue;
      const auto& b = rows_[i];
      for (std::size_t c = pc; c < cols_; ++c)
        if (b[c] != 0) row[c] = field_.sub(row[c], field_.mul(f, b[c]));
    }
    return row;
  }

  /// Adds the row if it is independent of the basis; returns whether it was.
  bool insert(std::vector<Code> row) {
    row = reduce(std::move(row));
    std::size_t pc = 0;
    while (pc < cols_ && row[pc] == 0) ++pc;
    if (pc == cols_) return false;
    const Code scale = field_.inv(row[pc]);
    for (std::size_t c = pc; c < cols_; ++c) row[c] = field_.mul(row[c], scale);
    rows_.push_back(std::move(row));
    pivots_.push_back(pc);
    return true;
  }

  bool contains(std::span<const Code> row) const {
    auto r = reduce(std::vector<Code>(row.begin(), row.end()));
    for (Code c : r)
      if (c != 0) return false;
    return true;
  }

 private:
  FieldSpec field_;
  std::size_t cols_;
  std::vector<std::vector<Code>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a row-major matrix with `cols` columns. Also reports the index of
/// the first row that depends on the rows before it, if any.
struct RankResult {
  std::size_t rank;
  std::optional<std::size_t> first_dependent_row;
};

inline RankResult rank_of(const FieldSpec& f, std::span<const Code> entries, std::size_t rows,
                          std::size_t cols) {
  if (entries.size() != rows * cols) throw Error(Errc::length_mismatch, "matrix entry count mismatch");
  Echelon ech(f, cols);
  RankResult out{0, std::nullopt};
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = entries.subspan(r * cols, cols);
    if (!ech.insert(std::vector<Code>(row.begin(), row.end())) && !out.first_dependent_row)
      out.first_dependent_row = r;
  }
  out.rank = ech.rank();
  return out;
}

}  // namespace cartesian
