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
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cartesian/error.hpp"
#include "cartesian/finite_field.hpp"
#include "cartesian/grid.hpp"
#include "cartesian/multipoly.hpp"
#include "cartesian/parallel.hpp"
#include "cartesian/params.hpp"

namespace cartesian {

/// How normalized coordinates map back to the caller's coordinates.
struct CoordinateTrace {
  std::size_t original_arity = 0;
  /// source_index[i] is the input coordinate that became normalized coordinate i.
  std::vector<std::size_t> source_index;
  /// Input coordinates dropped because their set was a singleton, with the value.
  std::vector<std::pair<std::size_t, Code>> fixed;
};

/// C(d) on a normalized grid: singleton sets removed (unless the whole grid
/// is one point) and sets ordered by cardinality, so 2 <= d_1 <= ... <= d_n.
class CartesianSpec {
 public:
  CartesianSpec(EvaluationGrid grid, std::uint64_t degree, CoordinateTrace trace)
      : grid_(std::move(grid)), degree_(degree), trace_(std::move(trace)) {}

  const EvaluationGrid& grid() const { return grid_; }
  const FieldSpec& field() const { return grid_.field(); }
  std::uint64_t degree() const { return degree_; }
  std::vector<std::size_t> cards() const { return grid_.cards(); }
  const CoordinateTrace& trace() const { return trace_; }

  CartesianSpec with_degree(std::uint64_t d) const { return {grid_, d, trace_}; }

  CodeParams params() const {
    const auto c = cards();
    return code_params(c, degree_);
  }

  /// Maps a point of the normalized grid to the caller's coordinate order,
  /// restoring dropped singleton coordinates.
  std::vector<Code> original_point(std::span<const Code> normalized) const {
    if (normalized.size() != grid_.arity()) throw Error(Errc::arity_mismatch, "point arity mismatch");
    std::vector<Code> out(trace_.original_arity, 0);
    for (std::size_t i = 0; i < normalized.size(); ++i) out[trace_.source_index[i]] = normalized[i];
    for (const auto& [idx, v] : trace_.fixed) out[idx] = v;
    return out;
  }

 private:
  EvaluationGrid grid_;
  std::uint64_t degree_;
  CoordinateTrace trace_;
};

/// Drops singleton sets and sorts the rest by cardinality (stable, so equal
/// cardinalities keep their input order). A grid made only of singletons
/// keeps its first coordinate as a one-point grid.
inline CartesianSpec normalize_spec(const FieldSpec& field, std::vector<std::vector<Code>> sets,
                                    std::uint64_t d) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i].empty()) throw Error(Errc::empty_set, "set A_" + std::to_string(i + 1) + " is empty");
  const EvaluationGrid original(field, std::move(sets));  // validates and sorts

  CoordinateTrace trace;
  trace.original_arity = original.arity();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < original.arity(); ++i) {
    if (original.set(i).size() > 1)
      keep.push_back(i);
    else
      trace.fixed.emplace_back(i, original.set(i)[0]);
  }
  if (keep.empty()) {
    keep.push_back(0);
    trace.fixed.erase(trace.fixed.begin());
  }
  std::stable_sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return original.set(a).size() < original.set(b).size();
  });
  std::vector<std::vector<Code>> normalized;
  for (std::size_t i : keep) normalized.push_back(original.set(i));
  trace.source_index = keep;
  return CartesianSpec(EvaluationGrid(field, std::move(normalized)), d, std::move(trace));
}

/// Standard monomials t^a with a_i <= d_i - 1 and sum a_i <= d, ascending in
/// grevlex. Their residues are a basis of the degree <= d part of S/I(X*).
inline std::vector<Monomial> standard_monomials(Cards cards, std::uint64_t d) {
  const std::size_t n = cards.size();
  std::vector<Monomial> out;
  std::vector<std::uint32_t> a(n, 0);
  std::uint64_t sum = 0;
  for (;;) {
    if (sum <= d) out.emplace_back(a);
    std::size_t j = n;
    bool done = true;
    while (j > 0) {
      --j;
      if (a[j] + 1 < cards[j] && sum + 1 <= d) {
        ++a[j];
        ++sum;
        done = false;
        break;
      }
      sum -= a[j];
      a[j] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

/// Rows: standard monomials (ascending grevlex). Columns: grid points in
/// enumerate_points order. Entries stored row-major.
struct GeneratorMatrix {
  FieldSpec field;
  std::vector<Monomial> monomials;
  std::vector<std::vector<Code>> points;
  std::vector<Code> entries;

  std::size_t rows() const { return monomials.size(); }
  std::size_t cols() const { return points.size(); }
  Code at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }
  std::span<const Code> row(std::size_t r) const {
    return std::span<const Code>(entries).subspan(r * cols(), cols());
  }
};

/// Evaluation rows of the given monomials at the given points.
inline std::vector<Code> evaluate_monomials(const FieldSpec& F, const std::vector<Monomial>& monomials,
                                            const std::vector<std::vector<Code>>& points,
                                            unsigned workers = 1) {
  const std::size_t rows = monomials.size(), cols = points.size();
  std::vector<Code> entries(rows * cols, 0);
  std::vector<std::uint32_t> top;
  for (const auto& m : monomials) {
    if (top.size() < m.arity()) top.resize(m.arity(), 0);
    for (std::size_t i = 0; i < m.arity(); ++i) top[i] = std::max(top[i], m[i]);
  }
  parallel_ranges(cols, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    std::vector<std::vector<Code>> powers(top.size());
    for (std::uint64_t c = begin; c < end; ++c) {
      const auto& pt = points[c];
      for (std::size_t i = 0; i < top.size(); ++i) {
        powers[i].assign(top[i] + 1, 1);
        for (std::uint32_t k = 1; k <= top[i]; ++k) powers[i][k] = F.mul(powers[i][k - 1], pt[i]);
      }
      for (std::size_t r = 0; r < rows; ++r) {
        Code v = 1;
        const auto& m = monomials[r];
        for (std::size_t i = 0; i < m.arity() && v != 0; ++i) v = F.mul(v, powers[i][m[i]]);
        entries[r * cols + c] = v;
      }
    }
  });
  return entries;
}

inline GeneratorMatrix build_generator_matrix(const CartesianSpec& spec, unsigned workers = 1) {
  const auto cards = spec.cards();
  GeneratorMatrix g{spec.field(), standard_monomials(cards, spec.degree()), enumerate_points(spec.grid()), {}};
  g.entries = evaluate_monomials(g.field, g.monomials, g.points, workers);
  return g;
}

/// message * matrix.
inline std::vector<Code> encode(const GeneratorMatrix& g, std::span<const Code> message) {
  if (message.size() != g.rows())
    throw Error(Errc::length_mismatch, "message length " + std::to_string(message.size()) +
                                           " != dimension " + std::to_string(g.rows()));
  const FieldSpec& F = g.field;
  std::vector<Code> out(g.cols(), 0);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const Code m = message[r];
    if (!F.contains(m)) throw Error(Errc::element_out_of_field, "message symbol " + std::to_string(m));
    if (m == 0) continue;
    const auto row = g.row(r);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = F.add(out[c], F.mul(m, row[c]));
  }
  return out;
}

inline std::uint64_t hamming_weight(std::span<const Code> word) {
  return static_cast<std::uint64_t>(std::count_if(word.begin(), word.end(), [](Code c) { return c != 0; }));
}

struct ExtremalCodeword {
  MultiPoly polynomial;
  std::vector<Code> codeword;
  std::uint64_t weight;
};

/// A minimum-weight codeword built from linear factors:
///   G = prod_{i<=k} prod_{j<d_i} (beta_{i,j} - t_i) * prod_{j<=ell} (beta_{k+1,j} - t_{k+1})
/// with each A_i consumed in sorted-code order. G has degree d and is nonzero
/// only where every coordinate avoids the consumed elements.
///
/// Defined for 0 <= d <= regularity: d = 0 gives G = 1, and d = regularity uses
/// k = n - 1, ell = d_n - 1 (weight 1).
inline ExtremalCodeword extremal_codeword(const CartesianSpec& spec) {
  const auto cards = spec.cards();
  const std::uint64_t d = spec.degree();
  const std::uint64_t r = regularity(cards);
  if (d > r)
    throw Error(Errc::out_of_range, "degree " + std::to_string(d) + " exceeds the regularity " +
                                        std::to_string(r));
  const FieldSpec& F = spec.field();
  const std::size_t n = cards.size();

  // how many elements of each A_i become roots of G
  std::vector<std::size_t> consumed(n, 0);
  if (d > 0) {
    KLDecomposition kl = d == r ? KLDecomposition{n - 1, cards[n - 1] - 1} : decompose_k_ell(cards, d);
    for (std::size_t i = 0; i < kl.k; ++i) consumed[i] = cards[i] - 1;
    consumed[kl.k] = kl.ell;
  }

  MultiPoly G = MultiPoly::constant(F, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < consumed[i]; ++j) {
      MultiPoly factor = MultiPoly::constant(F, n, spec.grid().set(i)[j]);
      factor.add_term(Monomial::variable(n, i), F.neg(1));
      G = G * factor;
    }
  }

  std::vector<Code> word;
  word.reserve(spec.grid().point_count());
  spec.grid().for_each_point([&](std::span<const Code> p) { word.push_back(evaluate(G, p)); });
  const auto w = hamming_weight(word);
  return {std::move(G), std::move(word), w};
}

// ---------------------------------------------------------------------------
// File formats.
//
// Matrix: first line `q n_rows n_cols`, then one row per line of
// space-separated element codes. Legend: one exponent vector per line, in row
// order.

inline void write_matrix(std::ostream& os, const GeneratorMatrix& g) {
  os << g.field.q() << ' ' << g.rows() << ' ' << g.cols() << '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c > 0) os << ' ';
      os << g.at(r, c);
    }
    os << '\n';
  }
}

inline void write_legend(std::ostream& os, const GeneratorMatrix& g) {
  for (const auto& m : g.monomials) {
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (i > 0) os << ' ';
      os << m[i];
    }
    os << '\n';
  }
}

}  // namespace cartesian
