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
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cartesian/arith.hpp"
#include "cartesian/error.hpp"

// Closed-form parameters of the cartesian code C(d) on a grid with set
// cardinalities d_1 <= ... <= d_n. Everything here is a function of the
// cardinality list alone; no field arithmetic is involved.

namespace cartesian {

using Cards = std::span<const std::size_t>;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline void check_cards(Cards cards) {
  if (cards.empty()) throw Error(Errc::invalid_argument, "cardinality list is empty");
  for (std::size_t c : cards)
    if (c == 0) throw Error(Errc::empty_set, "cardinality 0 in cardinality list");
}

inline void check_sorted_nontrivial(Cards cards) {
  check_cards(cards);
  for (std::size_t i = 0; i < cards.size(); ++i) {
    if (cards[i] < 2) throw Error(Errc::invalid_argument, "cardinalities must be at least 2");
    if (i > 0 && cards[i - 1] > cards[i])
      throw Error(Errc::invalid_argument, "cardinalities must be sorted ascending");
  }
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw Error(Errc::overflow, "value does not fit in 64 bits");
  return v.convert_to<std::uint64_t>();
}

/// C(m, r), zero when r < 0 or r > m.
inline BigInt binomial(std::int64_t m, std::int64_t r) {
  if (r < 0 || m < 0 || r > m) return 0;
  r = std::min(r, m - r);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    out *= m - r + i;
    out /= i;
  }
  return out;
}

}  // namespace detail

/// Length |X*| = d_1 ... d_n.
inline std::uint64_t code_length(Cards cards) {
  detail::check_cards(cards);
  std::uint64_t out = 1;
  for (std::size_t c : cards) out = checked_mul(out, c);
  return out;
}

/// Regularity sum (d_i - 1) of the coordinate ring of the grid.
inline std::uint64_t regularity(Cards cards) {
  detail::check_cards(cards);
  std::uint64_t r = 0;
  for (std::size_t c : cards) r += c - 1;
  return r;
}

/// d = sum_{i<=k} (d_i - 1) + ell with 1 <= ell <= d_{k+1} - 1.
struct KLDecomposition {
  std::size_t k;
  std::uint64_t ell;
  friend bool operator==(const KLDecomposition&, const KLDecomposition&) = default;
};

/// Unique (k, ell) for 1 <= d <= regularity - 1. Outside that range the
/// minimum distance is given by the saturation and d = 0 conventions instead.
inline KLDecomposition decompose_k_ell(Cards cards, std::uint64_t d) {
  detail::check_sorted_nontrivial(cards);
  const std::uint64_t r = regularity(cards);
  if (d < 1 || d >= r)
    throw Error(Errc::out_of_range, "degree " + std::to_string(d) + " outside [1, " +
                                        std::to_string(r == 0 ? 0 : r - 1) + "]");
  std::uint64_t rest = d;
  std::size_t k = 0;
  while (rest > cards[k] - 1) {
    rest -= cards[k] - 1;
    ++k;
  }
  return {k, rest};
}

/// Dimension by inclusion-exclusion:
///   sum over S subset of {1..n} of (-1)^|S| C(n + d - sigma_S, d - sigma_S),
/// sigma_S = sum_{i in S} d_i. Subsets with equal sigma_S are bucketed: the
/// signed subset counts per sigma are the coefficients of prod_i (1 - z^{d_i}).
inline std::uint64_t dimension_formula(Cards cards, std::uint64_t d) {
  detail::check_cards(cards);
  const std::size_t n = cards.size();
  std::map<std::uint64_t, BigInt> signed_counts{{0, 1}};  // sigma -> signed subset count
  for (std::size_t c : cards) {
    if (c > d) continue;
    std::map<std::uint64_t, BigInt> next = signed_counts;
    for (const auto& [s, v] : signed_counts) {
      if (s + c > d) break;
      next[s + c] -= v;
    }
    signed_counts = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [s, v] : signed_counts) {
    if (v == 0) continue;
    total += v * detail::binomial(static_cast<std::int64_t>(n + d - s), static_cast<std::int64_t>(d - s));
  }
  return detail::to_u64(total);
}

/// Numerator h_0..h_r of the Hilbert series prod_i (1 + t + ... + t^{d_i-1}) / (1 - t).
struct HilbertData {
  std::vector<std::uint64_t> numerator;
  std::uint64_t regularity;
  std::uint64_t degree;
};

inline HilbertData hilbert_data(Cards cards) {
  const std::uint64_t degree = code_length(cards);  // also bounds every h_j
  std::vector<std::uint64_t> h{1};
  for (std::size_t c : cards) {
    // multiply by 1 + t + ... + t^{c-1} with a sliding window sum
    std::vector<std::uint64_t> next(h.size() + c - 1, 0);
    std::uint64_t window = 0;
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (j < h.size()) window += h[j];
      if (j >= c && j - c < h.size()) window -= h[j - c];
      next[j] = window;
    }
    h = std::move(next);
  }
  return {std::move(h), regularity(cards), degree};
}

/// Partial sum h_0 + ... + h_d of the Hilbert numerator.
inline std::uint64_t hilbert_function(Cards cards, std::uint64_t d) {
  const auto data = hilbert_data(cards);
  std::uint64_t out = 0;
  for (std::uint64_t j = 0; j <= d && j < data.numerator.size(); ++j) out += data.numerator[j];
  return out;
}

/// Minimum distance: (d_{k+1} - ell) d_{k+2} ... d_n for 1 <= d < regularity,
/// 1 once d reaches the regularity, and the full length at d = 0 (the code of
/// constants is a repetition code).
inline std::uint64_t min_distance_formula(Cards cards, std::uint64_t d) {
  detail::check_cards(cards);
  if (d == 0) return code_length(cards);
  if (d >= regularity(cards)) return 1;
  const auto [k, ell] = decompose_k_ell(cards, d);
  std::uint64_t out = cards[k] - ell;
  for (std::size_t i = k + 1; i < cards.size(); ++i) out = checked_mul(out, cards[i]);
  return out;
}

/// Largest number of grid zeros of a polynomial of degree <= d that is not
/// the zero function: d_{k+2}...d_n (d_1...d_{k+1} - d_{k+1} + ell).
inline std::uint64_t zero_bound(Cards cards, std::uint64_t d) {
  const auto [k, ell] = decompose_k_ell(cards, d);
  std::uint64_t head = 1;
  for (std::size_t i = 0; i <= k; ++i) head = checked_mul(head, cards[i]);
  std::uint64_t out = head - cards[k] + ell;
  for (std::size_t i = k + 1; i < cards.size(); ++i) out = checked_mul(out, cards[i]);
  return out;
}

/// d_2 ... d_n d for n >= 2 and d for n = 1. Not clamped to the grid size.
inline std::uint64_t loose_zero_bound(Cards cards, std::uint64_t d) {
  detail::check_cards(cards);
  std::uint64_t out = d;
  for (std::size_t i = 1; i < cards.size(); ++i) out = checked_mul(out, cards[i]);
  return out;
}

struct CodeParams {
  std::uint64_t length;
  std::uint64_t dimension;
  std::uint64_t min_distance;
  std::uint64_t regularity;
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

inline CodeParams code_params(Cards cards, std::uint64_t d) {
  return {code_length(cards), dimension_formula(cards, d), min_distance_formula(cards, d),
          regularity(cards)};
}

}  // namespace cartesian
