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
#include <string>
#include <vector>

#include "cartesian/arith.hpp"
#include "cartesian/code_core.hpp"
#include "cartesian/error.hpp"
#include "cartesian/finite_field.hpp"
#include "cartesian/grid.hpp"
#include "cartesian/params.hpp"

namespace cartesian {

/// X* = {(x_1^{v_1}, ..., x_n^{v_n}) : x_i in F_q^*}, a product of the cyclic
/// subgroups A_i = <beta^{v_i}> of orders d_i = (q - 1) / gcd(v_i, q - 1).
struct DegenerateTorusSpec {
  FieldSpec field;
  std::vector<std::uint64_t> v;
  std::vector<std::size_t> degrees;
  std::vector<MultiplicativeSubgroup> subgroups;
  EvaluationGrid grid;

  CartesianSpec code(std::uint64_t d) const { return normalize_spec(field, grid.sets(), d); }
};

inline DegenerateTorusSpec torus_spec_from_type(const FieldSpec& field, const std::vector<std::uint64_t>& v) {
  if (v.empty()) throw Error(Errc::invalid_argument, "empty exponent vector");
  const std::uint64_t units = field.q() - 1;
  std::vector<std::size_t> degrees;
  std::vector<MultiplicativeSubgroup> groups;
  std::vector<std::vector<Code>> sets;
  for (std::uint64_t vi : v) {
    if (vi == 0) throw Error(Errc::invalid_argument, "exponents must be positive");
    auto g = subgroup_of_order(field, units / gcd_u64(vi, units));
    degrees.push_back(g.elements.size());
    sets.push_back(g.elements);
    groups.push_back(std::move(g));
  }
  return {field, v, std::move(degrees), std::move(groups), EvaluationGrid(field, std::move(sets))};
}

struct TorusSearchOptions {
  bool allow_prime_powers = false;
  std::uint64_t max_q = kDefaultMaxField;
};

/// Finds the smallest prime q (or prime power, when allowed) with
/// q = 1 mod lcm(d_i), and builds the degenerate torus whose subgroups have
/// orders exactly d_i, with v_i = (q - 1) / d_i. Degrees keep the caller's order.
inline DegenerateTorusSpec degenerate_torus_for_degrees(const std::vector<std::size_t>& degrees,
                                                        const TorusSearchOptions& opt = {}) {
  if (degrees.empty()) throw Error(Errc::invalid_argument, "no degrees given");
  std::uint64_t m = 1;
  for (std::size_t d : degrees) {
    if (d < 2) throw Error(Errc::invalid_argument, "every degree must be at least 2, got " + std::to_string(d));
    m = lcm_u64(m, d);
  }
  std::uint64_t found = 0;
  for (std::uint64_t q = m + 1; q <= opt.max_q; q += m) {
    if (opt.allow_prime_powers ? as_prime_power(q).has_value() : is_prime(q)) {
      found = q;
      break;
    }
  }
  if (found == 0)
    throw Error(Errc::search_exceeded, "no " + std::string(opt.allow_prime_powers ? "prime power" : "prime") +
                                           " q = 1 mod " + std::to_string(m) + " up to " +
                                           std::to_string(opt.max_q));
  const FieldSpec field = make_field_of_order(found, opt.max_q);
  std::vector<std::uint64_t> v;
  for (std::size_t d : degrees) v.push_back((found - 1) / d);
  return torus_spec_from_type(field, v);
}

namespace detail {

inline std::uint64_t require_field_order(std::uint64_t q) {
  if (!as_prime_power(q)) throw Error(Errc::invalid_field, std::to_string(q) + " is not a prime power");
  return q;
}

inline void require_positive_degree(std::uint64_t d) {
  if (d < 1) throw Error(Errc::out_of_range, "degree must be at least 1");
}

}  // namespace detail

/// Code on the torus (F_q^*)^n. Minimum distance from the toric closed form
///   (q-1)^{n-k-1} (q-1-ell),  d = k(q-2) + ell, 1 <= ell <= q-2,
/// and 1 once d >= (q-2)n.
inline CodeParams projective_torus_params(std::uint64_t q, std::size_t n, std::uint64_t d) {
  detail::require_field_order(q);
  if (q == 2) throw Error(Errc::invalid_field, "the torus over F_2 is a single point");
  if (n < 1) throw Error(Errc::invalid_argument, "n must be at least 1");
  detail::require_positive_degree(d);
  const std::vector<std::size_t> cards(n, q - 1);
  const std::uint64_t reg = n * (q - 2);
  std::uint64_t delta = 1;
  if (d < reg) {
    const std::uint64_t k = (d - 1) / (q - 2);
    const std::uint64_t ell = d - k * (q - 2);
    delta = checked_mul(saturating_pow(q - 1, n - k - 1), q - 1 - ell);
  }
  return {code_length(cards), dimension_formula(cards, d), delta, reg};
}

/// Affine Reed-Muller code on F_q^n. Minimum distance
///   (q - ell) q^{n-k-1},  d = k(q-1) + ell, 1 <= ell <= q-1,
/// and 1 once d >= n(q-1).
inline CodeParams reed_muller_params(std::uint64_t q, std::size_t n, std::uint64_t d) {
  detail::require_field_order(q);
  if (n < 1) throw Error(Errc::invalid_argument, "n must be at least 1");
  detail::require_positive_degree(d);
  const std::vector<std::size_t> cards(n, q);
  const std::uint64_t reg = n * (q - 1);
  std::uint64_t delta = 1;
  if (d < reg) {
    const std::uint64_t k = (d - 1) / (q - 1);
    const std::uint64_t ell = d - k * (q - 1);
    delta = checked_mul(q - ell, saturating_pow(q, n - k - 1));
  }
  return {code_length(cards), dimension_formula(cards, d), delta, reg};
}

}  // namespace cartesian
