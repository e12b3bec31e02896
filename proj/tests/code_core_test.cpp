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

#include "cartesian/code_core.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cartesian/linalg.hpp"

namespace cartesian {
namespace {

std::vector<Code> all_codes(const FieldSpec& f) { return enumerate_elements(f); }

TEST(Normalize, DropsSingletonsAndSorts) {
  const auto f = make_field(5, 1);
  const auto spec = normalize_spec(f, {{0, 1, 2}, {4}, {3, 1}}, 2);
  EXPECT_EQ(spec.cards(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(spec.trace().source_index, (std::vector<std::size_t>{2, 0}));
  const std::vector<Code> p{3, 2};
  EXPECT_EQ(spec.original_point(p), (std::vector<Code>{2, 4, 3}));

  const auto single = normalize_spec(f, {{4}, {2}}, 3);
  EXPECT_EQ(single.cards(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(single.params().length, 1u);
  EXPECT_EQ(single.params().dimension, 1u);
  EXPECT_EQ(single.params().min_distance, 1u);
}

TEST(Normalize, PermutationAndSingletonInvariance) {
  const auto f = make_field(7, 1);
  std::vector<std::vector<Code>> sets{{0, 1, 2, 3}, {5, 6}, {0, 2, 4}};
  const auto base = normalize_spec(f, sets, 0).cards();
  std::sort(sets.begin(), sets.end());
  do {
    auto with_single = sets;
    with_single.insert(with_single.begin() + 1, std::vector<Code>{3});
    for (std::uint64_t d = 0; d <= 7; ++d) {
      EXPECT_EQ(normalize_spec(f, sets, d).params(), normalize_spec(f, {{0, 1, 2, 3}, {5, 6}, {0, 2, 4}}, d).params());
      EXPECT_EQ(normalize_spec(f, with_single, d).params(), normalize_spec(f, sets, d).params());
    }
    EXPECT_EQ(normalize_spec(f, sets, 0).cards(), base);
  } while (std::next_permutation(sets.begin(), sets.end()));
}

TEST(StandardMonomials, AscendingAndBounded) {
  const std::vector<std::size_t> c{2, 3};
  const auto ms = standard_monomials(c, 2);
  const std::vector<Monomial> expect{Monomial({0, 0}), Monomial({0, 1}), Monomial({1, 0}), Monomial({0, 2}),
                                     Monomial({1, 1})};
  EXPECT_EQ(ms, expect);
  EXPECT_EQ(standard_monomials(c, 0).size(), 1u);
  EXPECT_EQ(standard_monomials(c, 9).size(), 6u);
}

TEST(GeneratorMatrix, SmallExamples) {
  const auto f2 = make_field(2, 1);
  const auto g = build_generator_matrix(normalize_spec(f2, {{0, 1}, {0, 1}}, 1));
  ASSERT_EQ(g.rows(), 3u);
  ASSERT_EQ(g.cols(), 4u);
  EXPECT_EQ(g.entries, (std::vector<Code>{1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1}));
  std::ostringstream m, l;
  write_matrix(m, g);
  write_legend(l, g);
  EXPECT_EQ(m.str(), "2 3 4\n1 1 1 1\n0 1 0 1\n0 0 1 1\n");
  EXPECT_EQ(l.str(), "0 0\n0 1\n1 0\n");

  const auto f3 = make_field(3, 1);
  const auto g3 = build_generator_matrix(normalize_spec(f3, {{0, 1, 2}}, 1));
  EXPECT_EQ(g3.entries, (std::vector<Code>{1, 1, 1, 0, 1, 2}));
}

TEST(GeneratorMatrix, RankEqualsDimensionAndCodesNest) {
  const std::vector<std::pair<FieldSpec, std::vector<std::vector<Code>>>> cases = {
      {make_field(2, 1), {{0, 1}, {0, 1}, {0, 1}}},
      {make_field(5, 1), {{1, 4}, {0, 1, 2, 3, 4}, {1, 2, 3}}},
      {make_field(2, 2), {{0, 1, 2, 3}, {1, 3}}},
      {make_field(3, 2), {{1, 2, 3, 4, 5, 6, 7, 8}, {0, 4}}},
  };
  for (const auto& [field, sets] : cases) {
    const auto base = normalize_spec(field, sets, 0);
    const auto r = regularity(base.cards());
    std::optional<GeneratorMatrix> prev;
    for (std::uint64_t d = 0; d <= r + 1; ++d) {
      const auto g = build_generator_matrix(base.with_degree(d), 2);
      const auto rk = rank_of(field, g.entries, g.rows(), g.cols());
      EXPECT_EQ(rk.rank, dimension_formula(base.cards(), d));
      EXPECT_FALSE(rk.first_dependent_row.has_value());
      if (prev) {
        Echelon ech(field, g.cols());
        for (std::size_t i = 0; i < g.rows(); ++i) ech.insert(std::vector<Code>(g.row(i).begin(), g.row(i).end()));
        for (std::size_t i = 0; i < prev->rows(); ++i) EXPECT_TRUE(ech.contains(prev->row(i)));
      }
      prev = g;
    }
  }
}

TEST(GeneratorMatrix, WorkerCountDoesNotChangeEntries) {
  const auto f = make_field(11, 1);
  const auto spec = normalize_spec(f, {{0, 1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6, 7}}, 6);
  EXPECT_EQ(build_generator_matrix(spec, 1).entries, build_generator_matrix(spec, 3).entries);
}

TEST(Encode, MatchesPolynomialEvaluation) {
  const auto f = make_field(5, 1);
  const auto spec = normalize_spec(f, {{0, 2, 3}, {1, 2, 3, 4}}, 3);
  const auto g = build_generator_matrix(spec);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<Code> msg(g.rows());
    MultiPoly poly(f, 2);
    for (std::size_t i = 0; i < msg.size(); ++i) {
      msg[i] = static_cast<Code>(rng() % 5);
      poly.add_term(g.monomials[i], msg[i]);
    }
    const auto word = encode(g, msg);
    for (std::size_t c = 0; c < g.cols(); ++c) ASSERT_EQ(word[c], evaluate(poly, g.points[c]));
  }
  EXPECT_THROW(encode(g, std::vector<Code>(g.rows() + 1, 0)), Error);
  EXPECT_EQ(hamming_weight(std::vector<Code>{0, 3, 0, 1}), 2u);
}

TEST(Extremal, WeightsAndDegrees) {
  const auto f2 = make_field(2, 1);
  EXPECT_EQ(extremal_codeword(normalize_spec(f2, {{0, 1}, {0, 1}}, 1)).weight, 2u);

  const auto f181 = make_field(181, 1);
  std::vector<std::vector<Code>> torus;
  for (std::uint64_t k : {2, 5, 9}) torus.push_back(subgroup_of_order(f181, k).elements);
  const auto spec = normalize_spec(f181, torus, 1);
  EXPECT_EQ(extremal_codeword(spec).weight, 45u);
  for (std::uint64_t d = 0; d <= 13; ++d) {
    const auto ex = extremal_codeword(spec.with_degree(d));
    EXPECT_EQ(ex.weight, min_distance_formula(spec.cards(), d)) << d;
    EXPECT_EQ(ex.polynomial.total_degree(), Degree{d});
    EXPECT_EQ(reduce_mod_grid(ex.polynomial, spec.grid()), ex.polynomial);
  }
  EXPECT_THROW(extremal_codeword(spec.with_degree(14)), Error);

  const auto f9 = make_field(3, 2);
  const auto all = all_codes(f9);
  const auto big = normalize_spec(f9, {all, all, all, all}, 5);
  EXPECT_EQ(extremal_codeword(big).weight, 2916u);
}

}  // namespace
}  // namespace cartesian
