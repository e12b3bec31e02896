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

#include "cartesian/multipoly.hpp"

#include <random>

#include <gtest/gtest.h>

#include "cartesian/grid.hpp"

namespace cartesian {
namespace {

MultiPoly random_poly(const FieldSpec& f, std::size_t n, std::uint32_t max_exp, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> ex(0, max_exp);
  std::uniform_int_distribution<Code> co(0, f.q() - 1);
  MultiPoly out(f, n);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> a(n);
    for (auto& x : a) x = ex(rng);
    out.add_term(Monomial(a), co(rng));
  }
  return out;
}

// Textbook division by {f_i}: pick a random variable whose exponent is too
// large in some term and subtract the matching multiple of f_i. Independent
// of the univariate-remainder expansion used by reduce_mod_grid.
MultiPoly naive_reduce(MultiPoly f, const EvaluationGrid& g, std::mt19937_64& rng) {
  const std::size_t n = g.arity();
  std::vector<MultiPoly> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(vanishing_polynomial(g, i));
  for (;;) {
    std::vector<std::pair<Monomial, std::size_t>> reducible;
    for (const auto& [m, c] : f.terms())
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] >= g.set(i).size()) reducible.emplace_back(m, i);
    if (reducible.empty()) return f;
    std::uniform_int_distribution<std::size_t> pick(0, reducible.size() - 1);
    const auto [m, i] = reducible[pick(rng)];
    std::vector<std::uint32_t> quot = m.exponents();
    quot[i] -= static_cast<std::uint32_t>(g.set(i).size());
    f = f - MultiPoly::monomial(f.field(), Monomial(quot), f.coefficient(m)) * gens[i];
  }
}

TEST(Grevlex, Order) {
  GrevlexLess less;
  const auto one = Monomial::one(2), t1 = Monomial::variable(2, 0), t2 = Monomial::variable(2, 1);
  EXPECT_TRUE(less(one, t2));
  EXPECT_TRUE(less(t2, t1));
  EXPECT_TRUE(less(t1, Monomial({0, 2})));
  // degree 2 in three variables: t3^2 < t2 t3 < t1 t3 < t2^2 < t1 t2 < t1^2
  std::vector<Monomial> chain{Monomial({0, 0, 2}), Monomial({0, 1, 1}), Monomial({1, 0, 1}),
                              Monomial({0, 2, 0}), Monomial({1, 1, 0}), Monomial({2, 0, 0})};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) EXPECT_TRUE(less(chain[i], chain[i + 1])) << i;
}

TEST(MultiPoly, ZeroHasNoDegree) {
  const auto f = make_field(5, 1);
  MultiPoly z(f, 3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.total_degree().has_value());
  EXPECT_EQ(MultiPoly::constant(f, 3, 2).total_degree(), Degree{0});
  const auto x = MultiPoly::variable(f, 3, 1);
  EXPECT_EQ((x - x).total_degree(), std::nullopt);
  EXPECT_EQ(MultiPoly::constant(f, 3, 0).terms().size(), 0u);
}

TEST(Evaluate, Examples) {
  const auto f2 = make_field(2, 1);
  const auto sum = MultiPoly::variable(f2, 2, 0) + MultiPoly::variable(f2, 2, 1);
  EXPECT_EQ(evaluate(sum, {1, 1}), 0u);
  EXPECT_EQ(evaluate(MultiPoly::constant(f2, 2, 1), {0, 1}), 1u);

  const auto f5 = make_field(5, 1);
  const auto a = MultiPoly::variable(f5, 2, 0) - MultiPoly::constant(f5, 2, 1);
  const auto b = MultiPoly::variable(f5, 2, 1) - MultiPoly::constant(f5, 2, 2);
  EXPECT_EQ(evaluate(a * b, {3, 4}), 4u);
  try {
    evaluate(a, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::arity_mismatch);
  }
}

TEST(Grid, ValidationAndSorting) {
  const auto f = make_field(5, 1);
  EvaluationGrid g(f, {{3, 1}, {4, 0, 2}});
  EXPECT_EQ(g.set(0), (std::vector<Code>{1, 3}));
  EXPECT_EQ(g.cards(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(g.point_count(), 6u);
  auto code_of = [&](std::vector<std::vector<Code>> sets) {
    try {
      EvaluationGrid bad(f, std::move(sets));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::overflow;
  };
  EXPECT_EQ(code_of({{1, 1}}), Errc::duplicate_element);
  EXPECT_EQ(code_of({{1}, {}}), Errc::empty_set);
  EXPECT_EQ(code_of({{5}}), Errc::element_out_of_field);
}

TEST(EnumeratePoints, LexOrder) {
  const auto f2 = make_field(2, 1);
  EvaluationGrid g(f2, {{0, 1}, {0, 1}});
  EXPECT_EQ(enumerate_points(g), (std::vector<std::vector<Code>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  const auto f3 = make_field(3, 1);
  EXPECT_EQ(enumerate_points(EvaluationGrid(f3, {{0, 1, 2}})).size(), 3u);
  const auto f11 = make_field(11, 1);
  EvaluationGrid g259(f11, {{0, 1}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4, 5, 6, 7, 8}});
  const auto pts = enumerate_points(g259);
  EXPECT_EQ(pts.size(), 90u);
  EXPECT_EQ(pts[1], (std::vector<Code>{0, 0, 1}));
  EXPECT_EQ(pts[9], (std::vector<Code>{0, 1, 0}));
  EXPECT_EQ(pts.back(), (std::vector<Code>{1, 4, 8}));
}

TEST(ReduceModGrid, Examples) {
  const auto f2 = make_field(2, 1);
  EvaluationGrid g(f2, {{0, 1}});
  const auto t = MultiPoly::variable(f2, 1, 0);
  EXPECT_EQ(reduce_mod_grid(t * t, g), t);
  EXPECT_EQ(reduce_mod_grid(t, g), t);
  EXPECT_TRUE(reduce_mod_grid(vanishing_polynomial(g, 0), g).is_zero());

  const auto f7 = make_field(7, 1);
  EvaluationGrid g2(f7, {{1, 3, 4}, {0, 6}});
  EXPECT_TRUE(reduce_mod_grid(vanishing_polynomial(g2, 0), g2).is_zero());
  EXPECT_TRUE(reduce_mod_grid(vanishing_polynomial(g2, 1) * MultiPoly::variable(f7, 2, 0), g2).is_zero());
}

class ReduceProperties : public ::testing::TestWithParam<int> {};

TEST_P(ReduceProperties, SoundIdempotentLinearAndOrderFree) {
  std::mt19937_64 rng(GetParam());
  const std::vector<std::pair<FieldSpec, std::vector<std::vector<Code>>>> cases = {
      {make_field(5, 1), {{0, 2, 4}, {1, 3}}},
      {make_field(2, 2), {{0, 1, 2, 3}, {1, 2}, {0, 3}}},
      {make_field(3, 2), {{0, 4, 8}, {1, 2, 3, 5, 7}}},
      {make_field(7, 1), {{6}, {0, 1, 2, 3, 4, 5, 6}}},
  };
  for (const auto& [field, sets] : cases) {
    const EvaluationGrid g(field, sets);
    const auto pts = enumerate_points(g);
    const std::size_t n = g.arity();
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_poly(field, n, 9, 6, rng);
      const auto h = random_poly(field, n, 9, 6, rng);
      const auto r = reduce_mod_grid(f, g);
      for (const auto& p : pts) EXPECT_EQ(evaluate(f, p), evaluate(r, p));
      for (std::size_t i = 0; i < n; ++i) EXPECT_LT(r.degree_in(i), g.set(i).size());
      if (!r.is_zero()) EXPECT_LE(*r.total_degree(), *f.total_degree());
      EXPECT_EQ(reduce_mod_grid(r, g), r);
      const Code c = static_cast<Code>(rng() % field.q());
      EXPECT_EQ(reduce_mod_grid(f + h.scaled(c), g), r + reduce_mod_grid(h, g).scaled(c));
      EXPECT_EQ(naive_reduce(f, g, rng), r);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ReduceProperties, ::testing::Values(1, 2, 3));

TEST(ZeroCount, Examples) {
  const auto f5 = make_field(5, 1);
  EvaluationGrid g(f5, {{0, 1}, {1, 2, 3}, {0, 4}});
  EXPECT_EQ(zero_count(MultiPoly(f5, 3), g), 12u);
  EXPECT_EQ(zero_count(MultiPoly::constant(f5, 3, 1), g), 0u);
  const auto slice = MultiPoly::variable(f5, 3, 0) - MultiPoly::constant(f5, 3, 1);
  EXPECT_EQ(zero_count(slice, g), 6u);
}

TEST(ZeroCount, NullstellensatzAndLooseBound) {
  std::mt19937_64 rng(99);
  const auto f = make_field(5, 1);
  const EvaluationGrid g(f, {{0, 1}, {0, 2, 4}, {0, 1, 2, 3}});
  const auto cards = g.cards();
  for (int trial = 0; trial < 300; ++trial) {
    MultiPoly G(f, 3);
    while (G.is_zero()) {
      G = MultiPoly(f, 3);
      std::uniform_int_distribution<int> terms(1, 6);
      const int nt = terms(rng);
      for (int t = 0; t < nt; ++t) {
        std::vector<std::uint32_t> a(3);
        for (std::size_t i = 0; i < 3; ++i) a[i] = static_cast<std::uint32_t>(rng() % cards[i]);
        G.add_term(Monomial(a), static_cast<Code>(rng() % f.q()));
      }
    }
    const auto zeros = zero_count(G, g);
    EXPECT_LT(zeros, g.point_count());
    EXPECT_LE(zeros, std::uint64_t{cards[1]} * cards[2] * *G.total_degree());
  }
}

TEST(TextFormat, ParseAndFormat) {
  const auto f = make_field(7, 1);
  const auto p = parse_poly(" 3*t1^2*t2 + t2 +5 + 2 * t3 ", f, 3);
  EXPECT_EQ(p.coefficient(Monomial({2, 1, 0})), 3u);
  EXPECT_EQ(p.coefficient(Monomial({0, 1, 0})), 1u);
  EXPECT_EQ(p.coefficient(Monomial({0, 0, 0})), 5u);
  EXPECT_EQ(p.coefficient(Monomial({0, 0, 1})), 2u);
  EXPECT_EQ(format_poly(p), "3*t1^2*t2 + t2 + 2*t3 + 5");
  EXPECT_EQ(format_poly(MultiPoly(f, 2)), "0");
  EXPECT_TRUE(parse_poly("0", f, 2).is_zero());
  EXPECT_EQ(parse_poly("t1*t1*2*3", f, 1), MultiPoly::monomial(f, Monomial({2}), 6));
  EXPECT_TRUE(parse_poly("t1 + 6*t1", f, 1).is_zero());

  auto err = [&](const char* s) {
    try {
      parse_poly(s, f, 2);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::overflow;
  };
  EXPECT_EQ(err(""), Errc::parse_error);
  EXPECT_EQ(err("t1 +"), Errc::parse_error);
  EXPECT_EQ(err("t3"), Errc::arity_mismatch);
  EXPECT_EQ(err("9*t1"), Errc::element_out_of_field);
  EXPECT_EQ(err("x1"), Errc::parse_error);
  EXPECT_EQ(err("t1^"), Errc::parse_error);
}

TEST(TextFormat, RoundTrip) {
  std::mt19937_64 rng(5);
  const auto f = make_field(2, 3);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(f, 4, 5, 7, rng);
    EXPECT_EQ(parse_poly(format_poly(p), f, 4), p);
  }
}

}  // namespace
}  // namespace cartesian
