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

#include "cartesian/finite_field.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

namespace cartesian {
namespace {

// Multiplicative order by repeated multiplication, independent of the
// prime-divisor test used by the library.
std::uint64_t order_by_powering(const FieldSpec& f, Code x) {
  Code y = x;
  std::uint64_t k = 1;
  while (y != 1) {
    y = f.mul(y, x);
    ++k;
  }
  return k;
}

TEST(MakeField, PrimeField) {
  const auto f = make_field(2, 1);
  EXPECT_EQ(f.q(), 2u);
  EXPECT_EQ(f.p(), 2u);
  EXPECT_EQ(f.e(), 1u);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(MakeField, F9ModulusIsSmallestIrreducibleQuadratic) {
  // Exhaustive root check over the nine monic quadratics t^2 + c1 t + c0:
  // code 0 (t^2) has root 0, code 1 (t^2 + 1) has none.
  const auto f = make_field(3, 2);
  EXPECT_EQ(f.q(), 9u);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(MakeField, F181) {
  const auto f = make_field(181, 1);
  EXPECT_EQ(f.q(), 181u);
  EXPECT_EQ(f.primitive_element(), 2u);
}

TEST(MakeField, Errors) {
  try {
    make_field(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_prime);
  }
  try {
    make_field(2, 21);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
  EXPECT_NO_THROW(make_field(2, 21, std::uint64_t{1} << 21));
}

TEST(MakeField, Deterministic) {
  for (auto [p, e] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {2u, 8u}, {7u, 2u}}) {
    EXPECT_EQ(make_field(p, e).modulus(), make_field(p, e).modulus());
    EXPECT_TRUE(make_field(p, e) == make_field(p, e));
  }
}

TEST(FieldOps, SmallExamples) {
  const auto f5 = make_field(5, 1);
  EXPECT_EQ(f5.inv(2), 3u);
  const auto f2 = make_field(2, 1);
  EXPECT_EQ(f2.add(1, 1), 0u);
  const auto f9 = make_field(3, 2);
  for (Code x = 1; x < 9; ++x) EXPECT_EQ(f9.pow(x, 8), 1u) << x;
}

TEST(FieldOps, InverseOfZeroThrows) {
  const auto f = make_field(3, 2);
  try {
    f.inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::division_by_zero);
  }
}

TEST(FieldOps, CrossFieldOperandsThrow) {
  const auto a = make_field(3, 1).element(1);
  const auto b = make_field(5, 1).element(1);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::field_mismatch);
  }
  EXPECT_THROW(make_field(3, 1).element(3), Error);
}

TEST(FieldOps, ElementWrapper) {
  const auto f = make_field(2, 3);
  const auto x = f.element(2);
  EXPECT_EQ((x * x.inv()).code(), 1u);
  EXPECT_EQ((x - x).code(), 0u);
  EXPECT_EQ((x / x).code(), 1u);
  EXPECT_EQ(x.pow(7).code(), 1u);
  EXPECT_EQ((-x + x).code(), 0u);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(FieldAxioms, RandomTriples) {
  const auto [p, e] = GetParam();
  const auto f = make_field(p, e);
  std::mt19937_64 rng(12345 + p * 100 + e);
  std::uniform_int_distribution<Code> pick(0, f.q() - 1);
  for (int i = 0; i < 2000; ++i) {
    const Code a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    EXPECT_EQ(f.add(a, b), f.add(b, a));
    EXPECT_EQ(f.sub(f.add(a, b), b), a);
    if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  }
}

TEST_P(FieldAxioms, ElementsAndPrimitive) {
  const auto [p, e] = GetParam();
  const auto f = make_field(p, e);
  const auto all = enumerate_elements(f);
  EXPECT_EQ(std::set<Code>(all.begin(), all.end()).size(), f.q());
  if (f.q() > 2) {
    const Code g = f.primitive_element();
    EXPECT_EQ(order_by_powering(f, g), f.q() - 1);
    for (Code x = 1; x < g; ++x) EXPECT_LT(order_by_powering(f, x), f.q() - 1);
    for (Code x = 1; x < f.q(); ++x) EXPECT_EQ(f.order(x), order_by_powering(f, x));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u},
                                           std::pair{5u, 1u}, std::pair{2u, 3u}, std::pair{3u, 2u},
                                           std::pair{2u, 4u}, std::pair{5u, 2u}, std::pair{3u, 5u},
                                           std::pair{2u, 9u}, std::pair{181u, 1u}, std::pair{17u, 2u}));

TEST(PrimitiveElement, Examples) {
  EXPECT_EQ(make_field(5, 1).primitive_element(), 2u);
  EXPECT_EQ(make_field(2, 1).primitive_element(), 1u);
  // orders in F_9 = F_3[x]/(x^2 + 1): code 1 -> 1, 2 -> 2, 3 -> 4, 4 -> 8
  EXPECT_EQ(make_field(3, 2).primitive_element(), 4u);
}

TEST(Subgroup, Examples) {
  const auto f181 = make_field(181, 1);
  EXPECT_EQ(subgroup_of_order(f181, 2).elements, (std::vector<Code>{1, 180}));
  EXPECT_EQ(subgroup_of_order(f181, 9).elements,
            (std::vector<Code>{1, 39, 43, 48, 62, 65, 73, 80, 132}));
  const auto f5 = make_field(5, 1);
  EXPECT_EQ(subgroup_of_order(f5, 4).elements, (std::vector<Code>{1, 2, 3, 4}));
  try {
    subgroup_of_order(f5, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_divisor);
  }
}

TEST(Subgroup, EqualsRootsOfUnity) {
  for (auto [p, e] : {std::pair{181u, 1u}, {3u, 2u}, {2u, 4u}, {13u, 1u}}) {
    const auto f = make_field(p, e);
    for (std::uint64_t k = 1; k <= f.q() - 1; ++k) {
      if ((f.q() - 1) % k != 0) continue;
      std::vector<Code> filtered;
      for (Code x = 1; x < f.q(); ++x)
        if (f.pow(x, k) == 1) filtered.push_back(x);
      const auto g = subgroup_of_order(f, k);
      EXPECT_EQ(g.elements, filtered) << "q=" << f.q() << " k=" << k;
      EXPECT_EQ(f.order(g.generator), k);
    }
  }
}

TEST(Arith, PrimePowers) {
  EXPECT_FALSE(as_prime_power(1));
  EXPECT_FALSE(as_prime_power(6));
  EXPECT_EQ(as_prime_power(9)->p, 3u);
  EXPECT_EQ(as_prime_power(9)->e, 2u);
  EXPECT_EQ(as_prime_power(181)->e, 1u);
  EXPECT_EQ(prime_divisors(180), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_THROW(checked_mul(std::uint64_t{1} << 40, std::uint64_t{1} << 40), Error);
}

}  // namespace
}  // namespace cartesian
