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
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "cartesian/arith.hpp"
#include "cartesian/error.hpp"

namespace cartesian {

/// Canonical element encoding: the base-p digits of a code are the
/// coefficients c_0, c_1, ... of the polynomial-basis representative
/// c_0 + c_1 x + ... + c_{e-1} x^{e-1}. Code 0 is zero, code 1 is one.
using Code = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxField = std::uint64_t{1} << 20;

/// Field-size cap honouring the CARTESIAN_MAX_FIELD environment override.
inline std::uint64_t max_field_from_env() {
  const char* raw = std::getenv("CARTESIAN_MAX_FIELD");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxField;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 2 || v > (std::uint64_t{1} << 31))
    throw Error(Errc::invalid_argument, "CARTESIAN_MAX_FIELD must be an integer in [2, 2^31]");
  return v;
}

namespace detail {

// Dense polynomial over F_p, coefficient of t^i at index i, no trailing zeros.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p)
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::int64_t t = r0 - qt * r1;
    r0 = r1;
    r1 = t;
    t = s0 - qt * s1;
    s0 = s1;
    s1 = t;
  }
  std::int64_t v = s0 % static_cast<std::int64_t>(p);
  if (v < 0) v += p;
  return static_cast<std::uint32_t>(v);
}

/// Remainder of a modulo a nonzero b over F_p.
inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline PrimePoly digits_of(std::uint64_t code, std::uint32_t p, unsigned len) {
  PrimePoly out(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

/// Monic polynomial t^e + (lower digits of `code`).
inline PrimePoly monic_from_code(std::uint64_t code, std::uint32_t p, unsigned e) {
  PrimePoly out = digits_of(code, p, e);
  out.push_back(1);
  return out;
}

/// Trial division by every monic polynomial of degree 1..e/2.
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  for (unsigned deg = 1; deg <= e / 2; ++deg) {
    const std::uint64_t count = saturating_pow(p, deg);
    for (std::uint64_t c = 0; c < count; ++c) {
      if (poly_mod(f, monic_from_code(c, p, deg), p).empty()) return false;
    }
  }
  return true;
}

struct FieldData {
  std::uint32_t p = 0;
  unsigned e = 0;
  std::uint32_t q = 0;
  PrimePoly modulus;               // c_0..c_e, monic
  std::vector<std::uint32_t> pow_p;  // p^0..p^{e-1}
  Code primitive = 1;
  // exp/log tables over the primitive element, used for e > 1
  std::vector<Code> exp_table;
  std::vector<std::uint32_t> log_table;
  // full Cayley tables for q <= kTableLimit
  std::vector<Code> add_table;
  std::vector<Code> mul_table;

  static constexpr std::uint32_t kTableLimit = 256;

  Code add_digits(Code a, Code b) const {
    if (p == 2) return a ^ b;
    Code out = 0;
    for (unsigned i = 0; i < e; ++i) {
      std::uint32_t s = (a % p) + (b % p);
      if (s >= p) s -= p;
      out += s * pow_p[i];
      a /= p;
      b /= p;
    }
    return out;
  }

  Code neg_digits(Code a) const {
    if (p == 2) return a;
    Code out = 0;
    for (unsigned i = 0; i < e; ++i) {
      std::uint32_t d = a % p;
      out += (d == 0 ? 0 : p - d) * pow_p[i];
      a /= p;
    }
    return out;
  }

  // Schoolbook multiplication modulo the defining polynomial.
  Code mul_slow(Code a, Code b) const {
    if (e == 1) return static_cast<Code>(std::uint64_t{a} * b % p);
    PrimePoly x = digits_of(a, p, e), y = digits_of(b, p, e);
    PrimePoly prod(2 * e, 0);
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < e; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
    PrimePoly r = poly_mod(std::move(prod), modulus, p);
    Code out = 0;
    for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * pow_p[i];
    return out;
  }

  Code pow_slow(Code a, std::uint64_t k) const {
    Code r = 1;
    while (k > 0) {
      if (k & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      k >>= 1;
    }
    return r;
  }
};

}  // namespace detail

class FieldElement;

/// F_q = F_{p^e} with the canonical smallest irreducible modulus. Immutable,
/// cheap to copy (shared tables), safe to share between threads.
///
/// The raw Code operations below do not range-check their operands; callers
/// that take codes from outside use `element()` or `contains()` first.
class FieldSpec {
 public:
  std::uint32_t p() const { return d_->p; }
  unsigned e() const { return d_->e; }
  std::uint32_t q() const { return d_->q; }
  /// Coefficients c_0..c_e of the monic modulus. For e == 1 this is the
  /// placeholder t - 0, i.e. {0, 1}.
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  bool contains(std::uint64_t c) const { return c < d_->q; }

  Code add(Code a, Code b) const {
    const auto& d = *d_;
    if (!d.add_table.empty()) return d.add_table[std::size_t{a} * d.q + b];
    if (d.e == 1) {
      std::uint32_t s = a + b;
      return s >= d.p ? s - d.p : s;
    }
    return d.add_digits(a, b);
  }

  Code neg(Code a) const {
    const auto& d = *d_;
    if (d.e == 1) return a == 0 ? 0 : d.p - a;
    return d.neg_digits(a);
  }

  Code sub(Code a, Code b) const { return add(a, neg(b)); }

  Code mul(Code a, Code b) const {
    const auto& d = *d_;
    if (!d.mul_table.empty()) return d.mul_table[std::size_t{a} * d.q + b];
    if (d.e == 1) return static_cast<Code>(std::uint64_t{a} * b % d.p);
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = d.log_table[a] + d.log_table[b];
    if (s >= d.q - 1) s -= d.q - 1;
    return d.exp_table[s];
  }

  Code inv(Code a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
    const auto& d = *d_;
    if (d.e == 1) return detail::inv_mod_prime(a, d.p);
    std::uint32_t l = d.log_table[a];
    return d.exp_table[l == 0 ? 0 : d.q - 1 - l];
  }

  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  /// Square-and-multiply; pow(0, 0) == 1.
  Code pow(Code a, std::uint64_t k) const {
    Code r = 1;
    while (k > 0) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Code a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "zero has no multiplicative order");
    std::uint64_t ord = q() - 1;
    for (std::uint64_t r : prime_divisors(q() - 1)) {
      while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    }
    return ord;
  }

  /// Smallest code of multiplicative order q - 1.
  Code primitive_element() const { return d_->primitive; }

  /// Image of an integer under Z -> F_p -> F_q.
  Code from_integer(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p());
    if (r < 0) r += p();
    return static_cast<Code>(r);
  }

  FieldElement element(std::uint64_t code) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.d_ == b.d_ || (a.p() == b.p() && a.e() == b.e() && a.modulus() == b.modulus());
  }

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  friend FieldSpec make_field(std::uint64_t, unsigned, std::uint64_t);

  std::shared_ptr<const detail::FieldData> d_;
};

/// Constructs F_{p^e}. The modulus is the monic irreducible of degree e whose
/// lower coefficients, read as a base-p integer, are smallest.
inline FieldSpec make_field(std::uint64_t p, unsigned e, std::uint64_t max_q = kDefaultMaxField) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Errc::invalid_argument, "extension degree must be at least 1");
  const std::uint64_t q = saturating_pow(p, e);
  if (q > max_q)
    throw Error(Errc::too_large, std::to_string(p) + "^" + std::to_string(e) +
                                     " exceeds the field-size cap " + std::to_string(max_q));

  auto d = std::make_shared<detail::FieldData>();
  d->p = static_cast<std::uint32_t>(p);
  d->e = e;
  d->q = static_cast<std::uint32_t>(q);
  d->pow_p.resize(e);
  for (unsigned i = 0; i < e; ++i) d->pow_p[i] = static_cast<std::uint32_t>(saturating_pow(p, i));

  if (e == 1) {
    d->modulus = {0, 1};
  } else {
    const std::uint64_t count = saturating_pow(p, e);
    for (std::uint64_t c = 0; c < count; ++c) {
      auto cand = detail::monic_from_code(c, d->p, e);
      if (detail::is_irreducible(cand, d->p)) {
        d->modulus = std::move(cand);
        break;
      }
    }
  }

  if (q > 2) {
    const auto divisors = prime_divisors(q - 1);
    for (Code g = 1; g < q; ++g) {
      bool primitive = true;
      for (std::uint64_t r : divisors) {
        if (d->pow_slow(g, (q - 1) / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        d->primitive = g;
        break;
      }
    }
  }

  if (e > 1) {
    d->exp_table.resize(q - 1);
    d->log_table.assign(q, 0);
    Code x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      d->exp_table[i] = x;
      d->log_table[x] = i;
      x = d->mul_slow(x, d->primitive);
    }
  }

  if (q <= detail::FieldData::kTableLimit) {
    d->add_table.resize(q * q);
    d->mul_table.resize(q * q);
    for (Code a = 0; a < q; ++a) {
      for (Code b = 0; b < q; ++b) {
        d->add_table[a * q + b] = e == 1 ? static_cast<Code>((a + b) % p) : d->add_digits(a, b);
        d->mul_table[a * q + b] = d->mul_slow(a, b);
      }
    }
  }
  return FieldSpec(std::move(d));
}

/// F_q for a prime power q, factoring q as p^e.
inline FieldSpec make_field_of_order(std::uint64_t q, std::uint64_t max_q = kDefaultMaxField) {
  auto pe = as_prime_power(q);
  if (!pe) throw Error(Errc::invalid_field, std::to_string(q) + " is not a prime power");
  return make_field(pe->p, pe->e, max_q);
}

/// Range-checked element bound to its field; arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldSpec field, Code code) : field_(std::move(field)), code_(code) {
    if (!field_.contains(code))
      throw Error(Errc::element_out_of_field,
                  std::to_string(code) + " is not a code of F_" + std::to_string(field_.q()));
  }

  Code code() const { return code_; }
  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return code_ == 0; }

  FieldElement inv() const { return {field_, field_.inv(code_)}; }
  FieldElement pow(std::uint64_t k) const { return {field_, field_.pow(code_, k)}; }
  FieldElement operator-() const { return {field_, field_.neg(code_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.add(a.code_, b.code_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.sub(a.code_, b.code_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.mul(a.code_, b.code_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.div(a.code_, b.code_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  static void same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) throw Error(Errc::field_mismatch, "operands from different fields");
  }

  FieldSpec field_;
  Code code_;
};

inline FieldElement FieldSpec::element(std::uint64_t code) const {
  if (!contains(code))
    throw Error(Errc::element_out_of_field,
                std::to_string(code) + " is not a code of F_" + std::to_string(q()));
  return FieldElement(*this, static_cast<Code>(code));
}

inline std::vector<Code> enumerate_elements(const FieldSpec& f) {
  std::vector<Code> out(f.q());
  for (Code c = 0; c < f.q(); ++c) out[c] = c;
  return out;
}

struct MultiplicativeSubgroup {
  std::uint64_t order;
  Code generator;
  std::vector<Code> elements;  // sorted by code
};

/// The unique subgroup of F_q^* of order k, generated by beta^((q-1)/k) where
/// beta is the primitive element.
inline MultiplicativeSubgroup subgroup_of_order(const FieldSpec& f, std::uint64_t k) {
  const std::uint64_t units = f.q() - 1;
  if (k == 0 || units % k != 0)
    throw Error(Errc::not_a_divisor,
                std::to_string(k) + " does not divide q - 1 = " + std::to_string(units));
  MultiplicativeSubgroup g{k, f.pow(f.primitive_element(), units / k), {}};
  g.elements.reserve(k);
  Code x = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    g.elements.push_back(x);
    x = f.mul(x, g.generator);
  }
  std::sort(g.elements.begin(), g.elements.end());
  return g;
}

}  // namespace cartesian
