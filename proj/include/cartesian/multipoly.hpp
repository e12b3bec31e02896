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

#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cartesian/error.hpp"
#include "cartesian/finite_field.hpp"
#include "cartesian/grid.hpp"

namespace cartesian {

/// t^a = t_1^{a_1} ... t_n^{a_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<std::uint32_t>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i, std::uint32_t power = 1) {
    std::vector<std::uint32_t> e(n, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw Error(Errc::arity_mismatch, "monomials of different arity");
    std::vector<std::uint32_t> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
    return Monomial(std::move(e));
  }

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded reverse lexicographic order with t_1 > t_2 > ... > t_n: compare
/// total degree first, then the monomial with the larger exponent in the last
/// differing variable is the smaller one.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = a.arity(); i > 0; --i) {
      if (a[i - 1] != b[i - 1]) return a[i - 1] > b[i - 1];
    }
    return false;
  }
};

/// Total degree of a polynomial. The zero polynomial has no degree and is
/// represented by an empty optional, never by -1.
using Degree = std::optional<std::uint64_t>;

/// Sparse polynomial in F_q[t_1..t_n]. Terms are kept in ascending grevlex
/// order and no stored coefficient is zero.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Code, GrevlexLess>;

  MultiPoly(FieldSpec field, std::size_t arity) : field_(std::move(field)), n_(arity) {}

  static MultiPoly constant(const FieldSpec& f, std::size_t n, Code c) {
    MultiPoly p(f, n);
    p.add_term(Monomial::one(n), c);
    return p;
  }
  static MultiPoly variable(const FieldSpec& f, std::size_t n, std::size_t i) {
    MultiPoly p(f, n);
    p.add_term(Monomial::variable(n, i), 1);
    return p;
  }
  static MultiPoly monomial(const FieldSpec& f, const Monomial& m, Code c = 1) {
    MultiPoly p(f, m.arity());
    p.add_term(m, c);
    return p;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t arity() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Degree total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.total_degree();  // grevlex is graded
  }

  std::uint32_t degree_in(std::size_t i) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
  }

  Code coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Adds c * m to the polynomial.
  void add_term(const Monomial& m, Code c) {
    if (m.arity() != n_)
      throw Error(Errc::arity_mismatch, "monomial arity " + std::to_string(m.arity()) +
                                            " in a polynomial of arity " + std::to_string(n_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly scaled(Code c) const {
    MultiPoly out(field_, n_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.mul(v, c));
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, a.field_.neg(c));
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly out(a.field_, a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.field_.mul(ca, cb));
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  static void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.field_ == b.field_)) throw Error(Errc::field_mismatch, "polynomials over different fields");
    if (a.n_ != b.n_) throw Error(Errc::arity_mismatch, "polynomials of different arity");
  }

  FieldSpec field_;
  std::size_t n_;
  TermMap terms_;
};

/// f(point). Powers of each coordinate are tabulated once per call, then each
/// term is a product of table lookups.
inline Code evaluate(const MultiPoly& f, std::span<const Code> point) {
  if (point.size() != f.arity())
    throw Error(Errc::arity_mismatch, "point has " + std::to_string(point.size()) +
                                          " coordinates, polynomial has " +
                                          std::to_string(f.arity()) + " variables");
  const FieldSpec& F = f.field();
  std::vector<std::vector<Code>> powers(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const std::uint32_t top = f.degree_in(i);
    powers[i].resize(top + 1);
    powers[i][0] = 1;
    for (std::uint32_t k = 1; k <= top; ++k) powers[i][k] = F.mul(powers[i][k - 1], point[i]);
  }
  Code acc = 0;
  for (const auto& [m, c] : f.terms()) {
    Code t = c;
    for (std::size_t i = 0; i < m.arity() && t != 0; ++i) t = F.mul(t, powers[i][m[i]]);
    acc = F.add(acc, t);
  }
  return acc;
}

inline Code evaluate(const MultiPoly& f, std::initializer_list<Code> point) {
  return evaluate(f, std::span<const Code>(point.begin(), point.size()));
}

namespace detail {

inline void check_grid(const MultiPoly& f, const EvaluationGrid& g) {
  if (!(f.field() == g.field())) throw Error(Errc::field_mismatch, "polynomial and grid over different fields");
  if (f.arity() != g.arity())
    throw Error(Errc::arity_mismatch, "polynomial arity " + std::to_string(f.arity()) +
                                          " differs from grid arity " + std::to_string(g.arity()));
}

/// Coefficients of prod_{gamma in A}(t - gamma), low degree first.
inline std::vector<Code> univariate_vanishing(const FieldSpec& F, const std::vector<Code>& set) {
  std::vector<Code> u{1};
  for (Code gamma : set) {
    std::vector<Code> next(u.size() + 1, 0);
    const Code ng = F.neg(gamma);
    for (std::size_t j = 0; j < u.size(); ++j) {
      next[j + 1] = F.add(next[j + 1], u[j]);
      next[j] = F.add(next[j], F.mul(u[j], ng));
    }
    u = std::move(next);
  }
  return u;
}

/// rem[m] = t^m reduced modulo f_i, for m = 0..top. Each step multiplies by t
/// and rewrites t^{d} as t^{d} - f_i(t).
inline std::vector<std::vector<Code>> univariate_remainders(const FieldSpec& F,
                                                            const std::vector<Code>& set,
                                                            std::uint32_t top) {
  const std::size_t d = set.size();
  const std::vector<Code> fi = univariate_vanishing(F, set);
  std::vector<std::vector<Code>> rem(top + 1, std::vector<Code>(d, 0));
  rem[0][0] = 1;
  for (std::uint32_t m = 1; m <= top; ++m) {
    const auto& prev = rem[m - 1];
    std::vector<Code> shifted(d + 1, 0);
    for (std::size_t j = 0; j < d; ++j) shifted[j + 1] = prev[j];
    const Code lead = shifted[d];
    for (std::size_t j = 0; j < d; ++j) {
      shifted[j] = F.sub(shifted[j], F.mul(lead, fi[j]));
    }
    shifted.pop_back();
    rem[m] = std::move(shifted);
  }
  return rem;
}

}  // namespace detail

/// The vanishing generator f_i = prod_{gamma in A_i} (t_i - gamma).
inline MultiPoly vanishing_polynomial(const EvaluationGrid& g, std::size_t i) {
  const auto u = detail::univariate_vanishing(g.field(), g.set(i));
  MultiPoly out(g.field(), g.arity());
  for (std::size_t j = 0; j < u.size(); ++j)
    out.add_term(Monomial::variable(g.arity(), i, static_cast<std::uint32_t>(j)), u[j]);
  return out;
}

/// Normal form of f modulo I(X*) = (f_1, ..., f_n). The f_i have leading terms
/// t_i^{d_i} under every graded order, so they are a Groebner basis and the
/// result does not depend on the order: each variable is reduced on its own
/// and terms are expanded as products of univariate remainders.
///
/// The result has deg_{t_i} <= d_i - 1, agrees with f on the grid, and has
/// total degree at most that of f.
inline MultiPoly reduce_mod_grid(const MultiPoly& f, const EvaluationGrid& g) {
  detail::check_grid(f, g);
  const FieldSpec& F = f.field();
  const std::size_t n = f.arity();
  std::vector<std::vector<std::vector<Code>>> rem(n);
  for (std::size_t i = 0; i < n; ++i)
    rem[i] = detail::univariate_remainders(F, g.set(i), f.degree_in(i));

  MultiPoly out(F, n);
  std::vector<std::uint32_t> exps(n);
  for (const auto& [m, c] : f.terms()) {
    // expand c * prod_i rem[i][m_i] by walking the mixed-radix index space
    std::vector<std::uint32_t> idx(n, 0);
    const auto cards = g.cards();
    for (;;) {
      Code t = c;
      for (std::size_t i = 0; i < n && t != 0; ++i) t = F.mul(t, rem[i][m[i]][idx[i]]);
      if (t != 0) {
        for (std::size_t i = 0; i < n; ++i) exps[i] = idx[i];
        out.add_term(Monomial(exps), t);
      }
      std::size_t j = n;
      bool done = true;
      while (j > 0) {
        --j;
        // only walk up to the degree that can be nonzero
        const std::uint32_t cap = std::min<std::uint32_t>(m[j], static_cast<std::uint32_t>(cards[j] - 1));
        if (idx[j] < cap) {
          ++idx[j];
          done = false;
          break;
        }
        idx[j] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

/// Number of grid points where f vanishes, by full enumeration.
inline std::uint64_t zero_count(const MultiPoly& f, const EvaluationGrid& g) {
  detail::check_grid(f, g);
  std::uint64_t zeros = 0;
  g.for_each_point([&](std::span<const Code> p) {
    if (evaluate(f, p) == 0) ++zeros;
  });
  return zeros;
}

// ---------------------------------------------------------------------------
// Text format: terms `c*t1^a1*...*tn^an` joined by `+`, coefficients written
// as field codes. Unit coefficients, unit exponents and zero-exponent
// variables may be omitted.

inline std::string format_poly(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "t" + std::to_string(i + 1);
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

inline MultiPoly parse_poly(std::string_view text, const FieldSpec& field, std::size_t arity) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(Errc::parse_error, "empty polynomial");

  auto parse_uint = [](std::string_view tok, std::string_view what) -> std::uint64_t {
    if (tok.empty() || tok.size() > 18) throw Error(Errc::parse_error, "bad " + std::string(what));
    std::uint64_t v = 0;
    for (char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(Errc::parse_error, "bad " + std::string(what) + " '" + std::string(tok) + "'");
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return v;
  };

  auto split = [](std::string_view str, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= str.size(); ++i) {
      if (i == str.size() || str[i] == sep) {
        parts.push_back(str.substr(start, i - start));
        start = i + 1;
      }
    }
    return parts;
  };

  MultiPoly out(field, arity);
  for (std::string_view term : split(s, '+')) {
    if (term.empty()) throw Error(Errc::parse_error, "empty term in '" + s + "'");
    Code coeff = 1;
    std::vector<std::uint32_t> exps(arity, 0);
    for (std::string_view factor : split(term, '*')) {
      if (factor.empty()) throw Error(Errc::parse_error, "empty factor in '" + std::string(term) + "'");
      if (factor.front() == 't') {
        auto caret = factor.find('^');
        const auto index = parse_uint(factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1),
                                      "variable index");
        if (index < 1 || index > arity)
          throw Error(Errc::arity_mismatch, "variable t" + std::to_string(index) + " outside t1..t" +
                                                std::to_string(arity));
        std::uint64_t power = 1;
        if (caret != std::string_view::npos) power = parse_uint(factor.substr(caret + 1), "exponent");
        if (power > 0xFFFFFFFFull - exps[index - 1]) throw Error(Errc::parse_error, "exponent too large");
        exps[index - 1] += static_cast<std::uint32_t>(power);
      } else {
        const auto c = parse_uint(factor, "coefficient");
        if (!field.contains(c))
          throw Error(Errc::element_out_of_field,
                      "coefficient " + std::to_string(c) + " is not a code of F_" + std::to_string(field.q()));
        coeff = field.mul(coeff, static_cast<Code>(c));
      }
    }
    out.add_term(Monomial(std::move(exps)), coeff);
  }
  return out;
}

}  // namespace cartesian
