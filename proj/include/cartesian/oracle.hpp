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

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cartesian/code_core.hpp"
#include "cartesian/error.hpp"
#include "cartesian/finite_field.hpp"
#include "cartesian/linalg.hpp"
#include "cartesian/multipoly.hpp"
#include "cartesian/parallel.hpp"
#include "cartesian/params.hpp"

// Exhaustive checks of the closed-form parameters. Nothing in this header
// consults the minimum-distance or dimension formulas except verify_params,
// which compares against them.

namespace cartesian {

struct OracleBudget {
  std::uint64_t max_words = std::uint64_t{1} << 24;
  std::uint64_t max_points = std::uint64_t{1} << 16;
  /// Cap on (monomials of degree <= d) x (grid points) for the rank oracle.
  std::uint64_t max_rank_cells = std::uint64_t{1} << 28;

  void validate() const {
    if (max_words == 0 || max_points == 0 || max_rank_cells == 0)
      throw Error(Errc::invalid_argument, "oracle budgets must be positive");
  }
};

struct ScanOptions {
  unsigned workers = 1;
  /// Re-encode every message from scratch instead of updating incrementally.
  bool naive = false;
  /// Confirm-only mode: stop once the running minimum weight reaches this.
  std::optional<std::uint64_t> confirm_target;
};

/// Result of enumerating every nonzero message of a linear span.
struct SpanScan {
  std::uint64_t words = 0;       // nonzero messages visited
  std::uint64_t min_weight = 0;  // over nonzero messages (0 if one maps to the zero word)
  std::uint64_t max_zeros = 0;
  std::uint64_t zero_words = 0;  // nonzero messages mapping to the zero word
  std::vector<Code> witness;     // smallest message index attaining min_weight
  bool stopped_early = false;
};

namespace detail {

inline void check_points(const CartesianSpec& spec, const OracleBudget& b) {
  b.validate();
  if (spec.grid().point_count() > b.max_points)
    throw BudgetExceeded("grid too large for exhaustive checks", spec.grid().point_count(), b.max_points);
}

inline std::uint64_t words_required(std::uint64_t q, std::size_t rows) { return saturating_pow(q, rows); }

/// Visits all nonzero messages over `rows` generator rows as base-q counters
/// (digit i multiplies row i, digit 0 least significant). Contiguous index
/// ranges go to separate workers; results are combined deterministically.
inline SpanScan scan_span(const FieldSpec& F, std::span<const Code> entries, std::size_t rows,
                          std::size_t cols, const ScanOptions& opt) {
  const std::uint64_t q = F.q();
  const std::uint64_t total = words_required(q, rows);
  if (total == std::numeric_limits<std::uint64_t>::max())
    throw Error(Errc::overflow, "message space too large to enumerate");

  struct Partial {
    SpanScan scan;
    std::uint64_t witness_index = 0;
    bool any = false;
  };
  const unsigned workers = total < 4096 ? 1u : std::max(1u, opt.workers);
  std::vector<Partial> parts(workers);
  std::atomic<bool> stop{false};

  auto row_of = [&](std::size_t r) { return entries.subspan(r * cols, cols); };

  parallel_ranges(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    Partial& part = parts[w];
    std::uint64_t m = std::max<std::uint64_t>(begin, 1);
    if (m >= end) return;
    std::vector<Code> digits(rows, 0);
    {
      std::uint64_t x = m;
      for (std::size_t i = 0; i < rows; ++i) {
        digits[i] = static_cast<Code>(x % q);
        x /= q;
      }
    }
    std::vector<Code> word(cols, 0);
    auto full_encode = [&] {
      std::fill(word.begin(), word.end(), 0);
      for (std::size_t i = 0; i < rows; ++i) {
        if (digits[i] == 0) continue;
        const auto row = row_of(i);
        for (std::size_t c = 0; c < cols; ++c) word[c] = F.add(word[c], F.mul(digits[i], row[c]));
      }
    };
    full_encode();
    std::uint64_t weight = hamming_weight(word);

    for (; m < end; ++m) {
      if (opt.naive) {
        full_encode();
        weight = hamming_weight(word);
      }
      ++part.scan.words;
      if (weight == 0) ++part.scan.zero_words;
      if (!part.any || weight < part.scan.min_weight) {
        part.scan.min_weight = weight;
        part.witness_index = m;
        part.scan.witness = digits;
      }
      part.scan.max_zeros = std::max<std::uint64_t>(part.scan.max_zeros, cols - weight);
      part.any = true;
      if (opt.confirm_target && weight <= *opt.confirm_target) {
        stop = true;
        part.scan.stopped_early = true;
      }
      if (opt.confirm_target && stop.load(std::memory_order_relaxed)) {
        part.scan.stopped_early = true;
        return;
      }

      // advance the counter, updating the word one row at a time
      for (std::size_t i = 0; i < rows; ++i) {
        const Code old = digits[i];
        const Code next = old + 1 == q ? 0 : old + 1;
        digits[i] = next;
        if (!opt.naive) {
          const Code delta = F.sub(next, old);
          const auto row = row_of(i);
          for (std::size_t c = 0; c < cols; ++c) {
            if (row[c] == 0) continue;
            const Code before = word[c];
            const Code after = F.add(before, F.mul(delta, row[c]));
            word[c] = after;
            weight += (after != 0) - static_cast<std::uint64_t>(before != 0);
          }
        }
        if (next != 0) break;
      }
    }
  });

  SpanScan out;
  bool any = false;
  std::uint64_t best_index = 0;
  for (auto& p : parts) {
    out.words += p.scan.words;
    out.zero_words += p.scan.zero_words;
    out.stopped_early = out.stopped_early || p.scan.stopped_early;
    if (!p.any) continue;
    out.max_zeros = std::max(out.max_zeros, p.scan.max_zeros);
    if (!any || p.scan.min_weight < out.min_weight ||
        (p.scan.min_weight == out.min_weight && p.witness_index < best_index)) {
      out.min_weight = p.scan.min_weight;
      out.witness = p.scan.witness;
      best_index = p.witness_index;
    }
    any = true;
  }
  return out;
}

}  // namespace detail

/// Exhaustive minimum-weight scan of the code generated by `g`.
inline SpanScan min_distance_scan(const GeneratorMatrix& g, const OracleBudget& budget,
                                  const ScanOptions& opt = {}) {
  budget.validate();
  const auto need = detail::words_required(g.field.q(), g.rows());
  if (need > budget.max_words) throw BudgetExceeded("too many codewords to enumerate", need, budget.max_words);
  return detail::scan_span(g.field, g.entries, g.rows(), g.cols(), opt);
}

inline std::uint64_t brute_min_distance(const GeneratorMatrix& g, const OracleBudget& budget,
                                        const ScanOptions& opt = {}) {
  return min_distance_scan(g, budget, opt).min_weight;
}

/// Minimum Hamming weight over all q^k - 1 nonzero messages.
inline std::uint64_t brute_min_distance(const CartesianSpec& spec, const OracleBudget& budget,
                                        const ScanOptions& opt = {}) {
  detail::check_points(spec, budget);
  const auto cards = spec.cards();
  const auto k = standard_monomials(cards, spec.degree()).size();
  const auto need = detail::words_required(spec.field().q(), k);
  if (need > budget.max_words) throw BudgetExceeded("too many codewords to enumerate", need, budget.max_words);
  return brute_min_distance(build_generator_matrix(spec, opt.workers), budget, opt);
}

/// Rank of the evaluation matrix of every monomial of total degree <= d (not
/// only the standard ones) at every grid point.
inline std::uint64_t brute_rank_dimension(const CartesianSpec& spec, const OracleBudget& budget) {
  detail::check_points(spec, budget);
  const FieldSpec& F = spec.field();
  const std::size_t n = spec.grid().arity();
  const std::uint64_t d = spec.degree();
  const std::uint64_t cols = spec.grid().point_count();

  const BigInt monomial_count = detail::binomial(static_cast<std::int64_t>(n + d), static_cast<std::int64_t>(n));
  const BigInt cells = monomial_count * cols;
  if (cells > budget.max_rank_cells) {
    const std::uint64_t req = cells > std::numeric_limits<std::uint64_t>::max()
                                  ? std::numeric_limits<std::uint64_t>::max()
                                  : cells.convert_to<std::uint64_t>();
    throw BudgetExceeded("rank oracle matrix too large", req, budget.max_rank_cells);
  }

  const auto points = enumerate_points(spec.grid());
  // powers[c][i][a] = (point c)_i ^ a
  std::vector<std::vector<std::vector<Code>>> powers(cols, std::vector<std::vector<Code>>(n));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      auto& pw = powers[c][i];
      pw.assign(d + 1, 1);
      for (std::uint64_t a = 1; a <= d; ++a) pw[a] = F.mul(pw[a - 1], points[c][i]);
    }

  Echelon ech(F, cols);
  std::vector<std::uint32_t> a(n, 0);
  std::vector<Code> row(cols);
  // exponent vectors with sum <= d, as an odometer pruned by the degree
  std::uint64_t sum = 0;
  for (;;) {
    for (std::size_t c = 0; c < cols; ++c) {
      Code v = 1;
      for (std::size_t i = 0; i < n && v != 0; ++i) v = F.mul(v, powers[c][i][a[i]]);
      row[c] = v;
    }
    ech.insert(row);
    if (ech.rank() == cols) break;
    std::size_t j = n;
    bool done = true;
    while (j > 0) {
      --j;
      if (sum < d) {
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
  return ech.rank();
}

/// Largest zero count on the grid among nonzero reduced polynomials of degree
/// <= d. Rows come from evaluating the standard monomials as polynomials, not
/// from the generator matrix.
inline SpanScan zero_scan(const CartesianSpec& spec, const OracleBudget& budget, const ScanOptions& opt = {}) {
  detail::check_points(spec, budget);
  const FieldSpec& F = spec.field();
  const auto cards = spec.cards();
  const auto monomials = standard_monomials(cards, spec.degree());
  const auto need = detail::words_required(F.q(), monomials.size());
  if (need > budget.max_words) throw BudgetExceeded("too many polynomials to enumerate", need, budget.max_words);

  const auto points = enumerate_points(spec.grid());
  std::vector<Code> entries;
  entries.reserve(monomials.size() * points.size());
  for (const auto& m : monomials) {
    const MultiPoly poly = MultiPoly::monomial(F, m);
    for (const auto& p : points) entries.push_back(evaluate(poly, p));
  }
  ScanOptions plain = opt;
  plain.confirm_target.reset();
  return detail::scan_span(F, entries, monomials.size(), points.size(), plain);
}

inline std::uint64_t max_zero_search(const CartesianSpec& spec, const OracleBudget& budget,
                                     const ScanOptions& opt = {}) {
  return zero_scan(spec, budget, opt).max_zeros;
}

// ---------------------------------------------------------------------------

enum class CheckStatus { pass, fail, skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

struct CheckResult {
  std::string name;
  std::optional<std::uint64_t> formula_value;
  std::optional<std::uint64_t> oracle_value;
  CheckStatus status = CheckStatus::skipped;
  double elapsed_ms = 0;
  std::string detail;  // counterexample on failure, reason when skipped
};

struct VerifyReport {
  std::uint64_t degree = 0;
  std::vector<CheckResult> checks;

  bool any_failed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return true;
    return false;
  }
  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
};

struct VerifyOptions {
  ScanOptions scan;
  /// Replaces the generator matrix in the matrix-based checks (test fixtures).
  std::optional<GeneratorMatrix> matrix_override;
};

/// Zeroes the last row of a generator matrix. Used as a negative control: the
/// rank and minimum-distance checks must fail on the result.
inline GeneratorMatrix corrupt_matrix_for_testing(GeneratorMatrix g) {
  if (g.rows() > 0)
    for (std::size_t c = 0; c < g.cols(); ++c) g.entries[(g.rows() - 1) * g.cols() + c] = 0;
  return g;
}

namespace detail {

template <typename Fn>
CheckResult run_check(std::string name, Fn&& body) {
  CheckResult r;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const BudgetExceeded& e) {
    r.status = CheckStatus::skipped;
    r.oracle_value.reset();
    r.detail = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string join_codes(std::span<const Code> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace detail

/// Runs every oracle that fits the budget and compares with the formulas.
/// Budget overruns are reported as skipped and never count as a pass.
inline VerifyReport verify_params(const CartesianSpec& spec, const OracleBudget& budget,
                                  const VerifyOptions& opt = {}) {
  budget.validate();
  VerifyReport rep;
  rep.degree = spec.degree();
  const auto cards = spec.cards();
  const std::uint64_t d = spec.degree();
  const std::uint64_t length = code_length(cards);
  const std::uint64_t dim = dimension_formula(cards, d);
  const std::uint64_t delta = min_distance_formula(cards, d);
  const std::uint64_t reg = regularity(cards);

  rep.checks.push_back(detail::run_check("hilbert_series", [&](CheckResult& r) {
    r.formula_value = dim;
    r.oracle_value = hilbert_function(cards, d);
    r.status = *r.oracle_value == dim ? CheckStatus::pass : CheckStatus::fail;
    if (r.status == CheckStatus::fail) r.detail = "Hilbert numerator partial sum disagrees with inclusion-exclusion";
  }));

  std::optional<GeneratorMatrix> matrix;
  auto get_matrix = [&]() -> const GeneratorMatrix& {
    if (!matrix) {
      if (opt.matrix_override)
        matrix = *opt.matrix_override;
      else
        matrix = build_generator_matrix(spec, opt.scan.workers);
    }
    return *matrix;
  };

  rep.checks.push_back(detail::run_check("generator_rank", [&](CheckResult& r) {
    detail::check_points(spec, budget);
    const auto& g = get_matrix();
    const auto rk = rank_of(g.field, g.entries, g.rows(), g.cols());
    r.formula_value = dim;
    r.oracle_value = rk.rank;
    const bool ok = rk.rank == dim && g.rows() == dim;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok) {
      r.detail = "matrix has " + std::to_string(g.rows()) + " rows, rank " + std::to_string(rk.rank);
      if (rk.first_dependent_row)
        r.detail += "; row " + std::to_string(*rk.first_dependent_row) + " depends on earlier rows";
    }
  }));

  rep.checks.push_back(detail::run_check("rank_dimension", [&](CheckResult& r) {
    r.formula_value = dim;
    r.oracle_value = brute_rank_dimension(spec, budget);
    r.status = *r.oracle_value == dim ? CheckStatus::pass : CheckStatus::fail;
    if (r.status == CheckStatus::fail) r.detail = "rank of all monomials of degree <= d differs";
  }));

  rep.checks.push_back(detail::run_check("min_distance", [&](CheckResult& r) {
    r.formula_value = delta;
    detail::check_points(spec, budget);
    const auto need = detail::words_required(spec.field().q(), standard_monomials(cards, d).size());
    if (!opt.matrix_override && need > budget.max_words)
      throw BudgetExceeded("too many codewords to enumerate", need, budget.max_words);
    const auto scan = min_distance_scan(get_matrix(), budget, opt.scan);
    r.oracle_value = scan.min_weight;
    r.status = scan.min_weight == delta ? CheckStatus::pass : CheckStatus::fail;
    if (r.status == CheckStatus::fail)
      r.detail = "message " + detail::join_codes(scan.witness) + " has weight " + std::to_string(scan.min_weight);
  }));

  rep.checks.push_back(detail::run_check("max_zeros", [&](CheckResult& r) {
    r.formula_value = d >= 1 && d < reg ? zero_bound(cards, d) : length - delta;
    const auto scan = zero_scan(spec, budget, opt.scan);
    r.oracle_value = scan.max_zeros;
    r.status = scan.max_zeros == *r.formula_value && scan.zero_words == 0 ? CheckStatus::pass : CheckStatus::fail;
    if (scan.zero_words != 0)
      r.detail = std::to_string(scan.zero_words) + " nonzero reduced polynomials vanish on the grid";
    else if (r.status == CheckStatus::fail)
      r.detail = "polynomial with coefficients " + detail::join_codes(scan.witness) + " has " +
                 std::to_string(scan.max_zeros) + " zeros";
  }));

  rep.checks.push_back(detail::run_check("extremal_weight", [&](CheckResult& r) {
    r.formula_value = delta;
    if (d > reg) {
      r.status = CheckStatus::skipped;
      r.detail = "degree above the regularity";
      return;
    }
    detail::check_points(spec, budget);
    const auto ex = extremal_codeword(spec);
    r.oracle_value = ex.weight;
    const bool degree_ok = ex.polynomial.total_degree() == Degree{d};
    r.status = ex.weight == delta && degree_ok ? CheckStatus::pass : CheckStatus::fail;
    if (r.status == CheckStatus::fail)
      r.detail = "G = " + format_poly(ex.polynomial) + " has weight " + std::to_string(ex.weight);
  }));

  return rep;
}

}  // namespace cartesian
