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

// Command-line front end. Reports go to stdout as JSON (or CSV/markdown for
// tables); diagnostics go to stderr. Exit codes: 0 ok, 1 verification
// failure, 2 usage or validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartesian/cartesian.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cartesian;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct FieldArgs {
  std::uint64_t q = 0;
  std::string ext = "auto";
};

FieldSpec field_from_args(const FieldArgs& a) {
  const std::uint64_t cap = max_field_from_env();
  if (a.ext == "auto") return make_field_of_order(a.q, cap);
  unsigned e = 0;
  try {
    e = static_cast<unsigned>(std::stoul(a.ext));
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "--ext must be 'auto' or a positive integer");
  }
  const auto pe = as_prime_power(a.q);
  if (!pe || pe->e != e)
    throw Error(Errc::invalid_field, std::to_string(a.q) + " is not p^" + a.ext + " for a prime p");
  return make_field(pe->p, e, cap);
}

json cards_json(const std::vector<std::size_t>& cards) {
  json arr = json::array();
  for (auto c : cards) arr.push_back(c);
  return arr;
}

json params_row(Cards cards, std::uint64_t d) {
  const auto p = code_params(cards, d);
  json row;
  row["d"] = d;
  row["length"] = p.length;
  row["dimension"] = p.dimension;
  row["min_distance"] = p.min_distance;
  return row;
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// --- params ----------------------------------------------------------------

struct ParamsArgs {
  FieldArgs field;
  std::string sets;
  std::uint64_t d = 0;
};

int cmd_params(const ParamsArgs& a) {
  const FieldSpec F = field_from_args(a.field);
  const auto spec = normalize_spec(F, resolve_sets(parse_set_list(a.sets), F), a.d);
  const auto cards = spec.cards();
  const auto p = spec.params();
  json out;
  out["q"] = F.q();
  out["p"] = F.p();
  out["e"] = F.e();
  out["cards"] = cards_json(cards);
  out["d"] = a.d;
  out["length"] = p.length;
  out["dimension"] = p.dimension;
  out["min_distance"] = p.min_distance;
  out["regularity"] = p.regularity;
  out["saturated"] = a.d >= p.regularity;
  emit_json(out);
  return kExitOk;
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  FieldArgs field;
  std::string sets;
  std::vector<std::size_t> torus;
  bool allow_prime_powers = false;
  std::uint64_t dmax = 0;
  std::string format = "md";
};

int cmd_table(const TableArgs& a) {
  if (a.dmax < 1) throw Error(Errc::invalid_argument, "--dmax must be at least 1");
  std::uint64_t q = 0;
  std::vector<std::size_t> cards;
  if (!a.torus.empty()) {
    TorusSearchOptions opt;
    opt.allow_prime_powers = a.allow_prime_powers;
    opt.max_q = max_field_from_env();
    const auto t = degenerate_torus_for_degrees(a.torus, opt);
    q = t.field.q();
    cards = t.code(1).cards();
  } else {
    if (a.sets.empty() || a.field.q == 0) throw Error(Errc::invalid_argument, "--q and --sets are required without --torus");
    const FieldSpec F = field_from_args(a.field);
    q = F.q();
    cards = normalize_spec(F, resolve_sets(parse_set_list(a.sets), F), 1).cards();
  }

  std::vector<json> rows;
  for (std::uint64_t d = 1; d <= a.dmax; ++d) rows.push_back(params_row(cards, d));

  if (a.format == "json") {
    json out;
    out["q"] = q;
    out["cards"] = cards_json(cards);
    out["rows"] = rows;
    emit_json(out);
  } else if (a.format == "csv") {
    std::cout << "d,length,dimension,min_distance\n";
    for (const auto& r : rows)
      std::cout << r["d"] << ',' << r["length"] << ',' << r["dimension"] << ',' << r["min_distance"] << '\n';
  } else if (a.format == "md") {
    auto line = [&](const std::string& label, const char* key) {
      std::cout << "| " << label << " |";
      for (const auto& r : rows) std::cout << ' ' << r[key] << " |";
      std::cout << '\n';
    };
    line("d", "d");
    std::cout << "|---|";
    for (std::size_t i = 0; i < rows.size(); ++i) std::cout << "---|";
    std::cout << '\n';
    line("length", "length");
    line("dimension", "dimension");
    line("min_distance", "min_distance");
  } else {
    throw Error(Errc::invalid_argument, "--format must be csv, json or md");
  }
  return kExitOk;
}

// --- matrix ----------------------------------------------------------------

struct MatrixArgs {
  FieldArgs field;
  std::string sets;
  std::uint64_t d = 0;
  std::string out;
};

int cmd_matrix(const MatrixArgs& a) {
  const FieldSpec F = field_from_args(a.field);
  const auto spec = normalize_spec(F, resolve_sets(parse_set_list(a.sets), F), a.d);
  const auto g = build_generator_matrix(spec, default_workers());
  const std::string legend_path = a.out + ".monomials";
  std::ofstream mf(a.out, std::ios::binary);
  if (!mf) throw Error(Errc::invalid_argument, "cannot open '" + a.out + "' for writing");
  write_matrix(mf, g);
  std::ofstream lf(legend_path, std::ios::binary);
  if (!lf) throw Error(Errc::invalid_argument, "cannot open '" + legend_path + "' for writing");
  write_legend(lf, g);
  mf.close();
  lf.close();
  if (!mf || !lf) throw Error(Errc::invalid_argument, "failed writing matrix files");

  json out;
  out["q"] = F.q();
  out["cards"] = cards_json(spec.cards());
  out["d"] = a.d;
  out["rows"] = g.rows();
  out["cols"] = g.cols();
  out["matrix"] = a.out;
  out["legend"] = legend_path;
  emit_json(out);
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  FieldArgs field;
  std::string sets;
  std::optional<std::uint64_t> d;
  bool dall = false;
  std::uint64_t max_words = OracleBudget{}.max_words;
  std::uint64_t max_points = OracleBudget{}.max_points;
  unsigned workers = 0;
  bool naive = false;
  bool confirm_only = false;
  bool omit_timing = false;
  bool corrupt_fixture = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.dall == a.d.has_value()) throw Error(Errc::invalid_argument, "give exactly one of --d and --dall");
  const FieldSpec F = field_from_args(a.field);
  const auto base = normalize_spec(F, resolve_sets(parse_set_list(a.sets), F), a.d.value_or(0));
  const auto cards = base.cards();

  OracleBudget budget;
  budget.max_words = a.max_words;
  budget.max_points = a.max_points;

  std::vector<std::uint64_t> degrees;
  if (a.dall)
    for (std::uint64_t d = 0; d <= regularity(cards); ++d) degrees.push_back(d);
  else
    degrees.push_back(*a.d);

  json results = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (std::uint64_t d : degrees) {
    const auto spec = base.with_degree(d);
    VerifyOptions opt;
    opt.scan.workers = a.workers == 0 ? default_workers() : a.workers;
    opt.scan.naive = a.naive;
    if (a.confirm_only) opt.scan.confirm_target = min_distance_formula(cards, d);
    if (a.corrupt_fixture && spec.grid().point_count() <= budget.max_points)
      opt.matrix_override = corrupt_matrix_for_testing(build_generator_matrix(spec, opt.scan.workers));
    const auto rep = verify_params(spec, budget, opt);

    json checks = json::array();
    for (const auto& c : rep.checks) {
      json j;
      j["check"] = c.name;
      j["formula"] = c.formula_value ? json(*c.formula_value) : json(nullptr);
      j["oracle"] = c.oracle_value ? json(*c.oracle_value) : json(nullptr);
      j["status"] = status_name(c.status);
      j["elapsed_ms"] = a.omit_timing ? 0.0 : c.elapsed_ms;
      j["detail"] = c.detail;
      checks.push_back(j);
    }
    passed += rep.count(CheckStatus::pass);
    failed += rep.count(CheckStatus::fail);
    skipped += rep.count(CheckStatus::skipped);
    json r;
    r["d"] = d;
    r["checks"] = checks;
    results.push_back(r);
  }

  json out;
  out["q"] = F.q();
  out["cards"] = cards_json(cards);
  out["results"] = results;
  out["summary"] = {{"pass", passed}, {"fail", failed}, {"skipped", skipped}};
  emit_json(out);
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
  std::vector<std::size_t> degrees;
  bool allow_prime_powers = false;
};

int cmd_construct(const ConstructArgs& a) {
  TorusSearchOptions opt;
  opt.allow_prime_powers = a.allow_prime_powers;
  opt.max_q = max_field_from_env();
  const auto t = degenerate_torus_for_degrees(a.degrees, opt);
  const auto cards = t.code(1).cards();

  json out;
  out["q"] = t.field.q();
  out["p"] = t.field.p();
  out["e"] = t.field.e();
  out["degrees"] = a.degrees;
  out["v"] = t.v;
  json groups = json::array();
  for (const auto& g : t.subgroups) {
    json j;
    j["order"] = g.order;
    j["generator"] = g.generator;
    j["elements"] = g.elements;
    groups.push_back(j);
  }
  out["subgroups"] = groups;
  const auto reg = regularity(cards);
  out["regularity"] = reg;
  json table = json::array();
  for (std::uint64_t d = 1; d <= reg; ++d) table.push_back(params_row(cards, d));
  out["table"] = table;
  emit_json(out);
  return kExitOk;
}

void add_field_options(CLI::App* sub, FieldArgs& f, bool required = true) {
  auto* q = sub->add_option("--q", f.q, "Field order (a prime power)");
  if (required) q->required();
  sub->add_option("--ext", f.ext, "Extension degree, or 'auto' to factor q")->default_val("auto");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine cartesian evaluation codes: parameters, matrices and exhaustive checks"};
  app.require_subcommand(1);

  ParamsArgs params;
  auto* p = app.add_subcommand("params", "Length, dimension, minimum distance and regularity of C(d)");
  add_field_options(p, params.field);
  p->add_option("--sets", params.sets, "Comma-separated set expressions")->required();
  p->add_option("--d", params.d, "Evaluation degree")->required();

  TableArgs table;
  auto* t = app.add_subcommand("table", "Parameter table for d = 1..dmax");
  add_field_options(t, table.field, false);
  auto* t_sets = t->add_option("--sets", table.sets, "Comma-separated set expressions");
  auto* t_torus = t->add_option("--torus", table.torus, "Degenerate torus degrees d1,...,dn")->delimiter(',');
  t_sets->excludes(t_torus);
  t->add_flag("--allow-prime-powers", table.allow_prime_powers, "Search prime powers for --torus");
  t->add_option("--dmax", table.dmax, "Largest degree")->required();
  t->add_option("--format", table.format, "csv, json or md")->default_val("md");

  MatrixArgs matrix;
  auto* m = app.add_subcommand("matrix", "Write the generator matrix and its monomial legend");
  add_field_options(m, matrix.field);
  m->add_option("--sets", matrix.sets, "Comma-separated set expressions")->required();
  m->add_option("--d", matrix.d, "Evaluation degree")->required();
  m->add_option("--out", matrix.out, "Matrix file; the legend goes to <out>.monomials")->required();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Compare formulas with exhaustive oracles");
  add_field_options(v, verify.field);
  v->add_option("--sets", verify.sets, "Comma-separated set expressions")->required();
  v->add_option("--d", verify.d, "Single evaluation degree");
  v->add_flag("--dall", verify.dall, "Every degree 0..regularity");
  v->add_option("--max-words", verify.max_words, "Codeword enumeration budget");
  v->add_option("--max-points", verify.max_points, "Grid size budget");
  v->add_option("--workers", verify.workers, "Worker threads (0 = hardware)");
  v->add_flag("--naive", verify.naive, "Re-encode every message instead of updating incrementally");
  v->add_flag("--confirm-only", verify.confirm_only, "Stop the distance scan once the formula value is reached");
  v->add_flag("--omit-timing", verify.omit_timing, "Report elapsed_ms as 0 for byte-stable output");
  v->add_flag("--corrupt-fixture", verify.corrupt_fixture, "Negative control: zero the last matrix row")
      ->group("");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Degenerate torus with prescribed subgroup orders");
  c->add_option("--degrees", construct.degrees, "Subgroup orders d1,...,dn (each >= 2)")->delimiter(',')->required();
  c->add_flag("--allow-prime-powers", construct.allow_prime_powers, "Search prime powers, not only primes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (p->parsed()) return cmd_params(params);
    if (t->parsed()) return cmd_table(table);
    if (m->parsed()) return cmd_matrix(matrix);
    if (v->parsed()) return cmd_verify(verify);
    if (c->parsed()) return cmd_construct(construct);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
