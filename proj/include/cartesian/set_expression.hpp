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
#include <string>
#include <string_view>
#include <vector>

#include "cartesian/error.hpp"
#include "cartesian/finite_field.hpp"

// Textual grid descriptions, one per coordinate:
//   full         all of F_q
//   units        F_q^*
//   subgroup:k   the order-k subgroup of F_q^*
//   {c1,c2,...}  explicit element codes
// Items are separated by commas outside braces; a trailing `*N` (or `×N`)
// repeats an item N times, e.g. `full*4`.

namespace cartesian {

struct SetExpression {
  enum class Kind { full, units, subgroup, explicit_codes };
  Kind kind = Kind::full;
  std::uint64_t order = 0;             // subgroup order
  std::vector<std::uint64_t> codes;    // explicit codes, in input order

  std::vector<Code> resolve(const FieldSpec& f) const {
    switch (kind) {
      case Kind::full: return enumerate_elements(f);
      case Kind::units: {
        std::vector<Code> out;
        for (Code c = 1; c < f.q(); ++c) out.push_back(c);
        return out;
      }
      case Kind::subgroup: return subgroup_of_order(f, order).elements;
      case Kind::explicit_codes: {
        std::vector<Code> out;
        for (auto c : codes) out.push_back(f.element(c).code());
        return out;
      }
    }
    return {};
  }
};

namespace detail {

inline std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::uint64_t parse_count(std::string_view tok, std::string_view what) {
  const std::string t = trim_copy(tok);
  if (t.empty() || t.size() > 18) throw Error(Errc::parse_error, "bad " + std::string(what) + " '" + t + "'");
  std::uint64_t v = 0;
  for (char ch : t) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error(Errc::parse_error, "bad " + std::string(what) + " '" + t + "'");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return v;
}

inline SetExpression parse_one_set(const std::string& item) {
  SetExpression e;
  if (item == "full") {
    e.kind = SetExpression::Kind::full;
  } else if (item == "units") {
    e.kind = SetExpression::Kind::units;
  } else if (item.rfind("subgroup:", 0) == 0) {
    e.kind = SetExpression::Kind::subgroup;
    e.order = parse_count(std::string_view(item).substr(9), "subgroup order");
    if (e.order == 0) throw Error(Errc::parse_error, "subgroup order must be positive");
  } else if (item.size() >= 2 && item.front() == '{' && item.back() == '}') {
    e.kind = SetExpression::Kind::explicit_codes;
    const std::string_view body = std::string_view(item).substr(1, item.size() - 2);
    if (trim_copy(body).empty()) throw Error(Errc::empty_set, "explicit set '{}' is empty");
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || body[i] == ',') {
        e.codes.push_back(parse_count(body.substr(start, i - start), "element code"));
        start = i + 1;
      }
    }
  } else {
    throw Error(Errc::parse_error, "unknown set expression '" + item + "'");
  }
  return e;
}

}  // namespace detail

inline std::vector<SetExpression> parse_set_list(std::string_view text) {
  std::vector<std::string> items;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '{') ++depth;
    if (i < text.size() && text[i] == '}') --depth;
    if (depth < 0) throw Error(Errc::parse_error, "unbalanced '}' in set list");
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      items.push_back(detail::trim_copy(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(Errc::parse_error, "unbalanced '{' in set list");

  std::vector<SetExpression> out;
  for (auto& item : items) {
    if (item.empty()) throw Error(Errc::parse_error, "empty item in set list");
    std::uint64_t repeat = 1;
    const auto close = item.rfind('}');
    const auto star = item.rfind('*');
    const auto times = item.rfind("\xC3\x97");  // U+00D7
    std::size_t cut = std::string::npos, skip = 0;
    if (star != std::string::npos && (close == std::string::npos || star > close)) {
      cut = star;
      skip = 1;
    } else if (times != std::string::npos && (close == std::string::npos || times > close)) {
      cut = times;
      skip = 2;
    }
    if (cut != std::string::npos) {
      repeat = detail::parse_count(std::string_view(item).substr(cut + skip), "repeat count");
      if (repeat == 0 || repeat > 64) throw Error(Errc::parse_error, "repeat count must be in [1, 64]");
      item = detail::trim_copy(std::string_view(item).substr(0, cut));
    }
    const auto e = detail::parse_one_set(item);
    for (std::uint64_t r = 0; r < repeat; ++r) out.push_back(e);
  }
  return out;
}

inline std::vector<std::vector<Code>> resolve_sets(const std::vector<SetExpression>& exprs, const FieldSpec& f) {
  std::vector<std::vector<Code>> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(e.resolve(f));
  return out;
}

}  // namespace cartesian
