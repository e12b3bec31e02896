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
#include <stdexcept>
#include <string>

namespace cartesian {

enum class Errc {
  not_prime,
  too_large,
  division_by_zero,
  field_mismatch,
  not_a_divisor,
  arity_mismatch,
  empty_set,
  duplicate_element,
  element_out_of_field,
  out_of_range,
  length_mismatch,
  budget_exceeded,
  search_exceeded,
  invalid_field,
  invalid_argument,
  parse_error,
  overflow,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::not_prime: return "NotPrime";
    case Errc::too_large: return "TooLarge";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::empty_set: return "EmptySet";
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::element_out_of_field: return "ElementOutOfField";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::search_exceeded: return "SearchExceeded";
    case Errc::invalid_field: return "InvalidField";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc kinds.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the exhaustive oracles before any work is done. `required` is the
/// number of words (or points) the instance would need, saturated at 2^64-1.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t limit)
      : Error(Errc::budget_exceeded, what + " (required " + std::to_string(required) +
                                          ", limit " + std::to_string(limit) + ")"),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

}  // namespace cartesian
