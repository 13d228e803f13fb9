/*
 * Copyright 2026 The esp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace esp {

/// Error kinds raised by the library. Every failure is reported as an
/// esp::Error carrying one of these codes.
enum class Errc {
  parse_error,
  unsupported_ring,
  owner_mismatch,
  not_halvable,
  not_unit,
  undecidable_ideal,
  not_a_divisor,
  not_polynomial_ring,
  variable_clash,
  missing_variable,
  dim_mismatch,
  not_square,
  not_invertible,
  not_skew,
  odd_size,
  bad_indices,
  out_of_range,
  bad_case,
  congruence_mismatch,
  not_local_ring,
  pfaffian_not_one,
  length_mismatch,
  hypothesis_not_met,
  context_mismatch,
  not_symplectic,
  ideal_violation,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::unsupported_ring: return "UnsupportedRing";
    case Errc::owner_mismatch: return "OwnerMismatch";
    case Errc::not_halvable: return "NotHalvable";
    case Errc::not_unit: return "NotUnit";
    case Errc::undecidable_ideal: return "UndecidableIdeal";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::not_polynomial_ring: return "NotPolynomialRing";
    case Errc::variable_clash: return "VariableClash";
    case Errc::missing_variable: return "MissingVariable";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::not_square: return "NotSquare";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::not_skew: return "NotSkew";
    case Errc::odd_size: return "OddSize";
    case Errc::bad_indices: return "BadIndices";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::bad_case: return "BadCase";
    case Errc::congruence_mismatch: return "CongruenceMismatch";
    case Errc::not_local_ring: return "NotLocalRing";
    case Errc::pfaffian_not_one: return "PfaffianNotOne";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::hypothesis_not_met: return "HypothesisNotMet";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::not_symplectic: return "NotSymplectic";
    case Errc::ideal_violation: return "IdealViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace esp
