/*
   Copyright 2026 derivkit contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DERIVKIT_FN_ID_HPP
#define DERIVKIT_FN_ID_HPP

#include <optional>
#include <string>

namespace derivkit {

enum class FnId {
  sin,
  cos,
  exp,
  sinh,
  cosh,
  tan,
  sec,
  cot,
  sech,
  arctan,
  arccos,
  lorentz,      // 1/(1+x^2)
  lorentz_pow,  // (1+x^2)^(-nu)
  sech_pow,     // sech(x)^nu
  cos_pow,      // cos(x)^j
};

/// Parameters of the parametric families; ignored by the plain functions.
struct FnParams {
  double nu = 1.0;
  int j = 1;
};

const char* fn_id_name(FnId f);
std::optional<FnId> fn_id_from_string(const std::string& name);

// Point-exclusion tolerance shared by every evaluator: arguments closer than
// this to a pole of the target function are rejected instead of evaluated.
inline constexpr double kSingularTol = 1e-8;

// A complex-intermediate route whose imaginary residual exceeds this times
// max(1, |value|) is reported as inconsistent rather than silently truncated.
inline constexpr double kResidualImTol = 1e-6;

}  // namespace derivkit

#endif  // DERIVKIT_FN_ID_HPP
