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

#ifndef DERIVKIT_ERRORS_HPP
#define DERIVKIT_ERRORS_HPP

#include <stdexcept>

namespace derivkit {

/// Evaluation point within kSingularTol of a pole of the target function.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A complex-intermediate route produced an imaginary residual too large to
/// pass off as rounding noise.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace derivkit

#endif  // DERIVKIT_ERRORS_HPP
