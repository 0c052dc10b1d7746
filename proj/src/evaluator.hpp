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

#ifndef DERIVKIT_EVALUATOR_HPP
#define DERIVKIT_EVALUATOR_HPP

#include <vector>

#include "deriv_engine.hpp"
#include "fn_id.hpp"

namespace derivkit {

/// Evaluation routes available for a function, in display order.
/// "closed" is always first when present; "oracle" is always last.
std::vector<Method> methods_for(FnId fn);

/// Runs one (function, method) pair. Throws std::invalid_argument for a
/// method the function does not support, std::domain_error /
/// SingularityError for bad points, ConsistencyError when a complex route
/// fails its own residual gate.
DerivResult evaluate(FnId fn, Method method, int order, double x, FnParams params = {});

}  // namespace derivkit

#endif  // DERIVKIT_EVALUATOR_HPP
