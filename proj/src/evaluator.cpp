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

#include "evaluator.hpp"

#include "derivative_polys.hpp"
#include "jet.hpp"

namespace derivkit {

std::vector<Method> methods_for(FnId fn) {
  switch (fn) {
    case FnId::tan:
      return {Method::closed, Method::leibniz, Method::dp, Method::oracle};
    case FnId::sec:
      return {Method::closed, Method::dp, Method::hoppe, Method::oracle};
    case FnId::cos_pow:
      return {Method::lambda, Method::delta, Method::oracle};
    case FnId::arctan:
    case FnId::lorentz:
    case FnId::lorentz_pow:
    case FnId::arccos:
    case FnId::sech:
    case FnId::sech_pow:
    case FnId::cot:
      return {Method::closed, Method::oracle};
    default:
      return {Method::oracle};
  }
}

DerivResult evaluate(FnId fn, Method method, int order, double x, FnParams params) {
  if (method == Method::oracle)
    return {nth_derivative(fn, order, x, params), Method::oracle, 0.0};

  switch (fn) {
    case FnId::arctan:
      if (method == Method::closed) return {deriv_arctan(order, x), Method::closed, 0.0};
      break;
    case FnId::lorentz:
      if (method == Method::closed)
        return {static_cast<double>(deriv_lorentz<long double>(order, x)), Method::closed, 0.0};
      break;
    case FnId::lorentz_pow:
      if (method == Method::closed)
        return {deriv_lorentz_pow(order, params.nu, x), Method::closed, 0.0};
      break;
    case FnId::arccos:
      if (method == Method::closed) return {deriv_arccos(order, x), Method::closed, 0.0};
      break;
    case FnId::sech:
      if (method == Method::closed) return {deriv_sech(order, x), Method::closed, 0.0};
      break;
    case FnId::sech_pow:
      if (method == Method::closed)
        return {deriv_sech_pow(order, params.nu, x), Method::closed, 0.0};
      break;
    case FnId::sec:
      if (method == Method::closed) return deriv_sec(order, x);
      if (method == Method::dp) return {dp_sec(order, x), Method::dp, 0.0};
      if (method == Method::hoppe) return {hoppe_sec(order, x), Method::hoppe, 0.0};
      break;
    case FnId::tan:
      if (method == Method::closed) return deriv_tan_direct(order, x);
      if (method == Method::leibniz) return deriv_tan_leibniz(order, x);
      if (method == Method::dp) return {dp_tan(order, x), Method::dp, 0.0};
      break;
    case FnId::cot:
      if (method == Method::closed) return deriv_cot(order, x);
      break;
    case FnId::cos_pow:
      if (method == Method::lambda)
        return {lambda_cos_pow_deriv(order, params.j, x), Method::lambda, 0.0};
      if (method == Method::delta)
        return {delta_cos_pow_deriv(order, params.j, x), Method::delta, 0.0};
      break;
    default:
      break;
  }
  throw std::invalid_argument(std::string("evaluate: method '") + method_name(method) +
                              "' not available for function '" + fn_id_name(fn) + "'");
}

}  // namespace derivkit
