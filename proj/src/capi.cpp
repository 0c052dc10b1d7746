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

#include "derivkit/derivkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "checks.hpp"
#include "errors.hpp"
#include "evaluator.hpp"
#include "tables.hpp"

struct dk_context {
  std::string last_error;
};

namespace {

using namespace derivkit;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dk_status set_error(dk_context* ctx, dk_status status, const std::string& message) {
  if (ctx != nullptr) ctx->last_error = message;
  return status;
}

std::optional<FnId> fn_from_c(dk_fn fn) {
  switch (fn) {
    case DK_FN_ARCTAN:
      return FnId::arctan;
    case DK_FN_LORENTZ:
      return FnId::lorentz;
    case DK_FN_LORENTZ_POW:
      return FnId::lorentz_pow;
    case DK_FN_ARCCOS:
      return FnId::arccos;
    case DK_FN_SECH:
      return FnId::sech;
    case DK_FN_SECH_POW:
      return FnId::sech_pow;
    case DK_FN_SEC:
      return FnId::sec;
    case DK_FN_TAN:
      return FnId::tan;
    case DK_FN_COT:
      return FnId::cot;
    case DK_FN_COS_POW:
      return FnId::cos_pow;
  }
  return std::nullopt;
}

std::optional<Method> method_from_c(dk_method method) {
  switch (method) {
    case DK_METHOD_CLOSED:
      return Method::closed;
    case DK_METHOD_DP:
      return Method::dp;
    case DK_METHOD_ORACLE:
      return Method::oracle;
    case DK_METHOD_HOPPE:
      return Method::hoppe;
    case DK_METHOD_LEIBNIZ:
      return Method::leibniz;
    case DK_METHOD_LAMBDA:
      return Method::lambda;
    case DK_METHOD_DELTA:
      return Method::delta;
  }
  return std::nullopt;
}

dk_method method_to_c(Method method) {
  switch (method) {
    case Method::closed:
      return DK_METHOD_CLOSED;
    case Method::dp:
      return DK_METHOD_DP;
    case Method::oracle:
      return DK_METHOD_ORACLE;
    case Method::hoppe:
      return DK_METHOD_HOPPE;
    case Method::leibniz:
      return DK_METHOD_LEIBNIZ;
    case Method::lambda:
      return DK_METHOD_LAMBDA;
    case Method::delta:
      return DK_METHOD_DELTA;
  }
  return DK_METHOD_CLOSED;
}

template <typename Fn>
dk_status guarded(dk_context* ctx, Fn&& body) {
  try {
    return body();
  } catch (const SingularityError& e) {
    return set_error(ctx, DK_ERROR_SINGULAR, e.what());
  } catch (const ConsistencyError& e) {
    return set_error(ctx, DK_ERROR_CONSISTENCY, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(ctx, DK_ERROR_USAGE, e.what());
  } catch (const std::domain_error& e) {
    return set_error(ctx, DK_ERROR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return set_error(ctx, DK_ERROR_INTERNAL, e.what());
  } catch (...) {
    return set_error(ctx, DK_ERROR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* dk_version(void) { return "0.1.0"; }

const char* dk_status_name(dk_status status) {
  switch (status) {
    case DK_OK:
      return "ok";
    case DK_ERROR_USAGE:
      return "usage";
    case DK_ERROR_DOMAIN:
      return "domain";
    case DK_ERROR_SINGULAR:
      return "singular";
    case DK_ERROR_CONSISTENCY:
      return "consistency";
    case DK_ERROR_INTERNAL:
      return "internal";
  }
  return "?";
}

dk_context* dk_context_new(void) {
  try {
    return new dk_context();
  } catch (...) {
    return nullptr;
  }
}

void dk_context_free(dk_context* ctx) { delete ctx; }

const char* dk_context_last_error(const dk_context* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

dk_status dk_deriv(dk_context* ctx, dk_fn fn, dk_method method, int order, double x, double nu,
                   int j, dk_deriv_result* out) {
  if (out == nullptr) return set_error(ctx, DK_ERROR_USAGE, "dk_deriv: out is NULL");
  return guarded(ctx, [&]() -> dk_status {
    const auto f = fn_from_c(fn);
    const auto m = method_from_c(method);
    if (!f || !m) return set_error(ctx, DK_ERROR_USAGE, "dk_deriv: bad fn/method enum");
    FnParams params;
    params.nu = nu;
    params.j = j;
    const DerivResult r = evaluate(*f, *m, order, x, params);
    out->value = r.value;
    out->residual_im = r.residual_im;
    out->method = method_to_c(r.method);
    return DK_OK;
  });
}

unsigned dk_methods_for(dk_fn fn) {
  const auto f = fn_from_c(fn);
  if (!f) return 0;
  unsigned mask = 0;
  for (Method m : methods_for(*f)) mask |= 1u << static_cast<unsigned>(method_to_c(m));
  return mask;
}

dk_status dk_table(dk_context* ctx, const char* family, int n_max, int j, const char* nu,
                   const char* format, char** out) {
  if (out == nullptr) return set_error(ctx, DK_ERROR_USAGE, "dk_table: out is NULL");
  *out = nullptr;
  return guarded(ctx, [&]() -> dk_status {
    if (family == nullptr || format == nullptr)
      return set_error(ctx, DK_ERROR_USAGE, "dk_table: family/format is NULL");
    const auto fam = table_family_from_string(family);
    if (!fam)
      return set_error(ctx, DK_ERROR_USAGE,
                       std::string("dk_table: unknown family '") + family + "'");
    TableOptions options;
    options.n_max = n_max;
    if (j >= 0) options.j = j;
    if (nu != nullptr && nu[0] != '\0') {
      const auto parsed = parse_rational(nu);
      if (!parsed)
        return set_error(ctx, DK_ERROR_USAGE,
                         std::string("dk_table: cannot parse nu '") + nu + "'");
      options.nu = *parsed;
    }
    std::string rendered;
    const std::string fmt = format;
    if (fmt == "csv")
      rendered = render_table_csv(*fam, options);
    else if (fmt == "json")
      rendered = render_table_json(*fam, options);
    else
      return set_error(ctx, DK_ERROR_USAGE, "dk_table: format must be csv or json");
    *out = dup_string(rendered);
    if (*out == nullptr) return set_error(ctx, DK_ERROR_INTERNAL, "dk_table: out of memory");
    return DK_OK;
  });
}

dk_status dk_check(dk_context* ctx, const char* suite, int n_max, double tol,
                   dk_check_summary* summary, char** report) {
  if (report != nullptr) *report = nullptr;
  return guarded(ctx, [&]() -> dk_status {
    if (suite == nullptr) return set_error(ctx, DK_ERROR_USAGE, "dk_check: suite is NULL");
    const auto result = run_check_suite(suite, n_max, tol);
    if (!result)
      return set_error(ctx, DK_ERROR_USAGE,
                       std::string("dk_check: unknown suite '") + suite + "'");
    if (summary != nullptr) {
      summary->cases_run = result->cases_run;
      summary->failures = static_cast<int>(result->failures.size());
      summary->elapsed_seconds = result->elapsed_seconds;
    }
    if (report != nullptr) {
      *report = dup_string(render_report(*result));
      if (*report == nullptr)
        return set_error(ctx, DK_ERROR_INTERNAL, "dk_check: out of memory");
    }
    return DK_OK;
  });
}

void dk_string_free(char* s) { std::free(s); }

}  // extern "C"
