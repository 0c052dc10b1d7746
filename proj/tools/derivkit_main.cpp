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

// derivkit command-line tool. Talks to the core exclusively through the C
// API in derivkit/derivkit.h.
//
// Exit codes: 0 success, 1 check/consistency/evaluation failure, 2 usage.

#include <derivkit/derivkit.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ContextDeleter {
  void operator()(dk_context* ctx) const { dk_context_free(ctx); }
};
using ContextPtr = std::unique_ptr<dk_context, ContextDeleter>;

struct StringDeleter {
  void operator()(char* s) const { dk_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

const struct {
  const char* name;
  dk_fn fn;
} kFunctions[] = {
    {"arctan", DK_FN_ARCTAN},   {"lorentz", DK_FN_LORENTZ},
    {"lorentz_pow", DK_FN_LORENTZ_POW}, {"arccos", DK_FN_ARCCOS},
    {"sech", DK_FN_SECH},       {"sech_pow", DK_FN_SECH_POW},
    {"sec", DK_FN_SEC},         {"tan", DK_FN_TAN},
    {"cot", DK_FN_COT},         {"cos_pow", DK_FN_COS_POW},
};

const struct {
  const char* name;
  dk_method method;
} kMethods[] = {
    {"closed", DK_METHOD_CLOSED},   {"dp", DK_METHOD_DP},
    {"oracle", DK_METHOD_ORACLE},   {"hoppe", DK_METHOD_HOPPE},
    {"leibniz", DK_METHOD_LEIBNIZ}, {"lambda", DK_METHOD_LAMBDA},
    {"delta", DK_METHOD_DELTA},
};

bool lookup_fn(const std::string& name, dk_fn* out) {
  for (const auto& e : kFunctions)
    if (name == e.name) {
      *out = e.fn;
      return true;
    }
  return false;
}

bool lookup_method(const std::string& name, dk_method* out) {
  for (const auto& e : kMethods)
    if (name == e.name) {
      *out = e.method;
      return true;
    }
  return false;
}

const char* method_label(dk_method m) {
  for (const auto& e : kMethods)
    if (e.method == m) return e.name;
  return "?";
}

int status_to_exit(dk_status status) {
  return status == DK_ERROR_USAGE ? kExitUsage : kExitFailure;
}

// Single documented tolerance knob: DERIVKIT_TOL overrides the default
// tolerance of `check` and of the `deriv --method all` agreement gate.
double env_tolerance(double fallback) {
  const char* raw = std::getenv("DERIVKIT_TOL");
  if (raw == nullptr || raw[0] == '\0') return fallback;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || v <= 0.0) return fallback;
  return v;
}

struct DerivArgs {
  std::string fn_name;
  int order = 0;
  double at = 0.0;
  double nu = 0.0;
  int j = -1;
  std::string method = "closed";
  bool json = false;
  double tol = 0.0;
};

int run_deriv(dk_context* ctx, const DerivArgs& args) {
  dk_fn fn;
  if (!lookup_fn(args.fn_name, &fn)) {
    std::fprintf(stderr, "derivkit: unknown function '%s'\n", args.fn_name.c_str());
    return kExitUsage;
  }

  std::vector<dk_method> methods;
  if (args.method == "all") {
    const unsigned mask = dk_methods_for(fn);
    for (const auto& e : kMethods)
      if (mask & (1u << static_cast<unsigned>(e.method))) methods.push_back(e.method);
  } else {
    dk_method m;
    if (!lookup_method(args.method, &m)) {
      std::fprintf(stderr, "derivkit: unknown method '%s'\n", args.method.c_str());
      return kExitUsage;
    }
    methods.push_back(m);
  }

  std::vector<dk_deriv_result> results;
  for (dk_method m : methods) {
    dk_deriv_result r;
    const dk_status status = dk_deriv(ctx, fn, m, args.order, args.at, args.nu, args.j, &r);
    if (status != DK_OK) {
      std::fprintf(stderr, "derivkit: %s error: %s\n", dk_status_name(status),
                   dk_context_last_error(ctx));
      return status_to_exit(status);
    }
    results.push_back(r);
  }

  double max_dev = 0.0;
  for (size_t a = 0; a < results.size(); ++a)
    for (size_t b = a + 1; b < results.size(); ++b) {
      const double scale =
          std::max(std::fabs(results[a].value), std::fabs(results[b].value));
      if (scale > 0.0)
        max_dev = std::max(max_dev, std::fabs(results[a].value - results[b].value) / scale);
    }

  if (args.json) {
    std::printf("[");
    for (size_t i = 0; i < results.size(); ++i) {
      std::printf("%s{\"fn\":\"%s\",\"m\":%d,\"x\":%.17g,\"method\":\"%s\",\"value\":%.17g,"
                  "\"residual_im\":%.17g}",
                  i == 0 ? "" : ",", args.fn_name.c_str(), args.order, args.at,
                  method_label(results[i].method), results[i].value, results[i].residual_im);
    }
    std::printf("]\n");
  } else {
    for (const auto& r : results)
      std::printf("method=%-8s value=%.17g residual_im=%.17g\n", method_label(r.method),
                  r.value, r.residual_im);
    if (results.size() > 1)
      std::printf("max pairwise relative deviation: %.17g\n", max_dev);
  }

  if (results.size() > 1) {
    const double tol = env_tolerance(args.tol > 0.0 ? args.tol : 1e-9);
    if (max_dev > tol) {
      std::fprintf(stderr, "derivkit: methods deviate beyond tolerance %.3g\n", tol);
      return kExitFailure;
    }
  }
  return kExitOk;
}

struct TableArgs {
  std::string family;
  int n_max = 0;
  int j = -1;
  std::string nu;
  std::string format = "csv";
};

int run_table(dk_context* ctx, const TableArgs& args) {
  char* text = nullptr;
  const dk_status status = dk_table(ctx, args.family.c_str(), args.n_max, args.j,
                                    args.nu.empty() ? nullptr : args.nu.c_str(),
                                    args.format.c_str(), &text);
  if (status != DK_OK) {
    std::fprintf(stderr, "derivkit: %s error: %s\n", dk_status_name(status),
                 dk_context_last_error(ctx));
    return status_to_exit(status);
  }
  CString owned(text);
  std::fputs(owned.get(), stdout);
  return kExitOk;
}

struct CheckArgs {
  std::string suite;
  int n_max = 0;
  double tol = 0.0;
};

int run_check(dk_context* ctx, const CheckArgs& args) {
  dk_check_summary summary{};
  char* report = nullptr;
  const double tol = env_tolerance(args.tol);
  const dk_status status = dk_check(ctx, args.suite.c_str(), args.n_max, tol, &summary, &report);
  if (status != DK_OK) {
    std::fprintf(stderr, "derivkit: %s error: %s\n", dk_status_name(status),
                 dk_context_last_error(ctx));
    return status_to_exit(status);
  }
  CString owned(report);
  std::fputs(owned.get(), stdout);
  return summary.failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derivkit: closed-form repeated derivatives, exact polynomial "
               "tables and identity checks"};
  app.require_subcommand(1);

  DerivArgs deriv_args;
  auto* deriv = app.add_subcommand("deriv", "evaluate an m-th derivative");
  deriv->add_option("--fn", deriv_args.fn_name,
                    "function: arctan|lorentz|lorentz_pow|arccos|sech|sech_pow|sec|tan|cot|cos_pow")
      ->required();
  deriv->add_option("--order,-m", deriv_args.order, "derivative order m >= 0")->required();
  deriv->add_option("--at,-x", deriv_args.at, "evaluation point")->required();
  deriv->add_option("--nu", deriv_args.nu, "power nu for lorentz_pow/sech_pow");
  deriv->add_option("--j", deriv_args.j, "power j for cos_pow");
  deriv->add_option("--method", deriv_args.method,
                    "closed|dp|oracle|hoppe|leibniz|lambda|delta|all (default closed)");
  deriv->add_option("--tol", deriv_args.tol, "agreement tolerance for --method all");
  deriv->add_flag("--json", deriv_args.json, "emit JSON records");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "emit a coefficient table");
  table->add_option("--family", table_args.family,
                    "stirling2|touchard|pnxy|pnnu|hermite|chebyshev|pi|q|lambda|delta")
      ->required();
  table->add_option("--n-max", table_args.n_max, "largest order to emit")->required();
  table->add_option("--j", table_args.j, "power j (lambda/delta)");
  table->add_option("--nu", table_args.nu, "exact nu, e.g. 1/2 (pnnu)");
  table->add_option("--format", table_args.format, "csv|json (default csv)");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run an identity-check suite");
  check->add_option("--suite", check_args.suite, "gf|oracle|chebyshev|bell|operator|routes")
      ->required();
  check->add_option("--n-max", check_args.n_max, "order bound (0 = suite default)");
  check->add_option("--tol", check_args.tol, "tolerance (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ContextPtr ctx(dk_context_new());
  if (!ctx) {
    std::fprintf(stderr, "derivkit: failed to create context\n");
    return kExitFailure;
  }

  if (deriv->parsed()) return run_deriv(ctx.get(), deriv_args);
  if (table->parsed()) return run_table(ctx.get(), table_args);
  if (check->parsed()) return run_check(ctx.get(), check_args);
  return kExitUsage;
}
