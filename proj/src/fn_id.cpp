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

#include "fn_id.hpp"

#include <utility>

namespace derivkit {

namespace {
constexpr std::pair<FnId, const char*> kNames[] = {
    {FnId::sin, "sin"},
    {FnId::cos, "cos"},
    {FnId::exp, "exp"},
    {FnId::sinh, "sinh"},
    {FnId::cosh, "cosh"},
    {FnId::tan, "tan"},
    {FnId::sec, "sec"},
    {FnId::cot, "cot"},
    {FnId::sech, "sech"},
    {FnId::arctan, "arctan"},
    {FnId::arccos, "arccos"},
    {FnId::lorentz, "lorentz"},
    {FnId::lorentz_pow, "lorentz_pow"},
    {FnId::sech_pow, "sech_pow"},
    {FnId::cos_pow, "cos_pow"},
};
}  // namespace

const char* fn_id_name(FnId f) {
  for (const auto& [id, name] : kNames)
    if (id == f) return name;
  return "?";
}

std::optional<FnId> fn_id_from_string(const std::string& name) {
  for (const auto& [id, n] : kNames)
    if (name == n) return id;
  return std::nullopt;
}

}  // namespace derivkit
