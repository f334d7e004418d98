// Copyright 2026 The usynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nlohmann-based helpers shared by the library sources. Not installed.

#ifndef USYNTH_SRC_JSON_DETAIL_HPP_
#define USYNTH_SRC_JSON_DETAIL_HPP_

#include <string_view>

#include "json.hpp"
#include "usynth/linalg.hpp"

namespace usynth::detail {

nlohmann::json matrix_json(const ComplexMatrix &m);
ComplexMatrix matrix_from(const nlohmann::json &j);
double finite_number(const nlohmann::json &j);
/// Parses text, mapping syntax errors to ParseError.
nlohmann::json parse_json(std::string_view text);

}  // namespace usynth::detail

#endif  // USYNTH_SRC_JSON_DETAIL_HPP_
