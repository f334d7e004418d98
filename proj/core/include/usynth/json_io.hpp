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

#ifndef USYNTH_JSON_IO_HPP_
#define USYNTH_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "usynth/linalg.hpp"

namespace usynth {

// Matrices travel as {"rows": r, "cols": c, "data": [[re, im], ...]} in
// row-major order. Parsers reject malformed documents (ParseError) and
// non-finite numbers (NonFinite).

std::string matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(std::string_view text);

/// {"u": [u1, u2, u3, u4]}
std::string vector_to_json(const std::vector<double> &u, std::string_view key = "u");
std::vector<double> vector_from_json(std::string_view text, std::string_view key = "u");

/// Rounds to `digits` significant digits so that shortest round-trip
/// printing never emits more than that.
double round_significant(double x, int digits = 12);

/// printf("%.12g") style formatting.
std::string format_number(double x, int digits = 12);

}  // namespace usynth

#endif  // USYNTH_JSON_IO_HPP_
