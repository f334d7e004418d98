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

#include "usynth/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json_detail.hpp"

namespace usynth {

namespace detail {

double finite_number(const nlohmann::json &j) {
    if (!j.is_number()) throw Error(ErrorKind::ParseError, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "non-finite number in input");
    return v;
}

nlohmann::json matrix_json(const ComplexMatrix &m) {
    nlohmann::json data = nlohmann::json::array();
    for (const auto &v : m.data()) data.push_back({round_significant(v.real()), round_significant(v.imag())});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw Error(ErrorKind::ParseError, "matrix needs rows, cols and data");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw Error(ErrorKind::ParseError, "rows and cols must be nonnegative integers");
    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    const auto &data = j["data"];
    if (!data.is_array() || data.size() != rows * cols)
        throw Error(ErrorKind::ParseError, "data length does not match rows*cols");
    ComplexMatrix m(rows, cols);
    for (std::size_t k = 0; k < data.size(); ++k) {
        const auto &e = data[k];
        if (e.is_array() && e.size() == 2) {
            m.data()[k] = {finite_number(e[0]), finite_number(e[1])};
        } else if (e.is_number()) {
            m.data()[k] = finite_number(e);
        } else {
            throw Error(ErrorKind::ParseError, "matrix entries must be [re, im] pairs");
        }
    }
    return m;
}

nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace detail

std::string matrix_to_json(const ComplexMatrix &m) { return detail::matrix_json(m).dump(); }

ComplexMatrix matrix_from_json(std::string_view text) { return detail::matrix_from(detail::parse_json(text)); }

std::string vector_to_json(const std::vector<double> &u, std::string_view key) {
    nlohmann::json arr = nlohmann::json::array();
    for (double x : u) arr.push_back(round_significant(x));
    nlohmann::json j;
    j[std::string(key)] = std::move(arr);
    return j.dump();
}

std::vector<double> vector_from_json(std::string_view text, std::string_view key) {
    const auto j = detail::parse_json(text);
    const std::string k(key);
    if (!j.is_object() || !j.contains(k) || !j[k].is_array())
        throw Error(ErrorKind::ParseError, "expected an object with array field '" + k + "'");
    std::vector<double> out;
    for (const auto &e : j[k]) out.push_back(detail::finite_number(e));
    return out;
}

double round_significant(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

std::string format_number(double x, int digits) {
    if (x == 0.0) x = 0.0;  // drop negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

}  // namespace usynth
