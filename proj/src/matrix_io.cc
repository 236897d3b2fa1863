// Copyright 2026 The hsdual Authors
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

#include "hsdual/matrix_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hsdual {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

void check_format_tag(const json &j) {
    if (!j.is_object()) {
        throw FormatError("expected a JSON object");
    }
    if (j.contains("format") && !(j["format"].is_number_integer() && j["format"].get<long long>() == 1)) {
        throw FormatError("unsupported \"format\" (expected 1)");
    }
}

std::size_t positive_field(const json &j, const char *name) {
    if (!j.contains(name) || !j[name].is_number_integer() || j[name].get<long long>() <= 0) {
        throw FormatError(std::string("field \"") + name + "\" must be a positive integer");
    }
    return j[name].get<std::size_t>();
}

double finite_number(const json &x) {
    if (!x.is_number()) {
        throw FormatError("matrix entries must be [re, im] pairs of numbers");
    }
    const double v = x.get<double>();
    if (!std::isfinite(v)) {
        throw FormatError("matrix entries must be finite");
    }
    return v;
}

ComplexMatrix matrix_from_json(const json &j) {
    check_format_tag(j);
    const std::size_t rows = positive_field(j, "rows");
    const std::size_t cols = positive_field(j, "cols");
    if (!j.contains("data") || !j["data"].is_array()) {
        throw FormatError("field \"data\" must be an array of rows");
    }
    const json &data = j["data"];
    if (data.size() != rows) {
        throw FormatError("\"data\" has " + std::to_string(data.size()) + " rows, expected " + std::to_string(rows));
    }
    check_entry_budget(rows, cols);
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json &row = data[r];
        if (!row.is_array() || row.size() != cols) {
            throw FormatError("row " + std::to_string(r) + " does not have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const json &entry = row[c];
            if (!entry.is_array() || entry.size() != 2) {
                throw FormatError("matrix entries must be [re, im] pairs of numbers");
            }
            m(r, c) = {finite_number(entry[0]), finite_number(entry[1])};
        }
    }
    return m;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

ComplexMatrix parse_matrix(std::string_view text) {
    return matrix_from_json(parse_json(text));
}

KrausList parse_channel(std::string_view text) {
    const json j = parse_json(text);
    check_format_tag(j);
    const std::size_t dim = positive_field(j, "dim");
    if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
        throw FormatError("field \"kraus\" must be a nonempty array of matrices");
    }
    KrausList out;
    for (const json &block : j["kraus"]) {
        ComplexMatrix m = matrix_from_json(block);
        if (m.rows() != dim || m.cols() != dim) {
            throw DimensionError("Kraus operator " + m.shape_str() + " does not match dim " + std::to_string(dim));
        }
        out.ops.push_back(std::move(m));
    }
    return out;
}

ComplexMatrix read_matrix_file(const std::string &path) {
    return parse_matrix(slurp(path));
}

KrausList read_channel_file(const std::string &path) {
    return parse_channel(slurp(path));
}

std::string format_number(double x, int digits) {
    if (x == 0) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

std::string format_matrix(const ComplexMatrix &m, int digits) {
    std::string out = "{\n  \"format\": 1,\n  \"rows\": " + std::to_string(m.rows()) +
                      ",\n  \"cols\": " + std::to_string(m.cols()) + ",\n  \"data\": [\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "    [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                out += ", ";
            }
            out += "[" + format_number(m(r, c).real(), digits) + ", " + format_number(m(r, c).imag(), digits) + "]";
        }
        out += r + 1 < m.rows() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

}  // namespace hsdual
