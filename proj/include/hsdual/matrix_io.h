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


#ifndef HSDUAL_MATRIX_IO_H
#define HSDUAL_MATRIX_IO_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "hsdual/matrix.h"
#include "hsdual/superop.h"

namespace hsdual {

// Text formats (JSON):
//
//   matrix:  {"format": 1, "rows": R, "cols": C,
//             "data": [[[re, im], ...], ...]}       row-major, R rows of C pairs
//   channel: {"format": 1, "dim": D, "kraus": [matrix, ...]}
//
// "format" may be omitted on input; if present it must be 1.

/// Malformed text: bad JSON, missing fields, non-finite numbers, or data that
/// does not match the declared shape.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ComplexMatrix parse_matrix(std::string_view text);
/// Kraus blocks that are not dim x dim raise DimensionError.
KrausList parse_channel(std::string_view text);

ComplexMatrix read_matrix_file(const std::string &path);
KrausList read_channel_file(const std::string &path);

/// "%.*g" rendering with `digits` significant digits; -0 prints as 0.
std::string format_number(double x, int digits = 17);

/// Matrix in the text format above, one matrix row per line, trailing newline.
std::string format_matrix(const ComplexMatrix &m, int digits = 17);

}  // namespace hsdual

#endif
