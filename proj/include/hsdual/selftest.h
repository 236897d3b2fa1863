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


#ifndef HSDUAL_SELFTEST_H
#define HSDUAL_SELFTEST_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hsdual {

// Randomized property suites over the whole library, runnable from the
// command line. Each property reports one observed number: usually the
// largest deviation seen (must stay at or below `bound`), occasionally a gap
// that must stay at or above it.

struct PropertyResult {
    std::string suite;
    std::string name;
    double observed;
    double bound;
    bool lower_bound;  // true: observed >= bound passes
    bool pass;
};

/// Suite names in report order.
const std::vector<std::string> &selftest_suites();

/// True for any name in selftest_suites() and for "all".
bool is_selftest_suite(std::string_view name);

/// Runs one suite (or every suite, in report order, for "all").
/// Deterministic for a fixed seed. Throws std::invalid_argument for unknown names.
std::vector<PropertyResult> run_selftest(std::string_view suite, std::uint64_t seed);

}  // namespace hsdual

#endif
