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


#ifndef HSDUAL_BENCH_H
#define HSDUAL_BENCH_H

#include <cstddef>
#include <cstdint>
#include <string>

namespace hsdual {

// Compares two ways of pushing a state through a chain of Kraus channels:
//  (a) convert every channel to its R-matrix, multiply the chain once, apply
//      the product to the vectorized state;
//  (b) apply the Kraus sums channel by channel.
// Only the agreement of the two results is checked; timings are reported.

struct BenchConfig {
    std::size_t dim = 4;
    std::size_t kraus_rank = 2;
    std::size_t chain_length = 10;
    std::size_t trials = 9;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless every field is positive and
    /// dim <= max_dim.
    void validate(std::size_t max_dim = 64) const;
};

struct BenchReport {
    BenchConfig config;
    std::int64_t t_rmatrix_ns;  // median over trials
    std::int64_t t_nested_ns;   // median over trials
    double max_deviation;       // max |(a) - (b)| elementwise
    double result_norm;         // Frobenius norm of the (b) result
};

/// Throws std::runtime_error if the two methods disagree by more than
/// 1e-8 * result_norm.
BenchReport run_bench(const BenchConfig &cfg, std::size_t max_dim = 64);

std::string bench_csv_header();
std::string bench_csv_row(const BenchReport &report, int digits = 17);

}  // namespace hsdual

#endif
