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

#include "hsdual/bench.h"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "hsdual/linalg.h"
#include "hsdual/matrix_io.h"
#include "hsdual/superop.h"

namespace hsdual {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t median(std::vector<std::int64_t> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 == 1 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2;
}

std::int64_t elapsed_ns(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

}  // namespace

void BenchConfig::validate(std::size_t max_dim) const {
    if (dim == 0 || kraus_rank == 0 || chain_length == 0 || trials == 0) {
        throw std::invalid_argument("bench: dim, kraus_rank, chain_length and trials must be positive");
    }
    if (dim > max_dim) {
        throw DimensionError("bench: dim " + std::to_string(dim) + " exceeds the limit of " + std::to_string(max_dim));
    }
}

BenchReport run_bench(const BenchConfig &cfg, std::size_t max_dim) {
    cfg.validate(max_dim);
    Rng rng(cfg.seed);
    std::vector<KrausList> chain;
    for (std::size_t k = 0; k < cfg.chain_length; ++k) {
        chain.push_back(random_kraus_channel(cfg.dim, cfg.kraus_rank, rng));
    }
    const ComplexMatrix rho = random_density(cfg.dim, rng);
    const BasisPair bases = BasisPair::standard(cfg.dim, cfg.dim);

    std::vector<std::int64_t> t_r;
    std::vector<std::int64_t> t_nested;
    ComplexMatrix via_r;
    ComplexMatrix via_nested;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        auto start = Clock::now();
        ComplexMatrix product = ComplexMatrix::identity(cfg.dim * cfg.dim);
        for (const auto &ms : chain) {
            product = kraus_to_r_closed_form(ms, bases) * product;
        }
        via_r = col_unstack(product * col_stack(rho), cfg.dim, cfg.dim);
        t_r.push_back(elapsed_ns(start));

        start = Clock::now();
        via_nested = rho;
        for (const auto &ms : chain) {
            via_nested = kraus_apply(ms, via_nested);
        }
        t_nested.push_back(elapsed_ns(start));
    }

    BenchReport report{cfg, median(t_r), median(t_nested), max_abs_diff(via_r, via_nested),
                       frobenius_norm(via_nested)};
    if (!(report.max_deviation <= 1e-8 * report.result_norm)) {
        throw std::runtime_error("bench: R-matrix and nested Kraus results disagree (deviation " +
                                 format_number(report.max_deviation) + ")");
    }
    return report;
}

std::string bench_csv_header() {
    return "dim,kraus_rank,chain_length,t_rmatrix_ns,t_nested_ns,max_deviation,seed";
}

std::string bench_csv_row(const BenchReport &r, int digits) {
    return std::to_string(r.config.dim) + "," + std::to_string(r.config.kraus_rank) + "," +
           std::to_string(r.config.chain_length) + "," + std::to_string(r.t_rmatrix_ns) + "," +
           std::to_string(r.t_nested_ns) + "," + format_number(r.max_deviation, digits) + "," +
           std::to_string(r.config.seed);
}

}  // namespace hsdual
