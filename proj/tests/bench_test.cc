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

#include <gtest/gtest.h>

#include <sstream>

#include "hsdual/matrix.h"

namespace hsdual {
namespace {

TEST(Bench, SingleUnitaryChannel) {
    const BenchReport r = run_bench({2, 1, 1, 3, 0});
    EXPECT_LE(r.max_deviation, 1e-12);
    EXPECT_GT(r.t_rmatrix_ns, 0);
    EXPECT_GT(r.t_nested_ns, 0);
}

TEST(Bench, LongChainAgrees) {
    const BenchReport r = run_bench({4, 4, 10, 3, 3});
    EXPECT_LE(r.max_deviation, 1e-8 * r.result_norm);
    EXPECT_EQ(r.config.seed, 3u);
}

TEST(Bench, DeviationIsDeterministic) {
    const BenchConfig cfg{3, 2, 6, 2, 17};
    EXPECT_EQ(run_bench(cfg).max_deviation, run_bench(cfg).max_deviation);
    EXPECT_EQ(run_bench(cfg).result_norm, run_bench(cfg).result_norm);
}

TEST(Bench, Validation) {
    EXPECT_THROW(BenchConfig({0, 1, 1, 1, 0}).validate(), std::invalid_argument);
    EXPECT_THROW(BenchConfig({2, 0, 1, 1, 0}).validate(), std::invalid_argument);
    EXPECT_THROW(BenchConfig({2, 1, 0, 1, 0}).validate(), std::invalid_argument);
    EXPECT_THROW(BenchConfig({2, 1, 1, 0, 0}).validate(), std::invalid_argument);
    EXPECT_THROW(BenchConfig({65, 1, 1, 1, 0}).validate(64), DimensionError);
    EXPECT_NO_THROW(BenchConfig({8, 1, 1, 1, 0}).validate(8));
}

TEST(Bench, CsvColumns) {
    EXPECT_EQ(bench_csv_header(), "dim,kraus_rank,chain_length,t_rmatrix_ns,t_nested_ns,max_deviation,seed");
    BenchReport r{{4, 2, 10, 9, 5}, 1200, 3400, 0.5, 1.0};
    EXPECT_EQ(bench_csv_row(r), "4,2,10,1200,3400,0.5,5");
}

}  // namespace
}  // namespace hsdual
