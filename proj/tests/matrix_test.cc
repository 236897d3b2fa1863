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

#include "hsdual/matrix.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace hsdual {
namespace {

TEST(Matrix, LiteralIsRowMajor) {
    const ComplexMatrix m{{1, 2, 3}, {4, 5, 6}};
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m(1, 0), cplx(4));
    EXPECT_EQ(m[4], cplx(5));
    EXPECT_EQ(m.shape_str(), "2x3");
}

TEST(Matrix, RaggedLiteralThrows) {
    EXPECT_THROW((ComplexMatrix{{1, 2}, {3}}), DimensionError);
}

TEST(Matrix, EntryCountMustMatch) {
    EXPECT_THROW(ComplexMatrix(2, 2, std::vector<cplx>(3)), DimensionError);
}

TEST(Matrix, Factories) {
    EXPECT_EQ(ComplexMatrix::identity(2), (ComplexMatrix{{1, 0}, {0, 1}}));
    EXPECT_EQ(ComplexMatrix::unit_vector(3, 1), ComplexMatrix::column({0, 1, 0}));
    EXPECT_EQ(ComplexMatrix::matrix_unit(2, 3, 1, 2), (ComplexMatrix{{0, 0, 0}, {0, 0, 1}}));
    const std::vector<double> d{2, -1};
    EXPECT_EQ(ComplexMatrix::diagonal(d), (ComplexMatrix{{2, 0}, {0, -1}}));
    EXPECT_THROW(ComplexMatrix::unit_vector(2, 2), DimensionError);
}

TEST(Matrix, ColumnAccess) {
    ComplexMatrix m{{1, 2}, {3, 4}};
    EXPECT_EQ(m.col(1), ComplexMatrix::column({2, 4}));
    m.set_col(0, ComplexMatrix::column({7, 8}));
    EXPECT_EQ(m, (ComplexMatrix{{7, 2}, {8, 4}}));
    EXPECT_THROW(m.set_col(0, ComplexMatrix::column({1, 2, 3})), DimensionError);
}

TEST(Matrix, Arithmetic) {
    const ComplexMatrix a{{1, cplx(0, 1)}, {2, 3}};
    const ComplexMatrix b{{cplx(0, -1), 1}, {0, 1}};
    EXPECT_EQ(a + b, (ComplexMatrix{{cplx(1, -1), cplx(1, 1)}, {2, 4}}));
    EXPECT_EQ(a - a, ComplexMatrix::zeros(2, 2));
    EXPECT_EQ(cplx(0, 1) * a, (ComplexMatrix{{cplx(0, 1), -1}, {cplx(0, 2), cplx(0, 3)}}));
    EXPECT_THROW(a + ComplexMatrix(2, 3), DimensionError);
}

TEST(Matrix, ProductMatchesOracle) {
    Rng rng(5);
    for (auto [r, k, c] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {2, 3, 4}, {5, 1, 3}, {7, 7, 7}, {9, 13, 2}}) {
        const ComplexMatrix a = random_gaussian(r, k, rng);
        const ComplexMatrix b = random_gaussian(k, c, rng);
        EXPECT_MATRIX_NEAR(a * b, oracle::matmul(a, b), 1e-13);
    }
    EXPECT_THROW(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);
}

TEST(Matrix, ProductSkipsZerosCorrectly) {
    const ComplexMatrix a{{0, 0}, {0, 2}};
    const ComplexMatrix b{{5, 6}, {7, 8}};
    EXPECT_EQ(a * b, (ComplexMatrix{{0, 0}, {14, 16}}));
}

TEST(Matrix, ToleranceMixesAbsoluteAndRelative) {
    const Tolerance tol{1e-10, 1e-10};
    EXPECT_TRUE(tol.close(1.0, 1.0 + 5e-11));
    EXPECT_FALSE(tol.close(1.0, 1.0 + 1e-9));
    EXPECT_TRUE(tol.close(1e6, 1e6 + 5e-5));
    EXPECT_TRUE(tol.close(cplx(0, 1), cplx(0, 1 + 5e-11)));
}

TEST(Matrix, CloseAndDiff) {
    const ComplexMatrix a{{1, 2}};
    const ComplexMatrix b{{1, cplx(2, 1e-3)}};
    EXPECT_DOUBLE_EQ(max_abs_diff(a, b), 1e-3);
    EXPECT_FALSE(all_close(a, b));
    EXPECT_TRUE(all_close(a, b, {1e-2, 0}));
}

TEST(Matrix, EntryBudget) {
    EXPECT_NO_THROW(check_entry_budget(1024, 1024));
    EXPECT_THROW(check_entry_budget(1025, 1024), DimensionError);
    EXPECT_THROW(check_entry_budget(~std::size_t{0}, 2), DimensionError);
}

}  // namespace
}  // namespace hsdual
