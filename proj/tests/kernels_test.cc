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

#include "hsdual/kernels.h"

#include <gtest/gtest.h>

#include <random>

namespace hsdual::kernels {
namespace {

std::vector<cplx> random_span(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (auto &x : v) {
        x = {g(rng), g(rng)};
    }
    return v;
}

// Lengths cover empty, pure tail, exact vector multiples and mixed cases.
const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100, 257};

TEST(Kernels, ScalarIsAlwaysAvailableAndFirst) {
    const auto isas = available_isas();
    ASSERT_FALSE(isas.empty());
    EXPECT_EQ(isas.front(), Isa::Scalar);
    EXPECT_EQ(table_for(Isa::Scalar).isa, Isa::Scalar);
}

TEST(Kernels, ActiveIsAvailable) {
    const auto isas = available_isas();
    EXPECT_NE(std::find(isas.begin(), isas.end(), active().isa), isas.end());
}

TEST(Kernels, Names) {
    EXPECT_EQ(isa_name(Isa::Scalar), "scalar");
    EXPECT_EQ(isa_name(Isa::Avx2), "avx2");
    EXPECT_EQ(isa_name(Isa::Neon), "neon");
}

TEST(Kernels, ScalarDotcByHand) {
    const std::vector<cplx> a{{1, 2}, {0, -1}};
    const std::vector<cplx> b{{3, 0}, {2, 2}};
    // conj(1+2i)*3 + conj(-i)*(2+2i) = (3-6i) + (i)(2+2i) = 1-4i
    EXPECT_EQ(scalar::dotc(a.data(), b.data(), 2), cplx(1, -4));
}

TEST(Kernels, ScalarAxpyByHand) {
    const std::vector<cplx> x{{1, 1}, {2, 0}};
    std::vector<cplx> y{{0, 0}, {1, 1}};
    scalar::axpy({0, 1}, x.data(), y.data(), 2);
    EXPECT_EQ(y[0], cplx(-1, 1));
    EXPECT_EQ(y[1], cplx(1, 3));
}

class KernelEquivalence : public ::testing::TestWithParam<Isa> {};

TEST_P(KernelEquivalence, DotcMatchesScalar) {
    const KernelTable &t = table_for(GetParam());
    std::mt19937_64 rng(11);
    for (std::size_t n : kLengths) {
        const auto a = random_span(n, rng);
        const auto b = random_span(n, rng);
        const cplx ref = scalar::dotc(a.data(), b.data(), n);
        const cplx got = t.dotc(a.data(), b.data(), n);
        EXPECT_LE(std::abs(got - ref), 1e-13 * (1.0 + static_cast<double>(n))) << "n = " << n;
    }
}

TEST_P(KernelEquivalence, AxpyMatchesScalar) {
    const KernelTable &t = table_for(GetParam());
    std::mt19937_64 rng(12);
    for (std::size_t n : kLengths) {
        const auto x = random_span(n, rng);
        auto y_ref = random_span(n, rng);
        auto y = y_ref;
        const cplx alpha(0.3, -1.7);
        scalar::axpy(alpha, x.data(), y_ref.data(), n);
        t.axpy(alpha, x.data(), y.data(), n);
        for (std::size_t k = 0; k < n; ++k) {
            EXPECT_LE(std::abs(y[k] - y_ref[k]), 1e-14) << "n = " << n << ", k = " << k;
        }
    }
}

TEST_P(KernelEquivalence, UnalignedOffsets) {
    const KernelTable &t = table_for(GetParam());
    std::mt19937_64 rng(13);
    const auto a = random_span(40, rng);
    const auto b = random_span(40, rng);
    for (std::size_t off = 0; off < 4; ++off) {
        const cplx ref = scalar::dotc(a.data() + off, b.data() + 3 - off % 3, 33);
        const cplx got = t.dotc(a.data() + off, b.data() + 3 - off % 3, 33);
        EXPECT_LE(std::abs(got - ref), 1e-12);
    }
}

TEST_P(KernelEquivalence, ExactOnIntegers) {
    // Small integer data is summed exactly in any order.
    const KernelTable &t = table_for(GetParam());
    std::vector<cplx> a(23);
    std::vector<cplx> b(23);
    for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = {static_cast<double>(k % 5), -static_cast<double>(k % 3)};
        b[k] = {static_cast<double>(k % 4) - 1, static_cast<double>(k % 7)};
    }
    EXPECT_EQ(t.dotc(a.data(), b.data(), a.size()), scalar::dotc(a.data(), b.data(), a.size()));
}

INSTANTIATE_TEST_SUITE_P(AllAvailable, KernelEquivalence, ::testing::ValuesIn(available_isas()),
                         [](const ::testing::TestParamInfo<Isa> &info) { return std::string(isa_name(info.param)); });

}  // namespace
}  // namespace hsdual::kernels
