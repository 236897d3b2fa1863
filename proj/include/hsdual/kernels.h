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

#ifndef HSDUAL_KERNELS_H
#define HSDUAL_KERNELS_H

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace hsdual::kernels {

using cplx = std::complex<double>;

// Inner loops shared by every dense operation in the library. Each ISA
// provides the same two primitives; the scalar versions are the reference
// the vector versions are tested against.
//
// Layout: std::complex<double> is guaranteed to be two adjacent doubles
// (re, im), so the vector code reinterprets spans of complex values as
// interleaved double arrays.

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
    Isa isa;
    /// sum_k conj(a[k]) * b[k]
    cplx (*dotc)(const cplx *a, const cplx *b, std::size_t n);
    /// y[k] += alpha * x[k]
    void (*axpy)(cplx alpha, const cplx *x, cplx *y, std::size_t n);
};

/// ISAs compiled into this binary AND supported by the running CPU, scalar first.
std::vector<Isa> available_isas();

/// Table for a specific ISA. Throws std::invalid_argument when unavailable.
const KernelTable &table_for(Isa isa);

/// Table picked at first use: the widest available ISA, unless the
/// HSDUAL_KERNELS environment variable names another one ("scalar", "avx2",
/// "neon").
const KernelTable &active();

namespace scalar {
cplx dotc(const cplx *a, const cplx *b, std::size_t n);
void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define HSDUAL_HAVE_AVX2_KERNELS 1
namespace avx2 {
cplx dotc(const cplx *a, const cplx *b, std::size_t n);
void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define HSDUAL_HAVE_NEON_KERNELS 1
namespace neon {
cplx dotc(const cplx *a, const cplx *b, std::size_t n);
void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n);
}  // namespace neon
#endif

}  // namespace hsdual::kernels

#endif
