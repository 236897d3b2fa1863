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

#if HSDUAL_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace hsdual::kernels::avx2 {

// AVX2 code generation is confined to the functions carrying this attribute.
#define HSDUAL_AVX2 __attribute__((target("avx2,fma")))

// Each __m256d holds two complex values: (re0, im0, re1, im1).

HSDUAL_AVX2 cplx dotc(const cplx *a, const cplx *b, std::size_t n) {
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    // straight accumulates (ar*br, ai*bi); cross accumulates (ar*bi, ai*br).
    __m256d straight0 = _mm256_setzero_pd();
    __m256d cross0 = _mm256_setzero_pd();
    __m256d straight1 = _mm256_setzero_pd();
    __m256d cross1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d va0 = _mm256_loadu_pd(pa + 2 * k);
        const __m256d vb0 = _mm256_loadu_pd(pb + 2 * k);
        const __m256d va1 = _mm256_loadu_pd(pa + 2 * k + 4);
        const __m256d vb1 = _mm256_loadu_pd(pb + 2 * k + 4);
        straight0 = _mm256_fmadd_pd(va0, vb0, straight0);
        cross0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), cross0);
        straight1 = _mm256_fmadd_pd(va1, vb1, straight1);
        cross1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), cross1);
    }
    for (; k + 2 <= n; k += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * k);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
        straight0 = _mm256_fmadd_pd(va, vb, straight0);
        cross0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), cross0);
    }
    const __m256d straight = _mm256_add_pd(straight0, straight1);
    const __m256d cross = _mm256_add_pd(cross0, cross1);
    alignas(32) double s[4];
    alignas(32) double c[4];
    _mm256_store_pd(s, straight);
    _mm256_store_pd(c, cross);
    double re = (s[0] + s[1]) + (s[2] + s[3]);
    double im = (c[0] - c[1]) + (c[2] - c[3]);
    for (; k < n; ++k) {
        re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
    }
    return {re, im};
}

HSDUAL_AVX2 void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const double *px = reinterpret_cast<const double *>(x);
    double *py = reinterpret_cast<double *>(y);
    const __m256d re = _mm256_set1_pd(alpha.real());
    const __m256d im = _mm256_set1_pd(alpha.imag());
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * k);
        const __m256d swapped = _mm256_mul_pd(_mm256_permute_pd(vx, 0b0101), im);
        // (xr*ar - xi*ai, xi*ar + xr*ai)
        const __m256d prod = _mm256_fmaddsub_pd(vx, re, swapped);
        _mm256_storeu_pd(py + 2 * k, _mm256_add_pd(_mm256_loadu_pd(py + 2 * k), prod));
    }
    for (; k < n; ++k) {
        const double xr = x[k].real();
        const double xi = x[k].imag();
        y[k] = {y[k].real() + (xr * alpha.real() - xi * alpha.imag()),
                y[k].imag() + (xr * alpha.imag() + xi * alpha.real())};
    }
}

}  // namespace hsdual::kernels::avx2

#endif
