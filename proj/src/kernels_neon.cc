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

#if HSDUAL_HAVE_NEON_KERNELS

#include <arm_neon.h>

namespace hsdual::kernels::neon {

// One complex value per float64x2_t: (re, im).

cplx dotc(const cplx *a, const cplx *b, std::size_t n) {
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    float64x2_t straight = vdupq_n_f64(0.0);
    float64x2_t cross = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const float64x2_t va = vld1q_f64(pa + 2 * k);
        const float64x2_t vb = vld1q_f64(pb + 2 * k);
        straight = vfmaq_f64(straight, va, vb);
        cross = vfmaq_f64(cross, va, vextq_f64(vb, vb, 1));
    }
    return {vgetq_lane_f64(straight, 0) + vgetq_lane_f64(straight, 1),
            vgetq_lane_f64(cross, 0) - vgetq_lane_f64(cross, 1)};
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const double *px = reinterpret_cast<const double *>(x);
    double *py = reinterpret_cast<double *>(y);
    const float64x2_t re = vdupq_n_f64(alpha.real());
    // (-ai, ai) so that swap(x) * im_signed = (-xi*ai, xr*ai)
    const double im_signed_init[2] = {-alpha.imag(), alpha.imag()};
    const float64x2_t im_signed = vld1q_f64(im_signed_init);
    for (std::size_t k = 0; k < n; ++k) {
        const float64x2_t vx = vld1q_f64(px + 2 * k);
        float64x2_t acc = vld1q_f64(py + 2 * k);
        acc = vfmaq_f64(acc, vx, re);
        acc = vfmaq_f64(acc, vextq_f64(vx, vx, 1), im_signed);
        vst1q_f64(py + 2 * k, acc);
    }
}

}  // namespace hsdual::kernels::neon

#endif
