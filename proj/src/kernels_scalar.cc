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

namespace hsdual::kernels::scalar {

cplx dotc(const cplx *a, const cplx *b, std::size_t n) {
    double re = 0;
    double im = 0;
    for (std::size_t k = 0; k < n; ++k) {
        re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
    }
    return {re, im};
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[k].real();
        const double xi = x[k].imag();
        y[k] = {y[k].real() + (xr * ar - xi * ai), y[k].imag() + (xr * ai + xi * ar)};
    }
}

}  // namespace hsdual::kernels::scalar
