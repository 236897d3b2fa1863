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
#include "hsdual/linalg.h"

#include <algorithm>
#include <cmath>

#include "hsdual/kernels.h"

namespace hsdual {

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t max_entries) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    check_entry_budget(rows, cols, max_entries);
    ComplexMatrix out(rows, cols);
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const cplx x = a(i1, j1);
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
                cplx *dst = &out(i1 * b.rows() + i2, j1 * b.cols());
                const cplx *src = b.row(i2).data();
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                    dst[j2] = x * src[j2];
                }
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

ComplexMatrix conj(const ComplexMatrix &a) {
    ComplexMatrix out = a;
    for (auto &x : out.flat()) {
        x = std::conj(x);
    }
    return out;
}

cplx trace(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw DimensionError("trace of non-square " + a.shape_str());
    }
    cplx t = 0;
    for (std::size_t k = 0; k < a.rows(); ++k) {
        t += a(k, k);
    }
    return t;
}

cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("hs_inner: " + a.shape_str() + " vs " + b.shape_str());
    }
    // tr(a^* b) = sum_ij conj(a_ij) b_ij
    return kernels::active().dotc(a.flat().data(), b.flat().data(), a.size());
}

double frobenius_norm(const ComplexMatrix &a) {
    return std::sqrt(std::max(0.0, hs_inner(a, a).real()));
}

ComplexMatrix outer(const ComplexMatrix &x, const ComplexMatrix &y) {
    if (x.cols() != 1 || y.cols() != 1) {
        throw DimensionError("outer expects column vectors");
    }
    ComplexMatrix out(x.rows(), y.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < y.rows(); ++j) {
            out(i, j) = x[i] * std::conj(y[j]);
        }
    }
    return out;
}

ComplexMatrix col_stack(const ComplexMatrix &a) {
    ComplexMatrix v(a.size(), 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            v[j * a.rows() + i] = a(i, j);
        }
    }
    return v;
}

ComplexMatrix col_unstack(const ComplexMatrix &v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) {
        throw DimensionError("col_unstack: vector " + v.shape_str() + " cannot fill " + std::to_string(rows) +
                             "x" + std::to_string(cols));
    }
    ComplexMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            a(i, j) = v[j * rows + i];
        }
    }
    return a;
}

bool is_hermitian(const ComplexMatrix &a, Tolerance tol) {
    if (!a.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            if (!tol.close(a(i, j), std::conj(a(j, i)))) {
                return false;
            }
        }
    }
    return true;
}

double operator_norm(const ComplexMatrix &a) {
    if (a.empty()) {
        return 0;
    }
    return svd(a).s.front();
}

double min_eigenvalue(const ComplexMatrix &h, Tolerance tol) {
    return hermitian_eig(h, tol).values.back();
}

bool is_psd(const ComplexMatrix &h, Tolerance tol) {
    if (!h.is_square()) {
        throw DimensionError("is_psd of non-square " + h.shape_str());
    }
    if (!is_hermitian(h, tol)) {
        return false;
    }
    const EigResult e = hermitian_eig(h, tol);
    const double norm = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
    return e.values.back() >= -tol.abs * (1.0 + norm);
}

ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (auto &x : m.flat()) {
        const double re = normal(rng);
        const double im = normal(rng);
        x = {re, im};
    }
    return m;
}

ComplexMatrix random_unitary(std::size_t d, Rng &rng) {
    if (d == 0) {
        throw DimensionError("random_unitary: dimension must be positive");
    }
    // Work on rows of the transpose so the kernels see contiguous memory.
    ComplexMatrix q = transpose(random_gaussian(d, d, rng));
    const auto &k = kernels::active();
    for (std::size_t c = 0; c < d; ++c) {
        cplx *qc = q.row(c).data();
        // Two passes of modified Gram-Schmidt keep orthogonality at machine precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                const cplx *qp = q.row(p).data();
                k.axpy(-k.dotc(qp, qc, d), qp, qc, d);
            }
        }
        const double norm = std::sqrt(k.dotc(qc, qc, d).real());
        for (std::size_t r = 0; r < d; ++r) {
            qc[r] /= norm;
        }
    }
    return transpose(q);
}

ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    return random_unitary(d, rng);
}

ComplexMatrix random_unit_vector(std::size_t d, Rng &rng) {
    ComplexMatrix v = random_gaussian(d, 1, rng);
    v *= 1.0 / frobenius_norm(v);
    return v;
}

ComplexMatrix random_density(std::size_t d, Rng &rng) {
    const ComplexMatrix g = random_gaussian(d, d, rng);
    ComplexMatrix rho = g * adjoint(g);
    rho *= 1.0 / trace(rho).real();
    return rho;
}

}  // namespace hsdual
