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

#ifndef HSDUAL_TESTS_ORACLE_H
#define HSDUAL_TESTS_ORACLE_H

#include <cmath>
#include <vector>

#include "hsdual/linalg.h"
#include "hsdual/superop.h"
#include "hsdual/vectorize.h"

// Reference implementations written straight from the defining sums, with no
// shared code paths beyond element access. Library results are checked
// against these.
namespace hsdual::oracle {

inline ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                s += a(i, k) * b(k, j);
            }
            c(i, j) = s;
        }
    }
    return c;
}

inline ComplexMatrix adjoint(const ComplexMatrix &a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(j, i) = std::conj(a(i, j));
        }
    }
    return c;
}

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    c(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
    return c;
}

/// <x, y> for column vectors.
inline cplx dot(const ComplexMatrix &x, const ComplexMatrix &y) {
    cplx s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        s += std::conj(x[k]) * y[k];
    }
    return s;
}

/// tr(a^* b) from the entries.
inline cplx hs(const ComplexMatrix &a, const ComplexMatrix &b) {
    cplx s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

/// K phi = sum_i <phi, phi_i> phi_i.
inline ComplexMatrix conj_in(const Basis &b, const ComplexMatrix &phi) {
    ComplexMatrix out(b.dim(), 1);
    for (std::size_t i = 0; i < b.dim(); ++i) {
        const ComplexMatrix v = b.vector(i);
        const cplx c = oracle::dot(phi, v);
        for (std::size_t k = 0; k < b.dim(); ++k) {
            out[k] += c * v[k];
        }
    }
    return out;
}

/// J(A) = sum_{i,j} <psi_i, A phi_j> phi_j (x) psi_i.
inline ComplexMatrix vec_j(const ComplexMatrix &a, const BasisPair &bases) {
    const std::size_t d1 = bases.d1();
    const std::size_t d2 = bases.d2();
    ComplexMatrix out(d1 * d2, 1);
    for (std::size_t i = 0; i < d2; ++i) {
        for (std::size_t j = 0; j < d1; ++j) {
            const ComplexMatrix phi = bases.h1.vector(j);
            const ComplexMatrix psi = bases.h2.vector(i);
            const cplx c = oracle::dot(psi, oracle::matmul(a, phi));
            const ComplexMatrix t = oracle::kron(phi, psi);
            for (std::size_t k = 0; k < t.size(); ++k) {
                out[k] += c * t[k];
            }
        }
    }
    return out;
}

/// J^*(alpha) = sum_{i,j} <phi_j (x) psi_i, alpha> |psi_i><phi_j|.
inline ComplexMatrix devec(const ComplexMatrix &alpha, const BasisPair &bases) {
    const std::size_t d1 = bases.d1();
    const std::size_t d2 = bases.d2();
    ComplexMatrix out(d2, d1);
    for (std::size_t i = 0; i < d2; ++i) {
        for (std::size_t j = 0; j < d1; ++j) {
            const ComplexMatrix phi = bases.h1.vector(j);
            const ComplexMatrix psi = bases.h2.vector(i);
            const cplx c = oracle::dot(oracle::kron(phi, psi), alpha);
            const ComplexMatrix unit = oracle::matmul(psi, oracle::adjoint(phi));
            for (std::size_t k = 0; k < unit.size(); ++k) {
                out[k] += c * unit[k];
            }
        }
    }
    return out;
}

/// Dense R(B) from column probing through the oracle vectorization.
inline ComplexMatrix r_matrix(const OpOnHS &b, const BasisPair &bases) {
    const std::size_t d1 = bases.d1();
    const std::size_t d2 = bases.d2();
    const std::size_t n = d1 * d2;
    ComplexMatrix r(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        ComplexMatrix e(n, 1);
        e[col] = 1.0;
        const ComplexMatrix image = oracle::vec_j(b(oracle::devec(e, bases)), bases);
        for (std::size_t row = 0; row < n; ++row) {
            r(row, col) = image[row];
        }
    }
    return r;
}

/// sum_i M_i^* A M_i.
inline ComplexMatrix kraus(const std::vector<ComplexMatrix> &ms, const ComplexMatrix &a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (const auto &m : ms) {
        out += oracle::matmul(oracle::matmul(oracle::adjoint(m), a), m);
    }
    return out;
}

/// Largest singular value by power iteration on a^* a; an operator-norm
/// reference independent of the SVD.
inline double operator_norm(const ComplexMatrix &a, int iterations = 2000) {
    const ComplexMatrix g = oracle::matmul(oracle::adjoint(a), a);
    ComplexMatrix v(g.rows(), 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = cplx(1.0 + 0.1 * static_cast<double>(k), 0.05 * static_cast<double>(k));
    }
    double lambda = 0;
    for (int it = 0; it < iterations; ++it) {
        ComplexMatrix w = oracle::matmul(g, v);
        double n = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            n += std::norm(w[k]);
        }
        n = std::sqrt(n);
        if (n == 0) {
            return 0;
        }
        for (std::size_t k = 0; k < w.size(); ++k) {
            w[k] /= n;
        }
        lambda = n;
        v = w;
    }
    return std::sqrt(lambda);
}

}  // namespace hsdual::oracle

#endif
