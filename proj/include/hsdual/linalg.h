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

#ifndef HSDUAL_LINALG_H
#define HSDUAL_LINALG_H

#include <cstdint>
#include <random>
#include <vector>

#include "hsdual/matrix.h"

namespace hsdual {

/// Kronecker product. Entry ((i1*b.rows + i2), (j1*b.cols + j2)) is
/// a(i1, j1) * b(i2, j2): the first factor is the major index.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t max_entries = kDefaultMaxEntries);

ComplexMatrix adjoint(const ComplexMatrix &a);
ComplexMatrix transpose(const ComplexMatrix &a);
ComplexMatrix conj(const ComplexMatrix &a);

cplx trace(const ComplexMatrix &a);

/// tr(a^* b). Conjugate-linear in `a`. For column vectors this is <a, b>.
cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

double frobenius_norm(const ComplexMatrix &a);

/// Outer product |x><y| of two column vectors.
ComplexMatrix outer(const ComplexMatrix &x, const ComplexMatrix &y);

/// Column-stacking: entry (i, j) of an r x c matrix goes to index j*r + i.
ComplexMatrix col_stack(const ComplexMatrix &a);
/// Inverse of col_stack for a vector of length rows*cols.
ComplexMatrix col_unstack(const ComplexMatrix &v, std::size_t rows, std::size_t cols);

/// True iff a is square and |a(i,j) - conj(a(j,i))| passes `tol` everywhere.
bool is_hermitian(const ComplexMatrix &a, Tolerance tol = {});

struct EigResult {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // columns are eigenvectors
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices. Throws
/// std::invalid_argument if `h` is not Hermitian within `tol`.
EigResult hermitian_eig(const ComplexMatrix &h, Tolerance tol = {});

struct SvdResult {
    ComplexMatrix u;          // rows x k, orthonormal columns
    std::vector<double> s;    // k = min(rows, cols), nonnegative, descending
    ComplexMatrix v;          // cols x k, orthonormal columns
};

/// Thin SVD a = u diag(s) v^* by one-sided (Hestenes) Jacobi.
SvdResult svd(const ComplexMatrix &a);

/// Largest singular value.
double operator_norm(const ComplexMatrix &a);

/// Hermitian within tol and smallest eigenvalue >= -tol.abs * (1 + ||h||).
bool is_psd(const ComplexMatrix &h, Tolerance tol = {});

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix &h, Tolerance tol = {});

/// f(h) = V diag(f(lambda)) V^* for Hermitian h.
template <typename F>
ComplexMatrix hermitian_apply(const ComplexMatrix &h, F &&f) {
    EigResult e = hermitian_eig(h);
    ComplexMatrix scaled = e.vectors;
    for (std::size_t c = 0; c < scaled.cols(); ++c) {
        const double fc = f(e.values[c]);
        for (std::size_t r = 0; r < scaled.rows(); ++r) {
            scaled(r, c) *= fc;
        }
    }
    return scaled * adjoint(e.vectors);
}

using Rng = std::mt19937_64;

/// Entries i.i.d. with real and imaginary parts standard normal.
ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng &rng);

/// Haar-like unitary: Gram-Schmidt QR of a complex Gaussian matrix, with the
/// R diagonal made real positive. Deterministic for a fixed seed.
ComplexMatrix random_unitary(std::size_t d, Rng &rng);
ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed);

/// Random unit column vector.
ComplexMatrix random_unit_vector(std::size_t d, Rng &rng);

/// Random density matrix (PSD, unit trace) of rank d.
ComplexMatrix random_density(std::size_t d, Rng &rng);

}  // namespace hsdual

#endif
