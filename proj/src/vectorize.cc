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
#include "hsdual/vectorize.h"

#include <string>

namespace hsdual {

namespace {

void require_dims(const BipartiteVector &alpha, const BasisPair &bases) {
    if (alpha.d1() != bases.d1() || alpha.d2() != bases.d2()) {
        throw DimensionError("bipartite vector " + std::to_string(alpha.d1()) + "x" + std::to_string(alpha.d2()) +
                             " does not match bases " + std::to_string(bases.d1()) + "x" +
                             std::to_string(bases.d2()));
    }
}

void require_operator_dims(const HSOperator &a, const BasisPair &bases) {
    if (a.rows() != bases.d2() || a.cols() != bases.d1()) {
        throw DimensionError("operator " + a.shape_str() + " does not map C^" + std::to_string(bases.d1()) +
                             " to C^" + std::to_string(bases.d2()));
    }
}

}  // namespace

Basis::Basis(ComplexMatrix u, double unitarity_tol) : u_(std::move(u)) {
    if (!u_.is_square() || u_.empty()) {
        throw DimensionError("basis matrix must be square and nonempty, got " + u_.shape_str());
    }
    const double dev = max_abs_diff(adjoint(u_) * u_, ComplexMatrix::identity(u_.rows()));
    if (!(dev <= unitarity_tol)) {
        throw std::invalid_argument("basis matrix is not unitary (max |U*U - I| = " + std::to_string(dev) + ")");
    }
}

Basis Basis::standard(std::size_t d) {
    return Basis(ComplexMatrix::identity(d));
}

BasisPair BasisPair::standard(std::size_t d1, std::size_t d2) {
    return {Basis::standard(d1), Basis::standard(d2)};
}

BipartiteVector::BipartiteVector(std::size_t d1, std::size_t d2) : d1_(d1), d2_(d2), v_(d1 * d2, 1) {}

BipartiteVector::BipartiteVector(std::size_t d1, std::size_t d2, ComplexMatrix v)
    : d1_(d1), d2_(d2), v_(std::move(v)) {
    if (v_.cols() != 1 || v_.rows() != d1 * d2) {
        throw DimensionError("bipartite vector of shape " + v_.shape_str() + " does not have length " +
                             std::to_string(d1 * d2));
    }
}

BipartiteVector BipartiteVector::product(const ComplexMatrix &phi, const ComplexMatrix &psi) {
    if (phi.cols() != 1 || psi.cols() != 1) {
        throw DimensionError("product expects column vectors");
    }
    return BipartiteVector(phi.rows(), psi.rows(), kron(phi, psi));
}

cplx inner(const BipartiteVector &a, const BipartiteVector &b) {
    if (a.d1() != b.d1() || a.d2() != b.d2()) {
        throw DimensionError("inner product of bipartite vectors with different factor dimensions");
    }
    return hs_inner(a.vec(), b.vec());
}

ComplexMatrix conjugate_in_basis(const Basis &b, const ComplexMatrix &phi) {
    if (phi.cols() != 1 || phi.rows() != b.dim()) {
        throw DimensionError("conjugate_in_basis: vector " + phi.shape_str() + " vs basis dim " +
                             std::to_string(b.dim()));
    }
    // <phi, phi_i> = conj(<phi_i, phi>) = conj((U^* phi)_i)
    return b.matrix() * conj(adjoint(b.matrix()) * phi);
}

ComplexMatrix basis_coefficients(const HSOperator &a, const BasisPair &bases) {
    require_operator_dims(a, bases);
    return adjoint(bases.h2.matrix()) * a * bases.h1.matrix();
}

BipartiteVector vec_j(const HSOperator &a, const BasisPair &bases) {
    const ComplexMatrix coeffs = basis_coefficients(a, bases);
    // sum_{i,j} C(i,j) phi_j (x) psi_i has component V C U^T at (b, a),
    // flattened as column stacking.
    const ComplexMatrix blocks = bases.h2.matrix() * coeffs * transpose(bases.h1.matrix());
    return BipartiteVector(bases.d1(), bases.d2(), col_stack(blocks));
}

HSOperator devec_jstar(const BipartiteVector &alpha, const BasisPair &bases) {
    require_dims(alpha, bases);
    const ComplexMatrix &u = bases.h1.matrix();
    const ComplexMatrix &v = bases.h2.matrix();
    const ComplexMatrix x = col_unstack(alpha.vec(), bases.d2(), bases.d1());
    // coeffs(i, j) = <phi_j (x) psi_i, alpha>
    const ComplexMatrix coeffs = adjoint(v) * x * conj(u);
    return v * coeffs * adjoint(u);
}

BipartiteVector vec_t(const HSOperator &a, const Basis &b1) {
    if (a.cols() != b1.dim()) {
        throw DimensionError("vec_t: operator " + a.shape_str() + " vs basis dim " + std::to_string(b1.dim()));
    }
    BipartiteVector out(a.cols(), a.rows());
    for (std::size_t j = 0; j < b1.dim(); ++j) {
        const ComplexMatrix phi = b1.vector(j);
        out.vec() += kron(phi, a * phi);
    }
    return out;
}

ComplexMatrix partial_slice(std::size_t i, const BipartiteVector &alpha, const BasisPair &bases) {
    require_dims(alpha, bases);
    if (i >= bases.d1()) {
        throw DimensionError("partial_slice index " + std::to_string(i) + " out of range");
    }
    const std::size_t d1 = bases.d1();
    const std::size_t d2 = bases.d2();
    const ComplexMatrix &u = bases.h1.matrix();
    const ComplexMatrix &v = bases.h2.matrix();
    ComplexMatrix out(d2, 1);
    for (std::size_t j = 0; j < d2; ++j) {
        // <phi_i (x) psi_j, alpha>
        cplx c = 0;
        for (std::size_t a = 0; a < d1; ++a) {
            for (std::size_t b = 0; b < d2; ++b) {
                c += std::conj(u(a, i) * v(b, j)) * alpha[a * d2 + b];
            }
        }
        for (std::size_t b = 0; b < d2; ++b) {
            out[b] += c * v(b, j);
        }
    }
    return out;
}

BipartiteVector partial_slice_adjoint(std::size_t i, const ComplexMatrix &beta, const BasisPair &bases) {
    if (i >= bases.d1()) {
        throw DimensionError("partial_slice_adjoint index " + std::to_string(i) + " out of range");
    }
    if (beta.cols() != 1 || beta.rows() != bases.d2()) {
        throw DimensionError("partial_slice_adjoint: vector " + beta.shape_str() + " not in C^" +
                             std::to_string(bases.d2()));
    }
    BipartiteVector out(bases.d1(), bases.d2());
    const ComplexMatrix phi_i = bases.h1.vector(i);
    for (std::size_t j = 0; j < bases.d2(); ++j) {
        const ComplexMatrix psi_j = bases.h2.vector(j);
        out.vec() += hs_inner(psi_j, beta) * kron(phi_i, psi_j);
    }
    return out;
}

HSOperator devec_via_slices(const BipartiteVector &alpha, const BasisPair &bases) {
    require_dims(alpha, bases);
    HSOperator out(bases.d2(), bases.d1());
    for (std::size_t j = 0; j < bases.d1(); ++j) {
        out += outer(partial_slice(j, alpha, bases), bases.h1.vector(j));
    }
    return out;
}

BipartiteVector phi_plus(const Basis &b) {
    BipartiteVector out(b.dim(), b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
        const ComplexMatrix phi = b.vector(j);
        out.vec() += kron(phi, phi);
    }
    return out;
}

}  // namespace hsdual
