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

#ifndef HSDUAL_VECTORIZE_H
#define HSDUAL_VECTORIZE_H

#include "hsdual/linalg.h"
#include "hsdual/matrix.h"

namespace hsdual {

// Conventions used throughout:
//
//  * An operator A : H1 -> H2 is a d2 x d1 matrix with entry (i, j) = <e_i, A e_j>.
//  * phi (x) psi in H1 (x) H2 is stored at flat index j*d2 + i with value
//    phi[j] * psi[i], i.e. kron(phi, psi). With standard bases, vectorizing an
//    operator is column stacking.
//  * Inner products are conjugate-linear in the first slot.

/// An operator H1 -> H2, stored as a d2 x d1 matrix.
using HSOperator = ComplexMatrix;

/// Orthonormal basis of C^d; the columns of a unitary matrix.
class Basis {
   public:
    /// Validates unitarity of `u` within `unitarity_tol` (max elementwise
    /// deviation of u^* u from I); throws std::invalid_argument otherwise.
    explicit Basis(ComplexMatrix u, double unitarity_tol = 1e-10);

    static Basis standard(std::size_t d);

    std::size_t dim() const { return u_.rows(); }
    const ComplexMatrix &matrix() const { return u_; }
    ComplexMatrix vector(std::size_t k) const { return u_.col(k); }

    bool operator==(const Basis &other) const = default;

   private:
    ComplexMatrix u_;
};

/// One basis for each tensor factor: {phi_j} for H1 and {psi_i} for H2.
struct BasisPair {
    Basis h1;
    Basis h2;

    static BasisPair standard(std::size_t d1, std::size_t d2);

    std::size_t d1() const { return h1.dim(); }
    std::size_t d2() const { return h2.dim(); }

    bool operator==(const BasisPair &other) const = default;
};

/// Element of H1 (x) H2 with its factor dimensions.
class BipartiteVector {
   public:
    BipartiteVector(std::size_t d1, std::size_t d2);
    /// `v` must be a (d1*d2) x 1 column.
    BipartiteVector(std::size_t d1, std::size_t d2, ComplexMatrix v);

    /// phi (x) psi.
    static BipartiteVector product(const ComplexMatrix &phi, const ComplexMatrix &psi);

    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    const ComplexMatrix &vec() const { return v_; }
    ComplexMatrix &vec() { return v_; }
    cplx operator[](std::size_t k) const { return v_[k]; }

    double norm() const { return frobenius_norm(v_); }

   private:
    std::size_t d1_;
    std::size_t d2_;
    ComplexMatrix v_;
};

/// <a, b> on H1 (x) H2.
cplx inner(const BipartiteVector &a, const BipartiteVector &b);

/// K phi = sum_i <phi, phi_i> phi_i, the antilinear conjugation fixing every
/// basis vector. In the standard basis this is entrywise conjugation.
ComplexMatrix conjugate_in_basis(const Basis &b, const ComplexMatrix &phi);

/// The vectorization J(A) = sum_{i,j} <psi_i, A phi_j> phi_j (x) psi_i.
BipartiteVector vec_j(const HSOperator &a, const BasisPair &bases);

/// J^*(alpha) = sum_{i,j} <phi_j (x) psi_i, alpha> |psi_i><phi_j|; the inverse of vec_j.
HSOperator devec_jstar(const BipartiteVector &alpha, const BasisPair &bases);

/// T(A) = sum_j phi_j (x) A phi_j. Depends only on the H1 basis and agrees
/// with vec_j for any H2 basis.
BipartiteVector vec_t(const HSOperator &a, const Basis &b1);

/// P_i(alpha) = sum_j <phi_i (x) psi_j, alpha> psi_j, the H2 component of
/// alpha along phi_i.
ComplexMatrix partial_slice(std::size_t i, const BipartiteVector &alpha, const BasisPair &bases);

/// P_i^*(beta) = sum_j <psi_j, beta> phi_i (x) psi_j.
BipartiteVector partial_slice_adjoint(std::size_t i, const ComplexMatrix &beta, const BasisPair &bases);

/// sum_j |P_j alpha><phi_j|. Equal to devec_jstar, built from slices.
HSOperator devec_via_slices(const BipartiteVector &alpha, const BasisPair &bases);

/// Coefficient matrix C(i, j) = <psi_i, A phi_j>, computed as V^* A U.
ComplexMatrix basis_coefficients(const HSOperator &a, const BasisPair &bases);

/// Unnormalized phi_+ = sum_j phi_j (x) phi_j.
BipartiteVector phi_plus(const Basis &b);

}  // namespace hsdual

#endif
