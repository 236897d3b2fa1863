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


#ifndef HSDUAL_ENTANGLE_H
#define HSDUAL_ENTANGLE_H

#include <optional>
#include <vector>

#include "hsdual/superop.h"
#include "hsdual/vectorize.h"

namespace hsdual {

/// alpha = sum_k lambdas[k] * left_k (x) right_k.
struct SchmidtResult {
    std::vector<double> lambdas;  // nonnegative, descending
    ComplexMatrix left;           // d1 x k, orthonormal columns
    ComplexMatrix right;          // d2 x k, orthonormal columns
};

/// Schmidt decomposition from the SVD of devec_jstar(alpha) = sum_k lambda_k
/// |u_k><v_k|: right_k = u_k and left_k = K v_k, where K conjugates in the H1
/// basis. Each v_k is rotated so its first nonzero entry is real and
/// nonnegative; u_k carries the same phase.
SchmidtResult schmidt(const BipartiteVector &alpha, const BasisPair &bases);

/// Number of Schmidt coefficients above `cutoff` (default 1e-10 * ||alpha||).
/// The zero vector has rank 0.
std::size_t schmidt_rank(const BipartiteVector &alpha, std::optional<double> cutoff = std::nullopt);

/// Rank >= 2.
bool is_entangled(const BipartiteVector &alpha, std::optional<double> cutoff = std::nullopt);

/// Orthonormal basis whose first vector is the unit vector `v`.
Basis adapted_basis(const ComplexMatrix &v);

/// devec_jstar(phi (x) psi) = |psi><K phi| for unit phi, psi. Throws
/// std::invalid_argument if either norm is off by more than 1e-8.
HSOperator product_state_devec(const ComplexMatrix &phi, const ComplexMatrix &psi, const BasisPair &bases);

/// S(P_phi (x) P_psi): the HS-orthogonal projection onto |psi><K phi|.
OpOnHS pure_state_transport(const ComplexMatrix &phi, const ComplexMatrix &psi, const BasisPair &bases);

}  // namespace hsdual

#endif
