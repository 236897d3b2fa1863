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

#ifndef HSDUAL_SUPEROP_H
#define HSDUAL_SUPEROP_H

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "hsdual/linalg.h"
#include "hsdual/vectorize.h"

namespace hsdual {

// Kraus convention: a channel acts as B(A) = sum_i M_i^* A M_i and is trace
// preserving when sum_i M_i M_i^* = I. This is the adjoint of the more common
// sum_i M_i A M_i^* form; converting between the two means replacing every
// M_i by its adjoint.

/// Kraus operators {M_i}, all d x d.
struct KrausList {
    std::vector<ComplexMatrix> ops;

    /// Throws DimensionError if `ops` is empty or not all square of equal size.
    void validate() const;
    std::size_t dim() const;
};

/// A linear map on d2 x d1 operators.
class OpOnHS {
   public:
    using Fn = std::function<HSOperator(const HSOperator &)>;

    OpOnHS(std::size_t d1, std::size_t d2, Fn fn);

    static OpOnHS identity(std::size_t d1, std::size_t d2);
    /// Dense form in the standard matrix-unit basis: col_stack(B(A)) =
    /// m * col_stack(A). Matrix units E_ij are ordered by flat index j*d2 + i.
    static OpOnHS from_matrix_units(ComplexMatrix m, std::size_t d1, std::size_t d2);
    static OpOnHS from_kraus(KrausList ms);
    /// A -> A^T on d x d operators (positive, not completely positive).
    static OpOnHS transpose_map(std::size_t d);

    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }

    HSOperator operator()(const HSOperator &a) const;

    /// Dense form in the standard matrix-unit basis (see from_matrix_units).
    /// Probes the map on every matrix unit unless it was built from one.
    ComplexMatrix matrix_units() const;

   private:
    std::size_t d1_;
    std::size_t d2_;
    Fn fn_;
    std::optional<ComplexMatrix> dense_;
};

/// Dense matrix of B on the vectorized space, R(B) = J B J^*.
struct RMatrix {
    ComplexMatrix m;
};

/// Choi matrix sum_{i,j} |phi_i><phi_j| (x) B(|phi_i><phi_j|), divided by d
/// when `normalized`.
struct ChoiMatrix {
    ComplexMatrix m;
    bool normalized = false;
};

/// A superoperator in one of three representations, tied to the bases used
/// to vectorize. Choi matrices use bases.h1 and require d1 == d2.
struct SuperOp {
    std::size_t d1;
    std::size_t d2;
    std::variant<KrausList, RMatrix, ChoiMatrix> repr;
    BasisPair bases;

    static SuperOp kraus(KrausList ms, BasisPair bases);
    static SuperOp kraus(KrausList ms);
    static SuperOp r_matrix(ComplexMatrix m, BasisPair bases);
    static SuperOp choi(ChoiMatrix c, BasisPair bases);
};

/// R(B) built column by column from B applied to the matrix units
/// |psi_i><phi_j|.
SuperOp lift_r(const OpOnHS &b, const BasisPair &bases);

/// S(C) = J^* C J as a map on operators.
OpOnHS lower_s(const ComplexMatrix &c, const BasisPair &bases);
OpOnHS lower_s(const SuperOp &c);

/// sum_i M_i^* A M_i.
HSOperator kraus_apply(const KrausList &ms, const HSOperator &a);

/// M_alpha = sum_{r,s} <phi_r (x) psi_s, alpha> sum_i |M_i^* psi_s><M_i^* phi_r|,
/// the operator with R(B) alpha = sum_s phi_s (x) M_alpha phi_s.
ComplexMatrix m_alpha(const KrausList &ms, const BipartiteVector &alpha, const BasisPair &bases);

/// R-matrix of a Kraus channel assembled from M_alpha on the standard
/// coordinate vectors.
SuperOp kraus_to_r(const KrausList &ms, const BasisPair &bases);

/// R-matrix of a Kraus channel in closed form:
/// sum_i (W M_i^T W^*) (x) M_i^*, W = U U^T for the H1 basis matrix U.
ComplexMatrix kraus_to_r_closed_form(const KrausList &ms, const BasisPair &bases);

/// C(B) = sum_{i,j} |phi_i><phi_j| (x) B(|phi_i><phi_j|) = (I (x) B)|phi_+><phi_+|,
/// with phi_+ unnormalized unless `normalize` is set (then divided by d).
SuperOp choi_map(const OpOnHS &b, const Basis &basis, bool normalize = false);

/// (I (x) A) phi_+.
BipartiteVector choi_of_vector(const HSOperator &a, const Basis &basis);

/// The R-matrix of any representation.
ComplexMatrix to_r_matrix(const SuperOp &b);

/// The action of any representation on operators.
OpOnHS as_op(const SuperOp &b);

/// b1 after b2: R(b1) R(b2). Dimensions and bases must agree.
SuperOp compose(const SuperOp &b1, const SuperOp &b2);

struct CpReport {
    bool completely_positive;
    /// Smallest eigenvalue of the Choi matrix; NaN if it is not Hermitian.
    double min_eigenvalue;
};

struct TpReport {
    bool trace_preserving;
    /// max |(sum_i M_i M_i^* - I)_{jk}|
    double deviation;
};

/// Choi positivity criterion.
CpReport cp_report(const SuperOp &b, Tolerance tol = {});
bool check_cp(const SuperOp &b, Tolerance tol = {});

/// sum_i M_i M_i^* == I within tol.
TpReport tp_report(const KrausList &ms, Tolerance tol = {});
bool check_tp(const KrausList &ms, Tolerance tol = {});

/// Random trace-preserving channel with `rank` Kraus operators:
/// M_i = S^{-1/2} G_i with S = sum_i G_i G_i^* for Gaussian G_i.
KrausList random_kraus_channel(std::size_t d, std::size_t rank, Rng &rng);

}  // namespace hsdual

#endif
