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

#include "hsdual/entangle.h"

#include <cmath>
#include <string>

#include "hsdual/linalg.h"

namespace hsdual {

namespace {

void require_unit(const ComplexMatrix &v, const char *name) {
    if (v.cols() != 1) {
        throw DimensionError(std::string(name) + " must be a column vector");
    }
    const double n = frobenius_norm(v);
    if (!(std::abs(n - 1.0) <= 1e-8)) {
        throw std::invalid_argument(std::string(name) + " is not a unit vector (norm " + std::to_string(n) + ")");
    }
}

}  // namespace

SchmidtResult schmidt(const BipartiteVector &alpha, const BasisPair &bases) {
    const HSOperator a = devec_jstar(alpha, bases);  // d2 x d1
    SvdResult sv = svd(a);
    const std::size_t k = sv.s.size();
    SchmidtResult out{sv.s, ComplexMatrix(bases.d1(), k), ComplexMatrix(bases.d2(), k)};
    for (std::size_t c = 0; c < k; ++c) {
        ComplexMatrix v = sv.v.col(c);
        ComplexMatrix u = sv.u.col(c);
        for (std::size_t r = 0; r < v.rows(); ++r) {
            const double mag = std::abs(v[r]);
            if (mag > 1e-12) {
                const cplx unphase = std::conj(v[r]) / mag;
                v *= unphase;
                u *= unphase;
                v[r] = mag;
                break;
            }
        }
        out.left.set_col(c, conjugate_in_basis(bases.h1, v));
        out.right.set_col(c, u);
    }
    return out;
}

std::size_t schmidt_rank(const BipartiteVector &alpha, std::optional<double> cutoff) {
    const double cut = cutoff.value_or(1e-10 * alpha.norm());
    const HSOperator a = col_unstack(alpha.vec(), alpha.d2(), alpha.d1());
    std::size_t rank = 0;
    for (double s : svd(a).s) {
        if (s > cut) {
            ++rank;
        }
    }
    return rank;
}

bool is_entangled(const BipartiteVector &alpha, std::optional<double> cutoff) {
    return schmidt_rank(alpha, cutoff) >= 2;
}

Basis adapted_basis(const ComplexMatrix &v) {
    require_unit(v, "adapted basis seed");
    const std::size_t d = v.rows();
    ComplexMatrix u(d, d);
    u.set_col(0, v);
    std::size_t filled = 1;
    for (std::size_t e = 0; e < d && filled < d; ++e) {
        ComplexMatrix w = ComplexMatrix::unit_vector(d, e);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < filled; ++p) {
                const ComplexMatrix up = u.col(p);
                w -= hs_inner(up, w) * up;
            }
        }
        const double len = frobenius_norm(w);
        if (len > 1e-6) {
            w *= 1.0 / len;
            u.set_col(filled++, w);
        }
    }
    return Basis(std::move(u));
}

HSOperator product_state_devec(const ComplexMatrix &phi, const ComplexMatrix &psi, const BasisPair &bases) {
    require_unit(phi, "phi");
    require_unit(psi, "psi");
    return devec_jstar(BipartiteVector::product(phi, psi), bases);
}

OpOnHS pure_state_transport(const ComplexMatrix &phi, const ComplexMatrix &psi, const BasisPair &bases) {
    require_unit(phi, "phi");
    require_unit(psi, "psi");
    if (phi.rows() != bases.d1() || psi.rows() != bases.d2()) {
        throw DimensionError("pure_state_transport: vectors do not match the bases");
    }
    return lower_s(kron(outer(phi, phi), outer(psi, psi)), bases);
}

}  // namespace hsdual
