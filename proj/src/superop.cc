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
#include "hsdual/superop.h"

#include <cmath>
#include <limits>
#include <string>

namespace hsdual {

namespace {

std::string dims_str(std::size_t d1, std::size_t d2) {
    return std::to_string(d1) + "x" + std::to_string(d2);
}

void require_bases(std::size_t d1, std::size_t d2, const BasisPair &bases) {
    if (bases.d1() != d1 || bases.d2() != d2) {
        throw DimensionError("bases " + dims_str(bases.d1(), bases.d2()) + " do not match superoperator " +
                             dims_str(d1, d2));
    }
}

// W = U U^T, so that J(A) = col_stack(A W) for any H2 basis.
ComplexMatrix vectorization_twist(const Basis &b1) {
    return b1.matrix() * transpose(b1.matrix());
}

}  // namespace

void KrausList::validate() const {
    if (ops.empty()) {
        throw DimensionError("Kraus list is empty");
    }
    const std::size_t d = ops.front().rows();
    for (const auto &m : ops) {
        if (!m.is_square() || m.rows() != d) {
            throw DimensionError("Kraus operators must all be square of size " + std::to_string(d) + ", got " +
                                 m.shape_str());
        }
    }
}

std::size_t KrausList::dim() const {
    validate();
    return ops.front().rows();
}

OpOnHS::OpOnHS(std::size_t d1, std::size_t d2, Fn fn) : d1_(d1), d2_(d2), fn_(std::move(fn)) {}

OpOnHS OpOnHS::identity(std::size_t d1, std::size_t d2) {
    return OpOnHS(d1, d2, [](const HSOperator &a) { return a; });
}

OpOnHS OpOnHS::from_matrix_units(ComplexMatrix m, std::size_t d1, std::size_t d2) {
    if (!m.is_square() || m.rows() != d1 * d2) {
        throw DimensionError("matrix-unit form " + m.shape_str() + " does not act on " + dims_str(d2, d1) +
                             " operators");
    }
    OpOnHS op(d1, d2, [m, d1, d2](const HSOperator &a) { return col_unstack(m * col_stack(a), d2, d1); });
    op.dense_ = std::move(m);
    return op;
}

OpOnHS OpOnHS::from_kraus(KrausList ms) {
    const std::size_t d = ms.dim();
    return OpOnHS(d, d, [ms = std::move(ms)](const HSOperator &a) { return kraus_apply(ms, a); });
}

OpOnHS OpOnHS::transpose_map(std::size_t d) {
    return OpOnHS(d, d, [](const HSOperator &a) { return transpose(a); });
}

HSOperator OpOnHS::operator()(const HSOperator &a) const {
    if (a.rows() != d2_ || a.cols() != d1_) {
        throw DimensionError("map on " + dims_str(d2_, d1_) + " operators applied to " + a.shape_str());
    }
    HSOperator out = fn_(a);
    if (out.rows() != d2_ || out.cols() != d1_) {
        throw DimensionError("map produced " + out.shape_str() + ", expected " + dims_str(d2_, d1_));
    }
    return out;
}

ComplexMatrix OpOnHS::matrix_units() const {
    if (dense_) {
        return *dense_;
    }
    const std::size_t n = d1_ * d2_;
    ComplexMatrix m(n, n);
    for (std::size_t j = 0; j < d1_; ++j) {
        for (std::size_t i = 0; i < d2_; ++i) {
            m.set_col(j * d2_ + i, col_stack((*this)(ComplexMatrix::matrix_unit(d2_, d1_, i, j))));
        }
    }
    return m;
}

SuperOp SuperOp::kraus(KrausList ms, BasisPair bases) {
    const std::size_t d = ms.dim();
    require_bases(d, d, bases);
    return SuperOp{d, d, std::move(ms), std::move(bases)};
}

SuperOp SuperOp::kraus(KrausList ms) {
    const std::size_t d = ms.dim();
    return kraus(std::move(ms), BasisPair::standard(d, d));
}

SuperOp SuperOp::r_matrix(ComplexMatrix m, BasisPair bases) {
    const std::size_t n = bases.d1() * bases.d2();
    if (!m.is_square() || m.rows() != n) {
        throw DimensionError("R-matrix " + m.shape_str() + " does not act on C^" + std::to_string(n));
    }
    const std::size_t d1 = bases.d1();
    const std::size_t d2 = bases.d2();
    return SuperOp{d1, d2, RMatrix{std::move(m)}, std::move(bases)};
}

SuperOp SuperOp::choi(ChoiMatrix c, BasisPair bases) {
    if (bases.d1() != bases.d2()) {
        throw DimensionError("Choi representation requires equal factor dimensions");
    }
    const std::size_t d = bases.d1();
    if (!c.m.is_square() || c.m.rows() != d * d) {
        throw DimensionError("Choi matrix " + c.m.shape_str() + " does not match dimension " + std::to_string(d));
    }
    return SuperOp{d, d, std::move(c), std::move(bases)};
}

SuperOp lift_r(const OpOnHS &b, const BasisPair &bases) {
    require_bases(b.d1(), b.d2(), bases);
    const std::size_t d1 = bases.d1();
    const std::size_t d2 = bases.d2();
    // Column j*d2+i of images is J(B(|psi_i><phi_j|)) = R(B)(phi_j (x) psi_i).
    ComplexMatrix images(d1 * d2, d1 * d2);
    for (std::size_t j = 0; j < d1; ++j) {
        const ComplexMatrix phi = bases.h1.vector(j);
        for (std::size_t i = 0; i < d2; ++i) {
            const HSOperator unit = outer(bases.h2.vector(i), phi);
            images.set_col(j * d2 + i, vec_j(b(unit), bases).vec());
        }
    }
    // Undo the change of coordinates: the probes are the columns of U (x) V.
    const ComplexMatrix probes = kron(bases.h1.matrix(), bases.h2.matrix());
    return SuperOp::r_matrix(images * adjoint(probes), bases);
}

OpOnHS lower_s(const ComplexMatrix &c, const BasisPair &bases) {
    const std::size_t d1 = bases.d1();
    const std::size_t d2 = bases.d2();
    if (!c.is_square() || c.rows() != d1 * d2) {
        throw DimensionError("lower_s: matrix " + c.shape_str() + " does not act on C^" + std::to_string(d1 * d2));
    }
    return OpOnHS(d1, d2, [c, bases](const HSOperator &a) {
        const BipartiteVector alpha = vec_j(a, bases);
        return devec_jstar(BipartiteVector(bases.d1(), bases.d2(), c * alpha.vec()), bases);
    });
}

OpOnHS lower_s(const SuperOp &c) {
    return lower_s(to_r_matrix(c), c.bases);
}

HSOperator kraus_apply(const KrausList &ms, const HSOperator &a) {
    const std::size_t d = ms.dim();
    if (a.rows() != d || a.cols() != d) {
        throw DimensionError("kraus_apply: operator " + a.shape_str() + " vs Kraus dimension " + std::to_string(d));
    }
    HSOperator out(d, d);
    for (const auto &m : ms.ops) {
        out += adjoint(m) * a * m;
    }
    return out;
}

ComplexMatrix m_alpha(const KrausList &ms, const BipartiteVector &alpha, const BasisPair &bases) {
    const std::size_t d = ms.dim();
    require_bases(d, d, bases);
    if (alpha.d1() != d || alpha.d2() != d) {
        throw DimensionError("m_alpha: vector dimensions do not match the channel");
    }
    std::vector<ComplexMatrix> phi_images;  // M_i^* phi_r, indexed [i*d + r]
    std::vector<ComplexMatrix> psi_images;  // M_i^* psi_s
    for (const auto &m : ms.ops) {
        const ComplexMatrix madj = adjoint(m);
        for (std::size_t r = 0; r < d; ++r) {
            phi_images.push_back(madj * bases.h1.vector(r));
            psi_images.push_back(madj * bases.h2.vector(r));
        }
    }
    ComplexMatrix out(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < d; ++s) {
            const BipartiteVector unit = BipartiteVector::product(bases.h1.vector(r), bases.h2.vector(s));
            const cplx coeff = inner(unit, alpha);
            if (coeff == cplx{}) {
                continue;
            }
            for (std::size_t i = 0; i < ms.ops.size(); ++i) {
                out += coeff * outer(psi_images[i * d + s], phi_images[i * d + r]);
            }
        }
    }
    return out;
}

SuperOp kraus_to_r(const KrausList &ms, const BasisPair &bases) {
    const std::size_t d = ms.dim();
    require_bases(d, d, bases);
    const std::size_t n = d * d;
    ComplexMatrix r(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const BipartiteVector alpha(d, d, ComplexMatrix::unit_vector(n, c));
        const ComplexMatrix m = m_alpha(ms, alpha, bases);
        ComplexMatrix column(n, 1);
        for (std::size_t s = 0; s < d; ++s) {
            const ComplexMatrix phi = bases.h1.vector(s);
            column += kron(phi, m * phi);
        }
        r.set_col(c, column);
    }
    return SuperOp::r_matrix(std::move(r), bases);
}

ComplexMatrix kraus_to_r_closed_form(const KrausList &ms, const BasisPair &bases) {
    const std::size_t d = ms.dim();
    require_bases(d, d, bases);
    const ComplexMatrix w = vectorization_twist(bases.h1);
    const ComplexMatrix w_adj = adjoint(w);
    ComplexMatrix r(d * d, d * d);
    for (const auto &m : ms.ops) {
        r += kron(w * transpose(m) * w_adj, adjoint(m));
    }
    return r;
}

SuperOp choi_map(const OpOnHS &b, const Basis &basis, bool normalize) {
    const std::size_t d = basis.dim();
    if (b.d1() != d || b.d2() != d) {
        throw DimensionError("choi_map requires a map on " + dims_str(d, d) + " operators, got " +
                             dims_str(b.d2(), b.d1()));
    }
    ComplexMatrix c(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        const ComplexMatrix phi_i = basis.vector(i);
        for (std::size_t j = 0; j < d; ++j) {
            const HSOperator unit = outer(phi_i, basis.vector(j));
            c += kron(unit, b(unit));
        }
    }
    if (normalize) {
        c *= 1.0 / static_cast<double>(d);
    }
    return SuperOp::choi(ChoiMatrix{std::move(c), normalize}, BasisPair{basis, basis});
}

BipartiteVector choi_of_vector(const HSOperator &a, const Basis &basis) {
    const std::size_t d = basis.dim();
    if (a.rows() != d || a.cols() != d) {
        throw DimensionError("choi_of_vector requires a " + dims_str(d, d) + " operator, got " + a.shape_str());
    }
    const BipartiteVector plus = phi_plus(basis);
    return BipartiteVector(d, d, kron(ComplexMatrix::identity(d), a) * plus.vec());
}

OpOnHS as_op(const SuperOp &b) {
    return std::visit(
        [&b](const auto &repr) -> OpOnHS {
            using T = std::decay_t<decltype(repr)>;
            if constexpr (std::is_same_v<T, KrausList>) {
                return OpOnHS::from_kraus(repr);
            } else if constexpr (std::is_same_v<T, RMatrix>) {
                return lower_s(repr.m, b.bases);
            } else {
                const std::size_t d = b.d1;
                const ComplexMatrix &u = b.bases.h1.matrix();
                // Rotate the first factor to coordinates so block (i, j) is B(|phi_i><phi_j|).
                const ComplexMatrix lift = kron(u, ComplexMatrix::identity(d));
                ComplexMatrix blocks = adjoint(lift) * repr.m * lift;
                if (repr.normalized) {
                    blocks *= static_cast<double>(d);
                }
                return OpOnHS(d, d, [blocks = std::move(blocks), u, d](const HSOperator &a) {
                    const ComplexMatrix coeffs = adjoint(u) * a * u;  // <phi_i|A|phi_j>
                    HSOperator out(d, d);
                    for (std::size_t i = 0; i < d; ++i) {
                        for (std::size_t j = 0; j < d; ++j) {
                            const cplx c = coeffs(i, j);
                            for (std::size_t k = 0; k < d; ++k) {
                                for (std::size_t l = 0; l < d; ++l) {
                                    out(k, l) += c * blocks(i * d + k, j * d + l);
                                }
                            }
                        }
                    }
                    return out;
                });
            }
        },
        b.repr);
}

ComplexMatrix to_r_matrix(const SuperOp &b) {
    if (const auto *r = std::get_if<RMatrix>(&b.repr)) {
        return r->m;
    }
    if (const auto *k = std::get_if<KrausList>(&b.repr)) {
        return kraus_to_r_closed_form(*k, b.bases);
    }
    return std::get<RMatrix>(lift_r(as_op(b), b.bases).repr).m;
}

SuperOp compose(const SuperOp &b1, const SuperOp &b2) {
    if (b1.d1 != b2.d1 || b1.d2 != b2.d2) {
        throw DimensionError("compose: dimensions " + dims_str(b1.d1, b1.d2) + " vs " + dims_str(b2.d1, b2.d2));
    }
    if (!(b1.bases == b2.bases)) {
        throw DimensionError("compose: superoperators use different bases");
    }
    return SuperOp::r_matrix(to_r_matrix(b1) * to_r_matrix(b2), b1.bases);
}

CpReport cp_report(const SuperOp &b, Tolerance tol) {
    if (b.d1 != b.d2) {
        throw DimensionError("complete positivity check requires equal factor dimensions");
    }
    const ComplexMatrix *choi_ptr = nullptr;
    SuperOp built = b;
    if (const auto *c = std::get_if<ChoiMatrix>(&b.repr); c != nullptr && b.bases.h1 == b.bases.h2) {
        choi_ptr = &c->m;
    } else {
        built = choi_map(as_op(b), b.bases.h1);
        choi_ptr = &std::get<ChoiMatrix>(built.repr).m;
    }
    const ComplexMatrix &choi = *choi_ptr;
    if (!is_hermitian(choi, tol)) {
        return {false, std::numeric_limits<double>::quiet_NaN()};
    }
    const EigResult e = hermitian_eig(choi, tol);
    const double norm = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
    const double lo = e.values.back();
    return {lo >= -tol.abs * (1.0 + norm), lo};
}

bool check_cp(const SuperOp &b, Tolerance tol) {
    return cp_report(b, tol).completely_positive;
}

TpReport tp_report(const KrausList &ms, Tolerance tol) {
    const std::size_t d = ms.dim();
    ComplexMatrix sum(d, d);
    for (const auto &m : ms.ops) {
        sum += m * adjoint(m);
    }
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    return {all_close(sum, eye, tol), max_abs_diff(sum, eye)};
}

bool check_tp(const KrausList &ms, Tolerance tol) {
    return tp_report(ms, tol).trace_preserving;
}

KrausList random_kraus_channel(std::size_t d, std::size_t rank, Rng &rng) {
    if (d == 0 || rank == 0) {
        throw DimensionError("random_kraus_channel: dimension and rank must be positive");
    }
    std::vector<ComplexMatrix> gs;
    ComplexMatrix s(d, d);
    for (std::size_t k = 0; k < rank; ++k) {
        gs.push_back(random_gaussian(d, d, rng));
        s += gs.back() * adjoint(gs.back());
    }
    const ComplexMatrix inv_sqrt = hermitian_apply(s, [](double x) { return 1.0 / std::sqrt(x); });
    KrausList out;
    for (const auto &g : gs) {
        out.ops.push_back(inv_sqrt * g);
    }
    return out;
}

}  // namespace hsdual
