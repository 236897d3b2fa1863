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
// Jacobi-rotation eigensolver and SVD.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hsdual/kernels.h"
#include "hsdual/linalg.h"

namespace hsdual {

namespace {

constexpr int kMaxSweeps = 100;

// Rotation J = [[c, s*phase], [-s*conj(phase), c]] acting on coordinates
// (p, q) that diagonalizes the Hermitian 2x2 block [[app, apq], [conj(apq), aqq]]
// via J^* B J. t = tan of the rotation angle.
struct Rotation {
    double c;
    double s;
    double t;
    cplx phase;
};

Rotation make_rotation(double app, double aqq, cplx apq) {
    const double mag = std::abs(apq);
    const cplx phase = apq / mag;
    const double theta = (aqq - app) / (2.0 * mag);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, t, phase};
}

// x_p <- c x_p - s conj(phase) x_q ;  x_q <- s phase x_p + c x_q
// (right-multiplication by J, applied to two contiguous rows that hold
// the columns being rotated).
void rotate_pair(cplx *xp, cplx *xq, std::size_t n, const Rotation &r) {
    const cplx sp = r.s * r.phase;
    const cplx sc = r.s * std::conj(r.phase);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = xp[k];
        const cplx b = xq[k];
        xp[k] = r.c * a - sc * b;
        xq[k] = sp * a + r.c * b;
    }
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix &h, Tolerance tol) {
    if (!h.is_square()) {
        throw DimensionError("hermitian_eig of non-square " + h.shape_str());
    }
    if (!is_hermitian(h, tol)) {
        throw std::invalid_argument("hermitian_eig: input is not Hermitian within tolerance");
    }
    const std::size_t n = h.rows();
    // Symmetrize away the tolerated asymmetry.
    ComplexMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    // Eigenvectors are kept as rows of vt so rotations touch contiguous memory.
    ComplexMatrix vt = ComplexMatrix::identity(n);
    const double norm = frobenius_norm(a);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    off += std::norm(a(i, j));
                }
            }
        }
        if (std::sqrt(off) <= 1e-14 * norm || off == 0) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) == 0) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Rotation r = make_rotation(app, aqq, apq);
                const cplx sp = r.s * r.phase;
                const cplx sc = r.s * std::conj(r.phase);
                // a <- a J (columns p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx x = a(k, p);
                    const cplx y = a(k, q);
                    a(k, p) = r.c * x - sc * y;
                    a(k, q) = sp * x + r.c * y;
                }
                // a <- J^* a (rows p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx x = a(p, k);
                    const cplx y = a(q, k);
                    a(p, k) = r.c * x - sp * y;
                    a(q, k) = sc * x + r.c * y;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = app - r.t * std::abs(apq);
                a(q, q) = aqq + r.t * std::abs(apq);
                rotate_pair(vt.row(p).data(), vt.row(q).data(), n, r);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    EigResult out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, c) = vt(order[c], r);
        }
    }
    return out;
}

SvdResult svd(const ComplexMatrix &a) {
    if (a.rows() < a.cols()) {
        SvdResult t = svd(adjoint(a));
        return {std::move(t.v), std::move(t.s), std::move(t.u)};
    }
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const auto &kern = kernels::active();

    // Columns of the working matrix and of V are stored as rows.
    ComplexMatrix gt = transpose(a);
    ComplexMatrix vt = ComplexMatrix::identity(n);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cplx *gp = gt.row(p).data();
                cplx *gq = gt.row(q).data();
                const double alpha = kern.dotc(gp, gp, m).real();
                const double beta = kern.dotc(gq, gq, m).real();
                const cplx gamma = kern.dotc(gp, gq, m);
                if (alpha == 0 || beta == 0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                const Rotation r = make_rotation(alpha, beta, gamma);
                rotate_pair(gp, gq, m, r);
                rotate_pair(vt.row(p).data(), vt.row(q).data(), n, r);
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> norms(n);
    for (std::size_t k = 0; k < n; ++k) {
        norms[k] = std::sqrt(kern.dotc(gt.row(k).data(), gt.row(k).data(), m).real());
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SvdResult out{ComplexMatrix(m, n), std::vector<double>(n), ComplexMatrix(n, n)};
    const double smax = n == 0 ? 0.0 : norms[order[0]];
    // Left vectors as rows while they are being built.
    ComplexMatrix ut(n, m);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t src = order[c];
        out.s[c] = norms[src];
        for (std::size_t r = 0; r < n; ++r) {
            out.v(r, c) = vt(src, r);
        }
        cplx *uc = ut.row(c).data();
        const bool reliable = norms[src] > 1e-13 * smax && norms[src] > 0;
        if (reliable) {
            for (std::size_t r = 0; r < m; ++r) {
                uc[r] = gt(src, r) / norms[src];
            }
            continue;
        }
        // Numerically null direction: complete the orthonormal family from
        // standard basis vectors.
        for (std::size_t seed = 0; seed < m; ++seed) {
            std::fill(uc, uc + m, cplx{});
            uc[(c + seed) % m] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t p = 0; p < c; ++p) {
                    const cplx *up = ut.row(p).data();
                    kern.axpy(-kern.dotc(up, uc, m), up, uc, m);
                }
            }
            const double len = std::sqrt(kern.dotc(uc, uc, m).real());
            if (len > 0.5) {
                for (std::size_t r = 0; r < m; ++r) {
                    uc[r] /= len;
                }
                break;
            }
        }
    }
    out.u = transpose(ut);
    return out;
}

}  // namespace hsdual
