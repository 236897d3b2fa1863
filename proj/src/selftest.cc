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

#include "hsdual/selftest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "hsdual/bench.h"
#include "hsdual/entangle.h"
#include "hsdual/linalg.h"
#include "hsdual/superop.h"
#include "hsdual/vectorize.h"

namespace hsdual {

namespace {

struct Property {
    const char *name;
    double bound;
    bool lower_bound;
    std::function<double(Rng &)> measure;
};

struct Suite {
    const char *name;
    std::vector<Property> properties;
};

Property upto(const char *name, double bound, std::function<double(Rng &)> measure) {
    return {name, bound, false, std::move(measure)};
}

Property atleast(const char *name, double bound, std::function<double(Rng &)> measure) {
    return {name, bound, true, std::move(measure)};
}

Basis random_basis(std::size_t d, Rng &rng) {
    return Basis(random_unitary(d, rng));
}

BasisPair random_bases(std::size_t d1, std::size_t d2, Rng &rng) {
    Basis b1 = random_basis(d1, rng);
    Basis b2 = random_basis(d2, rng);
    return {std::move(b1), std::move(b2)};
}

double rel_dev(cplx x, cplx y) {
    return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y)));
}

const std::vector<std::pair<std::size_t, std::size_t>> kDimPairs{{2, 2}, {3, 2}, {4, 4}, {8, 8}};

Suite vectorize_suite() {
    return {"vectorize",
            {
                upto("isometry", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (auto [d1, d2] : kDimPairs) {
                             const BasisPair bases = random_bases(d1, d2, rng);
                             for (int t = 0; t < 20; ++t) {
                                 const ComplexMatrix a = random_gaussian(d2, d1, rng);
                                 const ComplexMatrix b = random_gaussian(d2, d1, rng);
                                 dev = std::max(dev, rel_dev(inner(vec_j(a, bases), vec_j(b, bases)), hs_inner(a, b)));
                             }
                         }
                         return dev;
                     }),
                upto("inverse-pair", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         for (auto [d1, d2] : kDimPairs) {
                             const BasisPair bases = random_bases(d1, d2, rng);
                             for (int t = 0; t < 20; ++t) {
                                 const ComplexMatrix a = random_gaussian(d2, d1, rng);
                                 const BipartiteVector alpha(d1, d2, random_gaussian(d1 * d2, 1, rng));
                                 dev = std::max(dev, max_abs_diff(devec_jstar(vec_j(a, bases), bases), a));
                                 dev = std::max(dev, max_abs_diff(vec_j(devec_jstar(alpha, bases), bases).vec(), alpha.vec()));
                             }
                         }
                         return dev;
                     }),
                upto("conjugation-involution", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d = 1; d <= 8; ++d) {
                             const Basis b = random_basis(d, rng);
                             const ComplexMatrix phi = random_gaussian(d, 1, rng);
                             dev = std::max(dev, max_abs_diff(conjugate_in_basis(b, conjugate_in_basis(b, phi)), phi));
                         }
                         return dev;
                     }),
                upto("conjugation-antiunitary", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d = 1; d <= 8; ++d) {
                             const Basis b = random_basis(d, rng);
                             const ComplexMatrix phi = random_gaussian(d, 1, rng);
                             const ComplexMatrix psi = random_gaussian(d, 1, rng);
                             dev = std::max(dev, std::abs(hs_inner(conjugate_in_basis(b, phi), conjugate_in_basis(b, psi)) -
                                                          hs_inner(psi, phi)));
                         }
                         return dev;
                     }),
                upto("conjugation-orthonormal-image", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d = 2; d <= 8; ++d) {
                             const Basis b = random_basis(d, rng);
                             const ComplexMatrix w = random_unitary(d, rng);
                             ComplexMatrix image(d, d);
                             for (std::size_t c = 0; c < d; ++c) {
                                 image.set_col(c, conjugate_in_basis(b, w.col(c)));
                             }
                             dev = std::max(dev, max_abs_diff(adjoint(image) * image, ComplexMatrix::identity(d)));
                         }
                         return dev;
                     }),
                upto("reconstruction", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         for (auto [d1, d2] : kDimPairs) {
                             const BasisPair bases = random_bases(d1, d2, rng);
                             const ComplexMatrix a = random_gaussian(d2, d1, rng);
                             ComplexMatrix rebuilt(d2, d1);
                             for (std::size_t i = 0; i < d2; ++i) {
                                 for (std::size_t j = 0; j < d1; ++j) {
                                     const ComplexMatrix psi = bases.h2.vector(i);
                                     const ComplexMatrix phi = bases.h1.vector(j);
                                     rebuilt += hs_inner(psi, a * phi) * outer(psi, phi);
                                 }
                             }
                             dev = std::max(dev, max_abs_diff(rebuilt, a));
                         }
                         return dev;
                     }),
                upto("basis-change", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (auto [d1, d2] : kDimPairs) {
                             const BasisPair old_bases = random_bases(d1, d2, rng);
                             const BasisPair new_bases = random_bases(d1, d2, rng);
                             const ComplexMatrix a = random_gaussian(d2, d1, rng);
                             const ComplexMatrix coeffs = basis_coefficients(a, old_bases);
                             ComplexMatrix expected(d1 * d2, 1);
                             for (std::size_t i = 0; i < d2; ++i) {
                                 for (std::size_t j = 0; j < d1; ++j) {
                                     expected += coeffs(i, j) * kron(conjugate_in_basis(new_bases.h1, old_bases.h1.vector(j)),
                                                                     old_bases.h2.vector(i));
                                 }
                             }
                             dev = std::max(dev, max_abs_diff(vec_j(a, new_bases).vec(), expected));
                         }
                         return dev;
                     }),
                upto("t-equals-j", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         for (auto [d1, d2] : kDimPairs) {
                             const BasisPair bases = random_bases(d1, d2, rng);
                             const ComplexMatrix a = random_gaussian(d2, d1, rng);
                             dev = std::max(dev, max_abs_diff(vec_t(a, bases.h1).vec(), vec_j(a, bases).vec()));
                         }
                         return dev;
                     }),
                upto("slice-identities", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         for (auto [d1, d2] : kDimPairs) {
                             const BasisPair bases = random_bases(d1, d2, rng);
                             const ComplexMatrix phi = random_gaussian(d1, 1, rng);
                             const ComplexMatrix psi = random_gaussian(d2, 1, rng);
                             const BipartiteVector alpha(d1, d2, random_gaussian(d1 * d2, 1, rng));
                             const ComplexMatrix beta = random_gaussian(d2, 1, rng);
                             ComplexMatrix resum(d1 * d2, 1);
                             for (std::size_t i = 0; i < d1; ++i) {
                                 const ComplexMatrix phi_i = bases.h1.vector(i);
                                 dev = std::max(dev, max_abs_diff(partial_slice(i, BipartiteVector::product(phi, psi), bases),
                                                                  hs_inner(phi_i, phi) * psi));
                                 resum += kron(phi_i, partial_slice(i, alpha, bases));
                                 dev = std::max(dev, std::abs(hs_inner(partial_slice(i, alpha, bases), beta) -
                                                              inner(alpha, partial_slice_adjoint(i, beta, bases))));
                             }
                             dev = std::max(dev, max_abs_diff(resum, alpha.vec()));
                         }
                         return dev;
                     }),
                upto("slices-match-devec", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         for (auto [d1, d2] : kDimPairs) {
                             const BasisPair bases = random_bases(d1, d2, rng);
                             const BipartiteVector alpha(d1, d2, random_gaussian(d1 * d2, 1, rng));
                             dev = std::max(dev, max_abs_diff(devec_via_slices(alpha, bases), devec_jstar(alpha, bases)));
                         }
                         return dev;
                     }),
            }};
}

// Random dense superoperator given by its matrix-unit form.
ComplexMatrix random_superop(std::size_t d1, std::size_t d2, Rng &rng) {
    return random_gaussian(d1 * d2, d1 * d2, rng);
}

ComplexMatrix r_of(const ComplexMatrix &units, const BasisPair &bases) {
    const OpOnHS op = OpOnHS::from_matrix_units(units, bases.d1(), bases.d2());
    return std::get<RMatrix>(lift_r(op, bases).repr).m;
}

Suite superop_suite() {
    return {"superop",
            {
                upto("r-multiplicative", 1e-8,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3}) {
                             const BasisPair bases = random_bases(d, d, rng);
                             for (int t = 0; t < 10; ++t) {
                                 const ComplexMatrix m1 = random_superop(d, d, rng);
                                 const ComplexMatrix m2 = random_superop(d, d, rng);
                                 dev = std::max(dev, max_abs_diff(r_of(m1 * m2, bases), r_of(m1, bases) * r_of(m2, bases)));
                             }
                         }
                         return dev;
                     }),
                upto("r-adjoint", 1e-8,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3}) {
                             const BasisPair bases = random_bases(d, d, rng);
                             const ComplexMatrix m = random_superop(d, d, rng);
                             dev = std::max(dev, max_abs_diff(r_of(adjoint(m), bases), adjoint(r_of(m, bases))));
                         }
                         return dev;
                     }),
                upto("r-unit", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3}) {
                             const BasisPair bases = random_bases(d, d, rng);
                             const ComplexMatrix r = std::get<RMatrix>(lift_r(OpOnHS::identity(d, d), bases).repr).m;
                             dev = std::max(dev, max_abs_diff(r, ComplexMatrix::identity(d * d)));
                         }
                         return dev;
                     }),
                upto("r-norm", 1e-8,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3}) {
                             const BasisPair bases = random_bases(d, d, rng);
                             const ComplexMatrix m = random_superop(d, d, rng);
                             dev = std::max(dev, std::abs(operator_norm(r_of(m, bases)) - operator_norm(m)));
                         }
                         return dev;
                     }),
                upto("s-inverts-r", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         const std::size_t d1 = 3;
                         const std::size_t d2 = 2;
                         const BasisPair bases = random_bases(d1, d2, rng);
                         for (int t = 0; t < 10; ++t) {
                             const ComplexMatrix c = random_superop(d1, d2, rng);
                             const OpOnHS s = lower_s(c, bases);
                             dev = std::max(dev, max_abs_diff(std::get<RMatrix>(lift_r(s, bases).repr).m, c));
                             const ComplexMatrix m = random_superop(d1, d2, rng);
                             const OpOnHS b = OpOnHS::from_matrix_units(m, d1, d2);
                             const OpOnHS back = lower_s(std::get<RMatrix>(lift_r(b, bases).repr).m, bases);
                             const ComplexMatrix probe = random_gaussian(d2, d1, rng);
                             dev = std::max(dev, max_abs_diff(back(probe), b(probe)));
                         }
                         return dev;
                     }),
                upto("hs-preservation", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3}) {
                             const BasisPair bases = random_bases(d, d, rng);
                             for (int t = 0; t < 5; ++t) {
                                 const ComplexMatrix m1 = random_superop(d, d, rng);
                                 const ComplexMatrix m2 = random_superop(d, d, rng);
                                 dev = std::max(dev, rel_dev(hs_inner(r_of(m1, bases), r_of(m2, bases)), hs_inner(m1, m2)));
                             }
                         }
                         return dev;
                     }),
                upto("complete-positivity", 1e-10,
                     [](Rng &rng) {
                         // Violation of sum_ij B_i^* R(A_i^* A_j) B_j >= 0, scaled by (1 + norm).
                         double worst = 0;
                         const std::size_t d = 2;
                         const BasisPair bases = random_bases(d, d, rng);
                         for (int t = 0; t < 10; ++t) {
                             const std::size_t k = 1 + static_cast<std::size_t>(t % 3);
                             std::vector<ComplexMatrix> as;
                             std::vector<ComplexMatrix> bs;
                             for (std::size_t i = 0; i < k; ++i) {
                                 as.push_back(random_superop(d, d, rng));
                                 bs.push_back(random_gaussian(d * d, d * d, rng));
                             }
                             ComplexMatrix total(d * d, d * d);
                             for (std::size_t i = 0; i < k; ++i) {
                                 for (std::size_t j = 0; j < k; ++j) {
                                     total += adjoint(bs[i]) * r_of(adjoint(as[i]) * as[j], bases) * bs[j];
                                 }
                             }
                             const ComplexMatrix herm = 0.5 * (total + adjoint(total));
                             const EigResult e = hermitian_eig(herm);
                             const double norm = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
                             worst = std::max(worst, -e.values.back() / (1.0 + norm));
                             worst = std::max(worst, max_abs_diff(total, herm) / (1.0 + norm));
                         }
                         return worst;
                     }),
                upto("kraus-dual-construction", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (int t = 0; t < 20; ++t) {
                             const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
                             const std::size_t rank = 1 + static_cast<std::size_t>(t % 4);
                             const BasisPair bases = random_bases(d, d, rng);
                             const KrausList ms = random_kraus_channel(d, rank, rng);
                             const ComplexMatrix via_m_alpha = std::get<RMatrix>(kraus_to_r(ms, bases).repr).m;
                             const ComplexMatrix closed = kraus_to_r_closed_form(ms, bases);
                             const ComplexMatrix probed = std::get<RMatrix>(lift_r(OpOnHS::from_kraus(ms), bases).repr).m;
                             dev = std::max({dev, max_abs_diff(via_m_alpha, closed), max_abs_diff(closed, probed),
                                             max_abs_diff(via_m_alpha, probed)});
                         }
                         return dev;
                     }),
                upto("kraus-roundtrip", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3, 4}) {
                             const BasisPair bases = random_bases(d, d, rng);
                             const KrausList ms = random_kraus_channel(d, 3, rng);
                             const OpOnHS back = lower_s(std::get<RMatrix>(kraus_to_r(ms, bases).repr).m, bases);
                             const ComplexMatrix a = random_gaussian(d, d, rng);
                             dev = std::max(dev, max_abs_diff(back(a), kraus_apply(ms, a)));
                         }
                         return dev;
                     }),
                upto("composition-chain", 1e-8,
                     [](Rng &rng) {
                         const std::size_t d = 4;
                         std::vector<KrausList> chain;
                         for (int k = 0; k < 10; ++k) {
                             chain.push_back(random_kraus_channel(d, 1 + static_cast<std::size_t>(k % 4), rng));
                         }
                         SuperOp total = SuperOp::kraus(chain.front());
                         for (std::size_t k = 1; k < chain.size(); ++k) {
                             total = compose(SuperOp::kraus(chain[k]), total);
                         }
                         const OpOnHS op = as_op(total);
                         double dev = 0;
                         for (int s = 0; s < 10; ++s) {
                             ComplexMatrix rho = random_density(d, rng);
                             const ComplexMatrix via_r = op(rho);
                             for (const auto &ms : chain) {
                                 rho = kraus_apply(ms, rho);
                             }
                             dev = std::max(dev, max_abs_diff(via_r, rho));
                         }
                         return dev;
                     }),
            }};
}

Suite entangle_suite() {
    return {"entangle",
            {
                upto("reconstruction", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (int t = 0; t < 30; ++t) {
                             const std::size_t d1 = 1 + static_cast<std::size_t>(t % 6);
                             const std::size_t d2 = 1 + static_cast<std::size_t>((t / 6) % 6);
                             const BasisPair bases = random_bases(d1, d2, rng);
                             const BipartiteVector alpha(d1, d2, random_gaussian(d1 * d2, 1, rng));
                             const SchmidtResult s = schmidt(alpha, bases);
                             ComplexMatrix rebuilt(d1 * d2, 1);
                             for (std::size_t k = 0; k < s.lambdas.size(); ++k) {
                                 rebuilt += s.lambdas[k] * kron(s.left.col(k), s.right.col(k));
                             }
                             dev = std::max(dev, max_abs_diff(rebuilt, alpha.vec()));
                             const std::size_t k = s.lambdas.size();
                             dev = std::max(dev, max_abs_diff(adjoint(s.left) * s.left, ComplexMatrix::identity(k)));
                             dev = std::max(dev, max_abs_diff(adjoint(s.right) * s.right, ComplexMatrix::identity(k)));
                         }
                         return dev;
                     }),
                upto("norm", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (int t = 0; t < 20; ++t) {
                             const std::size_t d1 = 2 + static_cast<std::size_t>(t % 4);
                             const std::size_t d2 = 2 + static_cast<std::size_t>((t / 4) % 4);
                             const BipartiteVector alpha(d1, d2, random_gaussian(d1 * d2, 1, rng));
                             double sum = 0;
                             for (double l : schmidt(alpha, BasisPair::standard(d1, d2)).lambdas) {
                                 sum += l * l;
                             }
                             const double n2 = alpha.norm() * alpha.norm();
                             dev = std::max(dev, std::abs(sum - n2) / (1.0 + n2));
                         }
                         return dev;
                     }),
                upto("local-unitary-invariance", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (int t = 0; t < 10; ++t) {
                             const std::size_t d1 = 2 + static_cast<std::size_t>(t % 3);
                             const std::size_t d2 = 2 + static_cast<std::size_t>((t + 1) % 3);
                             const BipartiteVector alpha(d1, d2, random_gaussian(d1 * d2, 1, rng));
                             const ComplexMatrix u = random_unitary(d1, rng);
                             const ComplexMatrix v = random_unitary(d2, rng);
                             const BipartiteVector rotated(d1, d2, kron(u, v) * alpha.vec());
                             const BasisPair std_bases = BasisPair::standard(d1, d2);
                             const auto before = schmidt(alpha, std_bases).lambdas;
                             const auto after = schmidt(rotated, std_bases).lambdas;
                             for (std::size_t k = 0; k < before.size(); ++k) {
                                 dev = std::max(dev, std::abs(before[k] - after[k]));
                             }
                         }
                         return dev;
                     }),
                upto("product-vectors-rank-one", 0,
                     [](Rng &rng) {
                         double dev = 0;
                         for (int t = 0; t < 20; ++t) {
                             const std::size_t d1 = 2 + static_cast<std::size_t>(t % 4);
                             const std::size_t d2 = 2 + static_cast<std::size_t>((t / 4) % 4);
                             const BipartiteVector alpha =
                                 BipartiteVector::product(random_unit_vector(d1, rng), random_unit_vector(d2, rng));
                             dev = std::max(dev, std::abs(static_cast<double>(schmidt_rank(alpha)) - 1.0));
                         }
                         return dev;
                     }),
                upto("generic-vectors-full-rank", 0,
                     [](Rng &rng) {
                         double dev = 0;
                         for (int t = 0; t < 20; ++t) {
                             const BipartiteVector alpha(3, 3, random_gaussian(9, 1, rng));
                             dev = std::max(dev, std::abs(static_cast<double>(schmidt_rank(alpha)) - 3.0));
                         }
                         return dev;
                     }),
                upto("bell-coefficients", 1e-12,
                     [](Rng &) {
                         const double h = 1.0 / std::sqrt(2.0);
                         const BipartiteVector bell(2, 2, ComplexMatrix::column({h, 0, 0, h}));
                         const auto l = schmidt(bell, BasisPair::standard(2, 2)).lambdas;
                         return std::max(std::abs(l[0] - h), std::abs(l[1] - h));
                     }),
                upto("factorized-operator-action", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3}) {
                             const BasisPair bases = BasisPair::standard(d, d);
                             const ComplexMatrix a = random_gaussian(d, d, rng);
                             const ComplexMatrix b = random_gaussian(d, d, rng);
                             const ComplexMatrix c = random_gaussian(d, d, rng);
                             const ComplexMatrix ab = kron(a, b);
                             const ComplexMatrix direct = lower_s(ab, bases)(c);
                             const ComplexMatrix via_vec = devec_jstar(BipartiteVector(d, d, ab * vec_j(c, bases).vec()), bases);
                             dev = std::max(dev, max_abs_diff(direct, via_vec));
                             dev = std::max(dev, max_abs_diff(direct, b * c * transpose(a)));
                         }
                         return dev;
                     }),
                upto("pure-state-transport", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3}) {
                             const BasisPair bases = random_bases(d, d + 1, rng);
                             const ComplexMatrix phi = random_unit_vector(d, rng);
                             const ComplexMatrix psi = random_unit_vector(d + 1, rng);
                             const OpOnHS p = pure_state_transport(phi, psi, bases);
                             const ComplexMatrix e = outer(psi, conjugate_in_basis(bases.h1, phi));
                             dev = std::max(dev, max_abs_diff(p(e), e));
                             dev = std::max(dev, std::abs(trace(p.matrix_units()) - 1.0));
                             const ComplexMatrix c = random_gaussian(d + 1, d, rng);
                             dev = std::max(dev, max_abs_diff(p(p(c)), p(c)));
                         }
                         return dev;
                     }),
            }};
}

Suite choi_suite() {
    return {"choi",
            {
                upto("identity-corner-matrix", 0,
                     [](Rng &) {
                         const ComplexMatrix c =
                             std::get<ChoiMatrix>(choi_map(OpOnHS::identity(2, 2), Basis::standard(2)).repr).m;
                         ComplexMatrix expected(4, 4);
                         for (std::size_t r : {0, 3}) {
                             for (std::size_t s : {0, 3}) {
                                 expected(r, s) = 1.0;
                             }
                         }
                         return max_abs_diff(c, expected);
                     }),
                upto("hs-isometry", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3}) {
                             const Basis basis = random_basis(d, rng);
                             for (int t = 0; t < 5; ++t) {
                                 const ComplexMatrix m1 = random_superop(d, d, rng);
                                 const ComplexMatrix m2 = random_superop(d, d, rng);
                                 const ComplexMatrix c1 =
                                     std::get<ChoiMatrix>(choi_map(OpOnHS::from_matrix_units(m1, d, d), basis).repr).m;
                                 const ComplexMatrix c2 =
                                     std::get<ChoiMatrix>(choi_map(OpOnHS::from_matrix_units(m2, d, d), basis).repr).m;
                                 dev = std::max(dev, rel_dev(hs_inner(c1, c2), hs_inner(m1, m2)));
                             }
                         }
                         return dev;
                     }),
                atleast("not-multiplicative", 0.1,
                        [](Rng &) {
                            // C(I * I) versus C(I) C(I) = d C(I).
                            const ComplexMatrix c =
                                std::get<ChoiMatrix>(choi_map(OpOnHS::identity(2, 2), Basis::standard(2)).repr).m;
                            return frobenius_norm(c - c * c);
                        }),
                upto("transpose-min-eigenvalue", 1e-10,
                     [](Rng &) {
                         const SuperOp c = choi_map(OpOnHS::transpose_map(2), Basis::standard(2));
                         const CpReport rep = cp_report(c);
                         return std::abs(rep.min_eigenvalue + 1.0) + (rep.completely_positive ? 1.0 : 0.0);
                     }),
                upto("kraus-channels-cp", 1e-10,
                     [](Rng &rng) {
                         double worst = 0;
                         for (int t = 0; t < 20; ++t) {
                             const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
                             const KrausList ms = random_kraus_channel(d, 1 + static_cast<std::size_t>(t % 4), rng);
                             const ComplexMatrix c =
                                 std::get<ChoiMatrix>(choi_map(OpOnHS::from_kraus(ms), random_basis(d, rng)).repr).m;
                             const EigResult e = hermitian_eig(c);
                             worst = std::max(worst, -e.values.back() / (1.0 + e.values.front()));
                         }
                         return worst;
                     }),
                upto("vector-form-matches-t", 1e-12,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d = 1; d <= 8; ++d) {
                             const Basis basis = random_basis(d, rng);
                             const ComplexMatrix a = random_gaussian(d, d, rng);
                             dev = std::max(dev, max_abs_diff(choi_of_vector(a, basis).vec(), vec_t(a, basis).vec()));
                         }
                         return dev;
                     }),
                upto("choi-action-roundtrip", 1e-10,
                     [](Rng &rng) {
                         double dev = 0;
                         for (std::size_t d : {2, 3}) {
                             const Basis basis = random_basis(d, rng);
                             const OpOnHS b = OpOnHS::from_matrix_units(random_superop(d, d, rng), d, d);
                             for (bool normalize : {false, true}) {
                                 const OpOnHS back = as_op(choi_map(b, basis, normalize));
                                 const ComplexMatrix a = random_gaussian(d, d, rng);
                                 dev = std::max(dev, max_abs_diff(back(a), b(a)));
                             }
                         }
                         return dev;
                     }),
            }};
}

Suite bench_sanity_suite() {
    return {"bench-sanity",
            {
                upto("single-unitary-channel", 1e-12,
                     [](Rng &rng) {
                         BenchConfig cfg{2, 1, 1, 1, rng()};
                         return run_bench(cfg).max_deviation;
                     }),
                upto("chain-agreement", 1e-8,
                     [](Rng &rng) {
                         BenchConfig cfg{4, 4, 10, 1, rng()};
                         const BenchReport r = run_bench(cfg);
                         return r.max_deviation / r.result_norm;
                     }),
                upto("deviation-deterministic", 0,
                     [](Rng &rng) {
                         BenchConfig cfg{3, 2, 5, 1, rng()};
                         return std::abs(run_bench(cfg).max_deviation - run_bench(cfg).max_deviation);
                     }),
            }};
}

std::vector<Suite> all_suites() {
    std::vector<Suite> out;
    out.push_back(bench_sanity_suite());
    out.push_back(choi_suite());
    out.push_back(entangle_suite());
    out.push_back(superop_suite());
    out.push_back(vectorize_suite());
    return out;
}

}  // namespace

const std::vector<std::string> &selftest_suites() {
    static const std::vector<std::string> names{"bench-sanity", "choi", "entangle", "superop", "vectorize"};
    return names;
}

bool is_selftest_suite(std::string_view name) {
    if (name == "all") {
        return true;
    }
    const auto &names = selftest_suites();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<PropertyResult> run_selftest(std::string_view suite, std::uint64_t seed) {
    if (!is_selftest_suite(suite)) {
        throw std::invalid_argument("unknown selftest suite: " + std::string(suite));
    }
    std::vector<PropertyResult> out;
    std::uint64_t index = 0;
    for (const Suite &s : all_suites()) {
        for (const Property &p : s.properties) {
            // Every property gets its own stream so results do not depend on
            // which suites ran before it.
            Rng rng(seed * 0x9E3779B97F4A7C15ULL + ++index);
            if (suite != "all" && suite != s.name) {
                continue;
            }
            const double observed = p.measure(rng);
            const bool pass = p.lower_bound ? observed >= p.bound : observed <= p.bound;
            out.push_back({s.name, p.name, observed, p.bound, p.lower_bound, pass});
        }
    }
    return out;
}

}  // namespace hsdual
