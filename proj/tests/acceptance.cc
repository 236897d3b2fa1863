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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff every
// criterion passes. Each line reports the worst observed value against its
// bound.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cli_cases.h"
#include "hsdual/bench.h"
#include "hsdual/entangle.h"
#include "hsdual/kernels.h"
#include "hsdual/linalg.h"
#include "hsdual/superop.h"
#include "hsdual/vectorize.h"
#include "oracle.h"

namespace hsdual {
namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

/// Tracks the worst value of a quantity that must stay at or below `bound`.
struct Worst {
    double bound;
    double value = 0;
    long count = 0;
    bool nan_seen = false;

    void add(double v) {
        ++count;
        if (std::isnan(v)) {
            nan_seen = true;
        } else if (v > value) {
            value = v;
        }
    }
    bool ok() const { return !nan_seen && value <= bound; }
    std::string str(const char *what) const {
        return std::string(what) + " " + num(value) + " <= " + num(bound) + " over " + std::to_string(count);
    }
};

Outcome combine(std::initializer_list<std::pair<const char *, const Worst *>> parts) {
    Outcome o{true, ""};
    for (const auto &[what, w] : parts) {
        o.pass = o.pass && w->ok();
        if (!o.detail.empty()) {
            o.detail += "; ";
        }
        o.detail += w->str(what);
    }
    return o;
}

BasisPair random_bases(std::size_t d1, std::size_t d2, Rng &rng) {
    Basis h1(random_unitary(d1, rng));
    Basis h2(random_unitary(d2, rng));
    return {std::move(h1), std::move(h2)};
}

const std::vector<std::pair<std::size_t, std::size_t>> kIsometryDims{{2, 2}, {3, 2}, {4, 4}, {8, 8}};

// 1 and 2 share instances.
Outcome isometry_and_inverse(bool want_inverse) {
    Rng rng(101);
    Worst iso{1e-10};
    Worst inv{1e-12};
    for (auto [d1, d2] : kIsometryDims) {
        for (int t = 0; t < 200; ++t) {
            const BasisPair bases = random_bases(d1, d2, rng);
            const ComplexMatrix a = random_gaussian(d2, d1, rng);
            const ComplexMatrix b = random_gaussian(d2, d1, rng);
            const BipartiteVector ja = vec_j(a, bases);
            const BipartiteVector jb = vec_j(b, bases);
            const cplx hs = oracle::hs(a, b);
            iso.add(std::abs(inner(ja, jb) - hs) / (1.0 + std::abs(hs)));
            inv.add(max_abs_diff(devec_jstar(ja, bases), a));
            inv.add(max_abs_diff(devec_jstar(jb, bases), b));
            const BipartiteVector alpha(d1, d2, random_gaussian(d1 * d2, 1, rng));
            inv.add(max_abs_diff(vec_j(devec_jstar(alpha, bases), bases).vec(), alpha.vec()));
        }
    }
    return want_inverse ? combine({{"max |J*J - id|, |JJ* - id|", &inv}})
                        : combine({{"max |<JA,JB> - tr(A*B)|/(1+|tr(A*B)|)", &iso}});
}

Outcome conjugation_laws() {
    Rng rng(103);
    Worst square{1e-12};
    Worst self_adj{1e-12};
    Worst anti{1e-12};
    for (std::size_t d = 1; d <= 8; ++d) {
        for (int t = 0; t < 25; ++t) {
            const Basis b(random_unitary(d, rng));
            const ComplexMatrix phi = random_gaussian(d, 1, rng);
            const ComplexMatrix psi = random_gaussian(d, 1, rng);
            const ComplexMatrix kphi = conjugate_in_basis(b, phi);
            const ComplexMatrix kpsi = conjugate_in_basis(b, psi);
            square.add(max_abs_diff(conjugate_in_basis(b, kphi), phi));
            // For antilinear K, <K* phi, psi> = <K psi, phi>; K* == K means
            // the pairing below is symmetric.
            self_adj.add(std::abs(oracle::dot(kphi, psi) - oracle::dot(kpsi, phi)));
            anti.add(std::abs(oracle::dot(kphi, kpsi) - oracle::dot(psi, phi)));
        }
    }
    return combine({{"K^2 = I", &square}, {"K* = K", &self_adj}, {"<Kphi,Kpsi> = <psi,phi>", &anti}});
}

Outcome t_equals_j() {
    Rng rng(104);
    Worst tj{1e-12};
    Worst tphi{1e-12};
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(t % 8);
        const BasisPair bases = random_bases(d, d, rng);
        const ComplexMatrix a = random_gaussian(d, d, rng);
        const ComplexMatrix ta = vec_t(a, bases.h1).vec();
        tj.add(max_abs_diff(ta, vec_j(a, bases).vec()));
        ComplexMatrix phi_plus_oracle(d * d, 1);
        for (std::size_t j = 0; j < d; ++j) {
            phi_plus_oracle += oracle::kron(bases.h1.vector(j), bases.h1.vector(j));
        }
        tphi.add(max_abs_diff(ta, oracle::matmul(oracle::kron(ComplexMatrix::identity(d), a), phi_plus_oracle)));
        tphi.add(max_abs_diff(choi_of_vector(a, bases.h1).vec(), ta));
    }
    return combine({{"T = J", &tj}, {"T = (I (x) A) phi+", &tphi}});
}

Outcome slices() {
    Rng rng(105);
    Worst a_part{1e-12};
    Worst b_part{1e-12};
    Worst c_part{1e-12};
    Worst devec{1e-12};
    for (auto [d1, d2] : kIsometryDims) {
        for (int t = 0; t < 25; ++t) {
            const BasisPair bases = random_bases(d1, d2, rng);
            const ComplexMatrix phi = random_gaussian(d1, 1, rng);
            const ComplexMatrix psi = random_gaussian(d2, 1, rng);
            const BipartiteVector alpha(d1, d2, random_gaussian(d1 * d2, 1, rng));
            const ComplexMatrix beta = random_gaussian(d2, 1, rng);
            const BipartiteVector product = BipartiteVector::product(phi, psi);
            ComplexMatrix resum(d1 * d2, 1);
            for (std::size_t i = 0; i < d1; ++i) {
                const ComplexMatrix phi_i = bases.h1.vector(i);
                a_part.add(max_abs_diff(partial_slice(i, product, bases), oracle::dot(phi_i, phi) * psi));
                resum += oracle::kron(phi_i, partial_slice(i, alpha, bases));
                const BipartiteVector adj = partial_slice_adjoint(i, beta, bases);
                ComplexMatrix adj_oracle(d1 * d2, 1);
                for (std::size_t j = 0; j < d2; ++j) {
                    adj_oracle += oracle::dot(bases.h2.vector(j), beta) * oracle::kron(phi_i, bases.h2.vector(j));
                }
                c_part.add(max_abs_diff(adj.vec(), adj_oracle));
                c_part.add(std::abs(oracle::dot(partial_slice(i, alpha, bases), beta) - inner(alpha, adj)));
                c_part.add(max_abs_diff(partial_slice(i, adj, bases), beta));
            }
            b_part.add(max_abs_diff(resum, alpha.vec()));
            devec.add(max_abs_diff(devec_via_slices(alpha, bases), devec_jstar(alpha, bases)));
            devec.add(max_abs_diff(devec_via_slices(alpha, bases), oracle::devec(alpha.vec(), bases)));
        }
    }
    return combine({{"(a)", &a_part}, {"(b)", &b_part}, {"(c)", &c_part}, {"slices vs J*", &devec}});
}

ComplexMatrix r_of(const OpOnHS &b, const BasisPair &bases) { return to_r_matrix(lift_r(b, bases)); }

OpOnHS random_superop(std::size_t d, Rng &rng) {
    return OpOnHS::from_matrix_units(random_gaussian(d * d, d * d, rng), d, d);
}

Outcome c_star_isomorphism() {
    Rng rng(106);
    Worst mult{1e-8};
    Worst adj{1e-8};
    Worst unit{1e-8};
    Worst norm{1e-8};
    Worst inverse{1e-12};
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = t < 25 ? 2 : 3;
        const BasisPair bases = random_bases(d, d, rng);
        const OpOnHS b1 = random_superop(d, rng);
        const OpOnHS b2 = random_superop(d, rng);
        const OpOnHS product(d, d, [&](const HSOperator &a) { return b1(b2(a)); });
        mult.add(max_abs_diff(r_of(product, bases), r_of(b1, bases) * r_of(b2, bases)));
        // The HS adjoint of B in the orthonormal matrix-unit basis.
        const OpOnHS b1_star = OpOnHS::from_matrix_units(oracle::adjoint(b1.matrix_units()), d, d);
        adj.add(max_abs_diff(r_of(b1_star, bases), oracle::adjoint(r_of(b1, bases))));
        unit.add(max_abs_diff(r_of(OpOnHS::identity(d, d), bases), ComplexMatrix::identity(d * d)));
        norm.add(std::abs(operator_norm(r_of(b1, bases)) - oracle::operator_norm(b1.matrix_units())));
        inverse.add(max_abs_diff(lower_s(r_of(b1, bases), bases).matrix_units(), b1.matrix_units()));
        const ComplexMatrix c = random_gaussian(d * d, d * d, rng);
        inverse.add(max_abs_diff(r_of(lower_s(c, bases), bases), c));
    }
    return combine({{"multiplicative", &mult}, {"adjoint", &adj}, {"unit", &unit}, {"norm", &norm}, {"S = R^-1", &inverse}});
}

Outcome hs_preservation() {
    Rng rng(107);
    Worst rel{1e-10};
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
        const BasisPair bases = random_bases(d, d, rng);
        const OpOnHS b1 = random_superop(d, rng);
        const OpOnHS b2 = random_superop(d, rng);
        const cplx lhs = oracle::hs(r_of(b1, bases), r_of(b2, bases));
        const cplx rhs = oracle::hs(b1.matrix_units(), b2.matrix_units());
        rel.add(std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)));
    }
    return combine({{"relative deviation", &rel}});
}

Outcome complete_positivity() {
    Rng rng(108);
    const std::size_t d = 2;
    double lowest = std::numeric_limits<double>::infinity();
    int instances = 0;
    for (int t = 0; t < 25; ++t) {
        const BasisPair bases = random_bases(d, d, rng);
        const std::size_t k = 1 + static_cast<std::size_t>(t % 3);
        std::vector<ComplexMatrix> as;
        std::vector<ComplexMatrix> bs;
        for (std::size_t i = 0; i < k; ++i) {
            as.push_back(random_gaussian(d * d, d * d, rng));
            bs.push_back(random_gaussian(d * d, d * d, rng));
        }
        ComplexMatrix total(d * d, d * d);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                const OpOnHS aij = OpOnHS::from_matrix_units(oracle::matmul(oracle::adjoint(as[i]), as[j]), d, d);
                total += oracle::matmul(oracle::matmul(oracle::adjoint(bs[i]), r_of(aij, bases)), bs[j]);
            }
        }
        const ComplexMatrix herm = 0.5 * (total + oracle::adjoint(total));
        const EigResult e = hermitian_eig(herm, {1e-8, 1e-8});
        const double norm = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
        lowest = std::min(lowest, e.values.back() / (1.0 + norm));
        ++instances;
    }
    return {lowest >= -1e-10,
            "min eig/(1+norm) " + num(lowest) + " >= -1e-10 over " + std::to_string(instances) + " families"};
}

Outcome choi_behaviour() {
    Outcome o{true, ""};
    const ComplexMatrix corners{{1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 1}};
    const ComplexMatrix c_id = std::get<ChoiMatrix>(choi_map(OpOnHS::identity(2, 2), Basis::standard(2)).repr).m;
    const bool exact = c_id == corners;
    o.pass = o.pass && exact;
    o.detail += std::string("C(I) corners ") + (exact ? "exact" : "MISMATCH");

    Rng rng(109);
    Worst iso{1e-10};
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
        const Basis basis(random_unitary(d, rng));
        const OpOnHS b1 = random_superop(d, rng);
        const OpOnHS b2 = random_superop(d, rng);
        const cplx lhs = oracle::hs(std::get<ChoiMatrix>(choi_map(b1, basis).repr).m,
                                    std::get<ChoiMatrix>(choi_map(b2, basis).repr).m);
        const cplx rhs = oracle::hs(b1.matrix_units(), b2.matrix_units());
        iso.add(std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)));
    }
    o.pass = o.pass && iso.ok();
    o.detail += "; " + iso.str("HS isometry");

    // B1 = B2 = identity: C(B1 B2) = P while C(B1) C(B2) = P^2 = 2P.
    const ComplexMatrix gap = c_id - oracle::matmul(c_id, c_id);
    const double g = frobenius_norm(gap);
    o.pass = o.pass && g >= 0.1;
    o.detail += "; |C(I I) - C(I)C(I)| = " + num(g) + " >= 0.1";

    const CpReport t = cp_report(choi_map(OpOnHS::transpose_map(2), Basis::standard(2)));
    const double dev = std::abs(t.min_eigenvalue + 1.0);
    o.pass = o.pass && dev <= 1e-10 && !t.completely_positive;
    o.detail += "; transpose min eig " + num(t.min_eigenvalue) + " (|+1| = " + num(dev) + " <= 1e-10)";
    return o;
}

Outcome kraus_dual() {
    Rng rng(110);
    Worst agree{1e-10};
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(t % 4);
        const std::size_t rank = 1 + static_cast<std::size_t>((t / 4) % 4);
        const BasisPair bases = random_bases(d, d, rng);
        const KrausList ms = random_kraus_channel(d, rank, rng);
        const ComplexMatrix via_m = to_r_matrix(kraus_to_r(ms, bases));
        const ComplexMatrix closed = kraus_to_r_closed_form(ms, bases);
        const ComplexMatrix probed = r_of(OpOnHS::from_kraus(ms), bases);
        agree.add(max_abs_diff(via_m, closed));
        agree.add(max_abs_diff(closed, probed));
        agree.add(max_abs_diff(via_m, probed));
    }
    return combine({{"pairwise max deviation", &agree}});
}

Outcome schmidt_suite() {
    Rng rng(111);
    Outcome o{true, ""};
    int product_bad = 0;
    for (int t = 0; t < 25; ++t) {
        const std::size_t d1 = 2 + static_cast<std::size_t>(t % 4);
        const std::size_t d2 = 2 + static_cast<std::size_t>((t / 4) % 4);
        const BipartiteVector v = BipartiteVector::product(random_gaussian(d1, 1, rng), random_gaussian(d2, 1, rng));
        product_bad += schmidt_rank(v) == 1 ? 0 : 1;
    }
    int generic_bad = 0;
    for (int t = 0; t < 25; ++t) {
        generic_bad += schmidt_rank(BipartiteVector(3, 3, random_gaussian(9, 1, rng))) == 3 ? 0 : 1;
    }
    Worst recon{1e-10};
    Worst norms{1e-10};
    for (int t = 0; t < 50; ++t) {
        const std::size_t d1 = 1 + static_cast<std::size_t>(t % 5);
        const std::size_t d2 = 1 + static_cast<std::size_t>((t / 5) % 5);
        const BasisPair bases = random_bases(d1, d2, rng);
        const BipartiteVector alpha(d1, d2, random_gaussian(d1 * d2, 1, rng));
        const SchmidtResult s = schmidt(alpha, bases);
        ComplexMatrix rebuilt(d1 * d2, 1);
        double sum = 0;
        for (std::size_t k = 0; k < s.lambdas.size(); ++k) {
            rebuilt += s.lambdas[k] * oracle::kron(s.left.col(k), s.right.col(k));
            sum += s.lambdas[k] * s.lambdas[k];
        }
        recon.add(max_abs_diff(rebuilt, alpha.vec()));
        norms.add(std::abs(sum - oracle::dot(alpha.vec(), alpha.vec()).real()));
    }
    const double h = 0.7071067811865476;
    const auto bell = schmidt(BipartiteVector(2, 2, ComplexMatrix::column({h, 0, 0, h})), BasisPair::standard(2, 2)).lambdas;
    const double bell_dev = std::max(std::abs(bell[0] - h), std::abs(bell[1] - h));
    o.pass = product_bad == 0 && generic_bad == 0 && recon.ok() && norms.ok() && bell_dev <= 1e-12;
    o.detail = "product rank!=1: " + std::to_string(product_bad) + "/25; generic 3x3 rank!=3: " +
               std::to_string(generic_bad) + "/25; " + recon.str("reconstruction") + "; " + norms.str("sum l^2 - |a|^2") +
               "; Bell " + num(bell_dev) + " <= 1e-12";
    return o;
}

Outcome composition_oracle() {
    Rng rng(112);
    const std::size_t d = 4;
    std::vector<KrausList> chain;
    for (int k = 0; k < 10; ++k) {
        chain.push_back(random_kraus_channel(d, 1 + static_cast<std::size_t>(k % 4), rng));
    }
    ComplexMatrix r = ComplexMatrix::identity(d * d);
    const BasisPair bases = BasisPair::standard(d, d);
    for (const auto &ms : chain) {
        r = to_r_matrix(kraus_to_r(ms, bases)) * r;
    }
    const OpOnHS op = lower_s(r, bases);
    Worst dev{1e-8};
    for (int s = 0; s < 10; ++s) {
        ComplexMatrix rho = random_density(d, rng);
        const ComplexMatrix via_r = op(rho);
        for (const auto &ms : chain) {
            rho = oracle::kraus(ms.ops, rho);
        }
        dev.add(max_abs_diff(via_r, rho));
    }
    const BenchReport b = run_bench({4, 4, 10, 3, 3});
    Worst bench_dev{1e-8};
    bench_dev.add(b.max_deviation / b.result_norm);
    Outcome o = combine({{"chain vs nested", &dev}, {"bench deviation/|result|", &bench_dev}});
    o.pass = o.pass && b.t_rmatrix_ns > 0 && b.t_nested_ns > 0;
    o.detail += "; bench t_rmatrix_ns=" + std::to_string(b.t_rmatrix_ns) + " t_nested_ns=" + std::to_string(b.t_nested_ns);
    return o;
}

Outcome cli_golden() {
    int failed = 0;
    std::string first;
    for (const auto &c : cli_cases::cases()) {
        const std::string problem = cli_cases::check_case(c, HSDUAL_TEST_DATA_DIR, HSDUAL_TEST_GOLDEN_DIR);
        if (!problem.empty()) {
            if (failed == 0) {
                first = std::string(c.name) + ": " + problem;
            }
            ++failed;
        }
    }
    const std::size_t total = cli_cases::cases().size();
    return {failed == 0, std::to_string(total - failed) + "/" + std::to_string(total) + " cases" +
                             (first.empty() ? "" : "; first failure " + first)};
}

}  // namespace
}  // namespace hsdual

int main() {
    using namespace hsdual;
    struct Criterion {
        const char *id;
        const char *title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "vectorization is an isometry", [] { return isometry_and_inverse(false); }},
        {"AC2", "vectorization inverse pair", [] { return isometry_and_inverse(true); }},
        {"AC3", "conjugation laws", conjugation_laws},
        {"AC4", "T equals J and (I (x) A) phi+", t_equals_j},
        {"AC5", "slice identities and slice devectorization", slices},
        {"AC6", "R is a C*-isomorphism with inverse S", c_star_isomorphism},
        {"AC7", "R preserves the HS inner product", hs_preservation},
        {"AC8", "R is completely positive", complete_positivity},
        {"AC9", "Choi matrix behaviour", choi_behaviour},
        {"AC10", "Kraus to R constructions agree", kraus_dual},
        {"AC11", "Schmidt decomposition", schmidt_suite},
        {"AC12", "composition oracle and bench agreement", composition_oracle},
        {"AC13", "CLI golden tests and exit codes", cli_golden},
    };
    std::printf("kernels: %s\n", std::string(kernels::isa_name(kernels::active().isa)).c_str());
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto &c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%-4s %s  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu/%zu criteria passed in %.2f s\n", criteria.size() - failures, criteria.size(), secs);
    return failures == 0 ? 0 : 1;
}
