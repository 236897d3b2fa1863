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

#include "cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <optional>

#include "hsdual/bench.h"
#include "hsdual/entangle.h"
#include "hsdual/matrix_io.h"
#include "hsdual/selftest.h"
#include "hsdual/superop.h"
#include "hsdual/vectorize.h"

namespace hsdual::cli {

namespace {

constexpr std::size_t kDefaultMaxDim = 64;
constexpr double kBasisUnitarityTol = 1e-8;
constexpr double kVerifyBound = 1e-8;
constexpr int kVerifyStates = 10;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::vector<std::string> inputs;
    std::size_t d1 = 0;
    std::size_t d2 = 0;
    std::string basis_h1;
    std::string basis_h2;
    bool normalize = false;
    bool verify = false;
    bool cp = false;
    bool tp = false;
    int digits = 17;
    std::optional<int> schmidt_digits;
    std::string suite = "all";
    std::uint64_t seed = 0;
    BenchConfig bench;
};

std::size_t max_dim() {
    const char *env = std::getenv("HSDUAL_MAX_DIM");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxDim;
    }
    std::size_t value = 0;
    const char *end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
        throw UsageError(std::string("HSDUAL_MAX_DIM must be a positive integer, got '") + env + "'");
    }
    return value;
}

void check_dim(std::size_t d, const char *what) {
    const std::size_t limit = max_dim();
    if (d > limit) {
        throw DimensionError(std::string(what) + " " + std::to_string(d) + " exceeds the limit of " +
                             std::to_string(limit) + " (set HSDUAL_MAX_DIM to raise it)");
    }
}

Basis load_basis(const std::string &path, std::size_t d, const char *which) {
    if (path.empty()) {
        return Basis::standard(d);
    }
    ComplexMatrix u = read_matrix_file(path);
    if (u.rows() != d || u.cols() != d) {
        throw DimensionError(std::string(which) + " basis is " + u.shape_str() + ", expected " + std::to_string(d) +
                             "x" + std::to_string(d));
    }
    try {
        return Basis(std::move(u), kBasisUnitarityTol);
    } catch (const DimensionError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string(which) + " basis: " + e.what());
    }
}

BasisPair load_bases(const Options &o, std::size_t d1, std::size_t d2) {
    Basis h1 = load_basis(o.basis_h1, d1, "H1");
    Basis h2 = load_basis(o.basis_h2, d2, "H2");
    return {std::move(h1), std::move(h2)};
}

/// A vector file may hold a row or a column.
BipartiteVector load_vector(const Options &o) {
    check_dim(o.d1, "d1");
    check_dim(o.d2, "d2");
    ComplexMatrix v = read_matrix_file(o.input);
    if (v.rows() != 1 && v.cols() != 1) {
        throw DimensionError("expected a vector, got a " + v.shape_str() + " matrix");
    }
    if (v.size() != o.d1 * o.d2) {
        throw DimensionError("vector has length " + std::to_string(v.size()) + ", expected d1*d2 = " +
                             std::to_string(o.d1 * o.d2));
    }
    return BipartiteVector(o.d1, o.d2, ComplexMatrix(v.size(), 1, {v.flat().begin(), v.flat().end()}));
}

KrausList load_channel(const std::string &path) {
    KrausList ms = read_channel_file(path);
    check_dim(ms.dim(), "channel dimension");
    return ms;
}

int cmd_vec(const Options &o, std::ostream &out) {
    const ComplexMatrix a = read_matrix_file(o.input);
    check_dim(a.cols(), "d1");
    check_dim(a.rows(), "d2");
    const BasisPair bases = load_bases(o, a.cols(), a.rows());
    out << format_matrix(vec_j(a, bases).vec(), o.digits);
    return kOk;
}

int cmd_devec(const Options &o, std::ostream &out) {
    const BipartiteVector alpha = load_vector(o);
    const BasisPair bases = load_bases(o, o.d1, o.d2);
    out << format_matrix(devec_jstar(alpha, bases), o.digits);
    return kOk;
}

int cmd_choi(const Options &o, std::ostream &out) {
    const KrausList ms = load_channel(o.input);
    const SuperOp c = choi_map(OpOnHS::from_kraus(ms), Basis::standard(ms.dim()), o.normalize);
    out << format_matrix(std::get<ChoiMatrix>(c.repr).m, o.digits);
    return kOk;
}

int cmd_check(const Options &o, std::ostream &out) {
    const KrausList ms = load_channel(o.input);
    const bool both = !o.cp && !o.tp;
    bool ok = true;
    if (o.cp || both) {
        const CpReport r = cp_report(SuperOp::kraus(ms));
        out << "cp: " << (r.completely_positive ? "PASS" : "FAIL")
            << " (min eigenvalue = " << format_number(r.min_eigenvalue, o.digits) << ")\n";
        ok = ok && r.completely_positive;
    }
    if (o.tp || both) {
        const TpReport r = tp_report(ms);
        out << "tp: " << (r.trace_preserving ? "PASS" : "FAIL") << " (deviation = " << format_number(r.deviation, o.digits)
            << ")\n";
        ok = ok && r.trace_preserving;
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_compose(const Options &o, std::ostream &out, std::ostream &err) {
    if (o.inputs.size() < 2) {
        throw UsageError("compose needs at least two channel files");
    }
    std::vector<KrausList> chain;
    for (const auto &path : o.inputs) {
        chain.push_back(load_channel(path));
    }
    // First file is applied first, so it ends up rightmost.
    SuperOp total = SuperOp::kraus(chain.front());
    for (std::size_t k = 1; k < chain.size(); ++k) {
        total = compose(SuperOp::kraus(chain[k]), total);
    }
    const ComplexMatrix r = to_r_matrix(total);
    out << format_matrix(r, o.digits);
    if (!o.verify) {
        return kOk;
    }
    const std::size_t d = chain.front().dim();
    const OpOnHS op = lower_s(r, BasisPair::standard(d, d));
    Rng rng(o.seed);
    double dev = 0;
    for (int s = 0; s < kVerifyStates; ++s) {
        ComplexMatrix rho = random_density(d, rng);
        const ComplexMatrix via_r = op(rho);
        for (const auto &ms : chain) {
            rho = kraus_apply(ms, rho);
        }
        dev = std::max(dev, max_abs_diff(via_r, rho));
    }
    const bool ok = dev <= kVerifyBound;
    err << "verify: " << (ok ? "PASS" : "FAIL") << " (max deviation = " << format_number(dev, o.digits) << ", states = "
        << kVerifyStates << ", seed = " << o.seed << ")\n";
    return ok ? kOk : kCheckFailed;
}

int cmd_schmidt(const Options &o, std::ostream &out) {
    const BipartiteVector alpha = load_vector(o);
    const int digits = o.schmidt_digits.value_or(12);
    const std::size_t rank = schmidt_rank(alpha);
    const SchmidtResult s = schmidt(alpha, BasisPair::standard(o.d1, o.d2));
    out << "lambdas:";
    for (std::size_t k = 0; k < rank; ++k) {
        out << ' ' << format_number(s.lambdas[k], digits);
    }
    out << "\nrank: " << rank << "\nentangled: " << (rank >= 2 ? "yes" : "no") << "\n";
    return kOk;
}

int cmd_selftest(const Options &o, std::ostream &out) {
    if (!is_selftest_suite(o.suite)) {
        std::string names = "all";
        for (const auto &n : selftest_suites()) {
            names += ", " + n;
        }
        throw UsageError("unknown suite '" + o.suite + "' (expected one of: " + names + ")");
    }
    const auto results = run_selftest(o.suite, o.seed);
    std::size_t passed = 0;
    for (const auto &r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.suite << '/' << r.name << ": observed "
            << format_number(r.observed, o.digits) << (r.lower_bound ? " >= " : " <= ") << format_number(r.bound, o.digits)
            << "\n";
        passed += r.pass ? 1 : 0;
    }
    out << "selftest: " << passed << '/' << results.size() << " passed (suite " << o.suite << ", seed " << o.seed
        << ")\n";
    return passed == results.size() ? kOk : kCheckFailed;
}

int cmd_bench(const Options &o, std::ostream &out) {
    const BenchReport report = run_bench(o.bench, max_dim());
    out << bench_csv_header() << "\n" << bench_csv_row(report, o.digits) << "\n";
    return kOk;
}

void add_digits(CLI::App *sub, Options &o) {
    sub->add_option("--digits", o.digits, "Significant digits for numeric output")->check(CLI::Range(1, 17));
}

void add_bases(CLI::App *sub, Options &o) {
    sub->add_option("--basis-h1", o.basis_h1, "Unitary matrix file whose columns form the H1 basis");
    sub->add_option("--basis-h2", o.basis_h2, "Unitary matrix file whose columns form the H2 basis");
}

void add_factor_dims(CLI::App *sub, Options &o) {
    sub->add_option("--d1", o.d1, "Dimension of H1")->required()->check(CLI::PositiveNumber);
    sub->add_option("--d2", o.d2, "Dimension of H2")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Vectorization, superoperator and Schmidt tools for finite-dimensional operators", "hsdual"};
    app.require_subcommand(1);

    auto *vec = app.add_subcommand("vec", "Vectorize a d2 x d1 operator");
    vec->add_option("file", o.input, "Matrix file")->required();
    add_bases(vec, o);
    add_digits(vec, o);

    auto *devec = app.add_subcommand("devec", "Turn a length d1*d2 vector back into a d2 x d1 operator");
    devec->add_option("file", o.input, "Vector file")->required();
    add_factor_dims(devec, o);
    add_bases(devec, o);
    add_digits(devec, o);

    auto *choi = app.add_subcommand("choi", "Choi matrix of a Kraus channel");
    choi->add_option("file", o.input, "Channel file")->required();
    choi->add_flag("--normalize", o.normalize, "Divide by the dimension");
    add_digits(choi, o);

    auto *check = app.add_subcommand("check", "Check complete positivity and trace preservation");
    check->add_option("file", o.input, "Channel file")->required();
    check->add_flag("--cp", o.cp, "Check complete positivity");
    check->add_flag("--tp", o.tp, "Check trace preservation");
    add_digits(check, o);

    auto *comp = app.add_subcommand("compose", "R-matrix of a chain of channels, first file applied first");
    comp->add_option("files", o.inputs, "Channel files")->required();
    comp->add_flag("--verify", o.verify, "Compare against nested Kraus sums on random states");
    comp->add_option("--seed", o.seed, "Seed for --verify states");
    add_digits(comp, o);

    auto *sch = app.add_subcommand("schmidt", "Schmidt coefficients of a bipartite vector");
    sch->add_option("file", o.input, "Vector file")->required();
    add_factor_dims(sch, o);
    sch->add_option("--digits", o.schmidt_digits, "Significant digits for the coefficients (default 12)")
        ->check(CLI::Range(1, 17));

    auto *self = app.add_subcommand("selftest", "Run the numerical property suites");
    self->add_option("--suite", o.suite, "all, bench-sanity, choi, entangle, superop or vectorize");
    self->add_option("--seed", o.seed, "Random seed");
    add_digits(self, o);

    auto *bench = app.add_subcommand("bench", "Time R-matrix composition against nested Kraus sums");
    bench->add_option("--dim", o.bench.dim, "Hilbert space dimension");
    bench->add_option("--kraus-rank", o.bench.kraus_rank, "Kraus operators per channel");
    bench->add_option("--chain-length", o.bench.chain_length, "Channels in the chain");
    bench->add_option("--trials", o.bench.trials, "Timing repetitions (median reported)");
    bench->add_option("--seed", o.bench.seed, "Random seed");
    add_digits(bench, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "hsdual: " << e.what() << "\n";
        err << "Run 'hsdual --help' for usage.\n";
        return kUsage;
    }

    try {
        if (*vec) return cmd_vec(o, out);
        if (*devec) return cmd_devec(o, out);
        if (*choi) return cmd_choi(o, out);
        if (*check) return cmd_check(o, out);
        if (*comp) return cmd_compose(o, out, err);
        if (*sch) return cmd_schmidt(o, out);
        if (*self) return cmd_selftest(o, out);
        if (*bench) return cmd_bench(o, out);
    } catch (const DimensionError &e) {
        err << "hsdual: dimension error: " << e.what() << "\n";
        return kDimension;
    } catch (const FormatError &e) {
        err << "hsdual: invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError &e) {
        err << "hsdual: " << e.what() << "\n";
        err << "Run 'hsdual --help' for usage.\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        err << "hsdual: invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        err << "hsdual: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace hsdual::cli
