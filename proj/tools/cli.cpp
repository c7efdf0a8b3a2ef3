// Copyright 2026 The zassucc Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "zassucc/algebra.hpp"
#include "zassucc/circuit.hpp"
#include "zassucc/decomposition.hpp"
#include "zassucc/fock.hpp"
#include "zassucc/linalg.hpp"
#include "zassucc/numeric_format.hpp"
#include "zassucc/params_io.hpp"
#include "zassucc/rng.hpp"
#include "zassucc/star_algebra.hpp"
#include "zassucc/verify.hpp"
#include "zassucc/zassenhaus.hpp"

namespace zassucc::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

constexpr int kFullFockCeiling = 3;
constexpr int kVerifyCeiling = 12;

struct ParamSource {
    int blocks = 0;
    std::string params_file;
    std::optional<std::uint64_t> seed;
    double scale = 0.5;
};

void add_param_source(CLI::App *app, ParamSource &src) {
    app->add_option("--blocks", src.blocks, "Number of 2D blocks (random amplitudes)")->check(CLI::PositiveNumber);
    app->add_option("--params", src.params_file, "Parameter file (JSON)");
    app->add_option("--seed", src.seed, "Seed for random amplitudes (falls back to ZASSUCC_SEED)");
    app->add_option("--scale", src.scale, "Random amplitudes are uniform in [-scale, scale]")
        ->check(CLI::PositiveNumber);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (auto env = seed_from_env()) {
        return *env;
    }
    throw UsageError("random amplitudes need --seed or ZASSUCC_SEED");
}

ClusterParams resolve_params(const ParamSource &src) {
    if (!src.params_file.empty()) {
        if (src.blocks != 0) {
            throw UsageError("give either --params or --blocks, not both");
        }
        return load_params_file(src.params_file);
    }
    if (src.blocks == 0) {
        throw UsageError("need --params or --blocks");
    }
    CounterRng rng(resolve_seed(src.seed));
    return ClusterParams::random(src.blocks, rng, -src.scale, src.scale);
}

OperatorSpace resolve_space(int n, bool restricted) {
    if (restricted) {
        if (n > kVerifyCeiling) {
            throw UsageError("--blocks " + std::to_string(n) + " exceeds the verification ceiling of " +
                             std::to_string(kVerifyCeiling) + " blocks");
        }
        return OperatorSpace::restricted(n);
    }
    if (n > kFullFockCeiling) {
        throw UsageError("--blocks " + std::to_string(n) + " exceeds the full Fock space ceiling of " +
                         std::to_string(kFullFockCeiling) + " blocks; use --restricted");
    }
    return OperatorSpace::full_fock(n);
}

std::string generator_name(const Generator &g) {
    if (g.kind == GeneratorKind::A) {
        return "A" + std::to_string(g.i + 1) + std::to_string(g.j + 1);
    }
    return "B" + std::to_string(g.i + 1);
}

std::string describe(const AlgebraElement &e) {
    std::ostringstream os;
    bool first = true;
    auto term = [&](double c, const std::string &name) {
        if (c == 0.0) {
            return;
        }
        if (!first || c < 0.0) {
            os << (c < 0.0 ? "-" : "+");
        }
        if (std::abs(c) != 1.0) {
            os << format_double(std::abs(c)) << '*';
        }
        os << name;
        first = false;
    };
    const int n = e.n_blocks();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            term(e.a(i, j), generator_name(Generator::a(i, j)));
        }
    }
    for (int k = 0; k < n; ++k) {
        term(e.b(k), generator_name(Generator::b(k)));
    }
    return first ? "0" : os.str();
}

AlgebraElement unit(int n, const Generator &g) {
    return g.kind == GeneratorKind::A ? AlgebraElement::unit_a(n, g.i, g.j) : AlgebraElement::unit_b(n, g.i);
}

std::vector<Generator> all_generators(int n) {
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            gens.push_back(Generator::a(i, j));
        }
    }
    for (int k = 0; k < n; ++k) {
        gens.push_back(Generator::b(k));
    }
    return gens;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write \"" + path + "\"");
    }
    f << content;
    if (!f) {
        throw std::runtime_error("write to \"" + path + "\" failed");
    }
}

std::string nma_json(const NmaReport &r) {
    std::ostringstream os;
    os << "{\"holds\":" << (r.holds ? "true" : "false") << ",\"max_depth_checked\":" << r.max_depth_checked
       << ",\"witness\":";
    if (r.witness) {
        os << "{\"depth\":" << r.witness->depth << ",\"residual\":" << format_double(r.witness->residual) << '}';
    } else {
        os << "null";
    }
    os << ",\"residuals\":[";
    for (std::size_t i = 0; i < r.residuals.size(); ++i) {
        os << (i ? "," : "") << format_double(r.residuals[i]);
    }
    os << "]}";
    return os.str();
}

struct AlgebraCheckArgs {
    int blocks = 0;
    bool restricted = false;
    double tol = 1e-10;
};

int algebra_check(const AlgebraCheckArgs &a, std::ostream &out, std::ostream &err) {
    const OperatorSpace space = resolve_space(a.blocks, a.restricted);
    const int n = a.blocks;
    const auto gens = all_generators(n);
    out << "lhs,rhs,expected,residual,status\n";
    int failures = 0;
    for (std::size_t p = 0; p < gens.size(); ++p) {
        for (std::size_t q = p; q < gens.size(); ++q) {
            const AlgebraElement expected = bracket(unit(n, gens[p]), unit(n, gens[q]));
            const SparseMatrix actual = commutator(space.generator(gens[p]), space.generator(gens[q]));
            const double residual = SparseMatrix(actual - space.embed(expected)).norm();
            const bool ok = residual <= a.tol;
            out << generator_name(gens[p]) << ',' << generator_name(gens[q]) << ',' << describe(expected) << ','
                << format_double(residual) << ',' << (ok ? "ok" : "FAIL") << '\n';
            if (!ok) {
                ++failures;
                err << "structure constant violated: [" << generator_name(gens[p]) << ','
                    << generator_name(gens[q]) << "] != " << describe(expected) << " (residual "
                    << format_double(residual) << ")\n";
            }
        }
    }
    return failures == 0 ? kOk : kVerification;
}

struct NmaArgs {
    ParamSource src;
    std::string t1_file;
    std::string t2_file;
    int depth = 6;
    double tol = 1e-12;
    bool restricted = false;
};

int nma_check(const NmaArgs &a, std::ostream &out, std::ostream &err) {
    NmaReport report;
    if (!a.t1_file.empty() || !a.t2_file.empty()) {
        if (a.t1_file.empty() || a.t2_file.empty()) {
            throw UsageError("--t1-file and --t2-file must be given together");
        }
        if (a.src.blocks != 0 || !a.src.params_file.empty()) {
            throw UsageError("--t1-file/--t2-file cannot be combined with --blocks or --params");
        }
        const T1Input t1 = parse_t1_json(read_text_file(a.t1_file));
        const T2Input t2 = parse_t2_json(read_text_file(a.t2_file));
        const ModesPtr modes = make_modes(ModeIndexing(t1.n_orb, t1.n_occ));
        const FockOperator x = fock::t2prime_general(modes, t2.mu);
        const FockOperator y = fock::t1_general(modes, t1.mu);
        report = check_nma(x, y, a.depth, a.tol);
    } else {
        const ClusterParams params = resolve_params(a.src);
        const OperatorSpace space = resolve_space(params.n_blocks(), a.restricted);
        report = check_nma(space.x(params), space.y(params), a.depth, a.tol);
    }
    out << nma_json(report) << '\n';
    if (!report.holds) {
        err << "no-mixed adjoint property violated at depth " << report.witness->depth << " (residual "
            << format_double(report.witness->residual) << ")\n";
        return kVerification;
    }
    return kOk;
}

struct DecomposeArgs {
    std::string params_file;
    std::string method = "phi";
    std::string circuit_file;
    std::string circuit_json;
    bool sign_flip = false;
    bool prune = false;
    int frozen = 0;
    double tol = 1e-10;
};

int decompose_cmd(const DecomposeArgs &a, std::ostream &out, std::ostream &err) {
    const ClusterParams params = load_params_file(a.params_file);
    const int n = params.n_blocks();
    if (n > kVerifyCeiling) {
        throw UsageError("decompose: " + std::to_string(n) + " blocks exceed the verification ceiling of " +
                         std::to_string(kVerifyCeiling));
    }
    DecompositionPlan plan;
    if (a.method == "closed") {
        try {
            plan = decompose(params, DecomposeMethod::Closed);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    } else if (a.method == "star") {
        const StarDecomposition sd = star_decompose(params);
        if (sd.growth_flagged) {
            err << "star series did not converge (term norms kept growing)\n";
            return kVerification;
        }
        plan = sd.plan;
    } else {
        plan = decompose(params, DecomposeMethod::Phi);
    }
    plan.validate();
    const double residual = plan_residual(plan, params, OperatorSpace::restricted(n));
    out << plan_to_json(plan, residual) << '\n';
    if (!a.circuit_file.empty() || !a.circuit_json.empty()) {
        const BlockRegisterLayout layout(n, a.frozen);
        const CircuitIR circuit = emit(plan, layout, a.prune);
        if (!a.circuit_file.empty()) {
            write_file(a.circuit_file, export_text(circuit, a.sign_flip));
        }
        if (!a.circuit_json.empty()) {
            write_file(a.circuit_json, circuit_to_json(circuit) + "\n");
        }
    }
    if (!(residual <= a.tol)) {
        err << "verification failed: residual " << format_double(residual) << " > tol " << format_double(a.tol)
            << '\n';
        return kVerification;
    }
    return kOk;
}

struct TrotterArgs {
    std::string params_file;
    std::vector<int> k_list;
    std::string out_file;
    bool full_fock = false;
};

int trotter_cmd(const TrotterArgs &a, std::ostream &out) {
    const ClusterParams params = load_params_file(a.params_file);
    if (!a.full_fock && params.n_blocks() > kVerifyCeiling) {
        throw UsageError("trotter-bench: too many blocks for the verification space");
    }
    if (a.full_fock && params.n_blocks() > kFullFockCeiling) {
        throw UsageError("trotter-bench: --full-fock limited to 3 blocks");
    }
    const TrotterReport report = trotter_compare(params, a.k_list, !a.full_fock);
    const std::string csv = trotter_csv(report);
    if (a.out_file.empty()) {
        out << csv;
    } else {
        write_file(a.out_file, csv);
    }
    return kOk;
}

struct ZassenhausArgs {
    ParamSource src;
    int order = 8;
    bool compare = false;
    int quad_order = 32;
    double tol = 1e-12;
    bool restricted = false;
};

int zassenhaus_cmd(const ZassenhausArgs &a, std::ostream &out, std::ostream &err) {
    const ClusterParams params = resolve_params(a.src);
    const AlgebraElement x = cluster_x(params);
    const AlgebraElement y = cluster_y(params);
    const int order = std::max(a.order, 2);
    const auto closed = closed_form(x, y, order);
    int failures = 0;
    if (a.compare) {
        const auto rec = casas_recursion(x, y, order);
        out << "n,recursion_norm,closed_norm,difference\n";
        for (int k = 1; k <= a.order; ++k) {
            const double diff = lie_norm(rec.term(k) - closed.term(k));
            out << k << ',' << format_double(lie_norm(rec.term(k))) << ','
                << format_double(lie_norm(closed.term(k))) << ',' << format_double(diff) << '\n';
            if (!(diff <= a.tol)) {
                ++failures;
                err << "order " << k << ": recursion and closed form differ by " << format_double(diff) << '\n';
            }
        }
    } else {
        out << "n,closed_norm\n";
        for (int k = 1; k <= a.order; ++k) {
            out << k << ',' << format_double(lie_norm(closed.term(k))) << '\n';
        }
    }
    const OperatorSpace space = resolve_space(params.n_blocks(), a.restricted || params.n_blocks() > kFullFockCeiling);
    const DuhamelResult d = duhamel_check(space.x(params), space.y(params), a.quad_order);
    out << "duhamel_residual," << format_double(d.residual) << '\n';
    if (!(d.residual <= a.tol)) {
        ++failures;
        err << "Duhamel identity residual " << format_double(d.residual) << " > tol\n";
    }
    return failures == 0 ? kOk : kVerification;
}

struct DuhamelArgs {
    ParamSource src;
    int quad_order = 32;
    double tol = 1e-12;
    bool restricted = false;
};

int duhamel_cmd(const DuhamelArgs &a, std::ostream &out, std::ostream &err) {
    const ClusterParams params = resolve_params(a.src);
    const OperatorSpace space = resolve_space(params.n_blocks(), a.restricted);
    const DuhamelResult d = duhamel_check(space.x(params), space.y(params), a.quad_order);
    out << "{\"quad_order\":" << a.quad_order << ",\"residual\":" << format_double(d.residual) << "}\n";
    if (!(d.residual <= a.tol)) {
        err << "Duhamel identity residual " << format_double(d.residual) << " > tol\n";
        return kVerification;
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Zassenhaus decomposition of 2D-block pair coupled-cluster generators", "zassucc"};
    app.require_subcommand(1);

    AlgebraCheckArgs alg;
    auto *alg_cmd = app.add_subcommand("algebra-check", "Verify the generator commutation table");
    alg_cmd->add_option("--blocks", alg.blocks, "Number of blocks")->required()->check(CLI::PositiveNumber);
    alg_cmd->add_flag("--restricted", alg.restricted, "Use the 2^N restricted representation");
    alg_cmd->add_option("--tol", alg.tol, "Residual tolerance")->check(CLI::PositiveNumber);

    NmaArgs nma;
    auto *nma_cmd = app.add_subcommand("nma-check", "Check the no-mixed adjoint property");
    add_param_source(nma_cmd, nma.src);
    nma_cmd->add_option("--t1-file", nma.t1_file, "General single broken-pair amplitudes (JSON)");
    nma_cmd->add_option("--t2-file", nma.t2_file, "General double broken-pair amplitudes (JSON)");
    nma_cmd->add_option("--depth", nma.depth, "Number of adjoint orders to check")->check(CLI::PositiveNumber);
    nma_cmd->add_option("--tol", nma.tol, "Relative tolerance")->check(CLI::PositiveNumber);
    nma_cmd->add_flag("--restricted", nma.restricted, "Use the 2^N restricted representation");

    DecomposeArgs dec;
    auto *dec_cmd = app.add_subcommand("decompose", "Finite product decomposition of exp(X+Y)");
    dec_cmd->add_option("--params", dec.params_file, "Parameter file (JSON)")->required();
    dec_cmd->add_option("--method", dec.method, "closed, phi or star")
        ->check(CLI::IsMember({"closed", "phi", "star"}));
    dec_cmd->add_option("--emit-circuit", dec.circuit_file, "Write the Givens circuit as text");
    dec_cmd->add_option("--circuit-json", dec.circuit_json, "Write the Givens circuit as JSON");
    dec_cmd->add_flag("--sign-flip", dec.sign_flip, "Negate the exported gate angles");
    dec_cmd->add_flag("--prune", dec.prune, "Drop zero-angle gates");
    dec_cmd->add_option("--frozen", dec.frozen, "Frozen pair qubits appended to the layout")
        ->check(CLI::NonNegativeNumber);
    dec_cmd->add_option("--tol", dec.tol, "Residual tolerance")->check(CLI::PositiveNumber);

    TrotterArgs trot;
    auto *trot_cmd = app.add_subcommand("trotter-bench", "Trotter error against the exact plan");
    trot_cmd->add_option("--params", trot.params_file, "Parameter file (JSON)")->required();
    trot_cmd->add_option("--k", trot.k_list, "Comma-separated step counts")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    trot_cmd->add_option("--out", trot.out_file, "CSV output path (stdout if omitted)");
    trot_cmd->add_flag("--full-fock", trot.full_fock, "Use the full Fock space (N <= 3)");

    ZassenhausArgs zas;
    auto *zas_cmd = app.add_subcommand("zassenhaus", "Zassenhaus terms by recursion and closed form");
    add_param_source(zas_cmd, zas.src);
    zas_cmd->add_option("--order", zas.order, "Highest order")->check(CLI::PositiveNumber);
    zas_cmd->add_flag("--compare", zas.compare, "Compare recursion with the closed form");
    zas_cmd->add_option("--quad-order", zas.quad_order, "Gauss-Legendre order")->check(CLI::Range(2, 256));
    zas_cmd->add_option("--tol", zas.tol, "Tolerance")->check(CLI::PositiveNumber);
    zas_cmd->add_flag("--restricted", zas.restricted, "Use the 2^N restricted representation");

    DuhamelArgs duh;
    auto *duh_cmd = app.add_subcommand("duhamel-check", "Quadrature against the summed series");
    add_param_source(duh_cmd, duh.src);
    duh_cmd->add_option("--quad-order", duh.quad_order, "Gauss-Legendre order")->check(CLI::Range(2, 256));
    duh_cmd->add_option("--tol", duh.tol, "Tolerance")->check(CLI::PositiveNumber);
    duh_cmd->add_flag("--restricted", duh.restricted, "Use the 2^N restricted representation");

    std::vector<std::string> argv_storage{"zassucc"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_storage) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*alg_cmd) {
            return algebra_check(alg, out, err);
        }
        if (*nma_cmd) {
            return nma_check(nma, out, err);
        }
        if (*dec_cmd) {
            return decompose_cmd(dec, out, err);
        }
        if (*trot_cmd) {
            return trotter_cmd(trot, out);
        }
        if (*zas_cmd) {
            return zassenhaus_cmd(zas, out, err);
        }
        if (*duh_cmd) {
            return duhamel_cmd(duh, out, err);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace zassucc::cli
