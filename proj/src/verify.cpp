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
#include "zassucc/verify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zassucc/linalg.hpp"
#include "zassucc/numeric_format.hpp"
#include "zassucc/zassenhaus.hpp"

namespace zassucc {

namespace {

using RealTriplet = Eigen::Triplet<double>;

SparseMatrix to_complex(const RealSparseMatrix &m) { return m.cast<cplx>(); }

SparseMatrix sparse_identity(Eigen::Index dim) {
    SparseMatrix id(dim, dim);
    id.setIdentity();
    return id;
}

} // namespace

RestrictedRep::RestrictedRep(int n_blocks) : n_(n_blocks) {
    if (n_blocks < 1 || n_blocks > kMaxBlocks) {
        throw std::invalid_argument("RestrictedRep: block count must be in [1, " +
                                    std::to_string(kMaxBlocks) + "]");
    }
}

RealSparseMatrix RestrictedRep::a(int i, int j) const {
    if (i < 0 || j >= n_ || i >= j) {
        throw std::out_of_range("RestrictedRep::a: needs 0 <= i < j < N");
    }
    const Eigen::Index d = dim();
    const Eigen::Index mask = (Eigen::Index{1} << i) | (Eigen::Index{1} << j);
    std::vector<RealTriplet> t;
    t.reserve(static_cast<std::size_t>(d / 2));
    for (Eigen::Index s = 0; s < d; ++s) {
        if ((s & mask) == 0) {
            t.emplace_back(s | mask, s, 1.0);
            t.emplace_back(s, s | mask, -1.0);
        }
    }
    RealSparseMatrix m(d, d);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

RealSparseMatrix RestrictedRep::b(int k) const {
    if (k < 0 || k >= n_) {
        throw std::out_of_range("RestrictedRep::b: block index out of range");
    }
    const Eigen::Index d = dim();
    const Eigen::Index bit = Eigen::Index{1} << k;
    std::vector<RealTriplet> t;
    t.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index s = 0; s < d; ++s) {
        if ((s & bit) == 0) {
            t.emplace_back(s | bit, s, 1.0);
            t.emplace_back(s, s | bit, -1.0);
        }
    }
    RealSparseMatrix m(d, d);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

RealSparseMatrix RestrictedRep::embed(const AlgebraElement &e) const {
    if (e.n_blocks() != n_) {
        throw std::invalid_argument("RestrictedRep::embed: block count mismatch");
    }
    const Eigen::Index d = dim();
    std::vector<RealTriplet> t;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            const double c = e.a(i, j);
            if (c == 0.0) {
                continue;
            }
            const Eigen::Index mask = (Eigen::Index{1} << i) | (Eigen::Index{1} << j);
            for (Eigen::Index s = 0; s < d; ++s) {
                if ((s & mask) == 0) {
                    t.emplace_back(s | mask, s, c);
                    t.emplace_back(s, s | mask, -c);
                }
            }
        }
    }
    for (int k = 0; k < n_; ++k) {
        const double c = e.b(k);
        if (c == 0.0) {
            continue;
        }
        const Eigen::Index bit = Eigen::Index{1} << k;
        for (Eigen::Index s = 0; s < d; ++s) {
            if ((s & bit) == 0) {
                t.emplace_back(s | bit, s, c);
                t.emplace_back(s, s | bit, -c);
            }
        }
    }
    RealSparseMatrix m(d, d);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

RealSparseMatrix RestrictedRep::x(const ClusterParams &params) const { return embed(cluster_x(params)); }

RealSparseMatrix RestrictedRep::y(const ClusterParams &params) const { return embed(cluster_y(params)); }

SparseMatrix RestrictedRep::intertwiner(const ModesPtr &modes) {
    const int n = modes->n_blocks();
    if (n < 1) {
        throw std::invalid_argument("RestrictedRep::intertwiner: modes carry no blocks");
    }
    const Eigen::Index labels = Eigen::Index{1} << n;
    std::vector<FockOperator> closed;
    std::vector<FockOperator> open;
    for (int k = 0; k < n; ++k) {
        const auto &b = modes->block(k);
        closed.push_back(fock::pair_plus(modes, b.occupied, b.occupied));
        open.push_back(fock::pair_plus(modes, b.occupied, b.virtual_orbital));
    }
    const Eigen::VectorXcd vac = fock::vacuum(*modes);
    std::vector<Eigen::Triplet<cplx>> t;
    for (Eigen::Index s = 0; s < labels; ++s) {
        Eigen::VectorXcd v = vac;
        for (int k = n - 1; k >= 0; --k) {
            v = ((s >> k) & 1) ? open[static_cast<std::size_t>(k)].apply(v)
                               : closed[static_cast<std::size_t>(k)].apply(v);
        }
        for (Eigen::Index r = 0; r < v.size(); ++r) {
            if (v(r) != cplx(0.0)) {
                t.emplace_back(r, s, v(r));
            }
        }
    }
    SparseMatrix m(modes->dim(), labels);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

OperatorSpace::OperatorSpace(int n, ModesPtr modes) : n_(n), modes_(std::move(modes)) {
    if (!modes_) {
        return;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            full_a_.push_back(fock::block_a(modes_, i, j).matrix());
        }
    }
    for (int k = 0; k < n; ++k) {
        full_b_.push_back(fock::block_b(modes_, k).matrix());
    }
}

OperatorSpace OperatorSpace::full_fock(int n_blocks) {
    return OperatorSpace(n_blocks, make_modes(ModeIndexing::for_blocks(n_blocks)));
}

OperatorSpace OperatorSpace::restricted(int n_blocks) {
    (void)RestrictedRep(n_blocks);
    return OperatorSpace(n_blocks, nullptr);
}

OperatorSpace OperatorSpace::automatic(int n_blocks) {
    return n_blocks <= 3 ? full_fock(n_blocks) : restricted(n_blocks);
}

Eigen::Index OperatorSpace::dim() const {
    return modes_ ? modes_->dim() : RestrictedRep(n_).dim();
}

SparseMatrix OperatorSpace::generator(const Generator &g) const {
    if (g.kind == GeneratorKind::A) {
        if (g.i < 0 || g.j >= n_ || g.i >= g.j) {
            throw std::out_of_range("OperatorSpace: A indices must satisfy 0 <= i < j < N");
        }
        if (modes_) {
            const auto idx = static_cast<std::size_t>(g.i * (2 * n_ - g.i - 1) / 2 + (g.j - g.i - 1));
            return full_a_[idx];
        }
        return to_complex(RestrictedRep(n_).a(g.i, g.j));
    }
    if (g.i < 0 || g.i >= n_) {
        throw std::out_of_range("OperatorSpace: B index out of range");
    }
    return modes_ ? full_b_[static_cast<std::size_t>(g.i)] : to_complex(RestrictedRep(n_).b(g.i));
}

SparseMatrix OperatorSpace::embed(const AlgebraElement &e) const {
    if (e.n_blocks() != n_) {
        throw std::invalid_argument("OperatorSpace::embed: block count mismatch");
    }
    if (!modes_) {
        return to_complex(RestrictedRep(n_).embed(e));
    }
    SparseMatrix out(dim(), dim());
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j, ++idx) {
            if (e.a(i, j) != 0.0) {
                out += cplx(e.a(i, j)) * full_a_[idx];
            }
        }
    }
    for (int k = 0; k < n_; ++k) {
        if (e.b(k) != 0.0) {
            out += cplx(e.b(k)) * full_b_[static_cast<std::size_t>(k)];
        }
    }
    out.prune(cplx(0.0), 0.0);
    return out;
}

SparseMatrix OperatorSpace::x(const ClusterParams &params) const { return embed(cluster_x(params)); }

SparseMatrix OperatorSpace::y(const ClusterParams &params) const { return embed(cluster_y(params)); }

Eigen::VectorXcd OperatorSpace::reference() const {
    if (modes_) {
        return fock::reference_state(*modes_);
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim());
    v(0) = 1.0;
    return v;
}

SparseMatrix plan_unitary(const DecompositionPlan &plan, const OperatorSpace &space) {
    if (plan.n_blocks != space.n_blocks()) {
        throw std::invalid_argument("plan_unitary: plan and space block counts differ");
    }
    SparseMatrix u = sparse_identity(space.dim());
    for (const auto &f : plan.factors) {
        const SparseMatrix g = cplx(f.angle) * space.generator(f.generator);
        u = SparseMatrix(u * expm_sparse(g));
    }
    return u;
}

double plan_residual(const DecompositionPlan &plan, const ClusterParams &params,
                     const OperatorSpace &space) {
    const SparseMatrix exact = expm_sparse(SparseMatrix(space.x(params) + space.y(params)));
    return SparseMatrix(plan_unitary(plan, space) - exact).norm();
}

double single_step_error(const ClusterParams &params, const Eigen::VectorXd &gamma,
                         const OperatorSpace &space) {
    const int n = params.n_blocks();
    if (gamma.size() != n) {
        throw std::invalid_argument("single_step_error: one angle per block required");
    }
    AlgebraElement yp(n);
    for (int k = 0; k < n; ++k) {
        yp.b(k) = gamma(k);
    }
    const SparseMatrix x = space.x(params);
    const SparseMatrix exact = expm_sparse(SparseMatrix(x + space.y(params)));
    const SparseMatrix prod = expm_sparse(x) * expm_sparse(space.embed(yp));
    return SparseMatrix(prod - exact).norm();
}

double bch_side_check(const ClusterParams &params, const OperatorSpace &space) {
    const auto summed = sum_closed_form(cluster_x(params), cluster_y(params));
    const AlgebraElement &yp = summed.value;
    Eigen::VectorXd gamma(params.n_blocks());
    for (int k = 0; k < params.n_blocks(); ++k) {
        gamma(k) = yp.b(k);
    }
    return single_step_error(params, gamma, space);
}

namespace {

SparseMatrix sparse_power(SparseMatrix base, int k) {
    SparseMatrix result = sparse_identity(base.rows());
    while (k > 0) {
        if (k & 1) {
            result = SparseMatrix(result * base);
        }
        k >>= 1;
        if (k > 0) {
            base = SparseMatrix(base * base);
        }
    }
    return result;
}

} // namespace

TrotterReport trotter_compare(const ClusterParams &params, const std::vector<int> &k_list,
                              bool use_restricted) {
    if (k_list.empty()) {
        throw std::invalid_argument("trotter_compare: empty k list");
    }
    for (int k : k_list) {
        if (k < 1) {
            throw std::invalid_argument("trotter_compare: every k must be >= 1");
        }
    }
    const int n = params.n_blocks();
    if (!use_restricted && n > 3) {
        throw std::invalid_argument("trotter_compare: full Fock space limited to 3 blocks");
    }
    const OperatorSpace space = use_restricted ? OperatorSpace::restricted(n) : OperatorSpace::full_fock(n);
    const SparseMatrix x = space.x(params);
    const SparseMatrix y = space.y(params);
    const SparseMatrix exact = expm_sparse(SparseMatrix(x + y));

    TrotterReport report;
    const DecompositionPlan plan = decompose(params);
    report.rows.push_back({0, SparseMatrix(plan_unitary(plan, space) - exact).norm(),
                           static_cast<int>(plan.factors.size())});
    for (int k : k_list) {
        const double inv = 1.0 / k;
        const SparseMatrix step = expm_sparse(SparseMatrix(cplx(inv) * x)) * expm_sparse(SparseMatrix(cplx(inv) * y));
        const SparseMatrix prod = sparse_power(step, k);
        report.rows.push_back({k, SparseMatrix(prod - exact).norm(), 2 * k});
    }
    return report;
}

std::string trotter_csv(const TrotterReport &report) {
    std::ostringstream os;
    os << "# k=0 denotes exact plan\n";
    os << "k,error,factor_count\n";
    for (const auto &r : report.rows) {
        os << r.k << ',' << format_double(r.error) << ',' << r.factor_count << '\n';
    }
    return os.str();
}

double state_fidelity_check(const ClusterParams &params, const OperatorSpace &space,
                            std::optional<DecompositionPlan> plan) {
    const DecompositionPlan p = plan ? *plan : decompose(params);
    if (p.n_blocks != space.n_blocks()) {
        throw std::invalid_argument("state_fidelity_check: plan and space block counts differ");
    }
    const Eigen::VectorXcd phi0 = space.reference();
    Eigen::VectorXcd planned = phi0;
    for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it) {
        const SparseMatrix g = cplx(it->angle) * space.generator(it->generator);
        planned = expm_sparse(g) * planned;
    }
    const Eigen::VectorXcd exact =
        expm_sparse(SparseMatrix(space.x(params) + space.y(params))) * phi0;
    return std::abs(planned.dot(exact));
}

double unitarity_defect(const SparseMatrix &u) {
    SparseMatrix d = SparseMatrix(u.adjoint() * u) - sparse_identity(u.rows());
    return d.norm();
}

} // namespace zassucc
