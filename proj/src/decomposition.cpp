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
#include "zassucc/decomposition.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "zassucc/numeric_format.hpp"
#include "zassucc/star_algebra.hpp"

namespace zassucc {

TransferMatrix::TransferMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
        throw std::invalid_argument("TransferMatrix: matrix must be square and non-empty");
    }
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
        if (m_(i, i) != 0.0) {
            throw std::invalid_argument("TransferMatrix: diagonal must vanish");
        }
        for (Eigen::Index j = i + 1; j < m_.cols(); ++j) {
            if (m_(i, j) != m_(j, i)) {
                throw std::invalid_argument("TransferMatrix: matrix must be symmetric");
            }
        }
    }
    if (!m_.allFinite()) {
        throw std::invalid_argument("TransferMatrix: non-finite entry");
    }
}

TransferMatrix TransferMatrix::from_params(const ClusterParams &params) {
    return TransferMatrix(params.coupling());
}

Eigen::MatrixXd phi_of_m(const TransferMatrix &tm) {
    const Eigen::MatrixXd &m = tm.matrix();
    const Eigen::Index n = m.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
    int s = 0;
    if (norm > 0.5) {
        s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Eigen::MatrixXd w = -m / std::ldexp(1.0, s);

    // Taylor sums of exp(W) and phi1(W) = sum W^k/(k+1)!.
    Eigen::MatrixXd e = id;
    Eigen::MatrixXd f = id;
    Eigen::MatrixXd power = id;
    double inv_fact = 1.0; // 1/k!
    for (int k = 1; k <= 30; ++k) {
        power = power * w;
        inv_fact /= k;
        const double next = inv_fact / (k + 1);
        e += inv_fact * power;
        f += next * power;
        if (inv_fact * std::pow(0.5, k) < 1e-18) {
            break;
        }
    }
    for (int i = 0; i < s; ++i) {
        f = 0.5 * f * (e + id);
        e = e * e;
    }
    return f;
}

std::string_view to_string(PlanProvenance p) {
    switch (p) {
    case PlanProvenance::N2ClosedForm:
        return "n2_closed_form";
    case PlanProvenance::PhiMatrix:
        return "phi_matrix";
    case PlanProvenance::StarAlgebra:
        return "star_algebra";
    }
    return "unknown";
}

int DecompositionPlan::count(GeneratorKind kind) const {
    int c = 0;
    for (const auto &f : factors) {
        if (f.generator.kind == kind) {
            ++c;
        }
    }
    return c;
}

double DecompositionPlan::b_angle(int k) const {
    for (const auto &f : factors) {
        if (f.generator.kind == GeneratorKind::B && f.generator.i == k) {
            return f.angle;
        }
    }
    throw std::out_of_range("DecompositionPlan: no B factor for block " + std::to_string(k));
}

void DecompositionPlan::validate() const {
    const int n = n_blocks;
    bool seen_b = false;
    for (const auto &f : factors) {
        const auto &g = f.generator;
        if (g.kind == GeneratorKind::B) {
            seen_b = true;
            if (g.i < 0 || g.i >= n) {
                throw std::logic_error("DecompositionPlan: B index out of range");
            }
        } else {
            if (seen_b) {
                throw std::logic_error("DecompositionPlan: A factor after a B factor");
            }
            if (g.i < 0 || g.j >= n || g.i >= g.j) {
                throw std::logic_error("DecompositionPlan: A indices must satisfy 0 <= i < j < N");
            }
        }
    }
    if (count(GeneratorKind::A) > n * (n - 1) / 2 || count(GeneratorKind::B) > n) {
        throw std::logic_error("DecompositionPlan: too many factors");
    }
}

namespace {

double sinhc(double x) { return x == 0.0 ? 1.0 : std::sinh(x) / x; }

double coshm1_over_x(double x) {
    if (x == 0.0) {
        return 0.0;
    }
    const double s = std::sinh(0.5 * x);
    return 2.0 * s * s / x;
}

DecompositionPlan plan_from_gamma(const ClusterParams &params, const Eigen::VectorXd &gamma,
                                  PlanProvenance provenance) {
    DecompositionPlan plan;
    plan.n_blocks = params.n_blocks();
    plan.provenance = provenance;
    for (const auto &[i, j] : params.nonzero_pairs()) {
        plan.factors.push_back({Generator::a(i, j), params.pair(i, j)});
    }
    for (int k = 0; k < params.n_blocks(); ++k) {
        plan.factors.push_back({Generator::b(k), gamma(k)});
    }
    return plan;
}

} // namespace

std::pair<double, double> two_block_angles(double mu12, double mu1, double mu2) {
    const double sc = sinhc(mu12);
    const double cc = coshm1_over_x(mu12);
    return {sc * mu1 - cc * mu2, sc * mu2 - cc * mu1};
}

Eigen::VectorXd gamma_angles(const ClusterParams &params) {
    const Eigen::MatrixXd phi = phi_of_m(TransferMatrix::from_params(params));
    return phi.transpose() * params.singles();
}

DecompositionPlan decompose(const ClusterParams &params, DecomposeMethod method) {
    switch (method) {
    case DecomposeMethod::Closed: {
        const int n = params.n_blocks();
        for (const auto &[i, j] : params.nonzero_pairs()) {
            if (i != 0 || j != 1) {
                throw std::invalid_argument(
                    "decompose: closed form needs mu_ij = 0 outside the (1,2) pair");
            }
        }
        Eigen::VectorXd gamma = params.singles();
        if (n >= 2) {
            const auto [beta, gam] = two_block_angles(params.pair(0, 1), params.single(0), params.single(1));
            gamma(0) = beta;
            gamma(1) = gam;
        }
        return plan_from_gamma(params, gamma, PlanProvenance::N2ClosedForm);
    }
    case DecomposeMethod::Phi:
        return plan_from_gamma(params, gamma_angles(params), PlanProvenance::PhiMatrix);
    case DecomposeMethod::Star:
        return star_decompose(params).plan;
    }
    throw std::invalid_argument("decompose: unknown method");
}

ReparamResult reparametrize(const ClusterParams &params) {
    ReparamResult r;
    r.gamma = gamma_angles(params);
    if (params.n_blocks() == 2) {
        r.alpha_beta_gamma = Eigen::Vector3d(params.pair(0, 1), r.gamma(0), r.gamma(1));
    }
    return r;
}

Eigen::VectorXd flatten(const ClusterParams &params) {
    const int n = params.n_blocks();
    Eigen::VectorXd v(n * (n - 1) / 2 + n);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            v(idx++) = params.pair(i, j);
        }
    }
    for (int k = 0; k < n; ++k) {
        v(idx++) = params.single(k);
    }
    return v;
}

ClusterParams unflatten(const Eigen::VectorXd &v, int n_blocks) {
    ClusterParams p(n_blocks);
    const int n = n_blocks;
    if (v.size() != n * (n - 1) / 2 + n) {
        throw std::invalid_argument("unflatten: vector length does not match block count");
    }
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            p.set_pair(i, j, v(idx++));
        }
    }
    for (int k = 0; k < n; ++k) {
        p.set_single(k, v(idx++));
    }
    return p;
}

namespace {

Eigen::VectorXd reparam_map(const Eigen::VectorXd &v, int n) {
    const ClusterParams p = unflatten(v, n);
    Eigen::VectorXd out = v;
    out.tail(n) = gamma_angles(p);
    return out;
}

} // namespace

ReparamJacobian reparam_jacobian(const ClusterParams &params, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("reparam_jacobian: step must be positive");
    }
    const int n = params.n_blocks();
    const Eigen::VectorXd v0 = flatten(params);
    const Eigen::Index dim = v0.size();
    ReparamJacobian r;
    r.jacobian.resize(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        Eigen::VectorXd vp = v0;
        Eigen::VectorXd vm = v0;
        vp(c) += step;
        vm(c) -= step;
        r.jacobian.col(c) = (reparam_map(vp, n) - reparam_map(vm, n)) / (2.0 * step);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(r.jacobian);
    const auto &sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    r.condition_number = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
    r.ill_conditioned = !(r.condition_number <= 1e8);
    return r;
}

Eigen::MatrixXd find_singular_coupling(int n_blocks, CounterRng &rng) {
    if (n_blocks < 4) {
        throw std::invalid_argument(
            "find_singular_coupling: all-nonzero singular couplings need at least 4 blocks");
    }
    const int n = n_blocks;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double mag = rng.uniform(0.1, 0.5);
                const double v = rng.uniform() < 0.5 ? -mag : mag;
                m(i, j) = v;
                m(j, i) = v;
            }
        }
        auto det_at = [&](double f) {
            m(n - 2, n - 1) = f;
            m(n - 1, n - 2) = f;
            return m.determinant();
        };
        // det is quadratic in the last coupling.
        const double d0 = det_at(0.0);
        const double dp = det_at(1.0);
        const double dm = det_at(-1.0);
        const double c2 = 0.5 * (dp + dm) - d0;
        const double c1 = 0.5 * (dp - dm);
        const double c0 = d0;
        const double disc = c1 * c1 - 4.0 * c2 * c0;
        if (c2 == 0.0 || disc < 0.0) {
            continue;
        }
        const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
        for (double root : {q / c2, q != 0.0 ? c0 / q : 0.0}) {
            if (std::abs(root) < 0.05 || std::abs(root) > 2.0) {
                continue;
            }
            det_at(root);
            const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
            const auto &sv = svd.singularValues();
            if (sv(sv.size() - 1) <= 1e-13 * sv(0)) {
                return m;
            }
        }
    }
    throw std::runtime_error("find_singular_coupling: no witness found");
}

std::string plan_to_json(const DecompositionPlan &plan, std::optional<double> residual) {
    std::ostringstream os;
    os << "{\"provenance\":\"" << to_string(plan.provenance) << "\",\"factors\":[";
    bool first = true;
    for (const auto &f : plan.factors) {
        if (!first) {
            os << ',';
        }
        first = false;
        if (f.generator.kind == GeneratorKind::A) {
            os << "{\"gen\":\"A\",\"i\":" << f.generator.i + 1 << ",\"j\":" << f.generator.j + 1;
        } else {
            os << "{\"gen\":\"B\",\"k\":" << f.generator.i + 1;
        }
        os << ",\"angle\":" << format_double(f.angle) << '}';
    }
    os << ']';
    if (residual) {
        os << ",\"residual\":" << format_double(*residual);
    }
    os << '}';
    return os.str();
}

} // namespace zassucc
