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
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "zassucc/params.hpp"

namespace zassucc::testing {

/// Kronecker product with block 0 as the rightmost factor, so that bit k of a
/// basis label addresses block k.
inline Eigen::MatrixXd kron_blocks(const std::vector<Eigen::MatrixXd> &ops) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        Eigen::MatrixXd next(out.rows() * it->rows(), out.cols() * it->cols());
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(r * it->rows(), c * it->cols(), it->rows(), it->cols()) = out(r, c) * *it;
            }
        }
        out = next;
    }
    return out;
}

/// Single-block operators in the (P, O) basis.
inline Eigen::Matrix2d id2() { return Eigen::Matrix2d::Identity(); }
inline Eigen::Matrix2d raise2() { return (Eigen::Matrix2d() << 0, 0, 1, 0).finished(); } // |O><P|
inline Eigen::Matrix2d lower2() { return raise2().transpose(); }
inline Eigen::Matrix2d z2() { return (Eigen::Matrix2d() << 1, 0, 0, -1).finished(); }

inline Eigen::MatrixXd on_block(int n, int k, const Eigen::MatrixXd &op) {
    std::vector<Eigen::MatrixXd> ops(static_cast<std::size_t>(n), id2());
    ops[static_cast<std::size_t>(k)] = op;
    return kron_blocks(ops);
}

inline Eigen::MatrixXd on_blocks(int n, int i, const Eigen::MatrixXd &oi, int j, const Eigen::MatrixXd &oj) {
    std::vector<Eigen::MatrixXd> ops(static_cast<std::size_t>(n), id2());
    ops[static_cast<std::size_t>(i)] = oi;
    ops[static_cast<std::size_t>(j)] = oj;
    return kron_blocks(ops);
}

inline Eigen::MatrixXd kron_b(int n, int k) { return on_block(n, k, raise2() - lower2()); }

inline Eigen::MatrixXd kron_a(int n, int i, int j) {
    return on_blocks(n, i, raise2(), j, raise2()) - on_blocks(n, i, lower2(), j, lower2());
}

inline Eigen::MatrixXd kron_z(int n, int k) { return on_block(n, k, z2()); }

/// (I - exp(-M)) M^{-1}.
inline Eigen::MatrixXd phi_by_inverse(const Eigen::MatrixXd &m) {
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    const Eigen::MatrixXd e = Eigen::MatrixXd(-m).exp();
    return (id - e) * m.inverse();
}

/// (N+1)-dimensional representation with X = [[M, 0], [0, 0]] and
/// B_k = e_k e_{N+1}^T, in which [X, B_k] = sum_i M_ik B_i and [B_k, B_l] = 0.
struct AffineRep {
    Eigen::MatrixXd x;
    std::vector<Eigen::MatrixXd> b;
};

inline AffineRep affine_rep(const ClusterParams &p) {
    const int n = p.n_blocks();
    AffineRep r;
    r.x = Eigen::MatrixXd::Zero(n + 1, n + 1);
    r.x.topLeftCorner(n, n) = p.coupling();
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXd bk = Eigen::MatrixXd::Zero(n + 1, n + 1);
        bk(k, n) = 1.0;
        r.b.push_back(bk);
    }
    return r;
}

/// gamma_l = sum_{len <= max_len} (-1)^len/(len+1)! sum over explicit vertex
/// paths j0 -> ... -> l of mu_{j0} prod nu.
inline Eigen::VectorXd gamma_by_paths(const ClusterParams &p, int max_len) {
    const int n = p.n_blocks();
    Eigen::VectorXd gamma = Eigen::VectorXd::Zero(n);
    std::function<void(int, int, double)> walk = [&](int vertex, int len, double weight) {
        gamma(vertex) += (len % 2 == 0 ? 1.0 : -1.0) / std::tgamma(len + 2.0) * weight;
        if (len == max_len) {
            return;
        }
        for (int next = 0; next < n; ++next) {
            const double nu = p.coupling()(vertex, next);
            if (next != vertex && nu != 0.0) {
                walk(next, len + 1, weight * nu);
            }
        }
    };
    for (int j0 = 0; j0 < n; ++j0) {
        if (p.single(j0) != 0.0) {
            walk(j0, 0, p.single(j0));
        }
    }
    return gamma;
}

/// All-nonzero singular coupling: every off-diagonal entry 1/8 except
/// M_34 = M_43 = 1/2 (determinant f(f-4) at f = 4, scaled).
inline ClusterParams singular_witness() {
    ClusterParams p(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            p.set_pair(i, j, 0.125);
        }
    }
    p.set_pair(2, 3, 0.5);
    p.set_single(0, 0.3);
    p.set_single(1, -0.2);
    p.set_single(2, 0.1);
    p.set_single(3, 0.25);
    return p;
}

} // namespace zassucc::testing
