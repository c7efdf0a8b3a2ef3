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
#include "zassucc/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace zassucc {

namespace {

template <typename M> void require_finite_square(const M &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("expm: matrix must be square");
    }
    if (!a.allFinite()) {
        throw std::domain_error("expm: matrix has non-finite entries");
    }
}

struct UnionFind {
    explicit UnionFind(Eigen::Index n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), Eigen::Index{0});
    }
    Eigen::Index find(Eigen::Index x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto &p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    void unite(Eigen::Index a, Eigen::Index b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<Eigen::Index> parent;
};

} // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd &a) {
    require_finite_square(a);
    if (a.size() == 0) {
        return a;
    }
    return a.exp();
}

Eigen::MatrixXd expm(const Eigen::MatrixXd &a) {
    require_finite_square(a);
    if (a.size() == 0) {
        return a;
    }
    return a.exp();
}

double expm_inverse_defect(const Eigen::MatrixXcd &a) {
    const Eigen::MatrixXcd prod = expm(a) * expm(Eigen::MatrixXcd(-a));
    return (prod - Eigen::MatrixXcd::Identity(a.rows(), a.cols())).norm();
}

InvariantBlocks::InvariantBlocks(std::span<const SparseMatrix> generators) { build(generators); }

InvariantBlocks::InvariantBlocks(std::initializer_list<SparseMatrix> generators) {
    build(std::span<const SparseMatrix>(generators.begin(), generators.size()));
}

void InvariantBlocks::build(std::span<const SparseMatrix> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("InvariantBlocks: need at least one matrix");
    }
    dim_ = generators.front().rows();
    UnionFind uf(dim_);
    for (const auto &g : generators) {
        if (g.rows() != dim_ || g.cols() != dim_) {
            throw std::invalid_argument("InvariantBlocks: matrices must share one square shape");
        }
        for (Eigen::Index r = 0; r < g.outerSize(); ++r) {
            for (SparseMatrix::InnerIterator it(g, r); it; ++it) {
                uf.unite(it.row(), it.col());
            }
        }
    }
    std::vector<Eigen::Index> slot(static_cast<std::size_t>(dim_), -1);
    for (Eigen::Index i = 0; i < dim_; ++i) {
        const auto root = uf.find(i);
        auto &s = slot[static_cast<std::size_t>(root)];
        if (s < 0) {
            s = static_cast<Eigen::Index>(blocks_.size());
            blocks_.emplace_back();
        }
        blocks_[static_cast<std::size_t>(s)].push_back(i);
    }
}

std::size_t InvariantBlocks::largest_block() const noexcept {
    std::size_t m = 0;
    for (const auto &b : blocks_) {
        m = std::max(m, b.size());
    }
    return m;
}

Eigen::MatrixXcd InvariantBlocks::extract(const SparseMatrix &m, std::size_t block) const {
    const auto &idx = blocks_.at(block);
    const auto n = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (SparseMatrix::InnerIterator it(m, idx[static_cast<std::size_t>(r)]); it; ++it) {
            const auto pos = std::lower_bound(idx.begin(), idx.end(), it.col());
            if (pos == idx.end() || *pos != it.col()) {
                throw std::logic_error("InvariantBlocks::extract: matrix leaks out of the block");
            }
            d(r, pos - idx.begin()) = it.value();
        }
    }
    return d;
}

void InvariantBlocks::scatter(const Eigen::MatrixXcd &dense, std::size_t block,
                              std::vector<Eigen::Triplet<cplx>> &out) const {
    const auto &idx = blocks_.at(block);
    for (Eigen::Index r = 0; r < dense.rows(); ++r) {
        for (Eigen::Index c = 0; c < dense.cols(); ++c) {
            if (dense(r, c) != cplx(0.0, 0.0)) {
                out.emplace_back(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)],
                                 dense(r, c));
            }
        }
    }
}

SparseMatrix expm_sparse(const SparseMatrix &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("expm_sparse: matrix must be square");
    }
    const InvariantBlocks blocks{a};
    std::vector<Eigen::Triplet<cplx>> t;
    t.reserve(static_cast<std::size_t>(a.rows()));
    for (std::size_t b = 0; b < blocks.blocks().size(); ++b) {
        blocks.scatter(expm(blocks.extract(a, b)), b, t);
    }
    SparseMatrix out(a.rows(), a.cols());
    out.setFromTriplets(t.begin(), t.end());
    out.makeCompressed();
    return out;
}

Quadrature gauss_legendre(int order) {
    if (order < 2) {
        throw std::invalid_argument("gauss_legendre: order must be >= 2");
    }
    // Symmetric Jacobi matrix of the Legendre recurrence on [-1, 1].
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    Quadrature q;
    q.nodes.resize(static_cast<std::size_t>(order));
    q.weights.resize(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        const double x = es.eigenvalues()(k);
        const double v0 = es.eigenvectors()(0, k);
        q.nodes[static_cast<std::size_t>(k)] = 0.5 * (x + 1.0);
        q.weights[static_cast<std::size_t>(k)] = v0 * v0; // 2 v0^2 on [-1,1], halved on [0,1]
    }
    return q;
}

} // namespace zassucc
