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
#include "zassucc/fock.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "zassucc/kernels.hpp"

namespace zassucc {

ModeIndexing::ModeIndexing(int n_orb, int n_occ, std::vector<OrbitalBlock> blocks, int max_modes)
    : n_orb_(n_orb), n_occ_(n_occ), blocks_(std::move(blocks)) {
    if (n_orb < 1) {
        throw std::invalid_argument("ModeIndexing: n_orb must be positive");
    }
    if (n_occ < 1 || n_occ > n_orb) {
        throw std::invalid_argument("ModeIndexing: n_occ must be in [1, n_orb]");
    }
    if (2 * n_orb > max_modes) {
        throw std::length_error("ModeIndexing: " + std::to_string(2 * n_orb) +
                                " spin-orbitals exceed the full Fock-space ceiling of " +
                                std::to_string(max_modes) + "; use the restricted representation");
    }
    if (!blocks_.empty()) {
        if (static_cast<int>(blocks_.size()) != n_occ) {
            throw std::invalid_argument("ModeIndexing: block map needs one entry per occupied pair");
        }
        std::set<int> seen;
        for (const auto &b : blocks_) {
            if (b.occupied < 1 || b.occupied > n_occ) {
                throw std::invalid_argument("ModeIndexing: occupied orbital " +
                                            std::to_string(b.occupied) + " outside [1, n_occ]");
            }
            if (b.virtual_orbital <= n_occ || b.virtual_orbital > n_orb) {
                throw std::invalid_argument("ModeIndexing: virtual orbital " +
                                            std::to_string(b.virtual_orbital) +
                                            " outside [n_occ+1, n_orb]");
            }
            if (!seen.insert(b.occupied).second || !seen.insert(b.virtual_orbital).second) {
                throw std::invalid_argument("ModeIndexing: block orbitals must be distinct");
            }
        }
    }
}

ModeIndexing ModeIndexing::for_blocks(int n_blocks, int max_modes) {
    if (n_blocks < 1) {
        throw std::invalid_argument("ModeIndexing: need at least one block");
    }
    std::vector<OrbitalBlock> blocks;
    for (int i = 1; i <= n_blocks; ++i) {
        blocks.push_back({i, n_blocks + i});
    }
    return ModeIndexing(2 * n_blocks, n_blocks, std::move(blocks), max_modes);
}

const OrbitalBlock &ModeIndexing::block(int i) const {
    if (i < 0 || i >= n_blocks()) {
        throw std::out_of_range("ModeIndexing: block " + std::to_string(i) + " outside [0, " +
                                std::to_string(n_blocks()) + ")");
    }
    return blocks_[static_cast<std::size_t>(i)];
}

int ModeIndexing::mode(int orbital, Spin spin) const {
    if (orbital < 1 || orbital > n_orb_) {
        throw std::out_of_range("ModeIndexing: orbital " + std::to_string(orbital) +
                                " outside [1, " + std::to_string(n_orb_) + "]");
    }
    return 2 * (orbital - 1) + (spin == Spin::Up ? 0 : 1);
}

bool ModeIndexing::same_blocks(const ModeIndexing &o) const {
    if (blocks_.size() != o.blocks_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].occupied != o.blocks_[i].occupied ||
            blocks_[i].virtual_orbital != o.blocks_[i].virtual_orbital) {
            return false;
        }
    }
    return true;
}

ModesPtr make_modes(ModeIndexing modes) { return std::make_shared<const ModeIndexing>(std::move(modes)); }

namespace {

SparseMatrix drop_small(SparseMatrix m, double tol) {
    m.prune([tol](Eigen::Index, Eigen::Index, const cplx &v) { return std::abs(v) > tol; });
    m.makeCompressed();
    return m;
}

} // namespace

FockOperator::FockOperator(ModesPtr modes, SparseMatrix matrix, double drop_tol)
    : modes_(std::move(modes)), matrix_(drop_small(std::move(matrix), drop_tol)) {
    if (!modes_) {
        throw std::invalid_argument("FockOperator: null mode indexing");
    }
    if (matrix_.rows() != modes_->dim() || matrix_.cols() != modes_->dim()) {
        throw std::invalid_argument("FockOperator: matrix shape does not match the Fock space");
    }
}

FockOperator FockOperator::zero(ModesPtr modes) {
    const auto d = modes->dim();
    return FockOperator(std::move(modes), SparseMatrix(d, d));
}

FockOperator FockOperator::identity(ModesPtr modes) {
    const auto d = modes->dim();
    SparseMatrix id(d, d);
    id.setIdentity();
    return FockOperator(std::move(modes), std::move(id));
}

void FockOperator::check_compatible(const FockOperator &o) const {
    if (dim() != o.dim()) {
        throw std::invalid_argument("FockOperator: dimension mismatch (" + std::to_string(dim()) +
                                    " vs " + std::to_string(o.dim()) + ")");
    }
}

FockOperator FockOperator::adjoint() const {
    SparseMatrix adj = matrix_.adjoint();
    return FockOperator(modes_, std::move(adj));
}

FockOperator FockOperator::multiply(const FockOperator &rhs, double drop_tol) const {
    check_compatible(rhs);
    return FockOperator(modes_, kernels::parallel::spgemm(matrix_, rhs.matrix_, drop_tol));
}

Eigen::VectorXcd FockOperator::apply(const Eigen::VectorXcd &v) const {
    if (v.size() != dim()) {
        throw std::invalid_argument("FockOperator::apply: vector length mismatch");
    }
    return matrix_ * v;
}

FockOperator operator+(const FockOperator &a, const FockOperator &b) {
    a.check_compatible(b);
    SparseMatrix s = a.matrix_ + b.matrix_;
    return FockOperator(a.modes_, std::move(s));
}

FockOperator operator-(const FockOperator &a, const FockOperator &b) {
    a.check_compatible(b);
    SparseMatrix s = a.matrix_ - b.matrix_;
    return FockOperator(a.modes_, std::move(s));
}

FockOperator operator*(double s, const FockOperator &a) {
    SparseMatrix m = a.matrix_ * s;
    return FockOperator(a.modes_, std::move(m));
}

FockOperator operator*(cplx s, const FockOperator &a) {
    SparseMatrix m = a.matrix_ * s;
    return FockOperator(a.modes_, std::move(m));
}

FockOperator commutator(const FockOperator &a, const FockOperator &b) { return a * b - b * a; }

FockOperator anticommutator(const FockOperator &a, const FockOperator &b) { return a * b + b * a; }

namespace fock {

FockOperator creation(const ModesPtr &modes, int mode) {
    if (mode < 0 || mode >= modes->n_modes()) {
        throw std::out_of_range("creation: spin-orbital " + std::to_string(mode) + " outside [0, " +
                                std::to_string(modes->n_modes()) + ")");
    }
    return FockOperator(modes, kernels::parallel::creation(mode, modes->n_modes()));
}

FockOperator creation(const ModesPtr &modes, int orbital, Spin spin) {
    return creation(modes, modes->mode(orbital, spin));
}

FockOperator annihilation(const ModesPtr &modes, int mode) { return creation(modes, mode).adjoint(); }

FockOperator annihilation(const ModesPtr &modes, int orbital, Spin spin) {
    return creation(modes, orbital, spin).adjoint();
}

FockOperator number(const ModesPtr &modes, int orbital) {
    return creation(modes, orbital, Spin::Up) * annihilation(modes, orbital, Spin::Up) +
           creation(modes, orbital, Spin::Down) * annihilation(modes, orbital, Spin::Down);
}

FockOperator total_number(const ModesPtr &modes) {
    FockOperator n = FockOperator::zero(modes);
    for (int o = 1; o <= modes->n_orb(); ++o) {
        n = n + number(modes, o);
    }
    return n;
}

FockOperator pair_plus(const ModesPtr &modes, int i, int j) {
    const double norm = 1.0 / std::sqrt(2.0 * (1.0 + (i == j ? 1.0 : 0.0)));
    const auto term = creation(modes, i, Spin::Up) * creation(modes, j, Spin::Down) +
                      creation(modes, j, Spin::Up) * creation(modes, i, Spin::Down);
    return norm * term;
}

FockOperator pair_minus(const ModesPtr &modes, int i, int j) { return pair_plus(modes, i, j).adjoint(); }

FockOperator block_a(const ModesPtr &modes, int i, int j) {
    if (i >= j) {
        throw std::invalid_argument("block_a: needs block i < j");
    }
    const auto &bi = modes->block(i);
    const auto &bj = modes->block(j);
    const auto up = pair_plus(modes, bi.occupied, bi.virtual_orbital) *
                    pair_plus(modes, bj.occupied, bj.virtual_orbital) *
                    pair_minus(modes, bj.occupied, bj.occupied) *
                    pair_minus(modes, bi.occupied, bi.occupied);
    return up - up.adjoint();
}

FockOperator block_b(const ModesPtr &modes, int i) {
    const auto &b = modes->block(i);
    const auto up = pair_plus(modes, b.occupied, b.virtual_orbital) *
                    pair_minus(modes, b.occupied, b.occupied);
    return up - up.adjoint();
}

FockOperator t1_general(const ModesPtr &modes, const std::map<std::pair<int, int>, double> &mu) {
    FockOperator t = FockOperator::zero(modes);
    const int n_occ = modes->n_occ();
    for (const auto &[pq, value] : mu) {
        const auto [p, q] = pq;
        if (p < 1 || p > n_occ || q <= n_occ || q > modes->n_orb()) {
            throw std::invalid_argument("t1_general: amplitude (" + std::to_string(p) + "," +
                                        std::to_string(q) + ") needs p <= n_occ < q <= n_orb");
        }
        if (value == 0.0) {
            continue;
        }
        const auto up = pair_plus(modes, p, q) * pair_minus(modes, p, p);
        t = t + value * (up - up.adjoint());
    }
    return t;
}

FockOperator t2prime_general(const ModesPtr &modes, const std::map<std::array<int, 4>, double> &mu) {
    FockOperator t = FockOperator::zero(modes);
    const int n_occ = modes->n_occ();
    for (const auto &[idx, value] : mu) {
        const auto [p1, p2, q1, q2] = idx;
        const bool ok = p1 >= 1 && p1 < p2 && p2 <= n_occ && q1 > n_occ && q2 > n_occ &&
                        q1 <= modes->n_orb() && q2 <= modes->n_orb() && q1 != q2;
        if (!ok) {
            throw std::invalid_argument("t2prime_general: amplitude (" + std::to_string(p1) + "," +
                                        std::to_string(p2) + "," + std::to_string(q1) + "," +
                                        std::to_string(q2) +
                                        ") needs p1 < p2 <= n_occ < q1 != q2 <= n_orb");
        }
        if (value == 0.0) {
            continue;
        }
        const auto up = pair_plus(modes, p1, q1) * pair_plus(modes, p2, q2) *
                        pair_minus(modes, p2, p2) * pair_minus(modes, p1, p1);
        t = t + value * (up - up.adjoint());
    }
    return t;
}

FockOperator cluster_x(const ModesPtr &modes, const ClusterParams &params) {
    return embed(modes, zassucc::cluster_x(params));
}

FockOperator cluster_y(const ModesPtr &modes, const ClusterParams &params) {
    return embed(modes, zassucc::cluster_y(params));
}

FockOperator embed(const ModesPtr &modes, const AlgebraElement &e) {
    if (e.n_blocks() != modes->n_blocks()) {
        throw std::invalid_argument("embed: algebra element has " + std::to_string(e.n_blocks()) +
                                    " blocks, Fock space has " + std::to_string(modes->n_blocks()));
    }
    FockOperator out = FockOperator::zero(modes);
    const int n = e.n_blocks();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (e.a(i, j) != 0.0) {
                out = out + e.a(i, j) * block_a(modes, i, j);
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        if (e.b(k) != 0.0) {
            out = out + e.b(k) * block_b(modes, k);
        }
    }
    return out;
}

Eigen::VectorXcd vacuum(const ModeIndexing &modes) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(modes.dim());
    v(0) = 1.0;
    return v;
}

Eigen::VectorXcd reference_state(const ModeIndexing &modes) {
    auto ptr = make_modes(modes);
    Eigen::VectorXcd v = vacuum(modes);
    for (int p = modes.n_occ(); p >= 1; --p) {
        v = pair_plus(ptr, p, p).apply(v);
    }
    return v;
}

} // namespace fock

} // namespace zassucc
