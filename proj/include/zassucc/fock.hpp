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

#include <array>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "zassucc/algebra.hpp"
#include "zassucc/params.hpp"
#include "zassucc/types.hpp"

namespace zassucc {

enum class Spin { Up, Down };

/// A 2D-block: occupied orbital p paired with its virtual orbital q (1-based).
struct OrbitalBlock {
    int occupied = 0;
    int virtual_orbital = 0;
};

/// Orbital bookkeeping for a fermionic Fock space of 2 * n_orb spin-orbitals.
///
/// Spin-orbitals are ordered orbital-major with spin up first, so orbital o
/// (1-based) maps to modes 2(o-1) and 2(o-1)+1. Jordan-Wigner signs follow this
/// total order.
class ModeIndexing {
  public:
    static constexpr int kDefaultMaxModes = 14;

    /// `blocks` may be empty; otherwise it needs exactly n_occ entries with
    /// distinct p in [1, n_occ] and q in [n_occ+1, n_orb].
    ModeIndexing(int n_orb, int n_occ, std::vector<OrbitalBlock> blocks = {},
                 int max_modes = kDefaultMaxModes);

    /// n blocks on 2n orbitals: p_i = i, q_i = n + i.
    static ModeIndexing for_blocks(int n_blocks, int max_modes = kDefaultMaxModes);

    int n_orb() const noexcept { return n_orb_; }
    int n_occ() const noexcept { return n_occ_; }
    int n_modes() const noexcept { return 2 * n_orb_; }
    int n_blocks() const noexcept { return static_cast<int>(blocks_.size()); }
    Eigen::Index dim() const noexcept { return Eigen::Index{1} << n_modes(); }
    const std::vector<OrbitalBlock> &blocks() const noexcept { return blocks_; }
    const OrbitalBlock &block(int i) const;

    /// 0-based spin-orbital index of (orbital, spin); orbital is 1-based.
    int mode(int orbital, Spin spin) const;

    friend bool operator==(const ModeIndexing &a, const ModeIndexing &b) {
        return a.n_orb_ == b.n_orb_ && a.n_occ_ == b.n_occ_ && a.same_blocks(b);
    }

  private:
    bool same_blocks(const ModeIndexing &o) const;

    int n_orb_;
    int n_occ_;
    std::vector<OrbitalBlock> blocks_;
};

using ModesPtr = std::shared_ptr<const ModeIndexing>;

ModesPtr make_modes(ModeIndexing modes);

/// Sparse operator on the full Fock space. Immutable after construction.
class FockOperator {
  public:
    /// Entries with |v| <= drop_tol are removed (0 keeps everything non-zero).
    FockOperator(ModesPtr modes, SparseMatrix matrix, double drop_tol = 0.0);

    static FockOperator zero(ModesPtr modes);
    static FockOperator identity(ModesPtr modes);

    const SparseMatrix &matrix() const noexcept { return matrix_; }
    const ModesPtr &modes() const noexcept { return modes_; }
    Eigen::Index dim() const noexcept { return matrix_.rows(); }
    Eigen::Index nnz() const noexcept { return matrix_.nonZeros(); }

    FockOperator adjoint() const;
    /// Product with entries below `drop_tol` removed.
    FockOperator multiply(const FockOperator &rhs, double drop_tol = 0.0) const;
    double norm() const { return matrix_.norm(); }
    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(matrix_); }
    Eigen::VectorXcd apply(const Eigen::VectorXcd &v) const;

    friend FockOperator operator+(const FockOperator &a, const FockOperator &b);
    friend FockOperator operator-(const FockOperator &a, const FockOperator &b);
    friend FockOperator operator*(const FockOperator &a, const FockOperator &b) {
        return a.multiply(b);
    }
    friend FockOperator operator*(double s, const FockOperator &a);
    friend FockOperator operator*(cplx s, const FockOperator &a);

    void check_compatible(const FockOperator &o) const;

  private:
    ModesPtr modes_;
    SparseMatrix matrix_;
};

FockOperator commutator(const FockOperator &a, const FockOperator &b);
FockOperator anticommutator(const FockOperator &a, const FockOperator &b);
inline double lie_norm(const FockOperator &a) { return a.norm(); }
inline FockOperator zero_like(const FockOperator &a) { return FockOperator::zero(a.modes()); }

namespace fock {

/// a^dagger on spin-orbital `mode` (0-based).
FockOperator creation(const ModesPtr &modes, int mode);
FockOperator creation(const ModesPtr &modes, int orbital, Spin spin);
FockOperator annihilation(const ModesPtr &modes, int mode);
FockOperator annihilation(const ModesPtr &modes, int orbital, Spin spin);

/// n_up + n_down on a (1-based) orbital.
FockOperator number(const ModesPtr &modes, int orbital);
FockOperator total_number(const ModesPtr &modes);

/// S+_ij = (a+_{i,up} a+_{j,down} + a+_{j,up} a+_{i,down}) / sqrt(2 (1 + d_ij)).
FockOperator pair_plus(const ModesPtr &modes, int i, int j);
FockOperator pair_minus(const ModesPtr &modes, int i, int j);

/// Broken-pair double excitation between 2D-blocks i < j (0-based).
FockOperator block_a(const ModesPtr &modes, int i, int j);
/// Broken-pair single excitation in 2D-block i (0-based).
FockOperator block_b(const ModesPtr &modes, int i);

/// T1 = sum mu_pq (S+_pq S-_p - S+_p S-_pq), p <= n_occ < q (1-based orbitals).
FockOperator t1_general(const ModesPtr &modes, const std::map<std::pair<int, int>, double> &mu);

/// T'2 = sum mu_{p1 p2 q1 q2} (S+_{p1q1} S+_{p2q2} S-_{p2} S-_{p1} - h.c.),
/// p1 < p2 <= n_occ < q1 != q2 (1-based orbitals).
FockOperator t2prime_general(const ModesPtr &modes,
                             const std::map<std::array<int, 4>, double> &mu);

/// X = sum mu_ij A_ij and Y = sum mu_k B_k.
FockOperator cluster_x(const ModesPtr &modes, const ClusterParams &params);
FockOperator cluster_y(const ModesPtr &modes, const ClusterParams &params);

/// Matrix image of an algebra element under A_ij -> block_a, B_k -> block_b.
FockOperator embed(const ModesPtr &modes, const AlgebraElement &e);

/// prod_{p <= n_occ} S+_p |vac>.
Eigen::VectorXcd reference_state(const ModeIndexing &modes);
Eigen::VectorXcd vacuum(const ModeIndexing &modes);

} // namespace fock

} // namespace zassucc
