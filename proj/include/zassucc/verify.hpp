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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zassucc/algebra.hpp"
#include "zassucc/decomposition.hpp"
#include "zassucc/fock.hpp"
#include "zassucc/params.hpp"
#include "zassucc/types.hpp"

namespace zassucc {

/// 2^N-dimensional span of per-block closed (P) and open (O) pair states.
/// Bit k of a basis label is 1 when block k is open.
class RestrictedRep {
  public:
    static constexpr int kMaxBlocks = 20;

    explicit RestrictedRep(int n_blocks);

    int n_blocks() const noexcept { return n_; }
    Eigen::Index dim() const noexcept { return Eigen::Index{1} << n_; }

    /// |O_i O_j><P_i P_j| - |P_i P_j><O_i O_j|, other blocks untouched.
    RealSparseMatrix a(int i, int j) const;
    /// |O_k><P_k| - |P_k><O_k|.
    RealSparseMatrix b(int k) const;
    RealSparseMatrix embed(const AlgebraElement &e) const;
    RealSparseMatrix x(const ClusterParams &params) const;
    RealSparseMatrix y(const ClusterParams &params) const;

    /// Columns are the Fock-space images of the basis labels: the product of
    /// S+_{p_k q_k} (open) or S+_{p_k} (closed) over blocks, applied to the
    /// vacuum. Orthonormal.
    static SparseMatrix intertwiner(const ModesPtr &modes);

  private:
    int n_;
};

/// Generators of one verification space, either the full Fock space
/// (N <= 3) or the restricted representation.
class OperatorSpace {
  public:
    static OperatorSpace full_fock(int n_blocks);
    static OperatorSpace restricted(int n_blocks);
    /// Full Fock space when N <= 3, restricted otherwise.
    static OperatorSpace automatic(int n_blocks);

    bool is_restricted() const noexcept { return !modes_; }
    int n_blocks() const noexcept { return n_; }
    Eigen::Index dim() const;
    const ModesPtr &modes() const noexcept { return modes_; }

    SparseMatrix generator(const Generator &g) const;
    SparseMatrix embed(const AlgebraElement &e) const;
    SparseMatrix x(const ClusterParams &params) const;
    SparseMatrix y(const ClusterParams &params) const;
    Eigen::VectorXcd reference() const;

  private:
    OperatorSpace(int n, ModesPtr modes);

    int n_;
    ModesPtr modes_;
    std::vector<SparseMatrix> full_a_; ///< upper-triangle pair order
    std::vector<SparseMatrix> full_b_;
};

/// Ordered product of exp(angle * generator).
SparseMatrix plan_unitary(const DecompositionPlan &plan, const OperatorSpace &space);

/// ||plan_unitary - expm(X + Y)||_F.
double plan_residual(const DecompositionPlan &plan, const ClusterParams &params,
                     const OperatorSpace &space);

/// ||exp(X) exp(Y') - exp(X + Y)||_F with Y' the summed closed-form series.
double bch_side_check(const ClusterParams &params, const OperatorSpace &space);

/// ||exp(X) exp(sum_k gamma_k B_k) - exp(X + Y)||_F for the given angles.
double single_step_error(const ClusterParams &params, const Eigen::VectorXd &gamma,
                         const OperatorSpace &space);

struct TrotterRow {
    int k = 0; ///< 0 marks the exact plan
    double error = 0.0;
    int factor_count = 0;
};

struct TrotterReport {
    std::vector<TrotterRow> rows;
};

/// error(k) = ||(exp(X/k) exp(Y/k))^k - exp(X + Y)||_F, preceded by the exact plan row.
TrotterReport trotter_compare(const ClusterParams &params, const std::vector<int> &k_list,
                              bool use_restricted);

std::string trotter_csv(const TrotterReport &report);

/// |<plan phi0 | exp(X + Y) phi0>|.
double state_fidelity_check(const ClusterParams &params, const OperatorSpace &space,
                            std::optional<DecompositionPlan> plan = std::nullopt);

/// ||U^dagger U - I||_F.
double unitarity_defect(const SparseMatrix &u);

} // namespace zassucc
