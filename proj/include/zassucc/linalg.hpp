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

#include <span>
#include <utility>
#include <vector>

#include "zassucc/types.hpp"

namespace zassucc {

/// Dense matrix exponential (Pade scaling and squaring). Throws on
/// non-finite input.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd &a);
Eigen::MatrixXd expm(const Eigen::MatrixXd &a);

/// ||expm(a) expm(-a) - I||_F; the inverse check used to gate expm results.
double expm_inverse_defect(const Eigen::MatrixXcd &a);

/// Partition of the coordinate basis into subspaces invariant under every
/// matrix in a set (connected components of the union sparsity graph).
/// Any polynomial or exponential of the set is block diagonal in it.
class InvariantBlocks {
  public:
    explicit InvariantBlocks(std::span<const SparseMatrix> generators);
    InvariantBlocks(std::initializer_list<SparseMatrix> generators);

    Eigen::Index dim() const noexcept { return dim_; }
    const std::vector<std::vector<Eigen::Index>> &blocks() const noexcept { return blocks_; }
    std::size_t largest_block() const noexcept;

    Eigen::MatrixXcd extract(const SparseMatrix &m, std::size_t block) const;
    /// Adds the dense block back into a triplet list at its coordinates.
    void scatter(const Eigen::MatrixXcd &dense, std::size_t block,
                 std::vector<Eigen::Triplet<cplx>> &out) const;

  private:
    void build(std::span<const SparseMatrix> generators);

    Eigen::Index dim_ = 0;
    std::vector<std::vector<Eigen::Index>> blocks_;
};

/// exp(a) for a sparse matrix whose invariant blocks are small; exact up to
/// the dense per-block exponential.
SparseMatrix expm_sparse(const SparseMatrix &a);

/// Gauss-Legendre nodes and weights on [0, 1] (Golub-Welsch).
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};
Quadrature gauss_legendre(int order);

} // namespace zassucc
