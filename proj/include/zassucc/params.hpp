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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zassucc/rng.hpp"

namespace zassucc {

/// Amplitudes of the 2D-block cluster operators: mu_ij couples blocks i<j
/// (double excitations A_ij), mu_k drives the single excitation B_k.
/// Block indices are 0-based here; file formats use 1-based indices.
class ClusterParams {
  public:
    explicit ClusterParams(int n_blocks);

    int n_blocks() const noexcept { return static_cast<int>(single_.size()); }

    /// Symmetric in (i, j); the diagonal is always zero.
    double pair(int i, int j) const;
    void set_pair(int i, int j, double value);

    double single(int k) const;
    void set_single(int k, double value);

    const Eigen::VectorXd &singles() const noexcept { return single_; }

    /// Symmetric hollow matrix with M_ij = mu_ij.
    const Eigen::MatrixXd &coupling() const noexcept { return pair_; }

    /// (i, j) with i < j and mu_ij != 0, lexicographic.
    std::vector<std::pair<int, int>> nonzero_pairs() const;

    ClusterParams scaled(double factor) const;

    /// Every mu_ij (i<j) and mu_k drawn uniformly from [lo, hi).
    static ClusterParams random(int n_blocks, CounterRng &rng, double lo = -0.5, double hi = 0.5);

  private:
    void check_block(int k) const;

    Eigen::MatrixXd pair_;
    Eigen::VectorXd single_;
};

} // namespace zassucc
