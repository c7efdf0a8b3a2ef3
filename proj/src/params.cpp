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
#include "zassucc/params.hpp"

#include <stdexcept>
#include <string>

namespace zassucc {

ClusterParams::ClusterParams(int n_blocks) {
    if (n_blocks < 1) {
        throw std::invalid_argument("ClusterParams: need at least one block");
    }
    pair_ = Eigen::MatrixXd::Zero(n_blocks, n_blocks);
    single_ = Eigen::VectorXd::Zero(n_blocks);
}

void ClusterParams::check_block(int k) const {
    if (k < 0 || k >= n_blocks()) {
        throw std::out_of_range("block index " + std::to_string(k) + " outside [0, " +
                                std::to_string(n_blocks()) + ")");
    }
}

double ClusterParams::pair(int i, int j) const {
    check_block(i);
    check_block(j);
    return pair_(i, j);
}

void ClusterParams::set_pair(int i, int j, double value) {
    check_block(i);
    check_block(j);
    if (i == j) {
        throw std::invalid_argument("ClusterParams: pair amplitude needs two distinct blocks");
    }
    pair_(i, j) = value;
    pair_(j, i) = value;
}

double ClusterParams::single(int k) const {
    check_block(k);
    return single_(k);
}

void ClusterParams::set_single(int k, double value) {
    check_block(k);
    single_(k) = value;
}

std::vector<std::pair<int, int>> ClusterParams::nonzero_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_blocks(); ++i) {
        for (int j = i + 1; j < n_blocks(); ++j) {
            if (pair_(i, j) != 0.0) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

ClusterParams ClusterParams::scaled(double factor) const {
    ClusterParams out(n_blocks());
    out.pair_ = pair_ * factor;
    out.single_ = single_ * factor;
    return out;
}

ClusterParams ClusterParams::random(int n_blocks, CounterRng &rng, double lo, double hi) {
    ClusterParams p(n_blocks);
    for (int i = 0; i < n_blocks; ++i) {
        for (int j = i + 1; j < n_blocks; ++j) {
            p.set_pair(i, j, rng.uniform(lo, hi));
        }
    }
    for (int k = 0; k < n_blocks; ++k) {
        p.set_single(k, rng.uniform(lo, hi));
    }
    return p;
}

} // namespace zassucc
