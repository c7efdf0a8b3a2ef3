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
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "zassucc/decomposition.hpp"
#include "zassucc/kernels.hpp"

namespace zassucc {

/// Three qubits (p_i, q_i, pq_i) = (3i, 3i+1, 3i+2) per block, then the frozen
/// pair qubits. In the one-hot encoding a closed block sets p_i, an open block
/// sets pq_i, q_i stays clear and every frozen qubit is set.
class BlockRegisterLayout {
  public:
    explicit BlockRegisterLayout(int n_blocks, int n_frozen = 0);

    int n_blocks() const noexcept { return n_blocks_; }
    int n_frozen() const noexcept { return n_frozen_; }
    int n_qubits() const noexcept { return 3 * n_blocks_ + n_frozen_; }

    int p(int block) const;
    int q(int block) const;
    int pq(int block) const;
    int frozen(int index) const;

    /// Bitstring of a restricted-basis label (bit k set = block k open).
    std::uint64_t encode(std::uint64_t label) const;
    /// Inverse of encode; false for states outside the one-hot subspace.
    bool decode(std::uint64_t bits, std::uint64_t &label) const;

  private:
    int n_blocks_;
    int n_frozen_;
};

struct Givens2 {
    std::array<int, 2> qubits{};
    double theta = 0.0;
    Generator source;
};

struct Givens4 {
    std::array<int, 4> qubits{};
    double theta = 0.0;
    Generator source;
};

using Gate = std::variant<Givens2, Givens4>;

struct CircuitIR {
    int n_qubits = 0;
    std::vector<Gate> gates;
};

/// exp(g B_k) -> Givens2 on (p_k, pq_k); exp(a A_ij) -> Givens4 on
/// (p_i, pq_i, p_j, pq_j). Plan order is kept. With `prune` zero angles are dropped.
/// Gates come out in time order: the last plan factor acts first.
CircuitIR emit(const DecompositionPlan &plan, const BlockRegisterLayout &layout, bool prune = false);

/// Givens2 rotates |10> towards |01> on (a, b); Givens4 rotates |1010> towards
/// |0101> on (a, b, c, d).
kernels::RotationGate to_rotation(const Gate &g);

struct SimulationResult {
    Eigen::MatrixXd unitary; ///< 2^N x 2^N on the restricted labels
    double leakage = 0.0;    ///< squared weight that left the one-hot subspace
};

SimulationResult simulate(const CircuitIR &c, const BlockRegisterLayout &layout);

/// One line per gate, e.g. `givens2 q[0],q[2] theta=0.5`.
std::string export_text(const CircuitIR &c, bool sign_flip = false);

std::string circuit_to_json(const CircuitIR &c);

} // namespace zassucc
