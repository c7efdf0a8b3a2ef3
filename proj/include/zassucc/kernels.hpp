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

// Data-parallel kernels. Each kernel has an OpenMP version (parallel::) and a
// plain loop (serial::) kept as the reference the parallel one is tested and
// benchmarked against. Both produce bit-identical results: work is split by
// independent rows/columns/nodes and every reduction runs in a fixed order.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "zassucc/types.hpp"

namespace zassucc::kernels {

/// Two-level real rotation on computational basis states. On the bits in
/// `support`, a state matching `pattern_a` maps to cos|a> + sin|b> and a state
/// matching `pattern_b` maps to -sin|a> + cos|b>; all other states are fixed.
struct RotationGate {
    std::uint64_t support = 0;
    std::uint64_t pattern_a = 0;
    std::uint64_t pattern_b = 0;
    double theta = 0.0;
};

/// Sparse real state vector as sorted (bitstring, amplitude) pairs.
using SparseState = std::vector<std::pair<std::uint64_t, double>>;

/// Matrix of a fermionic creation operator for spin-orbital `mode` on an
/// n_modes Fock space (Jordan-Wigner sign from lower-index modes).
namespace serial {
SparseMatrix creation(int mode, int n_modes);
SparseMatrix spgemm(const SparseMatrix &a, const SparseMatrix &b, double drop_tol = 0.0);
std::vector<SparseState> apply_rotations(std::span<const RotationGate> gates,
                                         std::span<const std::uint64_t> inputs);
Eigen::MatrixXcd integrate(std::span<const double> nodes, std::span<const double> weights,
                           const std::function<Eigen::MatrixXcd(double)> &integrand);
} // namespace serial

namespace parallel {
SparseMatrix creation(int mode, int n_modes);
/// Row-parallel Gustavson product; entries with |v| <= drop_tol are dropped.
SparseMatrix spgemm(const SparseMatrix &a, const SparseMatrix &b, double drop_tol = 0.0);
std::vector<SparseState> apply_rotations(std::span<const RotationGate> gates,
                                         std::span<const std::uint64_t> inputs);
/// `integrand` is called concurrently and must be thread-safe.
Eigen::MatrixXcd integrate(std::span<const double> nodes, std::span<const double> weights,
                           const std::function<Eigen::MatrixXcd(double)> &integrand);
} // namespace parallel

/// Applies one gate list to a single input bitstring.
SparseState apply_rotations_one(std::span<const RotationGate> gates, std::uint64_t input);

} // namespace zassucc::kernels
