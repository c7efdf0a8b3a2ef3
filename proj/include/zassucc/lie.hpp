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

#include <concepts>
#include <stdexcept>

#include <Eigen/Dense>

#include "zassucc/types.hpp"

namespace zassucc {

/// Scalar type used for the rational prefactors (1/j!, (-1)^n ...) when a
/// Lie element is scaled. Exact element types specialise this.
template <typename E> struct lie_traits {
    using scalar = double;
};

template <typename E> using lie_scalar_t = typename lie_traits<E>::scalar;

// Dense Eigen matrices are Lie elements under the matrix commutator.

inline Eigen::MatrixXd commutator(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("commutator: shape mismatch");
    }
    return a * b - b * a;
}

inline Eigen::MatrixXcd commutator(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("commutator: shape mismatch");
    }
    return a * b - b * a;
}

inline double lie_norm(const Eigen::MatrixXd &a) { return a.norm(); }
inline double lie_norm(const Eigen::MatrixXcd &a) { return a.norm(); }

inline Eigen::MatrixXd zero_like(const Eigen::MatrixXd &a) {
    return Eigen::MatrixXd::Zero(a.rows(), a.cols());
}
inline Eigen::MatrixXcd zero_like(const Eigen::MatrixXcd &a) {
    return Eigen::MatrixXcd::Zero(a.rows(), a.cols());
}

// Sparse matrices use the row-parallel product from kernels.
SparseMatrix commutator(const SparseMatrix &a, const SparseMatrix &b);
double lie_norm(const SparseMatrix &a);
SparseMatrix zero_like(const SparseMatrix &a);

template <typename E>
concept LieElement = requires(const E &a, const E &b, const lie_scalar_t<E> &s) {
    { commutator(a, b) } -> std::convertible_to<E>;
    { a + b } -> std::convertible_to<E>;
    { a - b } -> std::convertible_to<E>;
    { s * a } -> std::convertible_to<E>;
    { lie_norm(a) } -> std::convertible_to<double>;
    { zero_like(a) } -> std::convertible_to<E>;
};

/// ad_x^k y = [x, [x, ... [x, y]]], k nested brackets; k = 0 returns y.
template <LieElement E> E iterated_adjoint(const E &x, const E &y, int k) {
    if (k < 0) {
        throw std::invalid_argument("iterated_adjoint: negative order");
    }
    E out = y;
    for (int i = 0; i < k; ++i) {
        out = commutator(x, out);
    }
    return out;
}

} // namespace zassucc
