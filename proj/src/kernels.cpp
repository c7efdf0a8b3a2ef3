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
#include "zassucc/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include <omp.h>

namespace zassucc::kernels {

namespace {

void check_modes(int mode, int n_modes) {
    if (n_modes < 1 || n_modes > 30) {
        throw std::invalid_argument("creation: n_modes must be in [1, 30]");
    }
    if (mode < 0 || mode >= n_modes) {
        throw std::out_of_range("creation: mode index out of range");
    }
}

// Entry of a^dagger_mode acting on basis state `col`, or nothing.
inline bool creation_entry(int mode, std::uint64_t col, std::uint64_t &row, double &sign) {
    const std::uint64_t bit = std::uint64_t{1} << mode;
    if (col & bit) {
        return false;
    }
    row = col | bit;
    sign = (std::popcount(col & (bit - 1)) % 2 == 0) ? 1.0 : -1.0;
    return true;
}

SparseMatrix assemble_creation(int n_modes, const std::vector<std::int64_t> &row_col,
                               const std::vector<double> &signs) {
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n_modes);
    SparseMatrix m(dim, dim);
    std::vector<Eigen::Triplet<cplx>> t;
    t.reserve(signs.size());
    for (std::size_t r = 0; r < row_col.size(); ++r) {
        if (row_col[r] >= 0) {
            t.emplace_back(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(row_col[r]),
                           cplx(signs[r], 0.0));
        }
    }
    m.setFromTriplets(t.begin(), t.end());
    m.makeCompressed();
    return m;
}

// Row i of a*b with a dense accumulator; columns come back sorted.
void gustavson_row(const SparseMatrix &a, const SparseMatrix &b, Eigen::Index i,
                   std::vector<cplx> &acc, std::vector<char> &used,
                   std::vector<Eigen::Index> &cols, double drop_tol,
                   std::vector<std::pair<Eigen::Index, cplx>> &out) {
    cols.clear();
    for (SparseMatrix::InnerIterator ia(a, i); ia; ++ia) {
        const cplx av = ia.value();
        for (SparseMatrix::InnerIterator ib(b, ia.col()); ib; ++ib) {
            const Eigen::Index c = ib.col();
            if (!used[c]) {
                used[c] = 1;
                acc[c] = cplx(0.0, 0.0);
                cols.push_back(c);
            }
            acc[c] += av * ib.value();
        }
    }
    std::sort(cols.begin(), cols.end());
    out.clear();
    for (const auto c : cols) {
        if (std::abs(acc[c]) > drop_tol) {
            out.emplace_back(c, acc[c]);
        }
        used[c] = 0;
    }
}

SparseMatrix assemble_rows(Eigen::Index rows, Eigen::Index cols,
                           const std::vector<std::vector<std::pair<Eigen::Index, cplx>>> &per_row) {
    SparseMatrix m(rows, cols);
    std::vector<Eigen::Index> sizes(static_cast<std::size_t>(rows));
    for (Eigen::Index r = 0; r < rows; ++r) {
        sizes[static_cast<std::size_t>(r)] = static_cast<Eigen::Index>(per_row[r].size());
    }
    m.reserve(sizes);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (const auto &[c, v] : per_row[static_cast<std::size_t>(r)]) {
            m.insert(r, c) = v;
        }
    }
    m.makeCompressed();
    return m;
}

void check_product(const SparseMatrix &a, const SparseMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("spgemm: inner dimensions differ");
    }
}

} // namespace

SparseState apply_rotations_one(std::span<const RotationGate> gates, std::uint64_t input) {
    std::map<std::uint64_t, double> state{{input, 1.0}};
    std::map<std::uint64_t, double> next;
    for (const auto &g : gates) {
        const double c = std::cos(g.theta);
        const double s = std::sin(g.theta);
        next.clear();
        for (const auto &[bits, amp] : state) {
            const std::uint64_t local = bits & g.support;
            const std::uint64_t rest = bits & ~g.support;
            if (local == g.pattern_a) {
                next[rest | g.pattern_a] += c * amp;
                next[rest | g.pattern_b] += s * amp;
            } else if (local == g.pattern_b) {
                next[rest | g.pattern_a] -= s * amp;
                next[rest | g.pattern_b] += c * amp;
            } else {
                next[bits] += amp;
            }
        }
        state.swap(next);
    }
    return SparseState(state.begin(), state.end());
}

namespace serial {

SparseMatrix creation(int mode, int n_modes) {
    check_modes(mode, n_modes);
    const std::uint64_t dim = std::uint64_t{1} << n_modes;
    std::vector<std::int64_t> row_col(dim, -1);
    std::vector<double> signs(dim, 0.0);
    for (std::uint64_t col = 0; col < dim; ++col) {
        std::uint64_t row = 0;
        double sign = 0.0;
        if (creation_entry(mode, col, row, sign)) {
            row_col[row] = static_cast<std::int64_t>(col);
            signs[row] = sign;
        }
    }
    return assemble_creation(n_modes, row_col, signs);
}

SparseMatrix spgemm(const SparseMatrix &a, const SparseMatrix &b, double drop_tol) {
    check_product(a, b);
    std::vector<std::vector<std::pair<Eigen::Index, cplx>>> per_row(
        static_cast<std::size_t>(a.rows()));
    std::vector<cplx> acc(static_cast<std::size_t>(b.cols()));
    std::vector<char> used(static_cast<std::size_t>(b.cols()), 0);
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        gustavson_row(a, b, i, acc, used, cols, drop_tol, per_row[static_cast<std::size_t>(i)]);
    }
    return assemble_rows(a.rows(), b.cols(), per_row);
}

std::vector<SparseState> apply_rotations(std::span<const RotationGate> gates,
                                         std::span<const std::uint64_t> inputs) {
    std::vector<SparseState> out(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        out[i] = apply_rotations_one(gates, inputs[i]);
    }
    return out;
}

Eigen::MatrixXcd integrate(std::span<const double> nodes, std::span<const double> weights,
                           const std::function<Eigen::MatrixXcd(double)> &integrand) {
    if (nodes.size() != weights.size() || nodes.empty()) {
        throw std::invalid_argument("integrate: nodes and weights must be non-empty and equal length");
    }
    Eigen::MatrixXcd sum = weights[0] * integrand(nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        sum += weights[i] * integrand(nodes[i]);
    }
    return sum;
}

} // namespace serial

namespace parallel {

SparseMatrix creation(int mode, int n_modes) {
    check_modes(mode, n_modes);
    const auto dim = static_cast<std::int64_t>(std::uint64_t{1} << n_modes);
    std::vector<std::int64_t> row_col(static_cast<std::size_t>(dim), -1);
    std::vector<double> signs(static_cast<std::size_t>(dim), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t col = 0; col < dim; ++col) {
        std::uint64_t row = 0;
        double sign = 0.0;
        if (creation_entry(mode, static_cast<std::uint64_t>(col), row, sign)) {
            row_col[row] = col;
            signs[row] = sign;
        }
    }
    return assemble_creation(n_modes, row_col, signs);
}

SparseMatrix spgemm(const SparseMatrix &a, const SparseMatrix &b, double drop_tol) {
    check_product(a, b);
    const Eigen::Index rows = a.rows();
    std::vector<std::vector<std::pair<Eigen::Index, cplx>>> per_row(static_cast<std::size_t>(rows));
#pragma omp parallel
    {
        std::vector<cplx> acc(static_cast<std::size_t>(b.cols()));
        std::vector<char> used(static_cast<std::size_t>(b.cols()), 0);
        std::vector<Eigen::Index> cols;
#pragma omp for schedule(dynamic, 64)
        for (Eigen::Index i = 0; i < rows; ++i) {
            gustavson_row(a, b, i, acc, used, cols, drop_tol, per_row[static_cast<std::size_t>(i)]);
        }
    }
    return assemble_rows(rows, b.cols(), per_row);
}

std::vector<SparseState> apply_rotations(std::span<const RotationGate> gates,
                                         std::span<const std::uint64_t> inputs) {
    std::vector<SparseState> out(inputs.size());
    const auto n = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = apply_rotations_one(gates, inputs[static_cast<std::size_t>(i)]);
    }
    return out;
}

Eigen::MatrixXcd integrate(std::span<const double> nodes, std::span<const double> weights,
                           const std::function<Eigen::MatrixXcd(double)> &integrand) {
    if (nodes.size() != weights.size() || nodes.empty()) {
        throw std::invalid_argument("integrate: nodes and weights must be non-empty and equal length");
    }
    std::vector<Eigen::MatrixXcd> values(nodes.size());
    const auto n = static_cast<std::int64_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = integrand(nodes[static_cast<std::size_t>(i)]);
    }
    Eigen::MatrixXcd sum = weights[0] * values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
        sum += weights[i] * values[i];
    }
    return sum;
}

} // namespace parallel

} // namespace zassucc::kernels
