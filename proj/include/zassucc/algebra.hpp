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

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zassucc/lie.hpp"
#include "zassucc/params.hpp"

namespace zassucc {

using Rational = boost::multiprecision::cpp_rational;

/// Element of the algebra spanned by {A_ij (i<j), B_k} with the bracket
///   [A_ij, A_kl] = [B_i, B_k] = 0,  [A_ij, B_k] = d_ik B_j + d_jk B_i.
/// Block indices are 0-based. The pair coefficients are stored in the
/// upper-triangle order (0,1), (0,2), ..., (n-2, n-1).
template <typename Scalar> class BasicAlgebraElement {
  public:
    BasicAlgebraElement() = default;
    explicit BasicAlgebraElement(int n_blocks)
        : n_(n_blocks), a_(pair_count(n_blocks), Scalar(0)), b_(n_blocks, Scalar(0)) {
        if (n_blocks < 1) {
            throw std::invalid_argument("AlgebraElement: need at least one block");
        }
    }

    static BasicAlgebraElement unit_a(int n_blocks, int i, int j) {
        BasicAlgebraElement e(n_blocks);
        e.a(i, j) = Scalar(1);
        return e;
    }
    static BasicAlgebraElement unit_b(int n_blocks, int k) {
        BasicAlgebraElement e(n_blocks);
        e.b(k) = Scalar(1);
        return e;
    }

    int n_blocks() const noexcept { return n_; }

    static std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

    std::size_t pair_index(int i, int j) const {
        if (i < 0 || j >= n_ || i >= j) {
            throw std::out_of_range("AlgebraElement: pair index needs 0 <= i < j < n_blocks");
        }
        return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }

    Scalar &a(int i, int j) { return a_[pair_index(i, j)]; }
    const Scalar &a(int i, int j) const { return a_[pair_index(i, j)]; }
    Scalar &b(int k) { return b_.at(static_cast<std::size_t>(k)); }
    const Scalar &b(int k) const { return b_.at(static_cast<std::size_t>(k)); }

    const std::vector<Scalar> &a_coeffs() const noexcept { return a_; }
    const std::vector<Scalar> &b_coeffs() const noexcept { return b_; }

    bool is_b_only() const {
        for (const auto &v : a_) {
            if (v != Scalar(0)) {
                return false;
            }
        }
        return true;
    }
    bool is_zero() const {
        if (!is_b_only()) {
            return false;
        }
        for (const auto &v : b_) {
            if (v != Scalar(0)) {
                return false;
            }
        }
        return true;
    }

    BasicAlgebraElement &operator+=(const BasicAlgebraElement &o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        for (std::size_t i = 0; i < b_.size(); ++i) b_[i] += o.b_[i];
        return *this;
    }
    BasicAlgebraElement &operator-=(const BasicAlgebraElement &o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        for (std::size_t i = 0; i < b_.size(); ++i) b_[i] -= o.b_[i];
        return *this;
    }
    BasicAlgebraElement &operator*=(const Scalar &s) {
        for (auto &v : a_) v *= s;
        for (auto &v : b_) v *= s;
        return *this;
    }

    friend BasicAlgebraElement operator+(BasicAlgebraElement l, const BasicAlgebraElement &r) {
        return l += r;
    }
    friend BasicAlgebraElement operator-(BasicAlgebraElement l, const BasicAlgebraElement &r) {
        return l -= r;
    }
    friend BasicAlgebraElement operator*(const Scalar &s, BasicAlgebraElement e) { return e *= s; }
    friend bool operator==(const BasicAlgebraElement &, const BasicAlgebraElement &) = default;

    void check_same(const BasicAlgebraElement &o) const {
        if (n_ != o.n_) {
            throw std::invalid_argument("AlgebraElement: block counts differ (" + std::to_string(n_) +
                                        " vs " + std::to_string(o.n_) + ")");
        }
    }

  private:
    int n_ = 0;
    std::vector<Scalar> a_;
    std::vector<Scalar> b_;
};

using AlgebraElement = BasicAlgebraElement<double>;
using ExactAlgebraElement = BasicAlgebraElement<Rational>;

template <> struct lie_traits<ExactAlgebraElement> {
    using scalar = Rational;
};

/// Bracket from the structure constants. The result is always B-only:
/// b = S_x b_y - S_y b_x with S the symmetric matrix of pair coefficients.
template <typename Scalar>
BasicAlgebraElement<Scalar> commutator(const BasicAlgebraElement<Scalar> &x,
                                       const BasicAlgebraElement<Scalar> &y) {
    x.check_same(y);
    const int n = x.n_blocks();
    BasicAlgebraElement<Scalar> out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Scalar &ax = x.a(i, j);
            const Scalar &ay = y.a(i, j);
            if (ax != Scalar(0)) {
                out.b(j) += ax * y.b(i);
                out.b(i) += ax * y.b(j);
            }
            if (ay != Scalar(0)) {
                out.b(j) -= ay * x.b(i);
                out.b(i) -= ay * x.b(j);
            }
        }
    }
    return out;
}

template <typename Scalar>
BasicAlgebraElement<Scalar> bracket(const BasicAlgebraElement<Scalar> &x,
                                    const BasicAlgebraElement<Scalar> &y) {
    return commutator(x, y);
}

/// Euclidean norm of the coefficient vector (basis treated as orthonormal).
template <typename Scalar> double lie_norm(const BasicAlgebraElement<Scalar> &e) {
    double s = 0.0;
    for (const auto &v : e.a_coeffs()) {
        const double d = static_cast<double>(v);
        s += d * d;
    }
    for (const auto &v : e.b_coeffs()) {
        const double d = static_cast<double>(v);
        s += d * d;
    }
    return std::sqrt(s);
}

template <typename Scalar>
BasicAlgebraElement<Scalar> zero_like(const BasicAlgebraElement<Scalar> &e) {
    return BasicAlgebraElement<Scalar>(e.n_blocks());
}

/// X = sum_{i<j} mu_ij A_ij.
AlgebraElement cluster_x(const ClusterParams &params);
/// Y = sum_k mu_k B_k.
AlgebraElement cluster_y(const ClusterParams &params);

AlgebraElement to_double(const ExactAlgebraElement &e);

/// x + ... cyclic Jacobi sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
template <typename Scalar>
BasicAlgebraElement<Scalar> jacobiator(const BasicAlgebraElement<Scalar> &x,
                                       const BasicAlgebraElement<Scalar> &y,
                                       const BasicAlgebraElement<Scalar> &z) {
    return commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
           commutator(z, commutator(x, y));
}

struct NmaWitness {
    int depth = 0;
    double residual = 0.0;
};

/// Outcome of a finite no-mixed-adjoint check ad_y ad_x^i y = 0, i < depth.
struct NmaReport {
    bool holds = true;
    int max_depth_checked = 0;
    std::optional<NmaWitness> witness; ///< set iff !holds
    std::vector<double> residuals;     ///< ||[y, ad_x^i y]|| for i = 0 .. depth-1
};

/// Checks ||[y, ad_x^i y]|| < tol * ||x||^i * ||y||^2 for i = 0 .. depth-1.
/// Stops at the first violation.
template <LieElement E>
NmaReport check_nma(const E &x, const E &y, int depth = 6, double tol = 1e-12) {
    if (depth < 1) {
        throw std::invalid_argument("check_nma: depth must be >= 1");
    }
    (void)commutator(x, y); // shape check
    NmaReport report;
    const double nx = lie_norm(x);
    const double ny = lie_norm(y);
    E chain = y;
    for (int i = 0; i < depth; ++i) {
        if (i > 0) {
            chain = commutator(x, chain);
        }
        const double residual = lie_norm(commutator(y, chain));
        report.residuals.push_back(residual);
        report.max_depth_checked = i + 1;
        const double scale = std::pow(nx, i) * ny * ny;
        if (!(residual <= tol * scale)) {
            report.holds = false;
            report.witness = NmaWitness{i, residual};
            break;
        }
    }
    return report;
}

/// ||[ad_x^p y, ad_x^q y]||; vanishes for pairs with the no-mixed adjoint property.
template <LieElement E> double corollary_check(const E &x, const E &y, int p, int q) {
    if (p < 0 || q < 0) {
        throw std::invalid_argument("corollary_check: negative order");
    }
    return lie_norm(commutator(iterated_adjoint(x, y, p), iterated_adjoint(x, y, q)));
}

} // namespace zassucc
