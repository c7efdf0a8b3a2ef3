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
#include "zassucc/star_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zassucc {

StarWord::StarWord(int n_vertices, LeftEnd left, RightEnd right)
    : n_(n_vertices), left_(left), right_(right) {
    if (n_vertices < 1) {
        throw std::invalid_argument("StarWord: need at least one vertex");
    }
}

StarWord::Bucket &StarWord::bucket(int length) {
    auto it = buckets_.find(length);
    if (it == buckets_.end()) {
        Bucket b;
        b.total = Eigen::MatrixXd::Zero(n_, n_);
        if (length >= 1) {
            b.last.assign(static_cast<std::size_t>(n_), Eigen::MatrixXd::Zero(n_, n_));
        }
        it = buckets_.emplace(length, std::move(b)).first;
    }
    return it->second;
}

StarWord StarWord::unit(int n) {
    StarWord w(n);
    w.bucket(0).total.setIdentity();
    return w;
}

StarWord StarWord::nu(int n, int i, int j, double weight) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
        throw std::out_of_range("StarWord::nu: vertices must be distinct and in range");
    }
    StarWord w(n);
    auto &b = w.bucket(1);
    b.total(i, j) = weight;
    b.last[static_cast<std::size_t>(i)](i, j) = weight;
    return w;
}

StarWord StarWord::edge_sum(const Eigen::MatrixXd &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("StarWord::edge_sum: coupling matrix must be square");
    }
    const int n = static_cast<int>(m.rows());
    StarWord w(n);
    auto &b = w.bucket(1);
    b.total = m;
    b.total.diagonal().setZero();
    for (int i = 0; i < n; ++i) {
        b.last[static_cast<std::size_t>(i)].row(i) = b.total.row(i);
    }
    return w;
}

StarWord StarWord::mu(int n, int i, double weight) {
    if (i < 0 || i >= n) {
        throw std::out_of_range("StarWord::mu: vertex out of range");
    }
    StarWord w(n, LeftEnd::Mu, RightEnd::Open);
    w.bucket(0).total(i, i) = weight;
    return w;
}

StarWord StarWord::mu_sum(const Eigen::VectorXd &mu) {
    StarWord w(static_cast<int>(mu.size()), LeftEnd::Mu, RightEnd::Open);
    w.bucket(0).total = mu.asDiagonal();
    return w;
}

StarWord StarWord::b(int n, int k) {
    if (k < 0 || k >= n) {
        throw std::out_of_range("StarWord::b: vertex out of range");
    }
    StarWord w(n, LeftEnd::Open, RightEnd::B);
    w.bucket(0).total(k, k) = 1.0;
    return w;
}

StarWord StarWord::b_sum(int n) {
    StarWord w(n, LeftEnd::Open, RightEnd::B);
    w.bucket(0).total.setIdentity();
    return w;
}

bool StarWord::empty() const {
    for (const auto &[len, b] : buckets_) {
        if (!b.total.isZero(0.0)) {
            return false;
        }
    }
    return true;
}

double StarWord::norm() const {
    double s = 0.0;
    for (const auto &[len, b] : buckets_) {
        s += b.total.squaredNorm();
    }
    return std::sqrt(s);
}

void StarWord::check_same(const StarWord &o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("StarWord: vertex counts differ");
    }
}

StarWord &StarWord::operator+=(const StarWord &o) {
    check_same(o);
    if (left_ != o.left_ || right_ != o.right_) {
        throw std::invalid_argument("StarWord: cannot add words with different end symbols");
    }
    for (const auto &[len, ob] : o.buckets_) {
        const bool had = buckets_.count(len) != 0;
        Bucket &b = bucket(len);
        b.total += ob.total;
        if (len >= 1) {
            if ((had && b.last.empty()) || ob.last.empty()) {
                b.last.clear();
            } else {
                for (std::size_t i = 0; i < b.last.size(); ++i) {
                    b.last[i] += ob.last[i];
                }
            }
        }
    }
    return *this;
}

StarWord &StarWord::operator*=(double s) {
    for (auto &[len, b] : buckets_) {
        b.total *= s;
        for (auto &l : b.last) {
            l *= s;
        }
    }
    return *this;
}

StarWord star(const StarWord &u, const StarWord &v) {
    u.check_same(v);
    if (u.right_ != RightEnd::Open) {
        throw std::invalid_argument("star: left factor already ends with a B symbol");
    }
    if (v.left_ != LeftEnd::Open) {
        throw std::invalid_argument("star: right factor already starts with a mu symbol");
    }
    StarWord out(u.n_, u.left_, v.right_);
    const auto n = static_cast<std::size_t>(u.n_);
    for (const auto &[lu, bu] : u.buckets_) {
        for (const auto &[lv, bv] : v.buckets_) {
            const int len = lu + lv;
            const bool had = out.buckets_.count(len) != 0;
            auto &ob = out.bucket(len);
            ob.total += bu.total * bv.total;
            if (len < 1) {
                continue;
            }
            const std::vector<Eigen::MatrixXd> *src = nullptr;
            if (lv >= 1) {
                src = bv.last.empty() ? nullptr : &bv.last;
            } else if (lu >= 1) {
                src = bu.last.empty() ? nullptr : &bu.last;
            }
            if (src == nullptr || (had && ob.last.empty())) {
                ob.last.clear();
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                ob.last[i] += lv >= 1 ? Eigen::MatrixXd(bu.total * (*src)[i])
                                      : Eigen::MatrixXd((*src)[i] * bv.total);
            }
        }
    }
    return out;
}

StarWord star_inverse_edges(const StarWord &u, const Eigen::MatrixXd &m) {
    if (m.rows() != u.n_ || m.cols() != u.n_) {
        throw std::invalid_argument("star_inverse_edges: coupling size mismatch");
    }
    if (u.right_ != RightEnd::Open) {
        throw std::invalid_argument("star_inverse_edges: word already ends with a B symbol");
    }
    StarWord out(u.n_, u.left_, RightEnd::Open);
    const int n = u.n_;
    for (const auto &[len, b] : u.buckets_) {
        if (len < 1) {
            continue;
        }
        if (b.last.empty()) {
            throw std::logic_error("star_inverse_edges: last-symbol data unavailable");
        }
        auto &ob = out.bucket(len - 1);
        for (int i = 0; i < n; ++i) {
            const auto &li = b.last[static_cast<std::size_t>(i)];
            for (int j = 0; j < n; ++j) {
                const double w = m(i, j);
                if (w == 0.0) {
                    continue;
                }
                ob.total.col(i) += li.col(j) / w;
            }
        }
        if (len - 1 >= 1) {
            ob.last.clear();
        }
    }
    return out;
}

double StarWord::project() const {
    double s = 0.0;
    for (const auto &[len, b] : buckets_) {
        s += b.total.sum();
    }
    return s;
}

Eigen::VectorXd StarWord::project_b() const {
    if (right_ != RightEnd::B) {
        throw std::logic_error("StarWord::project_b: word does not end with a B symbol");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
    for (const auto &[len, b] : buckets_) {
        out += b.total.colwise().sum().transpose();
    }
    return out;
}

StarWord star_power(const StarWord &u, int n) {
    if (n < 0) {
        throw std::invalid_argument("star_power: negative exponent");
    }
    StarWord out = StarWord::unit(u.n_vertices());
    for (int k = 0; k < n; ++k) {
        out = star(out, u);
    }
    return out;
}

StarSeries star_exp(const StarWord &u, const SeriesPolicy &policy) {
    return star_series(
        u, [](int k) { return 1.0 / std::tgamma(k + 1.0); }, policy);
}

namespace {

double phi_coeff(int k) { return (k % 2 == 0 ? 1.0 : -1.0) / std::tgamma(k + 2.0); }

} // namespace

StarDecomposition star_decompose(const ClusterParams &params, const SeriesPolicy &policy) {
    const int n = params.n_blocks();
    const StarWord s = StarWord::edge_sum(params.coupling());
    const StarSeries series = star_series(s, phi_coeff, policy);
    const StarWord word = star(star(StarWord::mu_sum(params.singles()), series.value), StarWord::b_sum(n));
    const Eigen::VectorXd gamma = word.project_b();

    StarDecomposition out;
    out.plan.n_blocks = n;
    out.plan.provenance = PlanProvenance::StarAlgebra;
    for (const auto &[i, j] : params.nonzero_pairs()) {
        out.plan.factors.push_back({Generator::a(i, j), params.pair(i, j)});
    }
    for (int k = 0; k < n; ++k) {
        out.plan.factors.push_back({Generator::b(k), gamma(k)});
    }
    out.terms_used = series.terms_used;
    out.growth_flagged = series.growth_flagged;
    return out;
}

Eigen::VectorXd star_inverse_form_angles(const ClusterParams &params, const SeriesPolicy &policy) {
    const int n = params.n_blocks();
    const StarWord s = StarWord::edge_sum(params.coupling());
    const StarSeries e = star_exp(-1.0 * s, policy);
    const StarWord one_minus = StarWord::unit(n) - e.value;
    const StarWord cancelled = star_inverse_edges(one_minus, params.coupling());
    return star(star(StarWord::mu_sum(params.singles()), cancelled), StarWord::b_sum(n)).project_b();
}

} // namespace zassucc
