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

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "zassucc/decomposition.hpp"
#include "zassucc/params.hpp"
#include "zassucc/zassenhaus.hpp"

namespace zassucc {

/// Left end of a word: still extendable, or closed by a mu symbol.
enum class LeftEnd { Open, Mu };
/// Right end of a word: still extendable, or closed by a B symbol.
enum class RightEnd { Open, B };

/// Weighted sum of words over the vertex-indexed symbols mu_i, nu_{i->j}, B_k.
///
/// Words of equal length with equal end vertices are merged: bucket L holds an
/// N x N matrix whose (s, t) entry is the total weight of words with L nu
/// symbols running from vertex s to vertex t. Each bucket with L >= 1 also
/// keeps the same sum split by the last nu symbol, which the inverse rule
/// needs.
class StarWord {
  public:
    struct Bucket {
        Eigen::MatrixXd total;
        /// last[i](s, t): words whose last symbol is nu_{i->t}. Empty when unknown.
        std::vector<Eigen::MatrixXd> last;
    };

    explicit StarWord(int n_vertices, LeftEnd left = LeftEnd::Open, RightEnd right = RightEnd::Open);

    static StarWord unit(int n);
    static StarWord nu(int n, int i, int j, double weight);
    /// Sum of nu_{i->j} over every ordered pair with weight M_ij.
    static StarWord edge_sum(const Eigen::MatrixXd &m);
    static StarWord mu(int n, int i, double weight);
    static StarWord mu_sum(const Eigen::VectorXd &mu);
    static StarWord b(int n, int k);
    static StarWord b_sum(int n);

    int n_vertices() const noexcept { return n_; }
    LeftEnd left() const noexcept { return left_; }
    RightEnd right() const noexcept { return right_; }
    const std::map<int, Bucket> &buckets() const noexcept { return buckets_; }
    bool empty() const;
    double norm() const;

    StarWord &operator+=(const StarWord &o);
    StarWord &operator*=(double s);
    friend StarWord operator+(StarWord l, const StarWord &r) { return l += r; }
    friend StarWord operator-(StarWord l, const StarWord &r) { return l += (-1.0) * r; }
    friend StarWord operator*(double s, StarWord w) { return w *= s; }

    /// Concatenation with the delta rule on shared vertices.
    friend StarWord star(const StarWord &u, const StarWord &v);

    /// u * sum_{k->l} (nu_{k->l})^{*-1}: each trailing nu_{i->j} cancels against
    /// the inverse of nu_{j->i} with factor 1/nu_{i->j}; zero couplings give the
    /// empty word. Words without a nu symbol contribute nothing.
    friend StarWord star_inverse_edges(const StarWord &u, const Eigen::MatrixXd &m);

    /// Sum of all word weights.
    double project() const;
    /// Per-vertex weights of the words ending in B_k.
    Eigen::VectorXd project_b() const;

  private:
    void check_same(const StarWord &o) const;
    Bucket &bucket(int length);

    int n_;
    LeftEnd left_;
    RightEnd right_;
    std::map<int, Bucket> buckets_;
};

StarWord star_power(const StarWord &u, int n);

struct StarSeries {
    StarWord value;
    int terms_used = 0;
    bool growth_flagged = false;
};

/// sum_n c_n u^{*n} for n = 0, 1, ... under the cutoff policy.
template <typename Coeff>
StarSeries star_series(const StarWord &u, Coeff coeff, const SeriesPolicy &policy = {});

/// *-exponential sum u^{*n}/n!.
StarSeries star_exp(const StarWord &u, const SeriesPolicy &policy = {});

struct StarDecomposition {
    DecompositionPlan plan;
    int terms_used = 0;
    bool growth_flagged = false;
};

/// gamma_l = pi(mu * sum (-1)^n/(n+1)! S^{*n} * B_l) with S the sum of all nu
/// symbols. No matrix inverse is involved, so singular couplings are fine.
StarDecomposition star_decompose(const ClusterParams &params, const SeriesPolicy &policy = {});

/// The inverse-based form mu * (1 - exp*(-S)) * sum nu^{*-1} * B_l evaluated with
/// the inverse rule applied literally.
Eigen::VectorXd star_inverse_form_angles(const ClusterParams &params, const SeriesPolicy &policy = {});

template <typename Coeff>
StarSeries star_series(const StarWord &u, Coeff coeff, const SeriesPolicy &policy) {
    StarSeries out{coeff(0) * StarWord::unit(u.n_vertices())};
    out.terms_used = 1;
    StarWord power = StarWord::unit(u.n_vertices());
    double accumulated = out.value.norm();
    double previous = accumulated;
    int growth = 0;
    for (int k = 1; k < policy.max_terms; ++k) {
        power = star(power, u);
        const StarWord term = coeff(k) * power;
        const double tn = term.norm();
        out.value += term;
        out.terms_used = k + 1;
        growth = tn > previous ? growth + 1 : 0;
        if (growth >= policy.growth_alarm) {
            out.growth_flagged = true;
        }
        previous = tn;
        if (tn == 0.0 || tn < policy.relative_cutoff * accumulated) {
            break;
        }
        accumulated += tn;
    }
    return out;
}

} // namespace zassucc
