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
#include <catch_amalgamated.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include "zassucc/algebra.hpp"
#include "zassucc/fock.hpp"
#include "zassucc/linalg.hpp"
#include "zassucc/rng.hpp"
#include "zassucc/zassenhaus.hpp"

using namespace zassucc;
using Catch::Matchers::WithinAbs;

namespace {

Eigen::MatrixXd random_matrix(int n, CounterRng &rng) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = rng.uniform(-1.0, 1.0);
        }
    }
    return m;
}

ExactAlgebraElement exact_x(const ClusterParams &p, int scale) {
    ExactAlgebraElement e(p.n_blocks());
    for (int i = 0; i < p.n_blocks(); ++i) {
        for (int j = i + 1; j < p.n_blocks(); ++j) {
            e.a(i, j) = Rational(static_cast<long>(std::lround(p.pair(i, j) * scale)), scale);
        }
    }
    return e;
}

ExactAlgebraElement exact_y(const ClusterParams &p, int scale) {
    ExactAlgebraElement e(p.n_blocks());
    for (int k = 0; k < p.n_blocks(); ++k) {
        e.b(k) = Rational(static_cast<long>(std::lround(p.single(k) * scale)), scale);
    }
    return e;
}

} // namespace

TEST_CASE("low-order recursion terms", "[zassenhaus]") {
    CounterRng rng(12);
    const Eigen::MatrixXd x = random_matrix(4, rng);
    const Eigen::MatrixXd y = random_matrix(4, rng);
    const auto s = casas_recursion(x, y, 4);
    CHECK((s.term(1) - y).norm() == 0.0);
    CHECK((s.term(2) + 0.5 * commutator(x, y)).norm() < 1e-14);
    // general third term: 1/3 [y,[x,y]] + 1/6 [x,[x,y]]
    const Eigen::MatrixXd xy = commutator(x, y);
    const Eigen::MatrixXd c3 = commutator(y, xy) / 3.0 + commutator(x, xy) / 6.0;
    CHECK((s.term(3) - c3).norm() < 1e-14);
    CHECK_THROWS_AS(casas_recursion(x, y, 1), std::invalid_argument);
}

TEST_CASE("recursion on commuting inputs", "[zassenhaus]") {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(3, 3);
    x.diagonal() << 1.0, -2.0, 0.5;
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(3, 3);
    y.diagonal() << 0.3, 0.1, 4.0;
    const auto s = casas_recursion(x, y, 8);
    for (int n = 2; n <= 8; ++n) {
        CHECK(s.term(n).norm() == 0.0);
    }
}

TEST_CASE("truncated product converges at the expected order", "[zassenhaus]") {
    CounterRng rng(77);
    const Eigen::MatrixXd x0 = random_matrix(4, rng);
    const Eigen::MatrixXd y0 = random_matrix(4, rng);
    for (int m : {2, 3, 4, 5}) {
        auto error = [&](double scale) {
            const Eigen::MatrixXd x = scale * x0;
            const Eigen::MatrixXd y = scale * y0;
            const auto s = casas_recursion(x, y, m);
            Eigen::MatrixXd prod = expm(x) * expm(y);
            for (int n = 2; n <= m; ++n) {
                prod = prod * expm(s.term(n));
            }
            return (prod - expm(Eigen::MatrixXd(x + y))).norm();
        };
        const double e1 = error(0.1);
        const double e2 = error(0.05);
        INFO("order " << m << " errors " << e1 << " " << e2);
        CHECK(e1 / e2 >= std::pow(2.0, m + 1) * 0.8);
    }
}

TEST_CASE("closed form for two blocks", "[zassenhaus]") {
    const double mu12 = 0.4;
    const double mu1 = 0.3;
    const double mu2 = -0.2;
    ClusterParams p(2);
    p.set_pair(0, 1, mu12);
    p.set_single(0, mu1);
    p.set_single(1, mu2);
    const auto s = closed_form(cluster_x(p), cluster_y(p), 9);
    CHECK(s.term(1) == cluster_y(p));
    for (int k = 1; k <= 4; ++k) {
        const auto &even = s.term(2 * k);
        const double ce = -std::pow(mu12, 2 * k - 1) / std::tgamma(2 * k + 1.0);
        CHECK_THAT(even.b(0), WithinAbs(ce * mu2, 1e-16));
        CHECK_THAT(even.b(1), WithinAbs(ce * mu1, 1e-16));
        const auto &odd = s.term(2 * k + 1);
        const double co = std::pow(mu12, 2 * k) / std::tgamma(2 * k + 2.0);
        CHECK_THAT(odd.b(0), WithinAbs(co * mu1, 1e-16));
        CHECK_THAT(odd.b(1), WithinAbs(co * mu2, 1e-16));
    }
}

TEST_CASE("recursion and closed form agree on block generators", "[zassenhaus]") {
    CounterRng rng(42);
    for (int n : {2, 3, 4}) {
        const auto p = ClusterParams::random(n, rng);
        const auto rec = casas_recursion(cluster_x(p), cluster_y(p), 8);
        const auto cf = closed_form(cluster_x(p), cluster_y(p), 8);
        for (int k = 1; k <= 8; ++k) {
            CHECK(lie_norm(rec.term(k) - cf.term(k)) < 1e-15);
        }
        const auto rec_e = casas_recursion(exact_x(p, 1000), exact_y(p, 1000), 8);
        const auto cf_e = closed_form(exact_x(p, 1000), exact_y(p, 1000), 8);
        for (int k = 1; k <= 8; ++k) {
            CHECK(rec_e.term(k) == cf_e.term(k));
        }
    }
}

TEST_CASE("closed-form term norms decay factorially", "[zassenhaus]") {
    CounterRng rng(5);
    const auto p = ClusterParams::random(5, rng, -2.0, 2.0);
    const auto s = closed_form(cluster_x(p), cluster_y(p), 20);
    const double mnorm = p.coupling().selfadjointView<Eigen::Lower>().operatorNorm();
    for (int n = 1; n <= 20; ++n) {
        const double bound = p.singles().norm() * std::pow(mnorm, n - 1) / std::tgamma(n + 1.0);
        CHECK(lie_norm(s.term(n)) <= bound * (1.0 + 1e-12));
    }
}

TEST_CASE("series summation", "[zassenhaus]") {
    ClusterParams p(2);
    p.set_pair(0, 1, 0.1);
    p.set_single(0, 0.2);
    p.set_single(1, 0.3);
    const auto sum = sum_closed_form(cluster_x(p), cluster_y(p));
    CHECK(sum.truncated_by_cutoff);
    CHECK_FALSE(sum.growth_flagged);
    CHECK(sum.terms_used < 30);
    CHECK_THAT(sum.value.b(0), WithinAbs(0.185320995872277254683523438138785, 1e-16));
    CHECK_THAT(sum.value.b(1), WithinAbs(0.290491913947924879495231264629032, 1e-16));

    const auto fixed = sum_series(closed_form(cluster_x(p), cluster_y(p), 40));
    CHECK(lie_norm(fixed.value - sum.value) < 1e-16);

    SECTION("growth alarm") {
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(2, 2);
        x(0, 0) = 20.0;
        Eigen::MatrixXd y = Eigen::MatrixXd::Zero(2, 2);
        y(0, 1) = 1.0;
        const auto big = sum_closed_form(x, y);
        CHECK(big.growth_flagged);
    }
    CHECK_THROWS(sum_series(ZassenhausSeries<AlgebraElement>{}));
}

TEST_CASE("Gauss-Legendre nodes", "[zassenhaus]") {
    const auto q = gauss_legendre(8);
    REQUIRE(q.nodes.size() == 8);
    for (int deg = 0; deg <= 15; ++deg) {
        double s = 0.0;
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            s += q.weights[i] * std::pow(q.nodes[i], deg);
        }
        CHECK_THAT(s, WithinAbs(1.0 / (deg + 1), 1e-14));
    }
    CHECK_THROWS(gauss_legendre(1));
}

TEST_CASE("Duhamel identity", "[zassenhaus]") {
    const auto modes = make_modes(ModeIndexing::for_blocks(2));
    ClusterParams p(2);
    p.set_pair(0, 1, 0.3);
    p.set_single(0, 0.1);
    p.set_single(1, 0.2);
    const auto x = fock::cluster_x(modes, p);
    const auto y = fock::cluster_y(modes, p);

    SECTION("zero X returns Y") {
        const auto r = duhamel_check(FockOperator::zero(modes), y, 8);
        CHECK(SparseMatrix(r.integral - y.matrix()).norm() == 0.0);
        CHECK(r.residual == 0.0);
    }
    SECTION("block operators at order 32") {
        const auto r = duhamel_check(x, y, 32);
        CHECK(r.residual < 1e-12);
    }
    SECTION("quadrature converges") {
        CounterRng rng(19);
        const Eigen::MatrixXd xd = 3.0 * random_matrix(5, rng);
        const Eigen::MatrixXd yd = random_matrix(5, rng);
        const SparseMatrix xs = xd.cast<cplx>().sparseView();
        const SparseMatrix ys = yd.cast<cplx>().sparseView();
        double previous = 1e300;
        for (int order : {2, 3, 4, 6, 8}) {
            const double r = duhamel_check(xs, ys, order).residual;
            INFO("order " << order << " residual " << r);
            CHECK(r < previous);
            previous = r;
        }
    }
    CHECK_THROWS(duhamel_check(x, y, 1));
}
