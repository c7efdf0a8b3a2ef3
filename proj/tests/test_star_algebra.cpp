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

#include "oracles.hpp"
#include "zassucc/decomposition.hpp"
#include "zassucc/rng.hpp"
#include "zassucc/star_algebra.hpp"

using namespace zassucc;
using namespace zassucc::testing;
using Catch::Matchers::WithinAbs;

TEST_CASE("nu symbols concatenate only on a shared vertex", "[star]") {
    const auto w = star(StarWord::nu(4, 0, 1, 0.5), StarWord::nu(4, 2, 3, 0.7));
    CHECK(w.empty());
    const auto v = star(StarWord::nu(4, 0, 1, 0.5), StarWord::nu(4, 1, 3, 0.7));
    CHECK_FALSE(v.empty());
    REQUIRE(v.buckets().count(2) == 1);
    CHECK(v.buckets().at(2).total(0, 3) == 0.5 * 0.7);
    CHECK(v.project() == 0.5 * 0.7);
}

TEST_CASE("mu and B boundary symbols", "[star]") {
    const auto w = star(star(StarWord::mu(3, 0, 0.2), StarWord::nu(3, 0, 1, 0.5)), StarWord::b(3, 1));
    CHECK(w.left() == LeftEnd::Mu);
    CHECK(w.right() == RightEnd::B);
    CHECK(w.project() == 0.2 * 0.5);
    const Eigen::VectorXd pb = w.project_b();
    CHECK(pb(1) == 0.2 * 0.5);
    CHECK(pb(0) == 0.0);

    CHECK(star(StarWord::mu(3, 0, 1.0), StarWord::nu(3, 1, 2, 1.0)).empty());
    CHECK(star(StarWord::nu(3, 0, 1, 1.0), StarWord::b(3, 2)).empty());
    CHECK(star(StarWord::mu(3, 2, 1.0), StarWord::b(3, 2)).project() == 1.0);
    CHECK(star(StarWord::mu(3, 1, 1.0), StarWord::b(3, 2)).empty());

    CHECK_THROWS(star(StarWord::b(3, 0), StarWord::nu(3, 0, 1, 1.0)));
    CHECK_THROWS(star(StarWord::nu(3, 0, 1, 1.0), StarWord::mu(3, 1, 1.0)));
    CHECK_THROWS(StarWord::mu(3, 1, 1.0) + StarWord::nu(3, 0, 1, 1.0));
    CHECK_THROWS(StarWord::nu(3, 1, 1, 1.0));
    CHECK_THROWS(StarWord::nu(3, 0, 1, 1.0).project_b());
}

TEST_CASE("star product is associative", "[star]") {
    Eigen::MatrixXd m(3, 3);
    m << 0, 0.3, -0.2, 0.3, 0, 0.5, -0.2, 0.5, 0;
    const auto s = StarWord::edge_sum(m);
    const auto u = s + StarWord::unit(3);
    const auto l = star(star(u, s), u);
    const auto r = star(u, star(s, u));
    CHECK((l - r).norm() < 1e-15);
    CHECK((star_power(s, 3) - star(s, star(s, s))).norm() == 0.0);
    CHECK((star_power(s, 3).buckets().at(3).total - m * m * m).norm() < 1e-15);
    CHECK_THROWS(star_power(s, -1));
}

TEST_CASE("star exponential of the edge sum", "[star]") {
    Eigen::MatrixXd m(2, 2);
    m << 0, 0.4, 0.4, 0;
    const auto e = star_exp(StarWord::edge_sum(m));
    Eigen::MatrixXd total = Eigen::MatrixXd::Zero(2, 2);
    for (const auto &[len, b] : e.value.buckets()) {
        total += b.total;
    }
    Eigen::Matrix2d ref;
    ref << std::cosh(0.4), std::sinh(0.4), std::sinh(0.4), std::cosh(0.4);
    CHECK((total - ref).norm() < 1e-15);
    CHECK_FALSE(e.growth_flagged);
}

TEST_CASE("star decomposition matches phi on invertible couplings", "[star]") {
    CounterRng rng(17);
    for (int n : {2, 3, 4, 5}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto p = ClusterParams::random(n, rng);
            const auto sd = star_decompose(p);
            const auto phi = decompose(p, DecomposeMethod::Phi);
            CHECK(sd.plan.provenance == PlanProvenance::StarAlgebra);
            CHECK_FALSE(sd.growth_flagged);
            REQUIRE(sd.plan.factors.size() == phi.factors.size());
            for (std::size_t f = 0; f < phi.factors.size(); ++f) {
                CHECK(sd.plan.factors[f].generator == phi.factors[f].generator);
                CHECK_THAT(sd.plan.factors[f].angle, WithinAbs(phi.factors[f].angle, 1e-14));
            }
        }
    }
}

TEST_CASE("star decomposition on a singular coupling", "[star]") {
    const auto p = singular_witness();
    const auto sd = star_decompose(p);
    const Eigen::VectorXd paths = gamma_by_paths(p, 12);
    for (int k = 0; k < 4; ++k) {
        CHECK_THAT(sd.plan.b_angle(k), WithinAbs(paths(k), 1e-12));
    }
    const Eigen::MatrixXd naive = phi_by_inverse(p.coupling());
    CHECK_FALSE((naive.allFinite() && naive.norm() < 1e6));
}

TEST_CASE("inverse rule cancels the last nu symbol", "[star]") {
    const auto w = star(StarWord::nu(3, 0, 1, 0.5), StarWord::nu(3, 1, 2, 0.25));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
    m(0, 1) = m(1, 0) = 0.5;
    m(1, 2) = m(2, 1) = 0.25;
    const auto c = star_inverse_edges(w, m);
    REQUIRE(c.buckets().count(1) == 1);
    CHECK(c.buckets().at(1).total(0, 1) == 0.5);
    CHECK(c.buckets().at(1).total.sum() == 0.5);
    CHECK(star_inverse_edges(StarWord::unit(3), m).empty());
    m(1, 2) = m(2, 1) = 0.0;
    CHECK(star_inverse_edges(w, m).empty());
}

TEST_CASE("inverse form picks up vertex degrees", "[star]") {
    SECTION("two blocks") {
        ClusterParams p(2);
        p.set_pair(0, 1, 0.3);
        p.set_single(0, 0.2);
        p.set_single(1, -0.1);
        const Eigen::VectorXd lit = star_inverse_form_angles(p);
        const auto phi = decompose(p);
        CHECK_THAT(lit(0), WithinAbs(phi.b_angle(0), 1e-15));
        CHECK_THAT(lit(1), WithinAbs(phi.b_angle(1), 1e-15));
    }
    SECTION("four blocks") {
        CounterRng rng(3);
        const auto p = ClusterParams::random(4, rng);
        const Eigen::VectorXd lit = star_inverse_form_angles(p);
        const auto phi = decompose(p);
        for (int k = 0; k < 4; ++k) {
            CHECK_THAT(lit(k), WithinAbs(3.0 * phi.b_angle(k), 1e-14));
        }
    }
}
