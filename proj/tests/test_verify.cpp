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

#include <cmath>

#include "oracles.hpp"
#include "zassucc/decomposition.hpp"
#include "zassucc/linalg.hpp"
#include "zassucc/rng.hpp"
#include "zassucc/verify.hpp"

using namespace zassucc;
using namespace zassucc::testing;
using Catch::Matchers::WithinAbs;

namespace {

Eigen::MatrixXcd dense(const SparseMatrix &m) { return Eigen::MatrixXcd(m); }

} // namespace

TEST_CASE("expm agrees with closed forms", "[verify]") {
    Eigen::Matrix2d g;
    g << 0, -0.7, 0.7, 0;
    Eigen::Matrix2d rot;
    rot << std::cos(0.7), -std::sin(0.7), std::sin(0.7), std::cos(0.7);
    CHECK((expm(Eigen::MatrixXd(g)) - rot).norm() < 1e-15);

    Eigen::MatrixXd nil = Eigen::MatrixXd::Zero(3, 3);
    nil(0, 1) = 2.0;
    nil(1, 2) = 3.0;
    Eigen::MatrixXd ref = Eigen::MatrixXd::Identity(3, 3) + nil + 0.5 * nil * nil;
    CHECK((expm(nil) - ref).norm() < 1e-14);

    CounterRng rng(5);
    Eigen::MatrixXcd a(6, 6);
    for (Eigen::Index r = 0; r < 6; ++r) {
        for (Eigen::Index c = 0; c < 6; ++c) {
            a(r, c) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
    }
    CHECK(expm_inverse_defect(a) < 1e-13);
}

TEST_CASE("invariant blocks reproduce the dense exponential", "[verify]") {
    const auto space = OperatorSpace::full_fock(2);
    CounterRng rng(8);
    const auto p = ClusterParams::random(2, rng);
    const SparseMatrix g = space.x(p) + space.y(p);
    const Eigen::MatrixXcd ref = expm(dense(g));
    CHECK((dense(expm_sparse(g)) - ref).norm() < 1e-13);
    CHECK(unitarity_defect(expm_sparse(g)) < 1e-13);
}

TEST_CASE("restricted rep for one block", "[verify]") {
    ClusterParams p(1);
    p.set_single(0, 0.4);
    RestrictedRep rep(1);
    CHECK(rep.x(p).nonZeros() == 0);
    Eigen::Matrix2d ref;
    ref << 0, -0.4, 0.4, 0;
    CHECK((Eigen::MatrixXd(rep.y(p)) - ref).norm() == 0.0);
}

TEST_CASE("restricted rep matches Kronecker products", "[verify]") {
    for (int n : {2, 3, 4}) {
        RestrictedRep rep(n);
        for (int k = 0; k < n; ++k) {
            CHECK((Eigen::MatrixXd(rep.b(k)) - kron_b(n, k)).norm() == 0.0);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                CHECK((Eigen::MatrixXd(rep.a(i, j)) - kron_a(n, i, j)).norm() == 0.0);
            }
        }
    }
    CHECK_THROWS(RestrictedRep(0));
    CHECK_THROWS(RestrictedRep(RestrictedRep::kMaxBlocks + 1));
    CHECK_THROWS(RestrictedRep(3).a(1, 1));
}

TEST_CASE("intertwiner maps the restricted rep into Fock space", "[verify]") {
    for (int n : {1, 2, 3}) {
        const auto full = OperatorSpace::full_fock(n);
        const auto restr = OperatorSpace::restricted(n);
        const Eigen::MatrixXcd v = dense(RestrictedRep::intertwiner(full.modes()));
        REQUIRE(v.cols() == (Eigen::Index{1} << n));
        CHECK((v.adjoint() * v - Eigen::MatrixXcd::Identity(v.cols(), v.cols())).norm() < 1e-14);
        CHECK((v.col(0) - full.reference()).norm() < 1e-14);
        const Eigen::MatrixXcd proj = v * v.adjoint();
        for (int k = 0; k < n; ++k) {
            const Eigen::MatrixXcd g = dense(full.generator(Generator::b(k)));
            CHECK((v.adjoint() * g * v - dense(restr.generator(Generator::b(k)))).norm() < 1e-14);
            CHECK(((g * v) - proj * (g * v)).norm() < 1e-14);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const Eigen::MatrixXcd g = dense(full.generator(Generator::a(i, j)));
                CHECK((v.adjoint() * g * v - dense(restr.generator(Generator::a(i, j)))).norm() < 1e-14);
                CHECK(((g * v) - proj * (g * v)).norm() < 1e-14);
            }
        }
    }
}

TEST_CASE("automatic space selection", "[verify]") {
    CHECK_FALSE(OperatorSpace::automatic(3).is_restricted());
    CHECK(OperatorSpace::automatic(4).is_restricted());
    CHECK(OperatorSpace::restricted(5).dim() == 32);
    const auto r = OperatorSpace::restricted(3).reference();
    CHECK(r(0) == cplx(1.0));
    CHECK(r.norm() == 1.0);
}

TEST_CASE("commuting parameters give an exact plan", "[verify]") {
    ClusterParams p(3);
    p.set_single(0, 0.3);
    p.set_single(1, -0.2);
    p.set_single(2, 0.45);
    for (const auto &space : {OperatorSpace::full_fock(3), OperatorSpace::restricted(3)}) {
        const auto plan = decompose(p);
        CHECK(plan_residual(plan, p, space) < 1e-13);
        CHECK(unitarity_defect(plan_unitary(plan, space)) < 1e-13);
    }
}

TEST_CASE("plan unitary matches dense factor products", "[verify]") {
    CounterRng rng(21);
    const auto p = ClusterParams::random(3, rng);
    const auto plan = decompose(p);
    const auto space = OperatorSpace::restricted(3);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(8, 8);
    for (const auto &f : plan.factors) {
        u = u * expm(Eigen::MatrixXcd(f.angle * dense(space.generator(f.generator))));
    }
    CHECK((dense(plan_unitary(plan, space)) - u).norm() < 1e-14);
}

TEST_CASE("trotter comparison", "[verify]") {
    SECTION("commuting parameters") {
        ClusterParams p(2);
        p.set_single(0, 0.3);
        p.set_single(1, 0.1);
        const auto rep = trotter_compare(p, {1, 2}, false);
        REQUIRE(rep.rows.size() == 3);
        for (const auto &row : rep.rows) {
            CHECK(row.error < 1e-13);
        }
    }
    SECTION("first-order scaling") {
        CounterRng rng(4);
        const auto p = ClusterParams::random(3, rng).scaled(0.2);
        const auto rep = trotter_compare(p, {8, 16}, true);
        REQUIRE(rep.rows.size() == 3);
        CHECK(rep.rows[0].k == 0);
        CHECK(rep.rows[1].factor_count == 16);
        const double ratio = rep.rows[1].error / rep.rows[2].error;
        CHECK(ratio > 1.7);
        CHECK(ratio < 2.3);
    }
    SECTION("csv") {
        TrotterReport r;
        r.rows = {{0, 0.5, 3}, {1, 0.25, 2}};
        CHECK(trotter_csv(r) == "# k=0 denotes exact plan\nk,error,factor_count\n0,0.5,3\n1,0.25,2\n");
    }
    CHECK_THROWS(trotter_compare(ClusterParams(2), {0}, true));
}

TEST_CASE("state fidelity", "[verify]") {
    const ClusterParams zero(3);
    CHECK_THAT(state_fidelity_check(zero, OperatorSpace::full_fock(3)), WithinAbs(1.0, 1e-15));
    ClusterParams p(2);
    p.set_single(0, 0.2);
    CHECK_THAT(state_fidelity_check(p, OperatorSpace::restricted(2)), WithinAbs(1.0, 1e-14));
}

TEST_CASE("single step error vanishes without pair terms", "[verify]") {
    ClusterParams p(2);
    p.set_single(0, 0.2);
    p.set_single(1, -0.3);
    CHECK(single_step_error(p, p.singles(), OperatorSpace::restricted(2)) < 1e-14);
    CHECK(bch_side_check(p, OperatorSpace::restricted(2)) < 1e-14);
}
