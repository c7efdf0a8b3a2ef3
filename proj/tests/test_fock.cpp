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

#include "zassucc/fock.hpp"
#include "zassucc/rng.hpp"

using namespace zassucc;
using Catch::Matchers::WithinAbs;

namespace {

ModesPtr orbitals(int n_orb, int n_occ) { return make_modes(ModeIndexing(n_orb, n_occ)); }

double dist(const FockOperator &a, const FockOperator &b) { return (a - b).norm(); }

} // namespace

TEST_CASE("mode indexing is orbital-major with spin up first", "[fock]") {
    const ModeIndexing m(3, 1);
    CHECK(m.mode(1, Spin::Up) == 0);
    CHECK(m.mode(1, Spin::Down) == 1);
    CHECK(m.mode(3, Spin::Down) == 5);
    CHECK(m.dim() == 64);
    CHECK_THROWS_AS(m.mode(4, Spin::Up), std::out_of_range);
}

TEST_CASE("mode indexing validates blocks and size", "[fock]") {
    CHECK_NOTHROW(ModeIndexing(4, 2, {{1, 3}, {2, 4}}));
    CHECK_THROWS(ModeIndexing(4, 2, {{1, 3}, {1, 4}}));
    CHECK_THROWS(ModeIndexing(4, 2, {{1, 2}, {3, 4}}));
    CHECK_THROWS(ModeIndexing(4, 2, {{1, 3}}));
    CHECK_THROWS_AS(ModeIndexing(8, 4), std::length_error);
    const auto m = ModeIndexing::for_blocks(3);
    CHECK(m.block(2).occupied == 3);
    CHECK(m.block(2).virtual_orbital == 6);
}

TEST_CASE("single mode creation", "[fock]") {
    const auto modes = orbitals(1, 1);
    const auto c = fock::creation(modes, 1, Spin::Up);
    CHECK(c.dim() == 4);
    CHECK(c.nnz() == 2);
    CHECK(dist(anticommutator(c.adjoint(), c), FockOperator::identity(modes)) == 0.0);
    CHECK_THROWS_AS(fock::creation(modes, 2), std::out_of_range);
}

TEST_CASE("canonical anticommutation relations on three orbitals", "[fock]") {
    const auto modes = orbitals(3, 1);
    const auto id = FockOperator::identity(modes);
    for (int s = 0; s < 6; ++s) {
        const auto cs = fock::creation(modes, s);
        CHECK(cs.multiply(cs).norm() == 0.0);
        for (int t = 0; t < 6; ++t) {
            const auto ct = fock::creation(modes, t);
            CHECK(anticommutator(cs, ct).norm() == 0.0);
            const auto acc = anticommutator(cs.adjoint(), ct);
            CHECK(dist(acc, s == t ? id : FockOperator::zero(modes)) == 0.0);
        }
    }
}

TEST_CASE("opposite-spin operators on different orbitals anticommute", "[fock]") {
    const auto modes = orbitals(2, 1);
    const Eigen::MatrixXcd a = fock::annihilation(modes, 1, Spin::Up).dense();
    const Eigen::MatrixXcd c = fock::creation(modes, 2, Spin::Down).dense();
    CHECK((a * c + c * a).norm() == 0.0);
}

TEST_CASE("adjoint is an involution", "[fock]") {
    const auto modes = make_modes(ModeIndexing::for_blocks(2));
    const auto a = fock::block_a(modes, 0, 1);
    CHECK(dist(a.adjoint().adjoint(), a) == 0.0);
}

TEST_CASE("pair operators are normalized", "[fock]") {
    const auto modes = orbitals(2, 1);
    const Eigen::VectorXcd vac = fock::vacuum(*modes);
    const auto closed = fock::pair_plus(modes, 1, 1);
    CHECK((fock::pair_minus(modes, 1, 1).apply(closed.apply(vac)) - vac).norm() == 0.0);
    const auto open = fock::pair_plus(modes, 1, 2);
    CHECK_THAT((fock::pair_minus(modes, 1, 2).apply(open.apply(vac)) - vac).norm(), WithinAbs(0.0, 1e-15));
    CHECK(fock::pair_minus(modes, 1, 2).apply(closed.apply(vac)).norm() == 0.0);
    const auto diag = fock::creation(modes, 1, Spin::Up) * fock::creation(modes, 1, Spin::Down);
    CHECK(dist(closed, diag) == 0.0);
    CHECK(dist(fock::pair_minus(modes, 1, 2), open.adjoint()) == 0.0);
}

TEST_CASE("reference state", "[fock]") {
    SECTION("one orbital") {
        const auto modes = orbitals(1, 1);
        const Eigen::VectorXcd ref = fock::reference_state(*modes);
        const auto pair = fock::creation(modes, 1, Spin::Up) * fock::creation(modes, 1, Spin::Down);
        CHECK((ref - pair.apply(fock::vacuum(*modes))).norm() == 0.0);
        CHECK(ref.norm() == 1.0);
    }
    SECTION("occupied orbitals are doubly filled") {
        const auto modes = make_modes(ModeIndexing::for_blocks(2));
        const Eigen::VectorXcd ref = fock::reference_state(*modes);
        for (int p = 1; p <= 4; ++p) {
            const double n = ref.dot(fock::number(modes, p).apply(ref)).real();
            CHECK(n == (p <= 2 ? 2.0 : 0.0));
        }
        const auto sm = fock::pair_minus(modes, 1, 1);
        CHECK(sm.apply(sm.apply(ref)).norm() == 0.0);
    }
}

TEST_CASE("block generators are anti-Hermitian and conserve particle number", "[fock]") {
    const auto modes = make_modes(ModeIndexing::for_blocks(3));
    const auto n_tot = fock::total_number(modes);
    for (int i = 0; i < 3; ++i) {
        const auto b = fock::block_b(modes, i);
        CHECK(dist(b.adjoint(), -1.0 * b) == 0.0);
        CHECK(commutator(b, n_tot).norm() == 0.0);
        for (int j = i + 1; j < 3; ++j) {
            const auto a = fock::block_a(modes, i, j);
            CHECK(dist(a.adjoint(), -1.0 * a) == 0.0);
            CHECK(commutator(a, n_tot).norm() == 0.0);
        }
    }
    CHECK_THROWS(fock::block_a(modes, 1, 1));
    CHECK_THROWS(fock::block_b(modes, 3));
}

TEST_CASE("B generators commute with each other", "[fock]") {
    const auto modes = make_modes(ModeIndexing::for_blocks(3));
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
            CHECK(commutator(fock::block_b(modes, i), fock::block_b(modes, k)).norm() == 0.0);
        }
    }
}

TEST_CASE("A and B away from shared blocks commute", "[fock]") {
    const auto modes = make_modes(ModeIndexing::for_blocks(3));
    CHECK(commutator(fock::block_a(modes, 0, 1), fock::block_b(modes, 2)).norm() == 0.0);
}

TEST_CASE("A12 with B1 gives B2 weighted by the closed/open parity of block 1", "[fock]") {
    const auto modes = make_modes(ModeIndexing::for_blocks(2));
    const auto a = fock::block_a(modes, 0, 1);
    const auto b1 = fock::block_b(modes, 0);
    const auto b2 = fock::block_b(modes, 1);
    // parity = n_{p1} - n_{q1} - 1 is +1 on the closed pair and -1 on the open pair
    const auto &p1 = modes->block(0);
    const auto z1 = fock::number(modes, p1.occupied) - fock::number(modes, p1.virtual_orbital) -
                    FockOperator::identity(modes);
    const auto lhs = commutator(a, b1);
    // Restricted to the span reached from the reference both forms agree.
    const Eigen::VectorXcd ref = fock::reference_state(*modes);
    for (const auto &state : {ref, b1.apply(ref), b2.apply(ref), a.apply(ref)}) {
        CHECK_THAT((lhs.apply(state) - (z1 * b2).apply(state)).norm(), WithinAbs(0.0, 1e-13));
    }
    CHECK_THAT(dist(lhs, b2), WithinAbs(8.7177978870813462, 1e-10));
}

TEST_CASE("general T1 and T2' operators", "[fock]") {
    const auto modes = make_modes(ModeIndexing(4, 2, {{1, 3}, {2, 4}}));
    CHECK(fock::t1_general(modes, {}).norm() == 0.0);
    CHECK(fock::t1_general(modes, {{{1, 3}, 0.0}}).norm() == 0.0);

    const std::map<std::pair<int, int>, double> t1{{{1, 3}, 0.3}, {{2, 4}, -0.2}, {{1, 4}, 0.7}};
    const auto op = fock::t1_general(modes, t1);
    CHECK(dist(op.adjoint(), -1.0 * op) == 0.0);

    SECTION("block pattern reproduces the block generators") {
        const auto y = fock::t1_general(modes, {{{1, 3}, 0.3}, {{2, 4}, -0.2}});
        const auto ref = 0.3 * fock::block_b(modes, 0) + (-0.2) * fock::block_b(modes, 1);
        CHECK(dist(y, ref) == 0.0);
        const auto x = fock::t2prime_general(modes, {{{1, 2, 3, 4}, 0.4}});
        CHECK(dist(x, 0.4 * fock::block_a(modes, 0, 1)) == 0.0);
    }
    CHECK_THROWS(fock::t1_general(modes, {{{3, 1}, 0.1}}));
    CHECK_THROWS(fock::t2prime_general(modes, {{{1, 1, 3, 4}, 0.1}}));
}

TEST_CASE("operator products honour the drop tolerance", "[fock]") {
    const auto modes = make_modes(ModeIndexing::for_blocks(2));
    const auto b = fock::block_b(modes, 0);
    const auto small = 1e-20 * b;
    CHECK(small.multiply(b, 1e-30).nnz() > 0);
    CHECK(small.multiply(b, 1e-10).nnz() == 0);
    CHECK_THROWS(FockOperator(modes, SparseMatrix(3, 3)));
}
