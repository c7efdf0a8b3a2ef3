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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "zassucc/params_io.hpp"
#include "zassucc/rng.hpp"

using namespace zassucc;

TEST_CASE("parse block parameters", "[params_io]") {
    const auto p = parse_params_json(R"({"mu_pair":{"1,2":0.1},"mu_single":{"1":0.2,"2":0.3}})");
    REQUIRE(p.n_blocks() == 2);
    CHECK(p.pair(0, 1) == 0.1);
    CHECK(p.pair(1, 0) == 0.1);
    CHECK(p.single(0) == 0.2);
    CHECK(p.single(1) == 0.3);

    const auto q = parse_params_json(R"({"blocks":4,"mu_pair":{"2,3":-0.5}})");
    CHECK(q.n_blocks() == 4);
    CHECK(q.pair(1, 2) == -0.5);
    CHECK(q.single(3) == 0.0);

    CHECK(parse_params_json(R"({"mu_single":{"3":1}})").n_blocks() == 3);
}

TEST_CASE("reject malformed parameters", "[params_io]") {
    const char *bad[] = {
        "not json",
        "[1,2]",
        R"({"mu_pair":{"2,1":0.1}})",
        R"({"mu_pair":{"1,1":0.1}})",
        R"({"mu_pair":{"0,1":0.1}})",
        R"({"mu_pair":{"1,x":0.1}})",
        R"({"mu_pair":{"1,2,3":0.1}})",
        R"({"mu_pair":{"1,2":"big"}})",
        R"({"mu_single":{"1":0.1},"extra":1})",
        R"({"mu_single":[0.1]})",
        R"({"blocks":1,"mu_single":{"2":0.1}})",
        R"({"blocks":0})",
        R"({"blocks":2.5})",
        R"({})",
    };
    for (const char *text : bad) {
        INFO(text);
        CHECK_THROWS_AS(parse_params_json(text), ParseError);
    }
}

TEST_CASE("parameter round trip", "[params_io]") {
    CounterRng rng(77);
    for (int n : {1, 2, 5}) {
        const auto p = ClusterParams::random(n, rng);
        const auto q = parse_params_json(params_to_json(p));
        REQUIRE(q.n_blocks() == n);
        CHECK(q.coupling() == p.coupling());
        CHECK(q.singles() == p.singles());
    }
    CHECK(params_to_json(ClusterParams(2)) == R"({"blocks":2,"mu_pair":{},"mu_single":{"1":0,"2":0}})");
}

TEST_CASE("file loading", "[params_io]") {
    const auto path = std::filesystem::temp_directory_path() / "zassucc_params_io_test.json";
    {
        std::ofstream out(path);
        out << R"({"mu_single":{"1":0.5}})";
    }
    CHECK(load_params_file(path.string()).single(0) == 0.5);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_params_file(path.string()), std::runtime_error);
}

TEST_CASE("general excitation inputs", "[params_io]") {
    const auto t1 = parse_t1_json(R"({"n_orb":3,"n_occ":1,"mu":{"2,1":0.25}})");
    CHECK(t1.n_orb == 3);
    CHECK(t1.n_occ == 1);
    CHECK(t1.mu.at({2, 1}) == 0.25);
    CHECK_THROWS_AS(parse_t1_json(R"({"n_orb":3})"), ParseError);
    CHECK_THROWS_AS(parse_t1_json(R"({"n_orb":3,"n_occ":1,"mu":{"2":0.1}})"), ParseError);

    const auto t2 = parse_t2_json(R"({"mu":{"3,4,1,2":-0.125}})");
    CHECK(t2.mu.at({3, 4, 1, 2}) == -0.125);
    CHECK(parse_t2_json("{}").mu.empty());
    CHECK_THROWS_AS(parse_t2_json(R"({"mu":{"1,2,3":0.1}})"), ParseError);
}
