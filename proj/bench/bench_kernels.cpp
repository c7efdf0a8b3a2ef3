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
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "zassucc/circuit.hpp"
#include "zassucc/decomposition.hpp"
#include "zassucc/fock.hpp"
#include "zassucc/kernels.hpp"
#include "zassucc/linalg.hpp"
#include "zassucc/rng.hpp"

namespace {

using namespace zassucc;

template <bool Parallel> void BM_Creation(benchmark::State &state) {
    const int n_modes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto m = Parallel ? kernels::parallel::creation(n_modes / 2, n_modes)
                          : kernels::serial::creation(n_modes / 2, n_modes);
        benchmark::DoNotOptimize(m.nonZeros());
    }
}

SparseMatrix cluster_matrix(int n_blocks, bool x_part) {
    CounterRng rng(7);
    const ClusterParams p = ClusterParams::random(n_blocks, rng);
    const ModesPtr modes = make_modes(ModeIndexing::for_blocks(n_blocks));
    return (x_part ? fock::cluster_x(modes, p) : fock::cluster_y(modes, p)).matrix();
}

template <bool Parallel> void BM_Spgemm(benchmark::State &state) {
    const int n_blocks = static_cast<int>(state.range(0));
    const SparseMatrix x = cluster_matrix(n_blocks, true);
    const SparseMatrix y = cluster_matrix(n_blocks, false);
    for (auto _ : state) {
        auto m = Parallel ? kernels::parallel::spgemm(x, y) : kernels::serial::spgemm(x, y);
        benchmark::DoNotOptimize(m.nonZeros());
    }
}

template <bool Parallel> void BM_Rotations(benchmark::State &state) {
    const int n_blocks = static_cast<int>(state.range(0));
    CounterRng rng(11);
    const ClusterParams p = ClusterParams::random(n_blocks, rng);
    const BlockRegisterLayout layout(n_blocks);
    const CircuitIR c = emit(decompose(p), layout);
    std::vector<kernels::RotationGate> gates;
    for (const auto &g : c.gates) {
        gates.push_back(to_rotation(g));
    }
    std::vector<std::uint64_t> inputs;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n_blocks); ++s) {
        inputs.push_back(layout.encode(s));
    }
    for (auto _ : state) {
        auto out = Parallel ? kernels::parallel::apply_rotations(gates, inputs)
                            : kernels::serial::apply_rotations(gates, inputs);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel> void BM_Integrate(benchmark::State &state) {
    const int order = static_cast<int>(state.range(0));
    const Quadrature q = gauss_legendre(order);
    const Eigen::MatrixXcd x = Eigen::MatrixXcd::Random(32, 32) * 0.1;
    const Eigen::MatrixXcd y = Eigen::MatrixXcd::Random(32, 32);
    auto integrand = [&](double t) -> Eigen::MatrixXcd {
        return expm(Eigen::MatrixXcd(-t * x)) * y * expm(Eigen::MatrixXcd(t * x));
    };
    for (auto _ : state) {
        auto m = Parallel ? kernels::parallel::integrate(q.nodes, q.weights, integrand)
                          : kernels::serial::integrate(q.nodes, q.weights, integrand);
        benchmark::DoNotOptimize(m.data());
    }
}

} // namespace

BENCHMARK(BM_Creation<false>)->Arg(10)->Arg(14);
BENCHMARK(BM_Creation<true>)->Arg(10)->Arg(14);
BENCHMARK(BM_Spgemm<false>)->Arg(2)->Arg(3);
BENCHMARK(BM_Spgemm<true>)->Arg(2)->Arg(3);
BENCHMARK(BM_Rotations<false>)->Arg(8)->Arg(12);
BENCHMARK(BM_Rotations<true>)->Arg(8)->Arg(12);
BENCHMARK(BM_Integrate<false>)->Arg(16)->Arg(32);
BENCHMARK(BM_Integrate<true>)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
