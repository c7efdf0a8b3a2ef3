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
#include "zassucc/circuit.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "zassucc/numeric_format.hpp"

namespace zassucc {

BlockRegisterLayout::BlockRegisterLayout(int n_blocks, int n_frozen)
    : n_blocks_(n_blocks), n_frozen_(n_frozen) {
    if (n_blocks < 1 || n_frozen < 0) {
        throw std::invalid_argument("BlockRegisterLayout: need n_blocks >= 1 and n_frozen >= 0");
    }
    if (n_qubits() > 63) {
        throw std::invalid_argument("BlockRegisterLayout: at most 63 qubits");
    }
}

int BlockRegisterLayout::p(int block) const {
    if (block < 0 || block >= n_blocks_) {
        throw std::out_of_range("BlockRegisterLayout: block " + std::to_string(block) + " out of range");
    }
    return 3 * block;
}

int BlockRegisterLayout::q(int block) const { return p(block) + 1; }

int BlockRegisterLayout::pq(int block) const { return p(block) + 2; }

int BlockRegisterLayout::frozen(int index) const {
    if (index < 0 || index >= n_frozen_) {
        throw std::out_of_range("BlockRegisterLayout: frozen qubit out of range");
    }
    return 3 * n_blocks_ + index;
}

std::uint64_t BlockRegisterLayout::encode(std::uint64_t label) const {
    std::uint64_t bits = 0;
    for (int k = 0; k < n_blocks_; ++k) {
        bits |= std::uint64_t{1} << (((label >> k) & 1U) ? pq(k) : p(k));
    }
    for (int f = 0; f < n_frozen_; ++f) {
        bits |= std::uint64_t{1} << frozen(f);
    }
    return bits;
}

bool BlockRegisterLayout::decode(std::uint64_t bits, std::uint64_t &label) const {
    label = 0;
    for (int k = 0; k < n_blocks_; ++k) {
        const std::uint64_t local = (bits >> p(k)) & 7U;
        if (local == 1U) {
            continue;
        }
        if (local != 4U) {
            return false;
        }
        label |= std::uint64_t{1} << k;
    }
    for (int f = 0; f < n_frozen_; ++f) {
        if (((bits >> frozen(f)) & 1U) == 0) {
            return false;
        }
    }
    return true;
}

CircuitIR emit(const DecompositionPlan &plan, const BlockRegisterLayout &layout, bool prune) {
    CircuitIR c;
    c.n_qubits = layout.n_qubits();
    for (auto it = plan.factors.rbegin(); it != plan.factors.rend(); ++it) {
        const PlanFactor &f = *it;
        if (prune && f.angle == 0.0) {
            continue;
        }
        const Generator &g = f.generator;
        if (g.kind == GeneratorKind::B) {
            if (g.i < 0 || g.i >= layout.n_blocks()) {
                throw std::out_of_range("emit: B generator block outside layout");
            }
            c.gates.emplace_back(Givens2{{layout.p(g.i), layout.pq(g.i)}, f.angle, g});
        } else {
            if (g.i < 0 || g.j >= layout.n_blocks() || g.i >= g.j) {
                throw std::out_of_range("emit: A generator blocks outside layout");
            }
            c.gates.emplace_back(
                Givens4{{layout.p(g.i), layout.pq(g.i), layout.p(g.j), layout.pq(g.j)}, f.angle, g});
        }
    }
    return c;
}

kernels::RotationGate to_rotation(const Gate &g) {
    kernels::RotationGate r;
    if (const auto *g2 = std::get_if<Givens2>(&g)) {
        const std::uint64_t a = std::uint64_t{1} << g2->qubits[0];
        const std::uint64_t b = std::uint64_t{1} << g2->qubits[1];
        r.support = a | b;
        r.pattern_a = a;
        r.pattern_b = b;
        r.theta = g2->theta;
    } else {
        const auto &g4 = std::get<Givens4>(g);
        std::array<std::uint64_t, 4> m{};
        for (std::size_t i = 0; i < 4; ++i) {
            m[i] = std::uint64_t{1} << g4.qubits[i];
        }
        r.support = m[0] | m[1] | m[2] | m[3];
        r.pattern_a = m[0] | m[2];
        r.pattern_b = m[1] | m[3];
        r.theta = g4.theta;
    }
    return r;
}

SimulationResult simulate(const CircuitIR &c, const BlockRegisterLayout &layout) {
    if (c.n_qubits != layout.n_qubits()) {
        throw std::invalid_argument("simulate: circuit and layout qubit counts differ");
    }
    if (layout.n_blocks() > 16) {
        throw std::invalid_argument("simulate: at most 16 blocks");
    }
    std::vector<kernels::RotationGate> gates;
    gates.reserve(c.gates.size());
    for (const auto &g : c.gates) {
        gates.push_back(to_rotation(g));
    }
    const std::uint64_t dim = std::uint64_t{1} << layout.n_blocks();
    std::vector<std::uint64_t> inputs(dim);
    for (std::uint64_t s = 0; s < dim; ++s) {
        inputs[s] = layout.encode(s);
    }
    const auto outputs = kernels::parallel::apply_rotations(gates, inputs);

    SimulationResult r;
    r.unitary = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t col = 0; col < dim; ++col) {
        for (const auto &[bits, amp] : outputs[col]) {
            std::uint64_t row = 0;
            if (layout.decode(bits, row)) {
                r.unitary(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += amp;
            } else {
                r.leakage += amp * amp;
            }
        }
    }
    return r;
}

namespace {

template <std::size_t K>
void write_gate(std::ostream &os, const char *name, const std::array<int, K> &qubits, double theta) {
    os << name << ' ';
    for (std::size_t i = 0; i < K; ++i) {
        os << (i ? "," : "") << "q[" << qubits[i] << ']';
    }
    os << " theta=" << format_double(theta) << '\n';
}

template <std::size_t K>
void write_json_gate(std::ostream &os, const Generator &g, double theta, const std::array<int, K> &qubits) {
    if (g.kind == GeneratorKind::A) {
        os << "{\"gen\":\"A\",\"i\":" << g.i + 1 << ",\"j\":" << g.j + 1;
    } else {
        os << "{\"gen\":\"B\",\"k\":" << g.i + 1;
    }
    os << ",\"angle\":" << format_double(theta) << ",\"qubits\":[";
    for (std::size_t i = 0; i < K; ++i) {
        os << (i ? "," : "") << qubits[i];
    }
    os << "]}";
}

} // namespace

std::string export_text(const CircuitIR &c, bool sign_flip) {
    std::ostringstream os;
    const double sign = sign_flip ? -1.0 : 1.0;
    for (const auto &g : c.gates) {
        if (const auto *g2 = std::get_if<Givens2>(&g)) {
            write_gate(os, "givens2", g2->qubits, sign * g2->theta);
        } else {
            const auto &g4 = std::get<Givens4>(g);
            write_gate(os, "givens4", g4.qubits, sign * g4.theta);
        }
    }
    return os.str();
}

std::string circuit_to_json(const CircuitIR &c) {
    std::ostringstream os;
    os << "{\"n_qubits\":" << c.n_qubits << ",\"gates\":[";
    bool first = true;
    for (const auto &g : c.gates) {
        if (!first) {
            os << ',';
        }
        first = false;
        if (const auto *g2 = std::get_if<Givens2>(&g)) {
            write_json_gate(os, g2->source, g2->theta, g2->qubits);
        } else {
            const auto &g4 = std::get<Givens4>(g);
            write_json_gate(os, g4.source, g4.theta, g4.qubits);
        }
    }
    os << "]}";
    return os.str();
}

} // namespace zassucc
