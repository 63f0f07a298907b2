// Copyright 2026 The qshor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qshor/sim.h"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "qshor/error.h"

namespace qshor {
namespace {

constexpr double kPi = std::numbers::pi;
const double kS = 1.0 / std::sqrt(2.0);

std::vector<Amplitude> to_vec(std::span<const Amplitude> s) {
    return {s.begin(), s.end()};
}

double max_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

std::vector<GateOp> every_gate_kind(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    return {
        GateOp::id(1),
        GateOp::h(0),
        GateOp::h(3),
        GateOp::x(2),
        GateOp::sx(1),
        GateOp::phase(2, angle(rng)),
        GateOp::rz(0, angle(rng)),
        GateOp::cx(3, 1),
        GateOp::cx(0, 2),
        GateOp::swap(0, 3),
        GateOp::cphase(2, 0, angle(rng)),
        GateOp::ccphase(3, 1, 2, angle(rng)),
        GateOp::cswap(1, 3, 0),
        GateOp::cswap(2, 0, 1),
    };
}

}  // namespace

TEST(NewState, ground_state) {
    QuantumState one(1, 0, 5);
    ASSERT_EQ(one.amplitudes().size(), 2u);
    EXPECT_EQ(one.amplitudes()[0], Amplitude(1.0));
    EXPECT_EQ(one.amplitudes()[1], Amplitude(0.0));

    QuantumState three(3, 2, 9);
    ASSERT_EQ(three.amplitudes().size(), 8u);
    EXPECT_EQ(three.amplitudes()[0], Amplitude(1.0));
    EXPECT_FALSE(three.classical_bit(0));
    EXPECT_FALSE(three.classical_bit(1));
    EXPECT_DOUBLE_EQ(three.norm_squared(), 1.0);
}

TEST(NewState, capacity) {
    EXPECT_THROW(QuantumState(25, 0, 0), CapacityError);
    EXPECT_THROW(QuantumState(0, 0, 0), CapacityError);
}

TEST(ApplyGate, hadamard_on_zero) {
    QuantumState s(1, 0, 0);
    s.apply(GateOp::h(0));
    EXPECT_NEAR(s.amplitudes()[0].real(), kS, 1e-15);
    EXPECT_NEAR(s.amplitudes()[1].real(), kS, 1e-15);
}

TEST(ApplyGate, phase_pi_on_one) {
    QuantumState s(1, 0, 0);
    s.set_basis_state(1);
    s.apply(GateOp::phase(0, kPi));
    EXPECT_NEAR(std::abs(s.amplitudes()[1] - Amplitude(-1.0)), 0.0, 1e-15);
    EXPECT_EQ(s.amplitudes()[0], Amplitude(0.0));
}

TEST(ApplyGate, bell_state_matches_matrix_oracle) {
    QuantumState s(2, 0, 0);
    s.apply(GateOp::h(0));
    s.apply(GateOp::cx(0, 1));
    auto expected = oracle::multiply(oracle::embed(GateOp::cx(0, 1), 2), oracle::embed(GateOp::h(0), 2));
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(std::abs(s.amplitudes()[i] - expected[i][0]), 0.0, 1e-15);
    }
    EXPECT_NEAR(s.amplitudes()[0].real(), kS, 1e-15);
    EXPECT_NEAR(s.amplitudes()[3].real(), kS, 1e-15);
}

TEST(ApplyGate, every_kind_matches_matrix_oracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        for (const GateOp &g : every_gate_kind(rng)) {
            auto v = oracle::random_state(4, rng);
            QuantumState s(4, 0, 0);
            s.set_amplitudes(v);
            s.apply(g);
            auto expected = oracle::apply(oracle::embed(g, 4), v);
            EXPECT_LT(max_diff(s.amplitudes(), expected), 1e-12) << g.str();
        }
    }
}

TEST(ApplyGate, gate_then_inverse_is_identity) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; trial++) {
        for (const GateOp &g : every_gate_kind(rng)) {
            auto v = oracle::random_state(4, rng);
            QuantumState s(4, 0, 0);
            s.set_amplitudes(v);
            Circuit c;
            c.append(g);
            run_on(s, c);
            run_on(s, c.inverse());
            EXPECT_LT(max_diff(s.amplitudes(), v), 1e-10) << g.str();
        }
    }
}

TEST(ApplyGate, unmet_condition_is_bit_exact_identity) {
    std::mt19937_64 rng(13);
    QuantumState s(4, 1, 0);
    s.set_amplitudes(oracle::random_state(4, rng));
    s.set_classical_bit(0, false);
    const auto before = to_vec(s.amplitudes());
    for (const GateOp &g : every_gate_kind(rng)) {
        s.apply(g.conditioned_on(0, true));
    }
    const auto after = to_vec(s.amplitudes());
    EXPECT_EQ(before, after);
}

TEST(ApplyGate, met_condition_applies) {
    QuantumState s(1, 1, 0);
    s.set_classical_bit(0, false);
    s.apply(GateOp::x(0).conditioned_on(0, false));
    EXPECT_EQ(s.amplitudes()[1], Amplitude(1.0));
}

TEST(ApplyGate, errors) {
    QuantumState s(2, 1, 0);
    EXPECT_THROW(s.apply(GateOp::x(2)), InvalidArgument);
    EXPECT_THROW(s.apply(GateOp::cx(0, 5)), InvalidArgument);
    EXPECT_THROW(s.apply(GateOp::x(0).conditioned_on(0)), InvalidArgument);
    EXPECT_THROW(s.apply(GateOp::x(0).conditioned_on(7)), InvalidArgument);
}

TEST(ApplyGate, norm_preserved_over_random_sequences) {
    std::mt19937_64 rng(14);
    QuantumState s(4, 0, 0);
    for (int step = 0; step < 2000; step++) {
        auto gates = every_gate_kind(rng);
        s.apply(gates[rng() % gates.size()]);
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
}

TEST(Measure, certain_outcome) {
    QuantumState s(1, 1, 3);
    s.set_basis_state(1);
    EXPECT_TRUE(s.measure(0, 0));
    ASSERT_EQ(s.record().size(), 1u);
    EXPECT_EQ(s.record()[0], (MeasurementEntry{0, true, 1.0}));
    EXPECT_TRUE(s.classical_bit(0));
    EXPECT_TRUE(s.classical_bit_written(0));
}

TEST(Measure, plus_state_seeded_and_balanced) {
    auto outcome = [](uint64_t seed) {
        QuantumState s(1, 1, seed);
        s.apply(GateOp::h(0));
        return s.measure(0, 0);
    };
    EXPECT_EQ(outcome(42), outcome(42));
    int ones = 0;
    const int runs = 10000;
    for (int seed = 0; seed < runs; seed++) {
        ones += outcome(seed);
    }
    const double f = static_cast<double>(ones) / runs;
    EXPECT_GE(f, 0.48);
    EXPECT_LE(f, 0.52);
}

TEST(Measure, bell_pair_bits_agree) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        QuantumState s(2, 2, seed);
        s.apply(GateOp::h(0));
        s.apply(GateOp::cx(0, 1));
        bool m0 = s.measure(0, 0);
        bool m1 = s.measure(1, 1);
        EXPECT_EQ(m0, m1);
        EXPECT_DOUBLE_EQ(s.record()[1].probability, 1.0);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    }
}

TEST(Measure, born_statistics_within_bound) {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> angle(0, kPi);
    const int runs = 4000;
    for (int trial = 0; trial < 5; trial++) {
        const double t = angle(rng);
        const double p1 = std::sin(t / 2) * std::sin(t / 2);
        int ones = 0;
        for (int seed = 0; seed < runs; seed++) {
            QuantumState s(1, 1, 1000 * trial + seed);
            s.set_amplitudes({std::cos(t / 2), Amplitude(0, std::sin(t / 2))});
            ones += s.measure(0, 0);
        }
        EXPECT_LT(std::abs(static_cast<double>(ones) / runs - p1), 4.0 / std::sqrt(runs)) << t;
    }
}

TEST(Measure, out_of_range) {
    QuantumState s(1, 1, 0);
    EXPECT_THROW(s.measure(1, 0), InvalidArgument);
    EXPECT_THROW(s.measure(0, 1), InvalidArgument);
}

TEST(Reset, one_to_zero) {
    QuantumState s(1, 0, 0);
    s.set_basis_state(1);
    s.reset(0);
    EXPECT_EQ(s.amplitudes()[0], Amplitude(1.0));
    EXPECT_TRUE(s.record().empty());
}

TEST(Reset, plus_to_zero) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        QuantumState s(1, 0, seed);
        s.apply(GateOp::h(0));
        s.reset(0);
        EXPECT_NEAR(std::abs(s.amplitudes()[0]), 1.0, 1e-12);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    }
}

TEST(Reset, bell_leaves_partner_in_measured_branch) {
    bool seen[2] = {false, false};
    for (uint64_t seed = 0; seed < 64; seed++) {
        QuantumState s(2, 0, seed);
        s.apply(GateOp::h(0));
        s.apply(GateOp::cx(0, 1));
        s.reset(0);
        auto a = s.amplitudes();
        // Separable |q1>|0>: exactly one of |00>, |10> carries the norm.
        EXPECT_EQ(a[1], Amplitude(0.0));
        EXPECT_EQ(a[3], Amplitude(0.0));
        const bool one = std::abs(a[2]) > 0.5;
        EXPECT_NEAR(std::abs(one ? a[2] : a[0]), 1.0, 1e-12);
        EXPECT_EQ(one ? a[0] : a[2], Amplitude(0.0));
        seen[one] = true;
    }
    EXPECT_TRUE(seen[0] && seen[1]);
}

TEST(Project, returns_probability) {
    QuantumState s(1, 0, 0);
    s.set_amplitudes({std::sqrt(0.25), std::sqrt(0.75)});
    EXPECT_NEAR(s.project(0, true), 0.75, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitudes()[1]), 1.0, 1e-15);
    EXPECT_EQ(s.project(0, false), 0.0);
    EXPECT_NEAR(std::abs(s.amplitudes()[1]), 1.0, 1e-15);
}

TEST(Run, empty_circuit) {
    auto result = run(Circuit(2, 0), 1);
    EXPECT_EQ(result.state.amplitudes()[0], Amplitude(1.0));
    EXPECT_TRUE(result.record.empty());
}

TEST(Run, conditioned_copy_both_branches) {
    Circuit c;
    c.append(GateOp::h(0));
    c.append(Measure{0, 0});
    c.append(GateOp::x(1).conditioned_on(0));
    bool seen[2] = {false, false};
    for (uint64_t seed = 0; seed < 64; seed++) {
        auto r = run(c, seed);
        const bool c0 = r.record[0].value;
        const uint64_t expected = c0 ? 3 : 0;
        EXPECT_NEAR(std::abs(r.state.amplitudes()[expected]), 1.0, 1e-12);
        seen[c0] = true;
    }
    EXPECT_TRUE(seen[0] && seen[1]);
}

TEST(Run, deterministic_for_seed) {
    Circuit c;
    for (Qubit q = 0; q < 4; q++) {
        c.append(GateOp::h(q));
    }
    c.append(GateOp::cphase(0, 3, 0.3));
    for (Qubit q = 0; q < 4; q++) {
        c.append(Measure{q, q});
        c.append(GateOp::rz((q + 1) % 4, 0.7).conditioned_on(q));
        c.append(GateOp::h((q + 1) % 4));
    }
    auto a = run(c, 77);
    auto b = run(c, 77);
    EXPECT_EQ(a.record, b.record);
    EXPECT_EQ(to_vec(a.state.amplitudes()), to_vec(b.state.amplitudes()));
}

TEST(Run, validates_first) {
    Circuit c;
    c.append(GateOp::x(0).conditioned_on(0));
    c.append(Measure{0, 0});
    EXPECT_THROW(run(c, 0), InvalidArgument);
}

TEST(Registers, extract_and_deposit) {
    std::vector<Qubit> reg{4, 1, 2};
    EXPECT_EQ(extract_register(0b10010, reg), 0b011u);
    EXPECT_EQ(deposit_register(0, reg, 0b101), 0b10100u);
    EXPECT_EQ(extract_register(deposit_register(0b01001, reg, 6), reg), 6u);
}

TEST(Registers, distribution_drops_dust) {
    QuantumState s(2, 0, 0);
    s.set_amplitudes({std::sqrt(0.5), 1e-9, std::sqrt(0.5), 0});
    std::vector<Qubit> reg{1};
    auto d = register_distribution(s, reg);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_NEAR(d[0], 0.5, 1e-15);
    EXPECT_NEAR(d[1], 0.5, 1e-15);
    std::vector<Qubit> low{0};
    auto e = register_distribution(s, low);
    EXPECT_EQ(e.size(), 1u);
}

}  // namespace qshor
