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
#include <algorithm>
#include <string>

#include "qshor/error.h"

namespace qshor {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// std::complex operator* takes the slow Annex G path for inf/nan operands.
inline Amplitude mul(Amplitude a, Amplitude b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

uint64_t qubit_mask(std::span<const Qubit> qs) {
    uint64_t m = 0;
    for (Qubit q : qs) {
        m |= uint64_t{1} << q;
    }
    return m;
}

}  // namespace

QuantumState::QuantumState(uint32_t qubit_count, uint32_t classical_bit_count, uint64_t seed)
    : qubit_count_(qubit_count), bits_(classical_bit_count, 0), written_(classical_bit_count, 0), rng_(seed) {
    if (qubit_count < 1 || qubit_count > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(qubit_count) + " outside supported range [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(uint64_t{1} << qubit_count, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

void QuantumState::set_amplitudes(std::vector<Amplitude> amps) {
    if (amps.size() != amps_.size()) {
        throw InvalidArgument("amplitude vector has wrong length");
    }
    amps_ = std::move(amps);
}

void QuantumState::set_basis_state(uint64_t index) {
    if (index >= amps_.size()) {
        throw InvalidArgument("basis index out of range");
    }
    std::fill(amps_.begin(), amps_.end(), Amplitude{0.0, 0.0});
    amps_[index] = 1.0;
}

void QuantumState::check_qubit(Qubit q) const {
    if (q >= qubit_count_) {
        throw InvalidArgument("qubit " + std::to_string(q) + " out of range for width " + std::to_string(qubit_count_));
    }
}

bool QuantumState::classical_bit(ClassicalBit bit) const {
    if (bit >= bits_.size()) {
        throw InvalidArgument("classical bit " + std::to_string(bit) + " out of range");
    }
    return bits_[bit] != 0;
}

bool QuantumState::classical_bit_written(ClassicalBit bit) const {
    return bit < written_.size() && written_[bit] != 0;
}

void QuantumState::set_classical_bit(ClassicalBit bit, bool value) {
    if (bit >= bits_.size()) {
        throw InvalidArgument("classical bit " + std::to_string(bit) + " out of range");
    }
    bits_[bit] = value;
    written_[bit] = 1;
}

// Multiplies every amplitude whose index contains all bits of `mask` by
// phase_one when `target` is set and phase_zero otherwise. `target` must be in
// the mask when phase_zero is 1.
void QuantumState::apply_diagonal(uint64_t mask, Qubit target, Amplitude phase_one, Amplitude phase_zero) {
    const uint64_t dim = amps_.size();
    if (phase_zero == Amplitude{1.0, 0.0}) {
        for (uint64_t i = mask; i < dim; i = (i + 1) | mask) {
            amps_[i] = mul(amps_[i], phase_one);
        }
        return;
    }
    const uint64_t t = uint64_t{1} << target;
    for (uint64_t i = mask & ~t; i < dim; i = (i + 1) | (mask & ~t)) {
        amps_[i] = mul(amps_[i], (i & t) ? phase_one : phase_zero);
    }
}

void QuantumState::apply(const GateOp &gate) {
    for (Qubit q : gate.targets()) {
        check_qubit(q);
    }
    for (Qubit q : gate.controls()) {
        check_qubit(q);
    }
    if (const auto &cond = gate.condition()) {
        if (!classical_bit_written(cond->bit)) {
            throw InvalidArgument("gate " + gate.str() + " is conditioned on an unwritten classical bit");
        }
        if (classical_bit(cond->bit) != cond->value) {
            return;
        }
    }

    const uint64_t dim = amps_.size();
    const uint64_t cmask = qubit_mask(gate.controls());
    const Qubit t0 = gate.targets()[0];
    const uint64_t tm = uint64_t{1} << t0;

    switch (gate.kind()) {
        case GateKind::Id:
            return;
        case GateKind::H:
            for (uint64_t base = 0; base < dim; base += 2 * tm) {
                for (uint64_t i = base; i < base + tm; i++) {
                    Amplitude a = amps_[i];
                    Amplitude b = amps_[i | tm];
                    amps_[i] = (a + b) * kInvSqrt2;
                    amps_[i | tm] = (a - b) * kInvSqrt2;
                }
            }
            return;
        case GateKind::X:
            for (uint64_t base = 0; base < dim; base += 2 * tm) {
                for (uint64_t i = base; i < base + tm; i++) {
                    std::swap(amps_[i], amps_[i | tm]);
                }
            }
            return;
        case GateKind::SX: {
            const Amplitude p{0.5, 0.5};
            const Amplitude m{0.5, -0.5};
            for (uint64_t base = 0; base < dim; base += 2 * tm) {
                for (uint64_t i = base; i < base + tm; i++) {
                    Amplitude a = amps_[i];
                    Amplitude b = amps_[i | tm];
                    amps_[i] = mul(p, a) + mul(m, b);
                    amps_[i | tm] = mul(m, a) + mul(p, b);
                }
            }
            return;
        }
        case GateKind::Phase:
        case GateKind::CPhase:
            apply_diagonal(cmask | tm, t0, std::polar(1.0, *gate.angle()), Amplitude{1.0, 0.0});
            return;
        case GateKind::RZ: {
            double half = *gate.angle() / 2;
            apply_diagonal(tm, t0, std::polar(1.0, half), std::polar(1.0, -half));
            return;
        }
        case GateKind::CX:
            for (uint64_t i = cmask; i < dim; i = (i + 1) | cmask) {
                if ((i & tm) == 0) {
                    std::swap(amps_[i], amps_[i | tm]);
                }
            }
            return;
        case GateKind::Swap:
        case GateKind::CSwap: {
            const uint64_t bm = uint64_t{1} << gate.targets()[1];
            for (uint64_t i = cmask | tm; i < dim; i = (i + 1) | cmask | tm) {
                if ((i & bm) == 0) {
                    std::swap(amps_[i], amps_[(i ^ tm) | bm]);
                }
            }
            return;
        }
    }
}

double QuantumState::probability_of_one(Qubit qubit) const {
    check_qubit(qubit);
    const uint64_t m = uint64_t{1} << qubit;
    double p = 0;
    for (uint64_t i = m; i < amps_.size(); i = (i + 1) | m) {
        p += std::norm(amps_[i]);
    }
    return p;
}

double QuantumState::norm_squared() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void QuantumState::collapse(Qubit qubit, bool outcome, double probability) {
    const uint64_t m = uint64_t{1} << qubit;
    const double scale = 1.0 / std::sqrt(probability);
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (((i & m) != 0) == outcome) {
            amps_[i] *= scale;
        } else {
            amps_[i] = 0;
        }
    }
}

bool QuantumState::measure(Qubit qubit, ClassicalBit bit) {
    check_qubit(qubit);
    if (bit >= bits_.size()) {
        throw InvalidArgument("classical bit " + std::to_string(bit) + " out of range");
    }
    const double p1 = probability_of_one(qubit);
    const bool outcome = rng_.uniform() < p1;
    // Surviving-branch norm recomputed directly rather than as 1 - p1.
    const double p_surv = outcome ? p1 : norm_squared() - p1;
    collapse(qubit, outcome, p_surv);
    bits_[bit] = outcome;
    written_[bit] = 1;
    record_.push_back({bit, outcome, outcome ? p1 : 1.0 - p1});
    return outcome;
}

void QuantumState::reset(Qubit qubit) {
    check_qubit(qubit);
    const double p1 = probability_of_one(qubit);
    const bool outcome = rng_.uniform() < p1;
    collapse(qubit, outcome, outcome ? p1 : norm_squared() - p1);
    if (outcome) {
        apply(GateOp::x(qubit));
    }
}

double QuantumState::project(Qubit qubit, bool outcome) {
    const double p1 = probability_of_one(qubit);
    const double p = outcome ? p1 : norm_squared() - p1;
    if (p > 0) {
        collapse(qubit, outcome, p);
    }
    return p;
}

void QuantumState::execute(const Op &op) {
    if (const auto *g = std::get_if<GateOp>(&op)) {
        apply(*g);
    } else if (const auto *m = std::get_if<Measure>(&op)) {
        measure(m->qubit, m->bit);
    } else {
        reset(std::get<Reset>(op).qubit);
    }
}

void run_on(QuantumState &state, const Circuit &circuit) {
    for (const Op &op : circuit.ops()) {
        state.execute(op);
    }
}

RunResult run(const Circuit &circuit, uint64_t seed) {
    circuit.validate();
    QuantumState state(std::max<uint32_t>(circuit.qubit_count(), 1), circuit.classical_bit_count(), seed);
    run_on(state, circuit);
    MeasurementRecord record = state.record();
    return {std::move(state), std::move(record)};
}

uint64_t extract_register(uint64_t basis_index, std::span<const Qubit> qubits) {
    uint64_t v = 0;
    for (size_t j = 0; j < qubits.size(); j++) {
        v |= ((basis_index >> qubits[j]) & 1) << j;
    }
    return v;
}

uint64_t deposit_register(uint64_t basis_index, std::span<const Qubit> qubits, uint64_t value) {
    for (size_t j = 0; j < qubits.size(); j++) {
        uint64_t m = uint64_t{1} << qubits[j];
        basis_index = ((value >> j) & 1) ? (basis_index | m) : (basis_index & ~m);
    }
    return basis_index;
}

std::map<uint64_t, double> register_distribution(const QuantumState &state, std::span<const Qubit> qubits) {
    std::map<uint64_t, double> out;
    auto amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        double p = std::norm(amps[i]);
        if (p > 0) {
            out[extract_register(i, qubits)] += p;
        }
    }
    std::erase_if(out, [](const auto &kv) { return kv.second < 1e-15; });
    return out;
}

}  // namespace qshor
