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

#ifndef QSHOR_SIM_H
#define QSHOR_SIM_H

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qshor/circuit.h"
#include "qshor/rng.h"

namespace qshor {

using Amplitude = std::complex<double>;

/// Largest register the dense simulator will allocate.
constexpr uint32_t kMaxQubits = 24;

struct MeasurementEntry {
    ClassicalBit bit;
    bool value;
    /// Born probability of `value` just before the measurement.
    double probability;
    bool operator==(const MeasurementEntry &) const = default;
};

using MeasurementRecord = std::vector<MeasurementEntry>;

/// Dense statevector. Qubit 0 is the least significant bit of the basis index.
class QuantumState {
   public:
    QuantumState(uint32_t qubit_count, uint32_t classical_bit_count, uint64_t seed);

    uint32_t qubit_count() const {
        return qubit_count_;
    }
    uint32_t classical_bit_count() const {
        return static_cast<uint32_t>(bits_.size());
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }

    /// Replaces the amplitudes. The vector must have 2^qubit_count entries; it
    /// is not renormalized.
    void set_amplitudes(std::vector<Amplitude> amps);
    /// Loads the computational basis state |index>.
    void set_basis_state(uint64_t index);
    /// Restarts the measurement stream.
    void reseed(uint64_t seed) {
        rng_ = Rng(seed);
    }

    void apply(const GateOp &gate);
    /// Samples the qubit, collapses the state and writes the classical bit.
    bool measure(Qubit qubit, ClassicalBit bit);
    /// Measure-then-flip: leaves the qubit in |0>. The outcome is drawn from
    /// the stream but not recorded.
    void reset(Qubit qubit);
    /// Projects onto `outcome` without sampling and returns its probability.
    /// Zero-probability projections leave the state untouched.
    double project(Qubit qubit, bool outcome);
    void execute(const Op &op);

    double probability_of_one(Qubit qubit) const;
    double norm_squared() const;

    bool classical_bit(ClassicalBit bit) const;
    bool classical_bit_written(ClassicalBit bit) const;
    /// Writes a classical bit directly (branch enumeration).
    void set_classical_bit(ClassicalBit bit, bool value);
    const MeasurementRecord &record() const {
        return record_;
    }

   private:
    void check_qubit(Qubit q) const;
    void apply_diagonal(uint64_t mask, Qubit target, Amplitude phase_one, Amplitude phase_zero);
    void collapse(Qubit qubit, bool outcome, double probability);

    uint32_t qubit_count_;
    std::vector<Amplitude> amps_;
    std::vector<uint8_t> bits_;
    std::vector<uint8_t> written_;
    MeasurementRecord record_;
    Rng rng_;
};

struct RunResult {
    QuantumState state;
    MeasurementRecord record;
};

/// Executes every op in order on a fresh |0...0> state.
RunResult run(const Circuit &circuit, uint64_t seed);

/// Executes `circuit` on an existing state.
void run_on(QuantumState &state, const Circuit &circuit);

/// Probability distribution of the integer held by `qubits` (qubits[0] is the
/// least significant bit). Entries below 1e-15 are dropped.
std::map<uint64_t, double> register_distribution(const QuantumState &state, std::span<const Qubit> qubits);

/// Reads register value from a basis-state index.
uint64_t extract_register(uint64_t basis_index, std::span<const Qubit> qubits);
/// Writes `value` into the register bits of a basis-state index.
uint64_t deposit_register(uint64_t basis_index, std::span<const Qubit> qubits, uint64_t value);

}  // namespace qshor

#endif
