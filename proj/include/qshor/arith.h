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

#ifndef QSHOR_ARITH_H
#define QSHOR_ARITH_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qshor/circuit.h"

namespace qshor {

enum class Variant { Original, Reduced };

const char *variant_name(Variant v);
Variant parse_variant(const std::string &name);

/// Qubit assignment for one order-finding register set.
///
/// Original: control, x (n), b (n+1, top qubit catches overflow), ancilla;
/// 2n+3 qubits. Reduced: control, x (n), b (n); 2n+1 qubits.
struct RegisterLayout {
    Variant variant;
    uint32_t n;
    Qubit control;
    std::vector<Qubit> x;
    std::vector<Qubit> b;
    std::optional<Qubit> ancilla;

    static RegisterLayout original(uint32_t n);
    static RegisterLayout reduced(uint32_t n);

    uint32_t total_qubits() const;
    void validate() const;
};

/// Constants for one modular-multiplication run.
struct ArithParams {
    uint64_t N;
    uint64_t a;
    uint32_t n;
    uint64_t a_inv;

    /// Checks 1 < a < N and gcd(a, N) = 1; computes n and a_inv.
    static ArithParams make(uint64_t N, uint64_t a);
};

/// QFT with qubits[0] as least significant bit, including the final
/// qubit-order swaps.
Circuit build_qft(std::span<const Qubit> qubits);
Circuit build_iqft(std::span<const Qubit> qubits);

/// Draper adder: adds `constant` mod 2^m to a register held in the Fourier
/// basis. Each rotation is promoted to a controlled PHASE per control qubit.
/// Constant 0 yields an empty fragment.
Circuit build_phi_add(std::span<const Qubit> b, uint64_t constant, std::span<const Qubit> controls);

/// Fourier-basis modular adder |b> -> |(b + constant) mod N> for b < N.
/// Needs the original layout (b has n+1 qubits) and a clean ancilla.
Circuit build_mod_add(const RegisterLayout &layout, uint64_t constant, uint64_t N, std::span<const Qubit> controls);

enum class MultDirection { Forward, Inverse };

/// Controlled on layout.control: |x>|b> -> |x>|(b + a x) mod N> (Forward)
/// or |x>|(b - a_inv x) mod N> (Inverse).
Circuit build_cmult(const RegisterLayout &layout, const ArithParams &params, MultDirection direction);

/// Controlled |x> -> |a x mod N> with b and ancilla restored to |0>.
Circuit build_unitary_block_original(const RegisterLayout &layout, const ArithParams &params);

/// Reduced approximation of the unitary block. Assumes x = |1>, b = |0> on
/// entry. Arithmetic wraps mod 2^n. Emitted in this order:
///   1. H on every b qubit
///   2. control-conditioned add of (a mod 2^n) on b
///   3. IQFT on b
///   4. control-conditioned SWAP x_j <-> b_j
///   5. QFT on b
///   6. for each j, (control, x_j)-conditioned subtraction of (2^j a_inv mod 2^n)
/// There is no closing IQFT on b.
Circuit build_unitary_block_reduced(const RegisterLayout &layout, const ArithParams &params);

}  // namespace qshor

#endif
