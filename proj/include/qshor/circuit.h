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

#ifndef QSHOR_CIRCUIT_H
#define QSHOR_CIRCUIT_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qshor {

using Qubit = uint32_t;
using ClassicalBit = uint32_t;

enum class GateKind : uint8_t {
    Id,
    H,
    X,
    SX,
    Phase,
    RZ,
    CX,
    Swap,
    CPhase,  // one or two controls
    CSwap,
};

const char *gate_name(GateKind kind);

/// Classical-bit guard: the gate fires only when `bit` holds `value`.
struct Condition {
    ClassicalBit bit;
    bool value;
    bool operator==(const Condition &) const = default;
};

/// One unitary gate. Qubit lists are stored inline; no gate touches more than
/// three qubits.
class GateOp {
   public:
    static GateOp id(Qubit q);
    static GateOp h(Qubit q);
    static GateOp x(Qubit q);
    static GateOp sx(Qubit q);
    static GateOp phase(Qubit q, double theta);
    static GateOp rz(Qubit q, double theta);
    static GateOp cx(Qubit control, Qubit target);
    static GateOp swap(Qubit a, Qubit b);
    static GateOp cphase(Qubit control, Qubit target, double theta);
    static GateOp ccphase(Qubit control0, Qubit control1, Qubit target, double theta);
    static GateOp cswap(Qubit control, Qubit a, Qubit b);

    /// Controlled PHASE with an arbitrary list of 0..2 controls. Zero controls
    /// gives a plain PHASE.
    static GateOp controlled_phase(std::span<const Qubit> controls, Qubit target, double theta);

    GateOp conditioned_on(ClassicalBit bit, bool value = true) const;

    GateKind kind() const {
        return kind_;
    }
    std::span<const Qubit> targets() const {
        return {targets_.data(), num_targets_};
    }
    std::span<const Qubit> controls() const {
        return {controls_.data(), num_controls_};
    }
    std::optional<double> angle() const {
        return angle_;
    }
    const std::optional<Condition> &condition() const {
        return condition_;
    }

    bool is_parameterized() const;
    /// Diagonal in the computational basis (PHASE, RZ, CPHASE, ID).
    bool is_diagonal() const;
    /// All qubits touched, controls first.
    std::vector<Qubit> qubits() const;
    Qubit max_qubit() const;

    bool operator==(const GateOp &) const = default;
    std::string str() const;

   private:
    GateOp(GateKind kind, std::initializer_list<Qubit> targets, std::initializer_list<Qubit> controls,
           std::optional<double> angle);

    GateKind kind_;
    uint8_t num_targets_ = 0;
    uint8_t num_controls_ = 0;
    std::array<Qubit, 2> targets_{};
    std::array<Qubit, 2> controls_{};
    std::optional<double> angle_;
    std::optional<Condition> condition_;
};

struct Measure {
    Qubit qubit;
    ClassicalBit bit;
    bool operator==(const Measure &) const = default;
};

struct Reset {
    Qubit qubit;
    bool operator==(const Reset &) const = default;
};

using Op = std::variant<GateOp, Measure, Reset>;

/// Ordered program over indexed qubits and classical bits. Appending an op that
/// addresses a higher index grows the declared widths, so builders can return
/// fragments without knowing the final register width.
class Circuit {
   public:
    Circuit() = default;
    Circuit(uint32_t qubit_count, uint32_t classical_bit_count);

    uint32_t qubit_count() const {
        return qubit_count_;
    }
    uint32_t classical_bit_count() const {
        return classical_bit_count_;
    }
    const std::vector<Op> &ops() const {
        return ops_;
    }
    size_t size() const {
        return ops_.size();
    }
    bool empty() const {
        return ops_.empty();
    }

    Circuit &append(const Op &op);
    Circuit &append(const Circuit &fragment);
    Circuit &operator+=(const Circuit &fragment) {
        return append(fragment);
    }

    /// Formal reverse: ops in reverse order, each replaced by its inverse.
    /// SX becomes three SX; conditions are kept. Throws on measurements and
    /// resets.
    Circuit inverse() const;

    /// Throws InvalidArgument if a gate addresses overlapping qubits, a
    /// non-parameterized gate carries an angle, an angle is not finite, or a
    /// condition reads a classical bit not written by an earlier Measure.
    void validate() const;

    size_t count_measurements() const;
    size_t count_gates(GateKind kind) const;

    bool operator==(const Circuit &) const = default;

   private:
    uint32_t qubit_count_ = 0;
    uint32_t classical_bit_count_ = 0;
    std::vector<Op> ops_;
};

}  // namespace qshor

#endif
