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

#include "qshor/circuit.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qshor/error.h"

namespace qshor {

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::Id:
            return "ID";
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::SX:
            return "SX";
        case GateKind::Phase:
            return "PHASE";
        case GateKind::RZ:
            return "RZ";
        case GateKind::CX:
            return "CX";
        case GateKind::Swap:
            return "SWAP";
        case GateKind::CPhase:
            return "CPHASE";
        case GateKind::CSwap:
            return "CSWAP";
    }
    return "?";
}

GateOp::GateOp(GateKind kind, std::initializer_list<Qubit> targets, std::initializer_list<Qubit> controls,
               std::optional<double> angle)
    : kind_(kind),
      num_targets_(static_cast<uint8_t>(targets.size())),
      num_controls_(static_cast<uint8_t>(controls.size())),
      angle_(angle) {
    std::copy(targets.begin(), targets.end(), targets_.begin());
    std::copy(controls.begin(), controls.end(), controls_.begin());
    auto qs = qubits();
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw InvalidArgument(std::string(gate_name(kind)) + ": targets and controls must be distinct qubits");
    }
    if (angle_.has_value() && !std::isfinite(*angle_)) {
        throw InvalidArgument(std::string(gate_name(kind)) + ": angle must be finite");
    }
}

GateOp GateOp::id(Qubit q) {
    return GateOp(GateKind::Id, {q}, {}, std::nullopt);
}
GateOp GateOp::h(Qubit q) {
    return GateOp(GateKind::H, {q}, {}, std::nullopt);
}
GateOp GateOp::x(Qubit q) {
    return GateOp(GateKind::X, {q}, {}, std::nullopt);
}
GateOp GateOp::sx(Qubit q) {
    return GateOp(GateKind::SX, {q}, {}, std::nullopt);
}
GateOp GateOp::phase(Qubit q, double theta) {
    return GateOp(GateKind::Phase, {q}, {}, theta);
}
GateOp GateOp::rz(Qubit q, double theta) {
    return GateOp(GateKind::RZ, {q}, {}, theta);
}
GateOp GateOp::cx(Qubit control, Qubit target) {
    return GateOp(GateKind::CX, {target}, {control}, std::nullopt);
}
GateOp GateOp::swap(Qubit a, Qubit b) {
    return GateOp(GateKind::Swap, {a, b}, {}, std::nullopt);
}
GateOp GateOp::cphase(Qubit control, Qubit target, double theta) {
    return GateOp(GateKind::CPhase, {target}, {control}, theta);
}
GateOp GateOp::ccphase(Qubit control0, Qubit control1, Qubit target, double theta) {
    return GateOp(GateKind::CPhase, {target}, {control0, control1}, theta);
}
GateOp GateOp::cswap(Qubit control, Qubit a, Qubit b) {
    return GateOp(GateKind::CSwap, {a, b}, {control}, std::nullopt);
}

GateOp GateOp::controlled_phase(std::span<const Qubit> controls, Qubit target, double theta) {
    switch (controls.size()) {
        case 0:
            return phase(target, theta);
        case 1:
            return cphase(controls[0], target, theta);
        case 2:
            return ccphase(controls[0], controls[1], target, theta);
        default:
            throw InvalidArgument("controlled PHASE supports at most two controls");
    }
}

GateOp GateOp::conditioned_on(ClassicalBit bit, bool value) const {
    GateOp out = *this;
    out.condition_ = Condition{bit, value};
    return out;
}

bool GateOp::is_parameterized() const {
    return kind_ == GateKind::Phase || kind_ == GateKind::RZ || kind_ == GateKind::CPhase;
}

bool GateOp::is_diagonal() const {
    return kind_ == GateKind::Phase || kind_ == GateKind::RZ || kind_ == GateKind::CPhase || kind_ == GateKind::Id;
}

std::vector<Qubit> GateOp::qubits() const {
    std::vector<Qubit> out(controls().begin(), controls().end());
    out.insert(out.end(), targets().begin(), targets().end());
    return out;
}

Qubit GateOp::max_qubit() const {
    Qubit m = 0;
    for (Qubit q : targets()) {
        m = std::max(m, q);
    }
    for (Qubit q : controls()) {
        m = std::max(m, q);
    }
    return m;
}

std::string GateOp::str() const {
    std::ostringstream out;
    out << gate_name(kind_);
    if (angle_) {
        out << "(" << *angle_ << ")";
    }
    for (Qubit q : controls()) {
        out << " c" << q;
    }
    for (Qubit q : targets()) {
        out << " " << q;
    }
    if (condition_) {
        out << " if c[" << condition_->bit << "]==" << condition_->value;
    }
    return out.str();
}

Circuit::Circuit(uint32_t qubit_count, uint32_t classical_bit_count)
    : qubit_count_(qubit_count), classical_bit_count_(classical_bit_count) {
}

Circuit &Circuit::append(const Op &op) {
    std::visit(
        [&](const auto &o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, GateOp>) {
                qubit_count_ = std::max(qubit_count_, o.max_qubit() + 1);
                if (o.condition()) {
                    classical_bit_count_ = std::max(classical_bit_count_, o.condition()->bit + 1);
                }
            } else if constexpr (std::is_same_v<T, Measure>) {
                qubit_count_ = std::max(qubit_count_, o.qubit + 1);
                classical_bit_count_ = std::max(classical_bit_count_, o.bit + 1);
            } else {
                qubit_count_ = std::max(qubit_count_, o.qubit + 1);
            }
        },
        op);
    ops_.push_back(op);
    return *this;
}

Circuit &Circuit::append(const Circuit &fragment) {
    qubit_count_ = std::max(qubit_count_, fragment.qubit_count_);
    classical_bit_count_ = std::max(classical_bit_count_, fragment.classical_bit_count_);
    ops_.insert(ops_.end(), fragment.ops_.begin(), fragment.ops_.end());
    return *this;
}

namespace {

GateOp inverse_gate(const GateOp &g) {
    auto keep_condition = [&](GateOp base) {
        return g.condition() ? base.conditioned_on(g.condition()->bit, g.condition()->value) : base;
    };
    switch (g.kind()) {
        case GateKind::Phase:
            return keep_condition(GateOp::phase(g.targets()[0], -*g.angle()));
        case GateKind::RZ:
            return keep_condition(GateOp::rz(g.targets()[0], -*g.angle()));
        case GateKind::CPhase:
            return keep_condition(GateOp::controlled_phase(g.controls(), g.targets()[0], -*g.angle()));
        default:
            return g;  // self-inverse kinds
    }
}

}  // namespace

Circuit Circuit::inverse() const {
    Circuit out(qubit_count_, classical_bit_count_);
    out.ops_.reserve(ops_.size());
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        const auto *g = std::get_if<GateOp>(&*it);
        if (g == nullptr) {
            throw InvalidArgument("cannot invert a circuit containing measurements or resets");
        }
        if (g->kind() == GateKind::SX) {
            for (int k = 0; k < 3; k++) {
                out.ops_.push_back(*g);
            }
        } else {
            out.ops_.push_back(inverse_gate(*g));
        }
    }
    return out;
}

void Circuit::validate() const {
    std::vector<bool> written(classical_bit_count_, false);
    for (size_t i = 0; i < ops_.size(); i++) {
        const Op &op = ops_[i];
        if (const auto *g = std::get_if<GateOp>(&op)) {
            if (g->max_qubit() >= qubit_count_) {
                throw InvalidArgument("op " + std::to_string(i) + ": qubit index out of range");
            }
            if (g->is_parameterized() != g->angle().has_value()) {
                throw InvalidArgument("op " + std::to_string(i) + ": angle presence does not match gate kind");
            }
            if (g->condition()) {
                auto bit = g->condition()->bit;
                if (bit >= classical_bit_count_ || !written[bit]) {
                    throw InvalidArgument("op " + std::to_string(i) + ": condition reads classical bit " +
                                          std::to_string(bit) + " before any measurement writes it");
                }
            }
        } else if (const auto *m = std::get_if<Measure>(&op)) {
            if (m->qubit >= qubit_count_ || m->bit >= classical_bit_count_) {
                throw InvalidArgument("op " + std::to_string(i) + ": measurement index out of range");
            }
            written[m->bit] = true;
        } else {
            if (std::get<Reset>(op).qubit >= qubit_count_) {
                throw InvalidArgument("op " + std::to_string(i) + ": reset index out of range");
            }
        }
    }
}

size_t Circuit::count_measurements() const {
    return std::count_if(ops_.begin(), ops_.end(), [](const Op &op) { return std::holds_alternative<Measure>(op); });
}

size_t Circuit::count_gates(GateKind kind) const {
    return std::count_if(ops_.begin(), ops_.end(), [&](const Op &op) {
        const auto *g = std::get_if<GateOp>(&op);
        return g != nullptr && g->kind() == kind;
    });
}

}  // namespace qshor
