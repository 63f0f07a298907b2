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

#include "qshor/transpile.h"

#include <algorithm>
#include <numbers>

#include "qshor/classical.h"
#include "qshor/driver.h"
#include "qshor/error.h"

namespace qshor {

namespace {

constexpr double kPi = std::numbers::pi;

const char *basis_name(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
            return "cx";
        case GateKind::Id:
            return "id";
        case GateKind::RZ:
            return "rz";
        case GateKind::SX:
            return "sx";
        case GateKind::X:
            return "x";
        default:
            throw InvalidArgument(std::string("not a basis gate: ") + gate_name(kind));
    }
}

void emit_h(std::vector<GateOp> &out, Qubit q) {
    out.push_back(GateOp::rz(q, kPi / 2));
    out.push_back(GateOp::sx(q));
    out.push_back(GateOp::rz(q, kPi / 2));
}

void emit_cphase(std::vector<GateOp> &out, Qubit c, Qubit t, double theta) {
    out.push_back(GateOp::rz(c, theta / 2));
    out.push_back(GateOp::cx(c, t));
    out.push_back(GateOp::rz(t, -theta / 2));
    out.push_back(GateOp::cx(c, t));
    out.push_back(GateOp::rz(t, theta / 2));
}

// Phase theta on |111>: CP(t/2)(c1,t) CX(c0,c1) CP(-t/2)(c1,t) CX(c0,c1) CP(t/2)(c0,t).
void emit_ccphase(std::vector<GateOp> &out, Qubit c0, Qubit c1, Qubit t, double theta) {
    emit_cphase(out, c1, t, theta / 2);
    out.push_back(GateOp::cx(c0, c1));
    emit_cphase(out, c1, t, -theta / 2);
    out.push_back(GateOp::cx(c0, c1));
    emit_cphase(out, c0, t, theta / 2);
}

}  // namespace

bool is_basis_kind(GateKind kind) {
    return kind == GateKind::CX || kind == GateKind::Id || kind == GateKind::RZ || kind == GateKind::SX ||
           kind == GateKind::X;
}

std::vector<GateOp> decompose(const GateOp &gate) {
    std::vector<GateOp> out;
    const auto t = gate.targets();
    const auto c = gate.controls();
    switch (gate.kind()) {
        case GateKind::Id:
        case GateKind::X:
        case GateKind::SX:
        case GateKind::RZ:
        case GateKind::CX:
            out.push_back(gate);
            return out;  // condition already attached
        case GateKind::H:
            emit_h(out, t[0]);
            break;
        case GateKind::Phase:
            out.push_back(GateOp::rz(t[0], *gate.angle()));
            break;
        case GateKind::Swap:
            out.push_back(GateOp::cx(t[0], t[1]));
            out.push_back(GateOp::cx(t[1], t[0]));
            out.push_back(GateOp::cx(t[0], t[1]));
            break;
        case GateKind::CPhase:
            if (c.size() == 1) {
                emit_cphase(out, c[0], t[0], *gate.angle());
            } else {
                emit_ccphase(out, c[0], c[1], t[0], *gate.angle());
            }
            break;
        case GateKind::CSwap:
            // CX(b,a) Toffoli(c,a -> b) CX(b,a); Toffoli = H(b) CCPHASE(pi) H(b).
            out.push_back(GateOp::cx(t[1], t[0]));
            emit_h(out, t[1]);
            emit_ccphase(out, c[0], t[0], t[1], kPi);
            emit_h(out, t[1]);
            out.push_back(GateOp::cx(t[1], t[0]));
            break;
    }
    if (const auto &cond = gate.condition()) {
        for (auto &g : out) {
            g = g.conditioned_on(cond->bit, cond->value);
        }
    }
    return out;
}

uint64_t circuit_depth(const Circuit &circuit) {
    std::vector<uint64_t> qubit_layer(circuit.qubit_count(), 0);
    std::vector<uint64_t> bit_layer(circuit.classical_bit_count(), 0);
    uint64_t depth = 0;
    for (const Op &op : circuit.ops()) {
        uint64_t layer = 0;
        if (const auto *g = std::get_if<GateOp>(&op)) {
            if (g->kind() == GateKind::Id) {
                continue;
            }
            for (Qubit q : g->qubits()) {
                layer = std::max(layer, qubit_layer[q]);
            }
            if (g->condition()) {
                layer = std::max(layer, bit_layer[g->condition()->bit]);
            }
            layer++;
            for (Qubit q : g->qubits()) {
                qubit_layer[q] = layer;
            }
        } else if (const auto *m = std::get_if<Measure>(&op)) {
            layer = std::max(qubit_layer[m->qubit], bit_layer[m->bit]) + 1;
            qubit_layer[m->qubit] = layer;
            bit_layer[m->bit] = layer;
        } else {
            const Qubit q = std::get<Reset>(op).qubit;
            layer = qubit_layer[q] + 1;
            qubit_layer[q] = layer;
        }
        depth = std::max(depth, layer);
    }
    return depth;
}

TranspileResult transpile(const Circuit &circuit) {
    TranspileResult result{Circuit(circuit.qubit_count(), circuit.classical_bit_count()), 0, {}};
    for (const Op &op : circuit.ops()) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            for (const GateOp &b : decompose(*g)) {
                result.gate_counts[basis_name(b.kind())]++;
                result.circuit.append(b);
            }
        } else {
            result.gate_counts[std::holds_alternative<Measure>(op) ? "measure" : "reset"]++;
            result.circuit.append(op);
        }
    }
    result.depth = circuit_depth(result.circuit);
    return result;
}

uint64_t depth_model(uint32_t n) {
    if (n < 1) {
        throw InvalidArgument("depth_model: n must be positive");
    }
    const uint64_t m = n;
    return 10 * m * m + 20 * m + 5;
}

DepthReport depth_report(uint64_t N, Variant variant, uint64_t a) {
    if (a == 0) {
        auto bases = feasible_bases(N);
        if (bases.empty()) {
            throw InvalidArgument("depth_report: N has no feasible base");
        }
        a = bases.front();
    }
    const auto params = ArithParams::make(N, a);
    DepthReport report{N, params.n, a, variant, 0, {}, 0, 0, depth_model(params.n), {}};
    auto accumulate = [&](const Circuit &c) {
        auto t = transpile(c);
        report.subcircuit_depths.push_back(t.depth);
        for (const auto &[k, v] : t.gate_counts) {
            report.gate_counts[k] += v;
        }
        report.qubits = c.qubit_count();
    };
    if (variant == Variant::Original) {
        accumulate(build_original_circuit(params));
    } else {
        // Depth does not depend on the feedback angle's value; theta = 0 keeps
        // the rotation in the circuit.
        for (uint32_t i = 0; i < 2 * params.n; i++) {
            accumulate(build_reduced_subcircuit(params, i, 0.0));
        }
    }
    report.max_depth = *std::max_element(report.subcircuit_depths.begin(), report.subcircuit_depths.end());
    for (uint64_t d : report.subcircuit_depths) {
        report.summed_depth += d;
    }
    return report;
}

}  // namespace qshor
