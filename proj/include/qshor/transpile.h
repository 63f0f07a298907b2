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

#ifndef QSHOR_TRANSPILE_H
#define QSHOR_TRANSPILE_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qshor/arith.h"
#include "qshor/circuit.h"

namespace qshor {

/// Kinds allowed after transpilation: cx, id, rz, sx, x.
bool is_basis_kind(GateKind kind);

/// Rewrites one gate into basis gates, equal to the source up to a global
/// phase. A classical condition on the source is copied onto every output.
std::vector<GateOp> decompose(const GateOp &gate);

struct TranspileResult {
    Circuit circuit;
    uint64_t depth;
    /// Keyed by lower-case basis name plus "measure" and "reset".
    std::map<std::string, uint64_t> gate_counts;
};

/// Full connectivity, no routing.
TranspileResult transpile(const Circuit &circuit);

/// Longest chain of ops sharing a qubit (or a classical bit, for
/// conditioned gates). Measurements and resets take one layer; ID takes none.
uint64_t circuit_depth(const Circuit &circuit);

/// 10 n^2 + 20 n + 5.
uint64_t depth_model(uint32_t n);

struct DepthReport {
    uint64_t N;
    uint32_t n;
    uint64_t a;
    Variant variant;
    uint32_t qubits;
    /// One entry per sub-circuit (reduced) or a single entry (original).
    std::vector<uint64_t> subcircuit_depths;
    uint64_t max_depth;
    uint64_t summed_depth;
    uint64_t model;
    std::map<std::string, uint64_t> gate_counts;
};

/// Transpiles the circuits for (N, a, variant). a defaults to the smallest
/// feasible base when zero.
DepthReport depth_report(uint64_t N, Variant variant, uint64_t a = 0);

}  // namespace qshor

#endif
