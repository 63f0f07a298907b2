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

#include "qshor/arith.h"

#include <algorithm>
#include <numbers>
#include <set>

#include "qshor/classical.h"
#include "qshor/error.h"

namespace qshor {

const char *variant_name(Variant v) {
    return v == Variant::Original ? "original" : "reduced";
}

Variant parse_variant(const std::string &name) {
    if (name == "original") {
        return Variant::Original;
    }
    if (name == "reduced") {
        return Variant::Reduced;
    }
    throw InvalidArgument("unknown variant '" + name + "'");
}

RegisterLayout RegisterLayout::original(uint32_t n) {
    RegisterLayout l{Variant::Original, n, 0, {}, {}, std::nullopt};
    for (uint32_t j = 0; j < n; j++) {
        l.x.push_back(1 + j);
    }
    for (uint32_t j = 0; j <= n; j++) {
        l.b.push_back(n + 1 + j);
    }
    l.ancilla = 2 * n + 2;
    return l;
}

RegisterLayout RegisterLayout::reduced(uint32_t n) {
    RegisterLayout l{Variant::Reduced, n, 0, {}, {}, std::nullopt};
    for (uint32_t j = 0; j < n; j++) {
        l.x.push_back(1 + j);
        l.b.push_back(n + 1 + j);
    }
    return l;
}

uint32_t RegisterLayout::total_qubits() const {
    return static_cast<uint32_t>(1 + x.size() + b.size() + (ancilla ? 1 : 0));
}

void RegisterLayout::validate() const {
    std::set<Qubit> seen{control};
    seen.insert(x.begin(), x.end());
    seen.insert(b.begin(), b.end());
    if (ancilla) {
        seen.insert(*ancilla);
    }
    if (seen.size() != total_qubits()) {
        throw InvalidArgument("register layout reuses a qubit index");
    }
    if (x.size() != n) {
        throw InvalidArgument("register layout: x must have n qubits");
    }
    const uint32_t expected = variant == Variant::Original ? 2 * n + 3 : 2 * n + 1;
    if (total_qubits() != expected || (variant == Variant::Original) != ancilla.has_value()) {
        throw InvalidArgument(std::string("register layout does not match the ") + variant_name(variant) +
                              " qubit budget");
    }
}

ArithParams ArithParams::make(uint64_t N, uint64_t a) {
    if (N < 3 || a <= 1 || a >= N) {
        throw PreconditionError("need 1 < a < N");
    }
    if (gcd(a, N) != 1) {
        throw PreconditionError("gcd(a, N) != 1 for a=" + std::to_string(a) + ", N=" + std::to_string(N));
    }
    return {N, a, bit_width(N), mod_inv(a, N)};
}

Circuit build_qft(std::span<const Qubit> qubits) {
    if (qubits.empty()) {
        throw InvalidArgument("QFT needs at least one qubit");
    }
    Circuit c;
    const size_t m = qubits.size();
    for (size_t j = m; j-- > 0;) {
        c.append(GateOp::h(qubits[j]));
        for (size_t k = j; k-- > 0;) {
            c.append(GateOp::cphase(qubits[k], qubits[j], std::numbers::pi / static_cast<double>(uint64_t{1} << (j - k))));
        }
    }
    for (size_t i = 0; i < m / 2; i++) {
        c.append(GateOp::swap(qubits[i], qubits[m - 1 - i]));
    }
    return c;
}

Circuit build_iqft(std::span<const Qubit> qubits) {
    return build_qft(qubits).inverse();
}

Circuit build_phi_add(std::span<const Qubit> b, uint64_t constant, std::span<const Qubit> controls) {
    const size_t m = b.size();
    if (m == 0 || m > 62) {
        throw InvalidArgument("phi_add: register width must be in [1, 62]");
    }
    const uint64_t modulus = uint64_t{1} << m;
    if (constant >= modulus) {
        throw InvalidArgument("phi_add: constant " + std::to_string(constant) + " does not fit in " +
                              std::to_string(m) + " qubits");
    }
    Circuit c;
    if (constant == 0) {
        return c;
    }
    for (size_t j = 0; j < m; j++) {
        // Rotation 2*pi*constant*2^j / 2^m, reduced to (-pi, pi] in exact integers first.
        int64_t v = static_cast<int64_t>((constant << j) & (modulus - 1));
        if (v > static_cast<int64_t>(modulus / 2)) {
            v -= static_cast<int64_t>(modulus);
        }
        double theta = 2 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(modulus);
        c.append(GateOp::controlled_phase(controls, b[j], theta));
    }
    return c;
}

Circuit build_mod_add(const RegisterLayout &layout, uint64_t constant, uint64_t N, std::span<const Qubit> controls) {
    if (!layout.ancilla) {
        throw InvalidArgument("mod_add: layout has no ancilla qubit");
    }
    if (constant >= N) {
        throw InvalidArgument("mod_add: constant must be below N");
    }
    if (layout.b.size() != layout.n + 1) {
        throw InvalidArgument("mod_add: b must have n+1 qubits");
    }
    const auto &b = layout.b;
    const Qubit msb = b.back();
    const Qubit anc = *layout.ancilla;
    const Qubit anc_list[] = {anc};
    const Circuit add_c = build_phi_add(b, constant, controls);
    const Circuit add_n = build_phi_add(b, N, {});

    Circuit c;
    c += add_c;
    c += add_n.inverse();
    c += build_iqft(b);
    c.append(GateOp::cx(msb, anc));
    c += build_qft(b);
    c += build_phi_add(b, N, anc_list);
    c += add_c.inverse();
    c += build_iqft(b);
    c.append(GateOp::x(msb));
    c.append(GateOp::cx(msb, anc));
    c.append(GateOp::x(msb));
    c += build_qft(b);
    c += add_c;
    return c;
}

Circuit build_cmult(const RegisterLayout &layout, const ArithParams &params, MultDirection direction) {
    if (layout.variant != Variant::Original) {
        throw InvalidArgument("cmult needs the original register layout");
    }
    if (layout.n != params.n) {
        throw InvalidArgument("cmult: layout width does not match N");
    }
    const uint64_t factor = direction == MultDirection::Forward ? params.a : params.a_inv;
    Circuit c;
    c += build_qft(layout.b);
    for (uint32_t j = 0; j < layout.n; j++) {
        const uint64_t constant =
            static_cast<uint64_t>(static_cast<unsigned __int128>(mod_pow(2, j, params.N)) * factor % params.N);
        const Qubit ctrl[] = {layout.control, layout.x[j]};
        c += build_mod_add(layout, constant, params.N, ctrl);
    }
    c += build_iqft(layout.b);
    return direction == MultDirection::Forward ? c : c.inverse();
}

Circuit build_unitary_block_original(const RegisterLayout &layout, const ArithParams &params) {
    Circuit c = build_cmult(layout, params, MultDirection::Forward);
    for (uint32_t j = 0; j < layout.n; j++) {
        c.append(GateOp::cswap(layout.control, layout.x[j], layout.b[j]));
    }
    c += build_cmult(layout, params, MultDirection::Inverse);
    return c;
}

Circuit build_unitary_block_reduced(const RegisterLayout &layout, const ArithParams &params) {
    if (layout.variant != Variant::Reduced || layout.b.size() != layout.n) {
        throw InvalidArgument("reduced block needs the reduced register layout");
    }
    if (layout.n != params.n) {
        throw InvalidArgument("reduced block: layout width does not match N");
    }
    const uint64_t mask = (uint64_t{1} << layout.n) - 1;
    const Qubit ctrl[] = {layout.control};

    Circuit c;
    for (Qubit q : layout.b) {
        c.append(GateOp::h(q));
    }
    c += build_phi_add(layout.b, params.a & mask, ctrl);
    c += build_iqft(layout.b);
    for (uint32_t j = 0; j < layout.n; j++) {
        c.append(GateOp::cswap(layout.control, layout.x[j], layout.b[j]));
    }
    c += build_qft(layout.b);
    for (uint32_t j = 0; j < layout.n; j++) {
        const uint64_t constant = (params.a_inv << j) & mask;
        const Qubit ctrl2[] = {layout.control, layout.x[j]};
        c += build_phi_add(layout.b, constant, ctrl2).inverse();
    }
    return c;
}

}  // namespace qshor
