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

// Runs circuit fragments on computational basis states and reports where the
// state went.

#ifndef QSHOR_TESTS_BASIS_RUN_H
#define QSHOR_TESTS_BASIS_RUN_H

#include <cmath>
#include <cstdint>

#include "qshor/sim.h"

namespace qshor::testing {

struct BasisImage {
    uint64_t index;
    /// Largest amplitude-magnitude deviation from a single basis state (phase
    /// ignored).
    double deviation;
};

inline BasisImage image_of(const QuantumState &s) {
    auto amps = s.amplitudes();
    uint64_t best = 0;
    for (uint64_t i = 1; i < amps.size(); i++) {
        if (std::abs(amps[i]) > std::abs(amps[best])) {
            best = i;
        }
    }
    double dev = std::abs(1.0 - std::abs(amps[best]));
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (i != best) {
            dev = std::max(dev, std::abs(amps[i]));
        }
    }
    return {best, dev};
}

inline BasisImage run_basis(const Circuit &c, uint32_t width, uint64_t input) {
    QuantumState s(width, 0, 0);
    s.set_basis_state(input);
    run_on(s, c);
    return image_of(s);
}

}  // namespace qshor::testing

#endif
