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

#ifndef QSHOR_DRIVER_H
#define QSHOR_DRIVER_H

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qshor/arith.h"
#include "qshor/circuit.h"
#include "qshor/classical.h"
#include "qshor/sim.h"

namespace qshor {

/// One order-finding readout: 2n bits, bit i measured at step i with weight 2^i.
struct PhaseSample {
    std::vector<uint8_t> bits;
    /// Pre-measurement probability of each observed bit.
    std::vector<double> probabilities;
    uint64_t y = 0;

    uint32_t width() const {
        return static_cast<uint32_t>(bits.size());
    }
    double phase() const;
};

/// Semiclassical inverse-QFT correction for step i = prior_bits.size():
/// theta_i = -2 pi sum_{k<i} m_k / 2^{i-k+1}. Zero for step 0.
double feedback_angle(std::span<const uint8_t> prior_bits);

/// Per-step bases: step i applies a^(2^(2n-1-i)) mod N, so the first step
/// measured carries the least significant phase bit.
std::vector<uint64_t> step_bases(const ArithParams &params);

/// Monolithic 2n+3 qubit circuit: one recycled control qubit, x loaded with
/// |1> once, feedback rotations conditioned on earlier classical bits.
Circuit build_original_circuit(const ArithParams &params);

/// Sub-circuit `step` of the reduced pipeline on 2n+1 qubits, ending in a
/// measurement of the control into classical bit 0.
Circuit build_reduced_subcircuit(const ArithParams &params, uint32_t step, double theta);

using CircuitTransform = std::function<Circuit(const Circuit &)>;

/// Draws phase samples for one (N, a, variant). Circuits are built once; for
/// the reduced variant the deterministic part of each sub-circuit (everything
/// before the feedback rotation) is simulated once and its state reused.
class PhaseSampler {
   public:
    PhaseSampler(uint64_t N, uint64_t a, Variant variant);
    /// Runs every circuit through `transform` first (e.g. transpilation).
    /// Disables prefix caching.
    PhaseSampler(uint64_t N, uint64_t a, Variant variant, CircuitTransform transform);

    const ArithParams &params() const {
        return params_;
    }
    Variant variant() const {
        return variant_;
    }
    uint32_t phase_bits() const {
        return 2 * params_.n;
    }
    uint32_t circuit_width() const;

    PhaseSample sample(uint64_t seed) const;

    /// Exact distribution of y by enumerating measurement branches with
    /// projective collapse. Branches whose probability falls below `prune`
    /// are dropped; their total mass is added to *pruned_mass when given.
    std::map<uint64_t, double> exact_distribution(double prune = 0.0, double *pruned_mass = nullptr) const;

    /// Number of circuit executions one sample takes (1 or 2n).
    uint32_t executions_per_sample() const;

   private:
    void prepare_reduced_prefixes();
    QuantumState reduced_state_before_feedback(uint32_t step) const;
    QuantumState reduced_state_before_measure(uint32_t step, double theta, uint64_t seed) const;

    ArithParams params_;
    Variant variant_;
    std::optional<CircuitTransform> transform_;
    Circuit original_;
    std::vector<Circuit> reduced_prefix_;
    std::vector<QuantumState> reduced_prefix_states_;
};

PhaseSample run_original(uint64_t N, uint64_t a, uint64_t seed);
PhaseSample run_reduced(uint64_t N, uint64_t a, uint64_t seed);

enum class PostProcessing {
    /// Every even convergent denominator is tried as a period; success is the
    /// divisor check itself.
    ConvergentCandidates,
    /// recover_order (a^r = 1 verified) followed by extract_factors.
    VerifiedOrder,
};

const char *post_processing_name(PostProcessing p);
PostProcessing parse_post_processing(const std::string &name);

struct IterationOutcome {
    Variant variant;
    uint64_t N;
    uint64_t a;
    uint64_t seed;
    PhaseSample sample;
    std::optional<uint64_t> r;
    bool r_verified = false;
    FactorOutcome outcome;
};

/// Classical post-processing of an existing sample.
IterationOutcome evaluate_sample(const ArithParams &params, Variant variant, uint64_t seed, PhaseSample sample,
                                 PostProcessing post);

IterationOutcome single_iteration(uint64_t N, uint64_t a, Variant variant, uint64_t seed,
                                  PostProcessing post = PostProcessing::ConvergentCandidates);
IterationOutcome single_iteration(const PhaseSampler &sampler, uint64_t seed,
                                  PostProcessing post = PostProcessing::ConvergentCandidates);

struct IterationLogEntry {
    uint32_t index;
    uint64_t a;
    /// gcd(a, N) when it exceeded 1 and ended the run without a circuit.
    std::optional<uint64_t> gcd_shortcut;
    std::optional<IterationOutcome> iteration;
};

struct FactorReport {
    enum class Kind { Factored, Screened, Prime, Exhausted };

    uint64_t N;
    Variant variant;
    ScreenResult screen;
    Kind kind;
    FactorOutcome outcome;
    std::vector<IterationLogEntry> log;

    bool success() const {
        return kind == Kind::Factored || kind == Kind::Screened;
    }
};

const char *report_kind_name(FactorReport::Kind kind);

/// Full loop: screen, then up to max_iterations draws of a uniform in (1, N).
FactorReport factor(uint64_t N, Variant variant, uint32_t max_iterations, uint64_t seed,
                    PostProcessing post = PostProcessing::ConvergentCandidates);

/// Same loop with a fixed base; each iteration draws a fresh phase sample.
FactorReport factor_with_base(uint64_t N, uint64_t a, Variant variant, uint32_t max_iterations, uint64_t seed,
                              PostProcessing post = PostProcessing::ConvergentCandidates);

}  // namespace qshor

#endif
