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

#include "qshor/driver.h"

#include <cmath>
#include <numbers>

#include "qshor/error.h"
#include "qshor/rng.h"

namespace qshor {

namespace {

// Prefix states are cached only while they fit in this many amplitudes.
constexpr uint64_t kPrefixCacheAmplitudes = uint64_t{1} << 24;

// Parameters for an arbitrary step base, including base 1 (identity block).
ArithParams step_params(const ArithParams &params, uint64_t base) {
    return {params.N, base, params.n, mod_inv(base, params.N)};
}

Circuit reduced_prefix(const ArithParams &params, uint64_t base) {
    const auto layout = RegisterLayout::reduced(params.n);
    Circuit c(layout.total_qubits(), 1);
    c.append(GateOp::x(layout.x[0]));
    c.append(GateOp::h(layout.control));
    c += build_unitary_block_reduced(layout, step_params(params, base));
    return c;
}

void append_reduced_tail(Circuit &c, double theta) {
    c.append(GateOp::phase(0, theta));
    c.append(GateOp::h(0));
    c.append(Measure{0, 0});
}

}  // namespace

double PhaseSample::phase() const {
    return std::ldexp(static_cast<double>(y), -static_cast<int>(bits.size()));
}

double feedback_angle(std::span<const uint8_t> prior_bits) {
    const size_t i = prior_bits.size();
    double theta = 0;
    for (size_t k = 0; k < i; k++) {
        if (prior_bits[k]) {
            theta -= 2 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(i - k + 1));
        }
    }
    return theta;
}

std::vector<uint64_t> step_bases(const ArithParams &params) {
    const uint32_t steps = 2 * params.n;
    std::vector<uint64_t> powers(steps);
    uint64_t p = params.a % params.N;
    for (uint32_t e = 0; e < steps; e++) {
        powers[e] = p;  // a^(2^e)
        p = static_cast<uint64_t>(static_cast<unsigned __int128>(p) * p % params.N);
    }
    std::vector<uint64_t> out(steps);
    for (uint32_t i = 0; i < steps; i++) {
        out[i] = powers[steps - 1 - i];
    }
    return out;
}

Circuit build_original_circuit(const ArithParams &params) {
    const auto layout = RegisterLayout::original(params.n);
    const uint32_t steps = 2 * params.n;
    Circuit c(layout.total_qubits(), steps);
    c.append(GateOp::x(layout.x[0]));
    const auto bases = step_bases(params);
    for (uint32_t i = 0; i < steps; i++) {
        c.append(Reset{layout.control});
        c.append(GateOp::h(layout.control));
        c += build_unitary_block_original(layout, step_params(params, bases[i]));
        for (uint32_t k = 0; k < i; k++) {
            const double angle = -2 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(i - k + 1));
            c.append(GateOp::phase(layout.control, angle).conditioned_on(k, true));
        }
        c.append(GateOp::h(layout.control));
        c.append(Measure{layout.control, i});
    }
    return c;
}

Circuit build_reduced_subcircuit(const ArithParams &params, uint32_t step, double theta) {
    const auto bases = step_bases(params);
    if (step >= bases.size()) {
        throw InvalidArgument("reduced sub-circuit step out of range");
    }
    Circuit c = reduced_prefix(params, bases[step]);
    append_reduced_tail(c, theta);
    return c;
}

PhaseSampler::PhaseSampler(uint64_t N, uint64_t a, Variant variant)
    : params_(ArithParams::make(N, a)), variant_(variant) {
    if (variant_ == Variant::Original) {
        original_ = build_original_circuit(params_);
        original_.validate();
    } else {
        prepare_reduced_prefixes();
    }
}

PhaseSampler::PhaseSampler(uint64_t N, uint64_t a, Variant variant, CircuitTransform transform)
    : params_(ArithParams::make(N, a)), variant_(variant), transform_(std::move(transform)) {
    if (variant_ == Variant::Original) {
        original_ = (*transform_)(build_original_circuit(params_));
        original_.validate();
    }
}

uint32_t PhaseSampler::circuit_width() const {
    return variant_ == Variant::Original ? 2 * params_.n + 3 : 2 * params_.n + 1;
}

uint32_t PhaseSampler::executions_per_sample() const {
    return variant_ == Variant::Original ? 1 : 2 * params_.n;
}

void PhaseSampler::prepare_reduced_prefixes() {
    for (uint64_t base : step_bases(params_)) {
        reduced_prefix_.push_back(reduced_prefix(params_, base));
    }
    const uint64_t amps = uint64_t{1} << circuit_width();
    if (amps * reduced_prefix_.size() > kPrefixCacheAmplitudes) {
        return;
    }
    for (const auto &prefix : reduced_prefix_) {
        QuantumState s(prefix.qubit_count(), 1, 0);
        run_on(s, prefix);
        reduced_prefix_states_.push_back(std::move(s));
    }
}

QuantumState PhaseSampler::reduced_state_before_feedback(uint32_t step) const {
    if (step < reduced_prefix_states_.size()) {
        return reduced_prefix_states_[step];
    }
    const Circuit &prefix = reduced_prefix_[step];
    QuantumState s(prefix.qubit_count(), 1, 0);
    run_on(s, prefix);
    return s;
}

// State of sub-circuit `step` right before its control measurement.
QuantumState PhaseSampler::reduced_state_before_measure(uint32_t step, double theta, uint64_t seed) const {
    if (transform_) {
        Circuit c = (*transform_)(build_reduced_subcircuit(params_, step, theta));
        c.validate();
        QuantumState s(c.qubit_count(), c.classical_bit_count(), seed);
        const auto &ops = c.ops();
        if (ops.empty() || !std::holds_alternative<Measure>(ops.back())) {
            throw InvalidArgument("transformed sub-circuit must end with its control measurement");
        }
        for (size_t i = 0; i + 1 < ops.size(); i++) {
            s.execute(ops[i]);
        }
        return s;
    }
    QuantumState s = reduced_state_before_feedback(step);
    s.reseed(seed);
    s.apply(GateOp::phase(0, theta));
    s.apply(GateOp::h(0));
    return s;
}

PhaseSample PhaseSampler::sample(uint64_t seed) const {
    PhaseSample out;
    const uint32_t steps = phase_bits();
    out.bits.assign(steps, 0);
    out.probabilities.assign(steps, 0.0);
    if (variant_ == Variant::Original) {
        auto result = run(original_, seed);
        for (const auto &entry : result.record) {
            out.bits[entry.bit] = entry.value;
            out.probabilities[entry.bit] = entry.probability;
        }
    } else {
        for (uint32_t i = 0; i < steps; i++) {
            const double theta = feedback_angle(std::span<const uint8_t>(out.bits.data(), i));
            QuantumState s = reduced_state_before_measure(i, theta, derive_seed(seed, {i}));
            bool m = s.measure(0, 0);
            out.bits[i] = m;
            out.probabilities[i] = s.record().back().probability;
        }
    }
    for (uint32_t i = 0; i < steps; i++) {
        out.y |= uint64_t{out.bits[i]} << i;
    }
    return out;
}

namespace {

struct Enumerator {
    const Circuit &circuit;
    double prune;
    double pruned = 0;
    std::map<uint64_t, double> dist;

    void explore(QuantumState state, size_t start, double prob, uint64_t y) {
        const auto &ops = circuit.ops();
        for (size_t i = start; i < ops.size(); i++) {
            const Op &op = ops[i];
            if (const auto *g = std::get_if<GateOp>(&op)) {
                state.apply(*g);
                continue;
            }
            const bool is_measure = std::holds_alternative<Measure>(op);
            const Qubit q = is_measure ? std::get<Measure>(op).qubit : std::get<Reset>(op).qubit;
            const double p1 = state.probability_of_one(q);
            for (int outcome = 0; outcome < 2; outcome++) {
                const double p = outcome ? p1 : 1.0 - p1;
                const double branch = prob * p;
                if (p <= 0 || branch <= prune) {
                    pruned += std::max(branch, 0.0);
                    continue;
                }
                QuantumState child = state;
                child.project(q, outcome);
                uint64_t child_y = y;
                if (is_measure) {
                    const auto bit = std::get<Measure>(op).bit;
                    child.set_classical_bit(bit, outcome);
                    child_y |= uint64_t(outcome) << bit;
                } else if (outcome) {
                    child.apply(GateOp::x(q));
                }
                explore(std::move(child), i + 1, branch, child_y);
            }
            return;
        }
        dist[y] += prob;
    }
};

}  // namespace

std::map<uint64_t, double> PhaseSampler::exact_distribution(double prune, double *pruned_mass) const {
    // Rounding leaves ~1e-30 probabilities on branches that are exactly zero.
    prune = std::max(prune, 1e-13);
    if (variant_ == Variant::Original) {
        Enumerator e{original_, prune, 0.0, {}};
        QuantumState s(original_.qubit_count(), original_.classical_bit_count(), 0);
        e.explore(std::move(s), 0, 1.0, 0);
        if (pruned_mass) {
            *pruned_mass = e.pruned;
        }
        return e.dist;
    }

    std::map<uint64_t, double> dist;
    double pruned = 0;
    const uint32_t steps = phase_bits();
    std::vector<uint8_t> bits;
    std::function<void(double)> recurse = [&](double prob) {
        const uint32_t i = static_cast<uint32_t>(bits.size());
        if (i == steps) {
            uint64_t y = 0;
            for (uint32_t k = 0; k < steps; k++) {
                y |= uint64_t{bits[k]} << k;
            }
            dist[y] += prob;
            return;
        }
        const QuantumState s = reduced_state_before_measure(i, feedback_angle(bits), 0);
        const double p1 = s.probability_of_one(0);
        for (int outcome = 0; outcome < 2; outcome++) {
            const double branch = prob * (outcome ? p1 : 1.0 - p1);
            if (branch <= prune) {
                pruned += std::max(branch, 0.0);
                continue;
            }
            bits.push_back(static_cast<uint8_t>(outcome));
            recurse(branch);
            bits.pop_back();
        }
    };
    recurse(1.0);
    if (pruned_mass) {
        *pruned_mass = pruned;
    }
    return dist;
}

PhaseSample run_original(uint64_t N, uint64_t a, uint64_t seed) {
    return PhaseSampler(N, a, Variant::Original).sample(seed);
}

PhaseSample run_reduced(uint64_t N, uint64_t a, uint64_t seed) {
    return PhaseSampler(N, a, Variant::Reduced).sample(seed);
}

const char *post_processing_name(PostProcessing p) {
    return p == PostProcessing::ConvergentCandidates ? "candidates" : "verified";
}

PostProcessing parse_post_processing(const std::string &name) {
    if (name == "candidates") {
        return PostProcessing::ConvergentCandidates;
    }
    if (name == "verified") {
        return PostProcessing::VerifiedOrder;
    }
    throw InvalidArgument("unknown post-processing '" + name + "'");
}

IterationOutcome evaluate_sample(const ArithParams &params, Variant variant, uint64_t seed, PhaseSample sample,
                                 PostProcessing post) {
    IterationOutcome out{variant, params.N, params.a, seed, std::move(sample), std::nullopt, false, {}};
    const uint64_t q = uint64_t{1} << out.sample.width();
    if (post == PostProcessing::ConvergentCandidates) {
        auto c = factor_from_phase(out.sample.y, q, params.a, params.N);
        out.r = c.period;
        out.r_verified = c.period_verified;
        out.outcome = c.outcome;
        return out;
    }
    auto order = recover_order(out.sample.y, q, params.a, params.N);
    if (!order.order) {
        out.outcome = FactorOutcome::retry(order.reason);
        return out;
    }
    out.r = order.order;
    out.r_verified = true;
    out.outcome = extract_factors(*order.order, params.a, params.N);
    return out;
}

IterationOutcome single_iteration(const PhaseSampler &sampler, uint64_t seed, PostProcessing post) {
    return evaluate_sample(sampler.params(), sampler.variant(), seed, sampler.sample(seed), post);
}

IterationOutcome single_iteration(uint64_t N, uint64_t a, Variant variant, uint64_t seed, PostProcessing post) {
    return single_iteration(PhaseSampler(N, a, variant), seed, post);
}

const char *report_kind_name(FactorReport::Kind kind) {
    switch (kind) {
        case FactorReport::Kind::Factored:
            return "factored";
        case FactorReport::Kind::Screened:
            return "screened";
        case FactorReport::Kind::Prime:
            return "prime";
        case FactorReport::Kind::Exhausted:
            return "exhausted";
    }
    return "?";
}

namespace {

// Handles screening. Returns true when the report is already final.
bool screen_into(FactorReport &report) {
    const uint64_t N = report.N;
    if (N < 3) {
        throw InvalidArgument("factor: N must be at least 3");
    }
    report.screen = screen(N);
    switch (report.screen.kind) {
        case ScreenKind::Even:
            report.kind = FactorReport::Kind::Screened;
            report.outcome = FactorOutcome::trivial(N, 2);
            return true;
        case ScreenKind::PrimePower:
            report.kind = FactorReport::Kind::Screened;
            report.outcome = FactorOutcome::trivial(N, report.screen.base);
            return true;
        case ScreenKind::Prime:
            report.kind = FactorReport::Kind::Prime;
            return true;
        case ScreenKind::CompositeOk:
            return false;
    }
    return false;
}

template <typename PickBase>
FactorReport factor_loop(uint64_t N, Variant variant, uint32_t max_iterations, uint64_t seed, PostProcessing post,
                         PickBase pick_base) {
    FactorReport report{N, variant, {}, FactorReport::Kind::Exhausted, FactorOutcome::retry(RetryReason::ZeroPhase), {}};
    if (screen_into(report)) {
        return report;
    }
    std::optional<PhaseSampler> sampler;
    for (uint32_t i = 0; i < max_iterations; i++) {
        const uint64_t a = pick_base(i);
        IterationLogEntry entry{i, a, std::nullopt, std::nullopt};
        const uint64_t d = gcd(a, N);
        if (d > 1) {
            entry.gcd_shortcut = d;
            report.log.push_back(entry);
            report.kind = FactorReport::Kind::Factored;
            report.outcome = FactorOutcome::factored(N, d);
            return report;
        }
        if (!sampler || sampler->params().a != a) {
            sampler.emplace(N, a, variant);
        }
        entry.iteration = single_iteration(*sampler, derive_seed(seed, {0x17e2, i}), post);
        report.outcome = entry.iteration->outcome;
        report.log.push_back(std::move(entry));
        if (report.outcome.is_factored()) {
            report.kind = FactorReport::Kind::Factored;
            return report;
        }
    }
    report.kind = FactorReport::Kind::Exhausted;
    return report;
}

}  // namespace

FactorReport factor(uint64_t N, Variant variant, uint32_t max_iterations, uint64_t seed, PostProcessing post) {
    return factor_loop(N, variant, max_iterations, seed, post, [&](uint32_t i) {
        Rng rng(derive_seed(seed, {0xba5e, i}));
        return rng.uniform_int(2, N - 1);
    });
}

FactorReport factor_with_base(uint64_t N, uint64_t a, Variant variant, uint32_t max_iterations, uint64_t seed,
                              PostProcessing post) {
    if (a <= 1 || a >= N) {
        throw PreconditionError("factor_with_base: need 1 < a < N");
    }
    return factor_loop(N, variant, max_iterations, seed, post, [&](uint32_t) { return a; });
}

}  // namespace qshor
