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

#ifndef QSHOR_HARNESS_H
#define QSHOR_HARNESS_H

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qshor/arith.h"
#include "qshor/driver.h"
#include "qshor/transpile.h"

namespace qshor {

struct ExperimentConfig {
    std::vector<uint64_t> n_values;
    std::vector<Variant> variants{Variant::Original, Variant::Reduced};
    uint32_t repetitions = 10;
    uint64_t master_seed = 0;
    std::string output_dir;
    uint32_t shots = 1024;
    uint32_t max_iterations = 10;
    PostProcessing post = PostProcessing::ConvergentCandidates;
    /// Worker threads; 0 picks hardware concurrency.
    uint32_t threads = 0;

    void validate() const;
};

/// Parses "variant" values: original, reduced or both.
std::vector<Variant> parse_variants(const std::string &name);
std::vector<uint64_t> parse_n_list(const std::string &text);

/// Applies key=value lines (keys mirror the CLI flags without dashes: N,
/// variant, reps, seed, shots, out, max-iter, post, threads). Blank lines and
/// lines starting with '#' are skipped. Throws InvalidArgument on unknown keys.
void apply_config_text(ExperimentConfig &config, const std::string &text);
void apply_config_file(ExperimentConfig &config, const std::string &path);

/// Seed for one repetition of one sweep cell.
uint64_t cell_seed(uint64_t master_seed, uint64_t N, uint64_t a, Variant variant, uint32_t repetition);

struct SweepCell {
    uint64_t N;
    uint64_t a;
    Variant variant;
    uint32_t successes = 0;
    uint32_t repetitions = 0;
    std::map<std::string, uint32_t> retry_reasons;

    double success_probability() const {
        return repetitions == 0 ? 0.0 : static_cast<double>(successes) / repetitions;
    }
};

struct SweepResult {
    std::vector<SweepCell> cells;  // sorted by (N, a, variant)
    /// N values that did not pass screening, with the screen verdict.
    std::map<uint64_t, std::string> screened;

    double mean_success(uint64_t N, Variant variant) const;
    size_t cell_count(uint64_t N, Variant variant) const;
};

SweepResult run_sweep(const ExperimentConfig &config);

/// Header N,a,variant,successes,repetitions,success_probability; LF endings.
std::string sweep_csv(const SweepResult &result);
/// Per-(N, variant) means plus per-cell retry reasons. Keys sorted.
std::string sweep_json(const SweepResult &result);

struct PhaseHistogram {
    struct Row {
        uint64_t y;
        uint32_t count;
        std::optional<uint64_t> r;
        bool factored;
    };

    uint64_t N;
    uint64_t a;
    Variant variant;
    uint32_t shots;
    /// Sorted by descending count, then ascending y.
    std::vector<Row> rows;
    uint32_t phase_bits;
};

PhaseHistogram phase_histogram(uint64_t N, uint64_t a, Variant variant, uint32_t shots, uint64_t seed,
                               PostProcessing post = PostProcessing::ConvergentCandidates);
/// Header variant,N,a,y,phase,count,r,factored.
std::string phases_csv(const std::vector<PhaseHistogram> &histograms);

std::string depth_json(const std::vector<DepthReport> &reports);

/// Deterministic JSON for a factor run (no timing).
std::string factor_json(const FactorReport &report);
/// Human-readable summary lines.
std::string factor_text(const FactorReport &report);

/// Runs fn(i) for i in [0, count) on a pool of worker threads.
void parallel_for(size_t count, uint32_t threads, const std::function<void(size_t)> &fn);

}  // namespace qshor

#endif
