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

#include "qshor/qshor.h"

#include <string>

#include "qshor/classical.h"
#include "qshor/driver.h"
#include "qshor/error.h"
#include "qshor/harness.h"
#include "qshor/transpile.h"

struct qshor_factor_result {
    qshor::FactorReport report;
    std::string json;
    std::string text;
};

struct qshor_sweep_result {
    qshor::SweepResult result;
    std::string csv;
    std::string json;
};

struct qshor_text {
    std::string data;
};

namespace {

thread_local std::string last_error;

template <typename F>
qshor_status guarded(F &&fn) {
    try {
        fn();
        last_error.clear();
        return QSHOR_OK;
    } catch (const qshor::Error &e) {
        last_error = e.what();
        return static_cast<qshor_status>(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return QSHOR_ERR_CAPACITY;
    } catch (const std::exception &e) {
        last_error = e.what();
        return QSHOR_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return QSHOR_ERR_INTERNAL;
    }
}

std::vector<qshor::Variant> to_variants(qshor_variant v) {
    switch (v) {
        case QSHOR_VARIANT_ORIGINAL:
            return {qshor::Variant::Original};
        case QSHOR_VARIANT_REDUCED:
            return {qshor::Variant::Reduced};
        case QSHOR_VARIANT_BOTH:
            return {qshor::Variant::Original, qshor::Variant::Reduced};
    }
    throw qshor::InvalidArgument("unknown variant code");
}

qshor::Variant to_single_variant(qshor_variant v) {
    if (v == QSHOR_VARIANT_BOTH) {
        throw qshor::InvalidArgument("this call needs a single variant");
    }
    return to_variants(v).front();
}

qshor::PostProcessing to_post(qshor_post_processing p) {
    switch (p) {
        case QSHOR_POST_CANDIDATES:
            return qshor::PostProcessing::ConvergentCandidates;
        case QSHOR_POST_VERIFIED:
            return qshor::PostProcessing::VerifiedOrder;
    }
    throw qshor::InvalidArgument("unknown post-processing code");
}

template <typename T>
void require(T *p, const char *what) {
    if (p == nullptr) {
        throw qshor::InvalidArgument(std::string(what) + " must not be null");
    }
}

}  // namespace

extern "C" {

const char *qshor_version(void) {
    return "0.1.0";
}

const char *qshor_last_error(void) {
    return last_error.c_str();
}

qshor_status qshor_factor(uint64_t n, qshor_variant variant, uint64_t fixed_base, uint32_t max_iterations,
                          uint64_t seed, qshor_post_processing post, qshor_factor_result **out) {
    return guarded([&] {
        require(out, "out");
        *out = nullptr;
        const auto v = to_single_variant(variant);
        auto report = fixed_base == 0 ? qshor::factor(n, v, max_iterations, seed, to_post(post))
                                      : qshor::factor_with_base(n, fixed_base, v, max_iterations, seed, to_post(post));
        auto *r = new qshor_factor_result{std::move(report), {}, {}};
        r->json = qshor::factor_json(r->report);
        r->text = qshor::factor_text(r->report);
        *out = r;
    });
}

qshor_factor_kind qshor_factor_result_kind(const qshor_factor_result *result) {
    switch (result->report.kind) {
        case qshor::FactorReport::Kind::Factored:
            return QSHOR_FACTORED;
        case qshor::FactorReport::Kind::Screened:
            return QSHOR_SCREENED;
        case qshor::FactorReport::Kind::Prime:
            return QSHOR_PRIME;
        case qshor::FactorReport::Kind::Exhausted:
            break;
    }
    return QSHOR_EXHAUSTED;
}

uint64_t qshor_factor_result_divisor(const qshor_factor_result *result, int index) {
    if (result == nullptr || !result->report.success()) {
        return 0;
    }
    return index == 0 ? result->report.outcome.d1 : result->report.outcome.d2;
}

uint32_t qshor_factor_result_iterations(const qshor_factor_result *result) {
    return static_cast<uint32_t>(result->report.log.size());
}

const char *qshor_factor_result_json(const qshor_factor_result *result) {
    return result->json.c_str();
}

const char *qshor_factor_result_text(const qshor_factor_result *result) {
    return result->text.c_str();
}

void qshor_factor_result_free(qshor_factor_result *result) {
    delete result;
}

qshor_status qshor_single_iteration(uint64_t n, uint64_t a, qshor_variant variant, uint64_t seed,
                                    qshor_post_processing post, uint64_t *y, int *factored) {
    return guarded([&] {
        auto it = qshor::single_iteration(n, a, to_single_variant(variant), seed, to_post(post));
        if (y) {
            *y = it.sample.y;
        }
        if (factored) {
            *factored = it.outcome.is_factored() ? 1 : 0;
        }
    });
}

qshor_status qshor_sweep(const qshor_sweep_config *config, qshor_sweep_result **out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        *out = nullptr;
        if (config->n_count > 0) {
            require(config->n_values, "n_values");
        }
        qshor::ExperimentConfig cfg;
        cfg.n_values.assign(config->n_values, config->n_values + config->n_count);
        cfg.variants = to_variants(config->variant);
        cfg.repetitions = config->repetitions;
        cfg.master_seed = config->seed;
        cfg.post = to_post(config->post);
        cfg.threads = config->threads;
        auto *r = new qshor_sweep_result{qshor::run_sweep(cfg), {}, {}};
        r->csv = qshor::sweep_csv(r->result);
        r->json = qshor::sweep_json(r->result);
        *out = r;
    });
}

const char *qshor_sweep_result_csv(const qshor_sweep_result *result) {
    return result->csv.c_str();
}

const char *qshor_sweep_result_json(const qshor_sweep_result *result) {
    return result->json.c_str();
}

size_t qshor_sweep_result_cell_count(const qshor_sweep_result *result) {
    return result->result.cells.size();
}

qshor_status qshor_sweep_result_mean(const qshor_sweep_result *result, uint64_t n, qshor_variant variant,
                                     double *mean) {
    return guarded([&] {
        require(result, "result");
        require(mean, "mean");
        const auto v = to_single_variant(variant);
        if (result->result.cell_count(n, v) == 0) {
            throw qshor::InvalidArgument("no sweep cells for N=" + std::to_string(n));
        }
        *mean = result->result.mean_success(n, v);
    });
}

void qshor_sweep_result_free(qshor_sweep_result *result) {
    delete result;
}

qshor_status qshor_phases(uint64_t n, uint64_t a, qshor_variant variant, uint32_t shots, uint64_t seed,
                          qshor_post_processing post, qshor_text **out) {
    return guarded([&] {
        require(out, "out");
        *out = nullptr;
        std::vector<qshor::PhaseHistogram> hs;
        for (auto v : to_variants(variant)) {
            hs.push_back(qshor::phase_histogram(n, a, v, shots, seed, to_post(post)));
        }
        *out = new qshor_text{qshor::phases_csv(hs)};
    });
}

qshor_status qshor_depth(const uint64_t *n_values, size_t n_count, qshor_variant variant, qshor_text **out) {
    return guarded([&] {
        require(out, "out");
        require(n_values, "n_values");
        *out = nullptr;
        std::vector<qshor::DepthReport> reports;
        for (size_t i = 0; i < n_count; i++) {
            for (auto v : to_variants(variant)) {
                reports.push_back(qshor::depth_report(n_values[i], v));
            }
        }
        *out = new qshor_text{qshor::depth_json(reports)};
    });
}

const char *qshor_text_data(const qshor_text *text) {
    return text->data.c_str();
}

size_t qshor_text_size(const qshor_text *text) {
    return text->data.size();
}

void qshor_text_free(qshor_text *text) {
    delete text;
}

uint64_t qshor_depth_model(uint32_t n) {
    return n == 0 ? 0 : qshor::depth_model(n);
}

qshor_status qshor_trial_division(uint64_t n, uint64_t *smallest_factor, int *is_prime, double *seconds) {
    return guarded([&] {
        auto r = qshor::trial_division(n);
        if (smallest_factor) {
            *smallest_factor = r.smallest_factor;
        }
        if (is_prime) {
            *is_prime = r.prime ? 1 : 0;
        }
        if (seconds) {
            *seconds = r.seconds;
        }
    });
}

}  // extern "C"
