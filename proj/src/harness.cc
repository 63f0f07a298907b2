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

#include "qshor/harness.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qshor/classical.h"
#include "qshor/error.h"
#include "qshor/rng.h"

namespace qshor {

using nlohmann::json;

namespace {

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

uint64_t parse_u64(const std::string &key, const std::string &value) {
    try {
        size_t used = 0;
        if (!value.empty() && value[0] == '-') {
            throw std::invalid_argument("negative");
        }
        uint64_t v = std::stoull(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception &) {
        throw InvalidArgument("invalid value for " + key + ": '" + value + "'");
    }
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (repetitions < 1) {
        throw InvalidArgument("repetitions must be at least 1");
    }
    if (shots < 1) {
        throw InvalidArgument("shots must be at least 1");
    }
    if (variants.empty()) {
        throw InvalidArgument("at least one variant is required");
    }
}

std::vector<Variant> parse_variants(const std::string &name) {
    if (name == "both") {
        return {Variant::Original, Variant::Reduced};
    }
    return {parse_variant(name)};
}

std::vector<uint64_t> parse_n_list(const std::string &text) {
    std::vector<uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(parse_u64("N", item));
        }
    }
    if (out.empty()) {
        throw InvalidArgument("empty N list");
    }
    return out;
}

void apply_config_text(ExperimentConfig &config, const std::string &text) {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("config line without '=': " + line);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "N" || key == "n") {
            config.n_values = parse_n_list(value);
        } else if (key == "variant") {
            config.variants = parse_variants(value);
        } else if (key == "reps") {
            config.repetitions = static_cast<uint32_t>(parse_u64(key, value));
        } else if (key == "seed") {
            config.master_seed = parse_u64(key, value);
        } else if (key == "shots") {
            config.shots = static_cast<uint32_t>(parse_u64(key, value));
        } else if (key == "out") {
            config.output_dir = value;
        } else if (key == "max-iter") {
            config.max_iterations = static_cast<uint32_t>(parse_u64(key, value));
        } else if (key == "post") {
            config.post = parse_post_processing(value);
        } else if (key == "threads") {
            config.threads = static_cast<uint32_t>(parse_u64(key, value));
        } else {
            throw InvalidArgument("unknown config key '" + key + "'");
        }
    }
}

void apply_config_file(ExperimentConfig &config, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_text(config, buf.str());
}

uint64_t cell_seed(uint64_t master_seed, uint64_t N, uint64_t a, Variant variant, uint32_t repetition) {
    return derive_seed(master_seed, {N, a, static_cast<uint64_t>(variant), repetition});
}

void parallel_for(size_t count, uint32_t threads, const std::function<void(size_t)> &fn) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<uint32_t>(std::min<size_t>(threads, count));
    if (threads <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (uint32_t t = 0; t < threads; t++) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

double SweepResult::mean_success(uint64_t N, Variant variant) const {
    double sum = 0;
    size_t k = 0;
    for (const auto &c : cells) {
        if (c.N == N && c.variant == variant) {
            sum += c.success_probability();
            k++;
        }
    }
    return k == 0 ? 0.0 : sum / static_cast<double>(k);
}

size_t SweepResult::cell_count(uint64_t N, Variant variant) const {
    return std::count_if(cells.begin(), cells.end(),
                         [&](const SweepCell &c) { return c.N == N && c.variant == variant; });
}

SweepResult run_sweep(const ExperimentConfig &config) {
    config.validate();
    SweepResult result;
    std::vector<uint64_t> ns = config.n_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::vector<Variant> variants = config.variants;
    std::sort(variants.begin(), variants.end());
    variants.erase(std::unique(variants.begin(), variants.end()), variants.end());

    for (uint64_t N : ns) {
        if (N < 3) {
            result.screened[N] = "too-small";
            continue;
        }
        const auto s = screen(N);
        if (s.kind != ScreenKind::CompositeOk) {
            result.screened[N] = screen_name(s.kind);
            continue;
        }
        for (uint64_t a : feasible_bases(N)) {
            for (Variant v : variants) {
                result.cells.push_back(SweepCell{N, a, v, 0, config.repetitions, {}});
            }
        }
    }

    parallel_for(result.cells.size(), config.threads, [&](size_t i) {
        SweepCell &cell = result.cells[i];
        const PhaseSampler sampler(cell.N, cell.a, cell.variant);
        for (uint32_t rep = 0; rep < cell.repetitions; rep++) {
            auto it = single_iteration(sampler, cell_seed(config.master_seed, cell.N, cell.a, cell.variant, rep),
                                       config.post);
            if (it.outcome.is_factored()) {
                if (cell.N % it.outcome.d1 != 0) {
                    throw PreconditionError("reported factor does not divide N");
                }
                cell.successes++;
            } else {
                cell.retry_reasons[retry_reason_name(it.outcome.reason)]++;
            }
        }
    });
    return result;
}

std::string sweep_csv(const SweepResult &result) {
    std::string out = "N,a,variant,successes,repetitions,success_probability\n";
    for (const auto &c : result.cells) {
        out += std::to_string(c.N) + "," + std::to_string(c.a) + "," + variant_name(c.variant) + "," +
               std::to_string(c.successes) + "," + std::to_string(c.repetitions) + "," +
               format_fixed(c.success_probability(), 6) + "\n";
    }
    return out;
}

std::string sweep_json(const SweepResult &result) {
    json cells = json::array();
    std::map<std::pair<uint64_t, Variant>, std::pair<double, size_t>> means;
    for (const auto &c : result.cells) {
        cells.push_back({{"N", c.N},
                         {"a", c.a},
                         {"variant", variant_name(c.variant)},
                         {"successes", c.successes},
                         {"repetitions", c.repetitions},
                         {"success_probability", c.success_probability()},
                         {"retry_reasons", c.retry_reasons}});
        auto &m = means[{c.N, c.variant}];
        m.first += c.success_probability();
        m.second++;
    }
    json summary = json::array();
    for (const auto &[key, m] : means) {
        summary.push_back({{"N", key.first},
                           {"variant", variant_name(key.second)},
                           {"cells", m.second},
                           {"mean_success_probability", m.first / static_cast<double>(m.second)}});
    }
    json screened = json::object();
    for (const auto &[n, why] : result.screened) {
        screened[std::to_string(n)] = why;
    }
    json doc{{"cells", cells}, {"summary", summary}, {"screened", screened}};
    return doc.dump(2) + "\n";
}

PhaseHistogram phase_histogram(uint64_t N, uint64_t a, Variant variant, uint32_t shots, uint64_t seed,
                               PostProcessing post) {
    if (shots < 1) {
        throw InvalidArgument("shots must be at least 1");
    }
    const PhaseSampler sampler(N, a, variant);
    std::map<uint64_t, uint32_t> counts;
    std::map<uint64_t, IterationOutcome> verdicts;
    for (uint32_t s = 0; s < shots; s++) {
        const uint64_t shot_seed = derive_seed(seed, {N, a, static_cast<uint64_t>(variant), s});
        auto it = single_iteration(sampler, shot_seed, post);
        counts[it.sample.y]++;
        verdicts.emplace(it.sample.y, std::move(it));
    }
    PhaseHistogram h{N, a, variant, shots, {}, sampler.phase_bits()};
    for (const auto &[y, count] : counts) {
        const auto &v = verdicts.at(y);
        h.rows.push_back({y, count, v.r, v.outcome.is_factored()});
    }
    std::stable_sort(h.rows.begin(), h.rows.end(),
                     [](const auto &l, const auto &r) { return l.count > r.count; });
    return h;
}

std::string phases_csv(const std::vector<PhaseHistogram> &histograms) {
    std::string out = "variant,N,a,y,phase,count,r,factored\n";
    for (const auto &h : histograms) {
        for (const auto &row : h.rows) {
            const double phase = std::ldexp(static_cast<double>(row.y), -static_cast<int>(h.phase_bits));
            out += std::string(variant_name(h.variant)) + "," + std::to_string(h.N) + "," + std::to_string(h.a) +
                   "," + std::to_string(row.y) + "," + format_fixed(phase, 10) + "," + std::to_string(row.count) +
                   "," + (row.r ? std::to_string(*row.r) : "") + "," + (row.factored ? "1" : "0") + "\n";
        }
    }
    return out;
}

std::string depth_json(const std::vector<DepthReport> &reports) {
    json arr = json::array();
    for (const auto &r : reports) {
        arr.push_back({{"N", r.N},
                       {"n", r.n},
                       {"a", r.a},
                       {"variant", variant_name(r.variant)},
                       {"qubits", r.qubits},
                       {"subcircuit_depths", r.subcircuit_depths},
                       {"max_depth", r.max_depth},
                       {"summed_depth", r.summed_depth},
                       {"model_depth", r.model},
                       {"gate_counts", r.gate_counts},
                       {"basis", {"cx", "id", "rz", "sx", "x"}},
                       {"connectivity", "full"},
                       {"measure_reset_layers", 1}});
    }
    return json{{"reports", arr}}.dump(2) + "\n";
}

namespace {

void check_divides(const FactorReport &report) {
    const auto &o = report.outcome;
    if (!report.success()) {
        return;
    }
    if (o.d1 <= 1 || o.d1 >= report.N || report.N % o.d1 != 0 || o.d1 * o.d2 != report.N) {
        throw PreconditionError("factor report holds a non-divisor");
    }
}

}  // namespace

std::string factor_json(const FactorReport &report) {
    check_divides(report);
    json iterations = json::array();
    for (const auto &e : report.log) {
        json j{{"index", e.index}, {"a", e.a}};
        if (e.gcd_shortcut) {
            j["gcd_shortcut"] = *e.gcd_shortcut;
        }
        if (e.iteration) {
            const auto &it = *e.iteration;
            std::string bits;
            for (auto b : it.sample.bits) {
                bits += b ? '1' : '0';
            }
            j["seed"] = it.seed;
            j["bits"] = bits;
            j["y"] = it.sample.y;
            j["phase"] = it.sample.phase();
            j["r"] = it.r ? json(*it.r) : json(nullptr);
            j["r_verified"] = it.r_verified;
            j["outcome"] = it.outcome.str();
        }
        iterations.push_back(j);
    }
    json doc{{"N", report.N},
             {"variant", variant_name(report.variant)},
             {"screen", {{"kind", screen_name(report.screen.kind)},
                         {"base", report.screen.base},
                         {"exponent", report.screen.exponent}}},
             {"result", report_kind_name(report.kind)},
             {"iterations", iterations}};
    if (report.success()) {
        doc["factors"] = {report.outcome.d1, report.outcome.d2};
    }
    return doc.dump() + "\n";
}

std::string factor_text(const FactorReport &report) {
    check_divides(report);
    std::ostringstream out;
    out << "N = " << report.N << " (" << variant_name(report.variant) << " circuit)\n";
    for (const auto &e : report.log) {
        out << "  iteration " << e.index << ": a = " << e.a;
        if (e.gcd_shortcut) {
            out << ", gcd(a, N) = " << *e.gcd_shortcut << " (no circuit needed)";
        }
        if (e.iteration) {
            const auto &it = *e.iteration;
            out << ", y = " << it.sample.y << " (phase " << it.sample.phase() << ")";
            if (it.r) {
                out << ", r = " << *it.r << (it.r_verified ? "" : " (unverified)");
            }
            out << " -> " << it.outcome.str();
        }
        out << "\n";
    }
    switch (report.kind) {
        case FactorReport::Kind::Factored:
            out << "factors: " << report.outcome.d1 << " x " << report.outcome.d2 << "\n";
            break;
        case FactorReport::Kind::Screened:
            out << "screened (" << screen_name(report.screen.kind) << "): " << report.outcome.d1 << " x "
                << report.outcome.d2 << "\n";
            break;
        case FactorReport::Kind::Prime:
            out << report.N << " is prime, nothing to factor\n";
            break;
        case FactorReport::Kind::Exhausted:
            out << "no factor found after " << report.log.size() << " iterations\n";
            break;
    }
    return out.str();
}

}  // namespace qshor
