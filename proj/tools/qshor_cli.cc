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

// qshor command-line front end. Talks to the library only through the C API.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qshor/qshor.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
    LibraryError(qshor_status status, const std::string &message) : std::runtime_error(message), status(status) {
    }
    qshor_status status;
};

void check(qshor_status status) {
    if (status != QSHOR_OK) {
        throw LibraryError(status, qshor_last_error());
    }
}

qshor_variant parse_variant(const std::string &s, bool allow_both) {
    if (s == "original") {
        return QSHOR_VARIANT_ORIGINAL;
    }
    if (s == "reduced") {
        return QSHOR_VARIANT_REDUCED;
    }
    if (s == "both" && allow_both) {
        return QSHOR_VARIANT_BOTH;
    }
    throw UsageError("invalid --variant '" + s + "'");
}

qshor_post_processing parse_post(const std::string &s) {
    if (s == "candidates") {
        return QSHOR_POST_CANDIDATES;
    }
    if (s == "verified") {
        return QSHOR_POST_VERIFIED;
    }
    throw UsageError("invalid --post '" + s + "'");
}

std::vector<uint64_t> parse_n_list(const std::string &text) {
    std::vector<uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoull(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw UsageError("invalid N value '" + item + "'");
        }
    }
    return out;
}

// key=value lines; '#' comments.
std::map<std::string, std::string> read_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file " + path);
    }
    std::map<std::string, std::string> out;
    std::string line;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line without '=': " + line);
        }
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

// Fills options the user did not pass on the command line from the config
// file. Unknown keys are an error.
void apply_config(CLI::App &cmd, const std::string &path, std::vector<uint64_t> *n_values) {
    for (const auto &[key, value] : read_config(path)) {
        if (key == "N" || key == "n") {
            if (n_values != nullptr && n_values->empty()) {
                *n_values = parse_n_list(value);
            }
            continue;
        }
        CLI::Option *opt = nullptr;
        try {
            opt = cmd.get_option("--" + key);
        } catch (const CLI::OptionNotFound &) {
            throw UsageError("config key '" + key + "' is not valid for '" + cmd.get_name() + "'");
        }
        if (opt->count() == 0) {
            opt->add_result(value);
            opt->run_callback();
        }
    }
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw LibraryError(QSHOR_ERR_IO, "cannot write " + path);
    }
    out << content;
    if (!out) {
        throw LibraryError(QSHOR_ERR_IO, "failed writing " + path);
    }
}

struct Options {
    std::string variant;
    uint64_t seed = 0;
    uint32_t max_iter = 10;
    uint32_t reps = 10;
    uint32_t shots = 1024;
    uint32_t threads = 0;
    uint64_t base = 0;
    std::string post = "candidates";
    std::string out;
    std::string config;
    std::vector<uint64_t> n_values;
    uint64_t a = 0;
    uint64_t single_n = 0;
};

int cmd_factor(const Options &o) {
    if (o.n_values.size() != 1) {
        throw UsageError("factor takes exactly one N");
    }
    const uint64_t n = o.n_values[0];
    qshor_factor_result *result = nullptr;
    const auto start = std::chrono::steady_clock::now();
    check(qshor_factor(n, parse_variant(o.variant, false), o.base, o.max_iter, o.seed, parse_post(o.post), &result));
    const double sim_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::cout << qshor_factor_result_text(result);
    uint64_t smallest = 0;
    int prime = 0;
    double td_seconds = 0;
    check(qshor_trial_division(n, &smallest, &prime, &td_seconds));
    std::printf("timing (simulator wall clock, not comparable to hardware run times): trial division %.6f ms, "
                "simulated run %.3f ms\n",
                td_seconds * 1e3, sim_seconds * 1e3);
    std::cout << qshor_factor_result_json(result);
    if (!o.out.empty()) {
        write_file(o.out, qshor_factor_result_json(result));
    }
    const auto kind = qshor_factor_result_kind(result);
    qshor_factor_result_free(result);
    return kind == QSHOR_FACTORED || kind == QSHOR_SCREENED ? kExitOk : kExitFailure;
}

int cmd_sweep(const Options &o) {
    std::vector<uint64_t> ns = o.n_values;
    if (ns.empty()) {
        ns = {15, 21, 33, 39, 51, 57};
    }
    if (o.reps < 1) {
        throw UsageError("--reps must be at least 1");
    }
    qshor_sweep_config cfg{ns.data(), ns.size(), parse_variant(o.variant, true), o.reps, o.seed, parse_post(o.post),
                           o.threads};
    qshor_sweep_result *result = nullptr;
    check(qshor_sweep(&cfg, &result));
    if (o.out.empty()) {
        std::cout << qshor_sweep_result_csv(result);
    } else {
        std::filesystem::create_directories(o.out);
        write_file(o.out + "/sweep.csv", qshor_sweep_result_csv(result));
        write_file(o.out + "/sweep.json", qshor_sweep_result_json(result));
    }
    for (uint64_t n : ns) {
        for (auto v : {QSHOR_VARIANT_ORIGINAL, QSHOR_VARIANT_REDUCED}) {
            double mean = 0;
            if (qshor_sweep_result_mean(result, n, v, &mean) == QSHOR_OK) {
                std::fprintf(stderr, "N=%llu %s: mean success %.4f\n", static_cast<unsigned long long>(n),
                             v == QSHOR_VARIANT_ORIGINAL ? "original" : "reduced", mean);
            }
        }
    }
    qshor_sweep_result_free(result);
    return kExitOk;
}

int cmd_phases(const Options &o) {
    if (o.n_values.size() != 1 || o.a == 0) {
        throw UsageError("phases takes N and a");
    }
    qshor_text *text = nullptr;
    check(qshor_phases(o.n_values[0], o.a, parse_variant(o.variant, true), o.shots, o.seed, parse_post(o.post),
                       &text));
    if (o.out.empty()) {
        std::cout << qshor_text_data(text);
    } else {
        write_file(o.out, qshor_text_data(text));
    }
    qshor_text_free(text);
    return kExitOk;
}

int cmd_depth(const Options &o) {
    std::vector<uint64_t> ns = o.n_values;
    if (ns.empty()) {
        ns = {15, 21, 33, 39, 51, 57};
    }
    qshor_text *text = nullptr;
    check(qshor_depth(ns.data(), ns.size(), parse_variant(o.variant, true), &text));
    if (o.out.empty()) {
        std::cout << qshor_text_data(text);
    } else {
        write_file(o.out, qshor_text_data(text));
    }
    qshor_text_free(text);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Shor order finding on a statevector simulator (original and reduced circuits)"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--variant", o.variant, "original, reduced or both (default: reduced for factor, both otherwise)");
        cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
        cmd->add_option("--post", o.post, "post-processing: candidates or verified")->capture_default_str();
        cmd->add_option("--out", o.out, "output path");
        cmd->add_option("--config", o.config, "key=value file mirroring the flags");
    };

    auto *factor = app.add_subcommand("factor", "factor one N");
    factor->add_option("N", o.single_n, "number to factor")->required();
    factor->add_option("--max-iter", o.max_iter, "iterations before giving up")->capture_default_str();
    factor->add_option("--base", o.base, "fix the base a instead of drawing it");
    add_common(factor);

    auto *sweep = app.add_subcommand("sweep", "success probability over all feasible a");
    sweep->add_option("N", o.n_values, "numbers to sweep (default 15 21 33 39 51 57)");
    sweep->add_option("--reps", o.reps, "repetitions per (N, a)")->capture_default_str();
    sweep->add_option("--threads", o.threads, "worker threads (0 = all cores)");

    auto *phases = app.add_subcommand("phases", "histogram of measured phases");
    phases->add_option("N", o.single_n, "number to factor")->required();
    phases->add_option("a", o.a, "base")->required();
    phases->add_option("--shots", o.shots, "independent iterations")->capture_default_str();

    auto *depth = app.add_subcommand("depth", "transpiled depth report");
    depth->add_option("N", o.n_values, "numbers (default 15 21 33 39 51 57)");

    try {
        add_common(sweep);
        add_common(phases);
        add_common(depth);
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        CLI::App *active = app.get_subcommands().front();
        if (active == factor || active == phases) {
            o.n_values = {o.single_n};
        }
        if (!o.config.empty()) {
            apply_config(*active, o.config, &o.n_values);
        }
        if (o.variant.empty()) {
            o.variant = active == factor ? "reduced" : "both";
        }
        if (active == factor) {
            return cmd_factor(o);
        }
        if (active == sweep) {
            return cmd_sweep(o);
        }
        if (active == phases) {
            return cmd_phases(o);
        }
        return cmd_depth(o);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ParseError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LibraryError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.status == QSHOR_ERR_INVALID_ARGUMENT || e.status == QSHOR_ERR_PRECONDITION ? kExitUsage
                                                                                              : kExitFailure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
