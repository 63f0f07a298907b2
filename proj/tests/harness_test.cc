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

#include <atomic>
#include <cstdio>
#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "json.hpp"
#include "qshor/error.h"

namespace qshor {
namespace {

ExperimentConfig small_config(std::vector<uint64_t> ns, uint32_t reps, uint64_t seed) {
    ExperimentConfig c;
    c.n_values = std::move(ns);
    c.repetitions = reps;
    c.master_seed = seed;
    c.threads = 1;
    return c;
}

size_t count_lines(const std::string &s) {
    return static_cast<size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Config, parse_variants) {
    EXPECT_EQ(parse_variants("both"), (std::vector<Variant>{Variant::Original, Variant::Reduced}));
    EXPECT_EQ(parse_variants("original"), (std::vector<Variant>{Variant::Original}));
    EXPECT_THROW(parse_variants("fast"), InvalidArgument);
}

TEST(Config, parse_n_list) {
    EXPECT_EQ(parse_n_list("15, 21,33"), (std::vector<uint64_t>{15, 21, 33}));
    EXPECT_THROW(parse_n_list(""), InvalidArgument);
    EXPECT_THROW(parse_n_list("15,x"), InvalidArgument);
    EXPECT_THROW(parse_n_list("-3"), InvalidArgument);
}

TEST(Config, key_value_text) {
    ExperimentConfig c;
    apply_config_text(c,
                      "# sweep settings\n"
                      "N = 15,21\n"
                      "\n"
                      "variant=reduced\n"
                      "reps=4\n"
                      "seed=99\n"
                      "shots=8\n"
                      "out=/tmp/x\n"
                      "max-iter=3\n"
                      "post=verified\n"
                      "threads=2\n");
    EXPECT_EQ(c.n_values, (std::vector<uint64_t>{15, 21}));
    EXPECT_EQ(c.variants, (std::vector<Variant>{Variant::Reduced}));
    EXPECT_EQ(c.repetitions, 4u);
    EXPECT_EQ(c.master_seed, 99u);
    EXPECT_EQ(c.shots, 8u);
    EXPECT_EQ(c.output_dir, "/tmp/x");
    EXPECT_EQ(c.max_iterations, 3u);
    EXPECT_EQ(c.post, PostProcessing::VerifiedOrder);
    EXPECT_EQ(c.threads, 2u);
}

TEST(Config, bad_lines) {
    ExperimentConfig c;
    EXPECT_THROW(apply_config_text(c, "colour=blue\n"), InvalidArgument);
    EXPECT_THROW(apply_config_text(c, "reps\n"), InvalidArgument);
    EXPECT_THROW(apply_config_text(c, "reps=ten\n"), InvalidArgument);
    EXPECT_THROW(apply_config_file(c, "/nonexistent/qshor.cfg"), IoError);
    c.repetitions = 0;
    EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(Config, file) {
    const std::string path = ::testing::TempDir() + "qshor_harness_test.cfg";
    {
        std::ofstream f(path);
        f << "reps=7\nvariant=original\n";
    }
    ExperimentConfig c;
    apply_config_file(c, path);
    EXPECT_EQ(c.repetitions, 7u);
    EXPECT_EQ(c.variants, (std::vector<Variant>{Variant::Original}));
    std::remove(path.c_str());
}

TEST(CellSeed, labels_matter) {
    std::set<uint64_t> seen;
    for (uint64_t a : {2u, 4u}) {
        for (Variant v : {Variant::Original, Variant::Reduced}) {
            for (uint32_t rep = 0; rep < 3; rep++) {
                seen.insert(cell_seed(1, 15, a, v, rep));
            }
        }
    }
    EXPECT_EQ(seen.size(), 12u);
    EXPECT_NE(cell_seed(1, 15, 2, Variant::Reduced, 0), cell_seed(2, 15, 2, Variant::Reduced, 0));
    EXPECT_EQ(cell_seed(1, 15, 2, Variant::Reduced, 0), cell_seed(1, 15, 2, Variant::Reduced, 0));
}

TEST(Sweep, fifteen_cells_and_csv) {
    auto result = run_sweep(small_config({15}, 3, 5));
    EXPECT_EQ(result.cell_count(15, Variant::Original), 7u);
    EXPECT_EQ(result.cell_count(15, Variant::Reduced), 7u);
    std::vector<uint64_t> as;
    for (const auto &c : result.cells) {
        EXPECT_LE(c.successes, c.repetitions);
        EXPECT_EQ(c.repetitions, 3u);
        uint32_t retries = 0;
        for (const auto &[reason, k] : c.retry_reasons) {
            retries += k;
        }
        EXPECT_EQ(retries + c.successes, c.repetitions);
        if (c.variant == Variant::Reduced) {
            as.push_back(c.a);
        }
    }
    EXPECT_EQ(as, (std::vector<uint64_t>{2, 4, 7, 8, 11, 13, 14}));
    const auto csv = sweep_csv(result);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "N,a,variant,successes,repetitions,success_probability");
    EXPECT_EQ(count_lines(csv), 15u);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    EXPECT_NE(csv.find("\n15,2,original,"), std::string::npos);
    EXPECT_NE(csv.find("\n15,14,reduced,0,3,0.000000\n"), std::string::npos);
}

TEST(Sweep, screened_values_reported) {
    auto result = run_sweep(small_config({13, 16, 25, 15}, 1, 0));
    EXPECT_EQ(result.screened.size(), 3u);
    EXPECT_EQ(result.screened.at(13), "prime");
    EXPECT_EQ(result.screened.at(16), "even");
    EXPECT_EQ(result.screened.at(25), "prime-power");
    EXPECT_EQ(result.cells.size(), 14u);
}

TEST(Sweep, deterministic_across_threads_and_seeds) {
    auto cfg = small_config({15, 21}, 4, 11);
    const auto one = sweep_csv(run_sweep(cfg));
    cfg.threads = 3;
    const auto three = sweep_csv(run_sweep(cfg));
    EXPECT_EQ(one, three);
    cfg.master_seed = 12;
    EXPECT_NE(one, sweep_csv(run_sweep(cfg)));
}

TEST(Sweep, json_summary) {
    auto result = run_sweep(small_config({15}, 2, 1));
    auto doc = nlohmann::json::parse(sweep_json(result));
    ASSERT_EQ(doc["cells"].size(), 14u);
    ASSERT_EQ(doc["summary"].size(), 2u);
    for (const auto &s : doc["summary"]) {
        const Variant v = parse_variant(s["variant"].get<std::string>());
        EXPECT_DOUBLE_EQ(s["mean_success_probability"].get<double>(), result.mean_success(15, v));
        EXPECT_EQ(s["cells"].get<int>(), 7);
    }
    // Keys come out sorted.
    auto text = sweep_json(result);
    EXPECT_LT(text.find("\"cells\""), text.find("\"screened\""));
    EXPECT_LT(text.find("\"screened\""), text.find("\"summary\""));
}

TEST(Phases, fifteen_seven_support) {
    auto h = phase_histogram(15, 7, Variant::Original, 1024, 3);
    uint32_t total = 0;
    for (const auto &row : h.rows) {
        EXPECT_TRUE(row.y == 0 || row.y == 64 || row.y == 128 || row.y == 192) << row.y;
        total += row.count;
    }
    EXPECT_EQ(total, 1024u);
    for (size_t i = 1; i < h.rows.size(); i++) {
        EXPECT_GE(h.rows[i - 1].count, h.rows[i].count);
    }
    EXPECT_EQ(h.phase_bits, 8u);
}

TEST(Phases, single_shot) {
    auto h = phase_histogram(15, 7, Variant::Reduced, 1, 0);
    ASSERT_EQ(h.rows.size(), 1u);
    EXPECT_EQ(h.rows[0].count, 1u);
    EXPECT_THROW(phase_histogram(15, 7, Variant::Reduced, 0, 0), InvalidArgument);
    EXPECT_THROW(phase_histogram(15, 5, Variant::Reduced, 4, 0), PreconditionError);
}

TEST(Phases, thirty_three_ten_same_period_both_variants) {
    std::set<uint64_t> periods[2];
    for (Variant v : {Variant::Original, Variant::Reduced}) {
        auto h = phase_histogram(33, 10, v, 24, 4);
        for (size_t i = 0; i < std::min<size_t>(2, h.rows.size()); i++) {
            if (h.rows[i].r) {
                periods[static_cast<int>(v)].insert(*h.rows[i].r);
            }
        }
    }
    EXPECT_EQ(periods[0], std::set<uint64_t>{2});
    EXPECT_EQ(periods[0], periods[1]);
}

TEST(Phases, csv_format) {
    auto h = phase_histogram(15, 7, Variant::Original, 16, 1);
    auto csv = phases_csv({h});
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "variant,N,a,y,phase,count,r,factored");
    EXPECT_EQ(count_lines(csv), h.rows.size() + 1);
    EXPECT_TRUE(csv.find("original,15,7,192,0.7500000000,") != std::string::npos ||
                csv.find("original,15,7,64,0.2500000000,") != std::string::npos);
}

TEST(Depth, json_report) {
    auto doc = nlohmann::json::parse(depth_json({depth_report(15, Variant::Reduced), depth_report(33, Variant::Reduced)}));
    ASSERT_EQ(doc["reports"].size(), 2u);
    EXPECT_EQ(doc["reports"][0]["n"], 4);
    EXPECT_EQ(doc["reports"][0]["model_depth"], 245);
    EXPECT_EQ(doc["reports"][1]["n"], 6);
    EXPECT_EQ(doc["reports"][1]["model_depth"], 485);
    EXPECT_EQ(doc["reports"][1]["subcircuit_depths"].size(), 12u);
    EXPECT_EQ(doc["reports"][0]["connectivity"], "full");
}

TEST(FactorOutput, screened_even) {
    auto r = factor(14, Variant::Reduced, 10, 0);
    auto doc = nlohmann::json::parse(factor_json(r));
    EXPECT_EQ(doc["factors"], nlohmann::json::array({2, 7}));
    EXPECT_EQ(doc["result"], "screened");
    EXPECT_NE(factor_text(r).find("2 x 7"), std::string::npos);
}

TEST(FactorOutput, factored_run_is_deterministic) {
    auto a = factor_json(factor(15, Variant::Reduced, 10, 1));
    auto b = factor_json(factor(15, Variant::Reduced, 10, 1));
    EXPECT_EQ(a, b);
    auto doc = nlohmann::json::parse(a);
    EXPECT_EQ(doc["factors"], nlohmann::json::array({3, 5}));
    EXPECT_EQ(doc["variant"], "reduced");
}

TEST(FactorOutput, prime) {
    auto r = factor(13, Variant::Reduced, 10, 0);
    EXPECT_EQ(nlohmann::json::parse(factor_json(r))["result"], "prime");
    EXPECT_NE(factor_text(r).find("prime"), std::string::npos);
}

TEST(ParallelFor, covers_every_index) {
    std::vector<std::atomic<int>> hits(100);
    parallel_for(hits.size(), 4, [&](size_t i) { hits[i]++; });
    for (auto &h : hits) {
        EXPECT_EQ(h.load(), 1);
    }
}

TEST(ParallelFor, rethrows) {
    EXPECT_THROW(parallel_for(10, 3, [](size_t i) {
                     if (i == 6) {
                         throw IoError("boom");
                     }
                 }),
                 IoError);
}

}  // namespace qshor
