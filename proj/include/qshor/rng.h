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

#ifndef QSHOR_RNG_H
#define QSHOR_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qshor {

/// SplitMix64 finalizer. Used to fold run labels into stream seeds.
constexpr uint64_t mix64(uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives a child seed from a master seed and an ordered list of labels.
/// Distinct label tuples give unrelated streams; order matters.
constexpr uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> labels) noexcept {
    uint64_t h = mix64(master);
    for (uint64_t label : labels) {
        h = mix64(h ^ mix64(label + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

/// Deterministic random stream. The uniform conversion is done by hand so the
/// sequence does not depend on the standard library's distribution classes.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(mix64(seed)) {
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi]. Rejection sampling, no modulo bias.
    uint64_t uniform_int(uint64_t lo, uint64_t hi) {
        uint64_t span = hi - lo + 1;
        if (span == 0) {
            return engine_();
        }
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + v % span;
    }

    uint64_t next() {
        return engine_();
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qshor

#endif
