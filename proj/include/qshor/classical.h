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

#ifndef QSHOR_CLASSICAL_H
#define QSHOR_CLASSICAL_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qshor {

enum class ScreenKind { CompositeOk, Even, PrimePower, Prime };

struct ScreenResult {
    ScreenKind kind;
    /// Base and exponent for PrimePower; (2, 1) for Even; (N, 1) for Prime.
    uint64_t base = 0;
    uint32_t exponent = 0;
    bool operator==(const ScreenResult &) const = default;
};

const char *screen_name(ScreenKind kind);

/// Pre-quantum checks. Throws InvalidArgument for N < 2.
ScreenResult screen(uint64_t n);

uint64_t gcd(uint64_t u, uint64_t v);
uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t modulus);
/// Throws PreconditionError when gcd(a, n) != 1.
uint64_t mod_inv(uint64_t a, uint64_t n);
/// Largest r with r^k <= n.
uint64_t integer_root(uint64_t n, uint32_t k);
/// Multiplicative order of a mod n by direct iteration (a and n coprime).
uint64_t multiplicative_order(uint64_t a, uint64_t n);
/// floor(log2 n) + 1.
uint32_t bit_width(uint64_t n);

struct Convergent {
    uint64_t numerator;
    uint64_t denominator;
    bool operator==(const Convergent &) const = default;
};

/// All convergents of the continued-fraction expansion of y/q, in order.
std::vector<Convergent> convergents(uint64_t y, uint64_t q);

enum class RetryReason { ZeroPhase, OddOrder, TrivialGcds, OrderCheckFailed };

const char *retry_reason_name(RetryReason reason);

struct OrderResult {
    std::optional<uint64_t> order;
    RetryReason reason = RetryReason::OrderCheckFailed;  // meaningful when order is empty
};

/// Returns the first convergent denominator d < n of y/q (increasing,
/// duplicates skipped) with a^d = 1 mod n.
OrderResult recover_order(uint64_t y, uint64_t q, uint64_t a, uint64_t n);

struct FactorOutcome {
    enum class Status { Factored, TrivialScreen, RetryNeeded };

    Status status = Status::RetryNeeded;
    /// Factored: d1 * d2 == N with 1 < d1 <= d2 < N. TrivialScreen: d1 only.
    uint64_t d1 = 0;
    uint64_t d2 = 0;
    RetryReason reason = RetryReason::ZeroPhase;

    static FactorOutcome factored(uint64_t n, uint64_t divisor);
    static FactorOutcome trivial(uint64_t n, uint64_t divisor);
    static FactorOutcome retry(RetryReason reason);

    bool is_factored() const {
        return status == Status::Factored;
    }
    std::string str() const;
    bool operator==(const FactorOutcome &) const = default;
};

/// d1 = gcd(a^{r/2} - 1, n), d2 = gcd(a^{r/2} + 1, n). Requires a^r = 1 mod n
/// (PreconditionError otherwise).
FactorOutcome extract_factors(uint64_t r, uint64_t a, uint64_t n);

/// Post-processing that treats every convergent denominator d < n of y/q as a
/// candidate period and tests gcd(a^{d/2} +- 1, n) for each even one. Unlike
/// recover_order + extract_factors it does not require a^d = 1 mod n; success
/// is established by the divisor itself.
struct CandidateResult {
    FactorOutcome outcome;
    /// Candidate that produced the divisor, or the verified order if one was
    /// seen among the candidates.
    std::optional<uint64_t> period;
    bool period_verified = false;
};
CandidateResult factor_from_phase(uint64_t y, uint64_t q, uint64_t a, uint64_t n);

struct TrialDivisionResult {
    uint64_t smallest_factor;  // n itself when prime
    bool prime;
    double seconds;
};

/// Tests 2 then odd numbers up to sqrt(n).
TrialDivisionResult trial_division(uint64_t n);

/// {a : 1 < a < n, gcd(a, n) = 1}.
std::vector<uint64_t> feasible_bases(uint64_t n);

}  // namespace qshor

#endif
