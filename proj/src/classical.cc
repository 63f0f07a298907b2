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

#include "qshor/classical.h"

#include <chrono>
#include <cmath>
#include <sstream>

#include "qshor/error.h"

namespace qshor {

const char *screen_name(ScreenKind kind) {
    switch (kind) {
        case ScreenKind::CompositeOk:
            return "composite";
        case ScreenKind::Even:
            return "even";
        case ScreenKind::PrimePower:
            return "prime-power";
        case ScreenKind::Prime:
            return "prime";
    }
    return "?";
}

const char *retry_reason_name(RetryReason reason) {
    switch (reason) {
        case RetryReason::ZeroPhase:
            return "zero-phase";
        case RetryReason::OddOrder:
            return "odd-r";
        case RetryReason::TrivialGcds:
            return "trivial-gcds";
        case RetryReason::OrderCheckFailed:
            return "order-check-failed";
    }
    return "?";
}

uint64_t gcd(uint64_t u, uint64_t v) {
    while (v != 0) {
        uint64_t t = u % v;
        u = v;
        v = t;
    }
    return u;
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t modulus) {
    if (modulus == 0) {
        throw InvalidArgument("mod_pow: modulus must be positive");
    }
    unsigned __int128 result = 1 % modulus;
    unsigned __int128 b = base % modulus;
    while (exp != 0) {
        if (exp & 1) {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    return static_cast<uint64_t>(result);
}

uint64_t mod_inv(uint64_t a, uint64_t n) {
    if (n < 2 || gcd(a % n, n) != 1) {
        throw PreconditionError("mod_inv: " + std::to_string(a) + " has no inverse mod " + std::to_string(n));
    }
    // Extended Euclid on signed 128-bit to keep intermediate coefficients exact.
    __int128 r0 = n, r1 = a % n, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    __int128 inv = s0 % static_cast<__int128>(n);
    if (inv < 0) {
        inv += n;
    }
    return static_cast<uint64_t>(inv);
}

uint64_t integer_root(uint64_t n, uint32_t k) {
    if (k == 0) {
        throw InvalidArgument("integer_root: k must be positive");
    }
    if (k == 1 || n < 2) {
        return n;
    }
    auto pow_le = [&](uint64_t r) {
        unsigned __int128 acc = 1;
        for (uint32_t i = 0; i < k; i++) {
            acc *= r;
            if (acc > n) {
                return false;
            }
        }
        return true;
    };
    uint64_t r = static_cast<uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
    while (r > 0 && !pow_le(r)) {
        r--;
    }
    while (pow_le(r + 1)) {
        r++;
    }
    return r;
}

uint32_t bit_width(uint64_t n) {
    uint32_t w = 0;
    while (n != 0) {
        w++;
        n >>= 1;
    }
    return w;
}

uint64_t multiplicative_order(uint64_t a, uint64_t n) {
    if (gcd(a % n, n) != 1) {
        throw PreconditionError("multiplicative_order: base not coprime to modulus");
    }
    uint64_t r = 1;
    uint64_t x = a % n;
    while (x != 1 % n) {
        x = static_cast<uint64_t>(static_cast<unsigned __int128>(x) * a % n);
        r++;
    }
    return r;
}

ScreenResult screen(uint64_t n) {
    if (n < 2) {
        throw InvalidArgument("screen: N must be at least 2");
    }
    if (n % 2 == 0) {
        return {ScreenKind::Even, 2, 1};
    }
    for (uint32_t k = bit_width(n) - 1; k >= 2; k--) {
        uint64_t r = integer_root(n, k);
        unsigned __int128 check = 1;
        for (uint32_t i = 0; i < k; i++) {
            check *= r;
        }
        if (check != n) {
            continue;
        }
        // n = r^k; report it as p^e with p prime.
        auto td = trial_division(r);
        if (td.prime) {
            return {ScreenKind::PrimePower, r, k};
        }
        uint64_t p = td.smallest_factor;
        uint32_t e = 0;
        uint64_t m = n;
        while (m % p == 0) {
            m /= p;
            e++;
        }
        if (m == 1) {
            return {ScreenKind::PrimePower, p, e};
        }
    }
    if (trial_division(n).prime) {
        return {ScreenKind::Prime, n, 1};
    }
    return {ScreenKind::CompositeOk, 0, 0};
}

std::vector<Convergent> convergents(uint64_t y, uint64_t q) {
    if (q == 0) {
        throw InvalidArgument("convergents: denominator must be positive");
    }
    std::vector<Convergent> out;
    uint64_t h_prev = 1, h_prev2 = 0;
    uint64_t k_prev = 0, k_prev2 = 1;
    uint64_t p = y, d = q;
    while (true) {
        uint64_t term = p / d;
        uint64_t h = term * h_prev + h_prev2;
        uint64_t k = term * k_prev + k_prev2;
        out.push_back({h, k});
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        uint64_t rem = p % d;
        if (rem == 0) {
            break;
        }
        p = d;
        d = rem;
    }
    return out;
}

namespace {

// Convergent denominators below n, increasing, without repeats.
std::vector<uint64_t> candidate_denominators(uint64_t y, uint64_t q, uint64_t n) {
    std::vector<uint64_t> out;
    for (const auto &c : convergents(y, q)) {
        if (c.denominator >= n) {
            break;
        }
        if (out.empty() || out.back() != c.denominator) {
            out.push_back(c.denominator);
        }
    }
    return out;
}

}  // namespace

OrderResult recover_order(uint64_t y, uint64_t q, uint64_t a, uint64_t n) {
    if (y >= q) {
        throw InvalidArgument("recover_order: y must be below Q");
    }
    if (y == 0) {
        return {std::nullopt, RetryReason::ZeroPhase};
    }
    for (uint64_t d : candidate_denominators(y, q, n)) {
        if (mod_pow(a, d, n) == 1) {
            return {d, RetryReason::OrderCheckFailed};
        }
    }
    return {std::nullopt, RetryReason::OrderCheckFailed};
}

FactorOutcome FactorOutcome::factored(uint64_t n, uint64_t divisor) {
    if (divisor <= 1 || divisor >= n || n % divisor != 0) {
        throw PreconditionError("not a nontrivial divisor: " + std::to_string(divisor) + " of " + std::to_string(n));
    }
    FactorOutcome out;
    out.status = Status::Factored;
    out.d1 = std::min(divisor, n / divisor);
    out.d2 = std::max(divisor, n / divisor);
    return out;
}

FactorOutcome FactorOutcome::trivial(uint64_t n, uint64_t divisor) {
    if (divisor <= 1 || divisor >= n || n % divisor != 0) {
        throw PreconditionError("not a nontrivial divisor: " + std::to_string(divisor) + " of " + std::to_string(n));
    }
    FactorOutcome out;
    out.status = Status::TrivialScreen;
    out.d1 = divisor;
    out.d2 = n / divisor;
    return out;
}

FactorOutcome FactorOutcome::retry(RetryReason reason) {
    FactorOutcome out;
    out.status = Status::RetryNeeded;
    out.reason = reason;
    return out;
}

std::string FactorOutcome::str() const {
    std::ostringstream s;
    switch (status) {
        case Status::Factored:
            s << "Factored(" << d1 << ", " << d2 << ")";
            break;
        case Status::TrivialScreen:
            s << "TrivialScreen(" << d1 << ")";
            break;
        case Status::RetryNeeded:
            s << "RetryNeeded(" << retry_reason_name(reason) << ")";
            break;
    }
    return s.str();
}

namespace {

std::optional<uint64_t> half_power_divisor(uint64_t r, uint64_t a, uint64_t n) {
    uint64_t h = mod_pow(a, r / 2, n);
    uint64_t d1 = gcd((h + n - 1) % n, n);
    uint64_t d2 = gcd((h + 1) % n, n);
    for (uint64_t d : {d1, d2}) {
        if (d > 1 && d < n) {
            return d;
        }
    }
    return std::nullopt;
}

}  // namespace

FactorOutcome extract_factors(uint64_t r, uint64_t a, uint64_t n) {
    if (r < 1 || mod_pow(a, r, n) != 1) {
        throw PreconditionError("extract_factors: a^r != 1 mod N");
    }
    if (r % 2 == 1) {
        return FactorOutcome::retry(RetryReason::OddOrder);
    }
    if (auto d = half_power_divisor(r, a, n)) {
        return FactorOutcome::factored(n, *d);
    }
    return FactorOutcome::retry(RetryReason::TrivialGcds);
}

CandidateResult factor_from_phase(uint64_t y, uint64_t q, uint64_t a, uint64_t n) {
    if (y >= q) {
        throw InvalidArgument("factor_from_phase: y must be below Q");
    }
    if (y == 0) {
        return {FactorOutcome::retry(RetryReason::ZeroPhase), std::nullopt, false};
    }
    CandidateResult result{FactorOutcome::retry(RetryReason::OddOrder), std::nullopt, false};
    bool any_even = false;
    for (uint64_t d : candidate_denominators(y, q, n)) {
        bool verified = mod_pow(a, d, n) == 1;
        if (verified && !result.period) {
            result.period = d;
            result.period_verified = true;
        }
        if (d % 2 == 1) {
            continue;
        }
        any_even = true;
        if (auto div = half_power_divisor(d, a, n)) {
            return {FactorOutcome::factored(n, *div), d, verified};
        }
    }
    if (any_even) {
        result.outcome = FactorOutcome::retry(result.period_verified ? RetryReason::TrivialGcds
                                                                     : RetryReason::OrderCheckFailed);
    }
    return result;
}

TrialDivisionResult trial_division(uint64_t n) {
    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    if (n < 2) {
        throw InvalidArgument("trial_division: N must be at least 2");
    }
    if (n % 2 == 0) {
        return {2, n == 2, elapsed()};
    }
    for (uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) {
            return {d, false, elapsed()};
        }
    }
    return {n, true, elapsed()};
}

std::vector<uint64_t> feasible_bases(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t a = 2; a < n; a++) {
        if (gcd(a, n) == 1) {
            out.push_back(a);
        }
    }
    return out;
}

}  // namespace qshor
