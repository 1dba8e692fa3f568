#pragma once

// Seeded generators for the randomized suites. Every suite draws from a fixed
// seed so failures reproduce; the seed is printed by the acceptance binary.

#include <cstdint>
#include <random>

#include "monorec/recurrence.hpp"

namespace monorec::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    bool coin() { return integer(0, 1) == 1; }

    /// p/q with |p| <= bound and 1 <= q <= bound.
    Rational rational(std::int64_t bound = 20) {
        return Rational(integer(-bound, bound), integer(1, bound));
    }

    Rational nonzero_rational(std::int64_t bound = 20) {
        for (;;) {
            Rational r = rational(bound);
            if (!r.is_zero()) {
                return r;
            }
        }
    }

    enum class Disc { any, nonnegative, negative };

    RecurrenceSpec spec(Disc disc = Disc::any, std::int64_t bound = 20) {
        for (;;) {
            const Rational a = nonzero_rational(bound);
            const Rational b = nonzero_rational(bound);
            if (!disc_ok(a, b, disc)) {
                continue;
            }
            const Rational v0 = rational(bound);
            const Rational v1 = rational(bound);
            if (v0.is_zero() && v1.is_zero()) {
                continue;
            }
            return RecurrenceSpec::make(a, b, v0, v1);
        }
    }

    RecurrenceSpec h_spec(Disc disc = Disc::any, std::int64_t bound = 20) {
        for (;;) {
            const Rational a = nonzero_rational(bound);
            const Rational b = nonzero_rational(bound);
            if (disc_ok(a, b, disc)) {
                return make_h_spec(a, b, nonzero_rational(bound));
            }
        }
    }

    /// Both initial values nonzero.
    RecurrenceSpec nonzero_start_spec(Disc disc = Disc::any, std::int64_t bound = 20) {
        for (;;) {
            RecurrenceSpec s = spec(disc, bound);
            if (!s.v0().is_zero() && !s.v1().is_zero()) {
                return s;
            }
        }
    }

private:
    static bool disc_ok(const Rational& a, const Rational& b, Disc disc) {
        const int s = (a * a - Rational(4) * b).sign();
        switch (disc) {
            case Disc::any: return true;
            case Disc::nonnegative: return s >= 0;
            case Disc::negative: return s < 0;
        }
        return true;
    }

    std::mt19937_64 rng_;
};

}  // namespace monorec::testing
