#include <doctest.h>

#include "monorec/decisions.hpp"
#include "monorec/error.hpp"
#include "monorec/oracle.hpp"
#include "support/generators.hpp"

using namespace monorec;
using monorec::testing::Gen;

namespace {

RecurrenceSpec lucas() { return RecurrenceSpec::make(1, -1, 2, 1); }
RecurrenceSpec example1() { return make_h_spec(1, Rational(1, 4), 1); }
RecurrenceSpec example2() { return make_h_spec(1, -3, 1); }
RecurrenceSpec unit() { return RecurrenceSpec::make(2, 1, 1, 1); }

std::string name(const Verdict& v) { return std::string(branch_name(v.branch)); }

}  // namespace

TEST_CASE("eventually non-decreasing") {
    const Verdict l = eventually_nondecreasing(lucas());
    CHECK(l.holds);
    CHECK(name(l) == "COND_MONOTONIC_1");

    const Verdict e1 = eventually_nondecreasing(RecurrenceSpec::make(1, Rational(1, 4), 1, 1));
    CHECK_FALSE(e1.holds);
    CHECK(name(e1) == "COND1_FAIL_DOMINANT_TERM");

    const Verdict u = eventually_nondecreasing(unit());
    CHECK(u.holds);
    CHECK(name(u) == "COND_ALPHA_ONE");

    CHECK(name(eventually_nondecreasing(RecurrenceSpec::make(1, 1, 1, 1))) ==
          "DISCRIMINANT_NEGATIVE");
    CHECK(name(eventually_nondecreasing(RecurrenceSpec::make(-3, 2, 1, 1))) ==
          "COND1_FAIL_ALPHA_PLUS_NONPOSITIVE");
    // Roots 1 and 1/2 with a decreasing start.
    const Verdict dec = eventually_nondecreasing(
        RecurrenceSpec::make(Rational(3, 2), Rational(1, 2), 2, 1));
    CHECK_FALSE(dec.holds);
    CHECK(name(dec) == "COND_ALPHA_ONE_FAIL_TRIPLE");
}

TEST_CASE("geometric solutions on a root") {
    // c1 = c0 * 1 with roots 1 and 2: the constant sequence.
    const Verdict flat = eventually_nondecreasing(RecurrenceSpec::make(3, 2, 1, 1));
    CHECK(flat.holds);
    CHECK(name(flat) == "GEOMETRIC_SOLUTION");
    CHECK(nondecreasing_from(RecurrenceSpec::make(3, 2, 1, 1), 0).holds);

    // a_n = -(1/2)^n increases toward 0.
    const RecurrenceSpec neg_half = RecurrenceSpec::make(Rational(5, 2), 1, -1, Rational(-1, 2));
    CHECK(eventually_nondecreasing(neg_half).holds);
    CHECK(nondecreasing_from(neg_half, 0).holds);
    CHECK(check_p1_window(neg_half, 0, 100).holds_on_window);

    // a_n = -2^n decreases.
    const RecurrenceSpec neg_two = RecurrenceSpec::make(Rational(5, 2), 1, -1, -2);
    const Verdict fail = eventually_nondecreasing(neg_two);
    CHECK_FALSE(fail.holds);
    CHECK(name(fail) == "GEOMETRIC_FAIL");
    CHECK_FALSE(check_p1_window(neg_two, 0, 100).holds_on_window);
}

TEST_CASE("eventually ratio monotone") {
    CHECK(eventually_ratio_monotone(RecurrenceSpec::make(1, -3, 1, 1)).holds);
    const Verdict complex = eventually_ratio_monotone(RecurrenceSpec::make(1, 1, 1, 1));
    CHECK_FALSE(complex.holds);
    CHECK(name(complex) == "DISCRIMINANT_NEGATIVE");
    CHECK(eventually_ratio_monotone(unit()).holds);
    CHECK_THROWS_AS(eventually_ratio_monotone(RecurrenceSpec::make(1, -1, 0, 1)),
                    InvalidArgument);
}

TEST_CASE("non-decreasing from k") {
    CHECK(nondecreasing_from(make_h_spec(1, -1, 1), 0).holds);
    const Verdict l0 = nondecreasing_from(lucas(), 0);
    CHECK_FALSE(l0.holds);
    CHECK(name(l0) == "COND1_FAIL_TRIPLE");
    // The range n >= k - 1 still contains L_0 > L_1 at k = 1.
    CHECK_FALSE(nondecreasing_from(lucas(), 1).holds);
    CHECK(nondecreasing_from(lucas(), 2).holds);
    CHECK(name(nondecreasing_from(lucas(), 2)) == "COND_MONOTONIC_1");
    CHECK_THROWS_AS(nondecreasing_from(lucas(), -1), InvalidArgument);
}

TEST_CASE("h-type corollary") {
    const Verdict fib = positive_monotone_h(make_h_spec(1, -1, 1));
    CHECK(fib.holds);
    CHECK(name(fib) == "COND1_COR");
    const Verdict e1 = positive_monotone_h(example1());
    CHECK_FALSE(e1.holds);
    CHECK(name(e1) == "COND1_COR_FAIL_ALPHA_PLUS");
    CHECK(positive_monotone_h(example2()).holds);
    CHECK(name(positive_monotone_h(make_h_spec(1, -1, -1))) == "COND1_COR_FAIL_A0");
    CHECK(name(positive_monotone_h(make_h_spec(Rational(1, 2), -3, 1))) == "COND1_COR_FAIL_A");
    CHECK_THROWS_AS(positive_monotone_h(lucas()), InvalidArgument);
}

TEST_CASE("ratio monotone for h-type") {
    const Verdict fib = ratio_monotone_h(make_h_spec(1, -1, 1));
    CHECK(fib.holds);
    CHECK(name(fib) == "COND2_MODULUS");
    const Verdict e2 = ratio_monotone_h(example2());
    CHECK_FALSE(e2.holds);
    CHECK(name(e2) == "COND2_FAIL_MODULUS");
    CHECK(ratio_monotone_h(example1()).holds);
    CHECK_THROWS_AS(ratio_monotone_h(lucas()), InvalidArgument);
}

TEST_CASE("weighted monotone") {
    const Verdict l = weighted_monotone(lucas());
    CHECK(l.holds);
    CHECK(name(l) == "COND3_BETA_AT_MOST_ONE");
    const Verdict e2 = weighted_monotone(RecurrenceSpec::make(1, -3, 1, 1));
    CHECK_FALSE(e2.holds);
    CHECK(name(e2) == "COND3_FAIL_BETA");
    CHECK(weighted_monotone(unit()).holds);
    CHECK(name(weighted_monotone(RecurrenceSpec::make(1, 1, 1, 1))) == "COMPLEX_MODULUS");
    CHECK(name(weighted_monotone(RecurrenceSpec::make(1, 2, 1, 1))) == "COMPLEX_MODULUS_FAIL");
    // c1 = c0 alpha with |beta| > 1: roots 3 and -2.
    const Verdict zero = weighted_monotone(RecurrenceSpec::make(1, -6, 1, 3));
    CHECK(zero.holds);
    CHECK(name(zero) == "RESIDUAL_IDENTICALLY_ZERO");
}

TEST_CASE("Hartman-Aurel condition") {
    CHECK(hartman_aurel_sufficient(3, 1));
    CHECK_FALSE(hartman_aurel_sufficient(1, -1));
    CHECK_FALSE(hartman_aurel_sufficient(1, Rational(1, 4)));
}

TEST_CASE("corollary and P3 imply P2 on h-type specs [property]") {
    Gen gen(0x71);
    int both = 0;
    for (int i = 0; i < 2000; ++i) {
        const RecurrenceSpec spec = gen.h_spec();
        if (positive_monotone_h(spec).holds && weighted_monotone(spec).holds) {
            ++both;
            CHECK(ratio_monotone_h(spec).holds);
        }
    }
    CHECK(both > 20);
}

TEST_CASE("Hartman-Aurel soundness [property]") {
    Gen gen(0x72);
    int used = 0;
    for (int i = 0; i < 4000 && used < 200; ++i) {
        const Rational a = gen.nonzero_rational();
        const Rational b = gen.nonzero_rational();
        if (!hartman_aurel_sufficient(a, b)) {
            continue;
        }
        Rational v0 = gen.rational();
        Rational v1 = gen.rational();
        if (v0 > v1) {
            std::swap(v0, v1);
        }
        if (v0.sign() <= 0) {
            continue;
        }
        ++used;
        const RecurrenceSpec spec = RecurrenceSpec::make(a, b, v0, v1);
        CHECK(check_p1_window(spec, 1, 300).holds_on_window);
    }
    CHECK(used > 50);
}

TEST_CASE("P2 step inequality matches the quotient form [property]") {
    Gen gen(0x73);
    for (int i = 0; i < 150; ++i) {
        const RecurrenceSpec spec = gen.h_spec(Gen::Disc::nonnegative);
        const OrderedRoots ab = order_by_modulus(spec.roots());
        const SequenceWindow w = iterate(spec, 42);
        for (std::int64_t n = 0; n + 2 <= 42; ++n) {
            if (w.at(n).is_zero() || w.at(n + 1).is_zero()) {
                continue;
            }
            const QuadElem an(w.at(n));
            const QuadElem an1(w.at(n + 1));
            const QuadElem an2(w.at(n + 2));
            const QuadElem lhs = ab.alpha - an1 / an;
            const QuadElem rhs = ab.alpha - an2 / an1;
            const bool step = cmp_abs(lhs, rhs) >= 0;
            const QuadElem quotient = ab.beta * an / an1;
            const bool bounded = sign(QuadElem(1) - quotient * quotient) >= 0;
            CHECK(step == bounded);
        }
    }
}
