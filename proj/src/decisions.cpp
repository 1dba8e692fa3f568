#include "monorec/decisions.hpp"

#include "monorec/error.hpp"

namespace monorec {

namespace {

const QuadElem kOne{Rational(1)};

/// r with c1 = c0 r when r is a characteristic root, i.e. a_n = c0 r^n.
std::optional<Rational> geometric_ratio(const RecurrenceSpec& spec) {
    if (spec.v0().is_zero()) {
        return std::nullopt;
    }
    const Rational r = spec.v1() / spec.v0();
    if ((r * r - spec.a() * r + spec.b()).is_zero()) {
        return r;
    }
    return std::nullopt;
}

bool geometric_nondecreasing(const Rational& c0, const Rational& r) {
    const Rational one(1);
    if (r == one) {
        return true;
    }
    if (r > one) {
        return c0.sign() > 0;
    }
    if (r.sign() > 0) {
        return c0.sign() < 0;
    }
    return false;
}

/// Shared tail of the eventual and from-k P1 criteria once alpha_+ != 1.
Verdict dominant_root_criterion(const RecurrenceSpec& spec, const RootPair& roots) {
    const QuadElem& plus = *roots.alpha_plus;
    const QuadElem& minus = *roots.alpha_minus;
    Verdict verdict{false, Branch::kCondMonotonic1};
    if (sign(plus) <= 0) {
        verdict.branch = Branch::kAlphaPlusNonpositive;
    } else if (spec.a().sign() <= 0) {
        verdict.branch = Branch::kCoeffANonpositive;
    } else if (sign((plus - kOne) * (QuadElem(spec.v1()) - QuadElem(spec.v0()) * minus)) <= 0) {
        verdict.branch = Branch::kDominantTermNonpositive;
    } else {
        verdict.holds = true;
    }
    if (!verdict.holds) {
        if (const auto r = geometric_ratio(spec)) {
            const bool ok = geometric_nondecreasing(spec.v0(), *r);
            return {ok, ok ? Branch::kGeometricSolution : Branch::kGeometricFail};
        }
    }
    return verdict;
}

void require_h_type(const RecurrenceSpec& spec, const char* what) {
    if (!spec.h_type()) {
        throw InvalidArgument(std::string(what) + " requires an h-type spec (a_{-1} = 0)");
    }
}

}  // namespace

std::string_view branch_name(Branch branch) {
    switch (branch) {
        case Branch::kCondMonotonic1: return "COND_MONOTONIC_1";
        case Branch::kCondAlphaOne: return "COND_ALPHA_ONE";
        case Branch::kGeometricSolution: return "GEOMETRIC_SOLUTION";
        case Branch::kDiscriminantNegative: return "DISCRIMINANT_NEGATIVE";
        case Branch::kAlphaOneTripleFail: return "COND_ALPHA_ONE_FAIL_TRIPLE";
        case Branch::kAlphaPlusNonpositive: return "COND1_FAIL_ALPHA_PLUS_NONPOSITIVE";
        case Branch::kCoeffANonpositive: return "COND1_FAIL_A_NONPOSITIVE";
        case Branch::kDominantTermNonpositive: return "COND1_FAIL_DOMINANT_TERM";
        case Branch::kGeometricFail: return "GEOMETRIC_FAIL";
        case Branch::kTripleFail: return "COND1_FAIL_TRIPLE";
        case Branch::kCondCorollary: return "COND1_COR";
        case Branch::kInitialNonpositive: return "COND1_COR_FAIL_A0";
        case Branch::kCoeffABelowOne: return "COND1_COR_FAIL_A";
        case Branch::kAlphaPlusBelowOne: return "COND1_COR_FAIL_ALPHA_PLUS";
        case Branch::kDiscriminantNonnegative: return "DISCRIMINANT_NONNEGATIVE";
        case Branch::kCond2Modulus: return "COND2_MODULUS";
        case Branch::kCond2FailModulus: return "COND2_FAIL_MODULUS";
        case Branch::kCond3BetaAtMostOne: return "COND3_BETA_AT_MOST_ONE";
        case Branch::kCond3FailBeta: return "COND3_FAIL_BETA";
        case Branch::kComplexModulus: return "COMPLEX_MODULUS";
        case Branch::kComplexModulusFail: return "COMPLEX_MODULUS_FAIL";
        case Branch::kResidualIdenticallyZero: return "RESIDUAL_IDENTICALLY_ZERO";
    }
    return "UNKNOWN";
}

Verdict eventually_nondecreasing(const RecurrenceSpec& spec) {
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        return {false, Branch::kDiscriminantNegative};
    }
    if (*roots.alpha_plus == kOne) {
        const Rational a2 = spec.a() * spec.v1() - spec.b() * spec.v0();
        const bool ok = spec.v0() <= spec.v1() && spec.v1() <= a2;
        return {ok, ok ? Branch::kCondAlphaOne : Branch::kAlphaOneTripleFail};
    }
    return dominant_root_criterion(spec, roots);
}

Verdict eventually_ratio_monotone(const RecurrenceSpec& spec) {
    if (spec.v0().is_zero() || spec.v1().is_zero()) {
        throw InvalidArgument("eventually_ratio_monotone needs v0*v1 != 0");
    }
    if (!spec.roots().real()) {
        return {false, Branch::kDiscriminantNegative};
    }
    return {true, Branch::kDiscriminantNonnegative};
}

Verdict nondecreasing_from(const RecurrenceSpec& spec, std::int64_t k) {
    if (k < 0) {
        throw InvalidArgument("nondecreasing_from needs k >= 0");
    }
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        return {false, Branch::kDiscriminantNegative};
    }
    const SequenceWindow window = iterate(spec, k + 1);
    const Rational before = k == 0 ? spec.previous_term() : window.at(k - 1);
    if (!(before <= window.at(k) && window.at(k) <= window.at(k + 1))) {
        return {false, Branch::kTripleFail};
    }
    if (*roots.alpha_plus == kOne) {
        return {true, Branch::kCondAlphaOne};
    }
    return dominant_root_criterion(spec, roots);
}

Verdict positive_monotone_h(const RecurrenceSpec& spec) {
    require_h_type(spec, "positive_monotone_h");
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        return {false, Branch::kDiscriminantNegative};
    }
    if (spec.v0().sign() <= 0) {
        return {false, Branch::kInitialNonpositive};
    }
    if (spec.a() < Rational(1)) {
        return {false, Branch::kCoeffABelowOne};
    }
    if (compare(*roots.alpha_plus, kOne) < 0) {
        return {false, Branch::kAlphaPlusBelowOne};
    }
    return {true, Branch::kCondCorollary};
}

Verdict ratio_monotone_h(const RecurrenceSpec& spec) {
    require_h_type(spec, "ratio_monotone_h");
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        return {false, Branch::kDiscriminantNegative};
    }
    const OrderedRoots ordered = order_by_modulus(roots);
    if (cmp_abs(QuadElem(spec.a()), ordered.beta) >= 0) {
        return {true, Branch::kCond2Modulus};
    }
    return {false, Branch::kCond2FailModulus};
}

Verdict weighted_monotone(const RecurrenceSpec& spec) {
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        const bool ok = *roots.modulus_squared <= Rational(1);
        return {ok, ok ? Branch::kComplexModulus : Branch::kComplexModulusFail};
    }
    const OrderedRoots ordered = order_by_modulus(roots);
    if (cmp_abs(ordered.beta, kOne) <= 0) {
        return {true, Branch::kCond3BetaAtMostOne};
    }
    if ((QuadElem(spec.v1()) - QuadElem(spec.v0()) * ordered.alpha).is_zero()) {
        return {true, Branch::kResidualIdenticallyZero};
    }
    return {false, Branch::kCond3FailBeta};
}

bool hartman_aurel_sufficient(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) {
        throw InvalidArgument("coefficients must satisfy ab != 0");
    }
    return (a - Rational(1) - b).sign() > 0 && b.sign() > 0;
}

}  // namespace monorec
