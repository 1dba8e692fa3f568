#pragma once

/**
 * @file decisions.hpp
 * @brief Exact decision procedures for the three monotone properties.
 *
 *   P1  a_n <= a_{n+1}
 *   P2  |alpha - a_{n+1}/a_n| >= |alpha - a_{n+2}/a_{n+1}|
 *   P3  |a_n alpha - a_{n+1}| >= |a_{n+1} alpha - a_{n+2}|
 *
 * Each procedure returns a Verdict naming the clause that certified (or
 * first refuted) the answer. All comparisons are exact.
 *
 * Pure geometric solutions a_n = c0 r^n (c1 = c0 r for a real root r) are
 * decided directly: the general criteria read the coefficient of one root
 * only and misjudge these degenerate initial values.
 */

#include <string_view>

#include "monorec/recurrence.hpp"

namespace monorec {

enum class Branch {
    // P1, eventual / from k
    kCondMonotonic1,          // 1 != alpha_+ > 0, a > 0, (alpha_+ - 1)(c1 - c0 alpha_-) > 0
    kCondAlphaOne,            // alpha_+ = 1 and the initial triple is non-decreasing
    // a_n = c0 r^n with r = 1, or r > 1 and c0 > 0, or 0 < r < 1 and c0 < 0
    kGeometricSolution,
    kDiscriminantNegative,
    kAlphaOneTripleFail,
    kAlphaPlusNonpositive,
    kCoeffANonpositive,
    kDominantTermNonpositive,  // (alpha_+ - 1)(c1 - c0 alpha_-) <= 0
    kGeometricFail,
    kTripleFail,               // a_{k-1} <= a_k <= a_{k+1} violated
    // P1, h-type corollary
    kCondCorollary,            // a_0 > 0, a >= 1, alpha_+ >= 1
    kInitialNonpositive,
    kCoeffABelowOne,
    kAlphaPlusBelowOne,
    // P2
    kDiscriminantNonnegative,
    kCond2Modulus,             // |a| >= |beta|
    kCond2FailModulus,
    // P3
    kCond3BetaAtMostOne,       // |beta| <= 1
    kCond3FailBeta,
    kComplexModulus,           // complex roots, |beta|^2 = b <= 1
    kComplexModulusFail,
    kResidualIdenticallyZero,  // c1 = c0 alpha, so a_n alpha - a_{n+1} = 0 for all n
};

/// Stable certificate name, e.g. "COND_MONOTONIC_1".
std::string_view branch_name(Branch branch);

struct Verdict {
    bool holds = false;
    Branch branch = Branch::kDiscriminantNegative;
};

/// P1 for all sufficiently large n.
Verdict eventually_nondecreasing(const RecurrenceSpec& spec);

/// P2 for all sufficiently large n. Requires v0*v1 != 0.
Verdict eventually_ratio_monotone(const RecurrenceSpec& spec);

/// P1 for every n >= k-1; for k = 0 uses a_{-1} = (a*a_0 - a_1)/b.
Verdict nondecreasing_from(const RecurrenceSpec& spec, std::int64_t k);

/// 0 = a_{-1} < a_0 <= a_n <= a_{n+1} for all n >= 0. Requires an h-type spec.
Verdict positive_monotone_h(const RecurrenceSpec& spec);

/// P2 for all n >= 0. Requires an h-type spec.
Verdict ratio_monotone_h(const RecurrenceSpec& spec);

/// P3 for all n >= 0, any initial values; complex roots use |beta|^2 = b.
Verdict weighted_monotone(const RecurrenceSpec& spec);

/// a - 1 - b > 0 and b > 0. Requires ab != 0.
bool hartman_aurel_sufficient(const Rational& a, const Rational& b);

}  // namespace monorec
