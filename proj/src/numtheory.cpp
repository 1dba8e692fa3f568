#include "monorec/numtheory.hpp"

#include <cstdlib>

#include "monorec/error.hpp"
#include "monorec/qfield.hpp"
#include "monorec/regions.hpp"

namespace monorec {

namespace {

/// " + 3*x", " - x", or "" for a zero coefficient.
std::string signed_term(std::int64_t coeff, const char* symbol) {
    if (coeff == 0) {
        return "";
    }
    const std::int64_t mag = std::llabs(coeff);
    return std::string(coeff < 0 ? " - " : " + ") + (mag == 1 ? "" : std::to_string(mag) + "*") +
           symbol;
}

/// Integer root of x^2 - a x + b, if any: x = (a +- s)/2 with s^2 = a^2 - 4b.
bool has_integer_root(const IntCoeffPair& pair) {
    const mpz_class a(static_cast<long>(pair.a));
    const mpz_class b(static_cast<long>(pair.b));
    const mpz_class disc = a * a - 4 * b;
    mpz_class s;
    if (!is_perfect_square(disc, &s)) {
        return false;
    }
    for (const mpz_class& twice_root : {mpz_class(a + s), mpz_class(a - s)}) {
        if (mpz_even_p(twice_root.get_mpz_t()) != 0) {
            const mpz_class root = twice_root / 2;
            if (root * root - a * root + b == 0) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

std::string difference_form(const IntCoeffPair& pair) {
    return "a_{n+2}" + signed_term(-pair.a, "a_{n+1}") + signed_term(pair.b, "a_n") + " = 0";
}

std::string additive_form(const IntCoeffPair& pair) {
    std::string lead = signed_term(pair.a, "a_{n+1}");
    if (lead.empty()) {
        lead = "0";
    } else {
        lead = lead[1] == '-' ? "-" + lead.substr(3) : lead.substr(3);
    }
    return "a_{n+2} = " + lead + signed_term(pair.additive_c(), "a_n");
}

bool is_irreducible(const IntCoeffPair& pair) {
    return !has_integer_root(pair);
}

bool satisfies_irreducibility_condition(const IntCoeffPair& pair) {
    return pair.b != -pair.a - 1 && pair.b != 0 && pair.b != pair.a - 1;
}

bool in_coefficient_domain(const IntCoeffPair& pair) {
    return contains_coeff_plane(RegionId::DP, Rational(static_cast<long>(pair.a)),
                                Rational(static_cast<long>(pair.b)));
}

bool is_quadratic_pisot(const IntCoeffPair& pair) {
    if (!is_irreducible(pair)) {
        return false;
    }
    const RootPair roots = characteristic_roots_unchecked(Rational(static_cast<long>(pair.a)),
                                                          Rational(static_cast<long>(pair.b)));
    if (!roots.real()) {
        return false;
    }
    const OrderedRoots ordered = order_by_modulus(roots);
    const QuadElem one{Rational(1)};
    return compare(ordered.alpha, one) > 0 && cmp_abs(ordered.beta, one) < 0;
}

std::vector<IntCoeffPair> enumerate_generalized_fibonacci(std::int64_t a_max) {
    if (a_max < 1) {
        throw InvalidArgument("enumerate needs a_max >= 1");
    }
    std::vector<IntCoeffPair> pairs;
    for (std::int64_t a = 1; a <= a_max; ++a) {
        for (std::int64_t b = -a - 1; b <= a - 1; ++b) {
            const IntCoeffPair pair{a, b};
            if (satisfies_irreducibility_condition(pair)) {
                pairs.push_back(pair);
            }
        }
    }
    return pairs;
}

std::vector<IntCoeffPair> boundary_characterization(std::int64_t scan_bound) {
    if (scan_bound < 1) {
        throw InvalidArgument("scan bound must be at least 1");
    }
    std::vector<IntCoeffPair> result;
    auto consider = [&](const IntCoeffPair& pair) {
        const bool by_condition = satisfies_irreducibility_condition(pair);
        if (by_condition != is_irreducible(pair)) {
            throw Inconsistency("irreducibility condition and root test disagree at (" +
                                std::to_string(pair.a) + ", " + std::to_string(pair.b) + ")");
        }
        if (by_condition) {
            result.push_back(pair);
        }
    };

    // Left edge a = 1, -2 <= b <= 0.
    for (std::int64_t b = -2; b <= 0; ++b) {
        consider({1, b});
    }
    // Slanted edges b = a - 1 and b = -a - 1 for a > 1 (a = 1 endpoints done above).
    for (std::int64_t a = 2; a <= scan_bound; ++a) {
        const IntCoeffPair upper{a, a - 1};
        const IntCoeffPair lower{a, -a - 1};
        // (x - 1)(x - (a - 1)) and (x + 1)(x - (a + 1)): 1 and -1 are roots.
        if (1 - upper.a + upper.b != 0 || 1 + lower.a + lower.b != 0) {
            throw Inconsistency("boundary line failed to factor");
        }
        consider(upper);
        consider(lower);
    }
    return result;
}

}  // namespace monorec
