#pragma once

// Reference computations written directly against GMP, sharing no code with
// the library. Used as independent oracles by the unit and property suites.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "monorec/rational.hpp"

namespace monorec::testing {

inline mpq_class q(const Rational& r) { return r.raw(); }

/// a_0 .. a_n by the recurrence a_{k+2} = a a_{k+1} - b a_k.
inline std::vector<mpq_class> ref_terms(const mpq_class& a, const mpq_class& b,
                                        const mpq_class& v0, const mpq_class& v1,
                                        std::int64_t n) {
    std::vector<mpq_class> t{v0, v1};
    while (static_cast<std::int64_t>(t.size()) <= n) {
        const std::size_t k = t.size();
        mpq_class next = a * t[k - 1] - b * t[k - 2];
        next.canonicalize();
        t.push_back(next);
    }
    t.resize(static_cast<std::size_t>(n) + 1);
    return t;
}

/// h_{-1} .. h_n as a vector shifted by one: out[k + 1] = h_k.
inline std::vector<mpq_class> ref_h(const mpq_class& a, const mpq_class& b, std::int64_t n) {
    std::vector<mpq_class> h{0, 1};
    while (static_cast<std::int64_t>(h.size()) < n + 2) {
        const std::size_t k = h.size();
        mpq_class next = a * h[k - 1] - b * h[k - 2];
        next.canonicalize();
        h.push_back(next);
    }
    return h;
}

/// Value of p + q sqrt(d) at high precision.
inline mpf_class ref_value(const mpq_class& p, const mpq_class& qq, const mpq_class& d,
                           mp_bitcnt_t bits = 4096) {
    mpf_class root(d, bits);
    root = sqrt(root);
    mpf_class out(p, bits);
    out += mpf_class(qq, bits) * root;
    return out;
}

inline int ref_sign(const mpq_class& p, const mpq_class& qq, const mpq_class& d) {
    return sgn(ref_value(p, qq, d));
}

/// Integer roots of x^2 - a x + b by trial over the divisors of b.
inline std::vector<std::int64_t> ref_integer_roots(std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> roots;
    if (b == 0) {
        return a == 0 ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{0, a};
    }
    const std::int64_t m = b < 0 ? -b : b;
    for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d != 0) {
            continue;
        }
        for (std::int64_t x : {d, -d}) {
            if (x * x - a * x + b == 0) {
                roots.push_back(x);
            }
        }
    }
    return roots;
}

/// Roots in long double, larger modulus first; nullopt for complex roots.
struct FloatRoots {
    long double alpha;
    long double beta;
};

inline std::optional<FloatRoots> ref_float_roots(long double a, long double b) {
    const long double disc = a * a - 4 * b;
    if (disc < 0) {
        return std::nullopt;
    }
    const long double s = std::sqrt(disc);
    long double plus = (a + s) / 2;
    long double minus = (a - s) / 2;
    if (std::fabs(minus) > std::fabs(plus)) {
        std::swap(plus, minus);
    }
    return FloatRoots{plus, minus};
}

}  // namespace monorec::testing
