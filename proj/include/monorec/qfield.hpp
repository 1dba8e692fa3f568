#pragma once

/**
 * @file qfield.hpp
 * @brief Exact arithmetic in real quadratic extensions Q(sqrt(D)).
 *
 * A QuadElem is p + q*sqrt(D) with rational p, q and a non-negative rational
 * radicand D. Every order comparison is decided exactly by comparing squares
 * of rationals; floating point only appears in to_double()/to_decimal().
 *
 * Canonical form: whenever q = 0 the radicand is stored as 0, and a square
 * radicand is folded into p. Two irrational elements can only be combined
 * when their radicands agree; rational elements combine with anything.
 */

#include <optional>
#include <string>
#include <utility>

#include "monorec/rational.hpp"

namespace monorec {

class QuadElem {
public:
    QuadElem() = default;
    QuadElem(Rational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    QuadElem(Rational p, Rational q, Rational radicand);

    /// sqrt(radicand), exact; radicand must be non-negative.
    static QuadElem sqrt(const Rational& radicand);

    [[nodiscard]] const Rational& rational_part() const { return p_; }
    [[nodiscard]] const Rational& surd_coeff() const { return q_; }
    [[nodiscard]] const Rational& radicand() const { return d_; }
    [[nodiscard]] bool is_rational() const { return q_.is_zero(); }
    [[nodiscard]] bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    /// The rational value; throws Inconsistency when the element is irrational.
    [[nodiscard]] const Rational& as_rational() const;

    [[nodiscard]] QuadElem conjugate() const;
    [[nodiscard]] QuadElem pow(std::uint64_t exponent) const;
    [[nodiscard]] QuadElem abs() const;

    [[nodiscard]] double to_double() const;
    /// Decimal rendering with `digits` significant digits, evaluated with
    /// enough binary precision that cancellation in p + q*sqrt(D) is harmless.
    [[nodiscard]] std::string to_decimal(int digits = 12) const;
    /// "p", "q*sqrt(D)" or "p + q*sqrt(D)" with rationals in p/q form.
    [[nodiscard]] std::string to_string() const;

    QuadElem& operator+=(const QuadElem& rhs);
    QuadElem& operator-=(const QuadElem& rhs);
    QuadElem& operator*=(const QuadElem& rhs);
    QuadElem& operator/=(const QuadElem& rhs);
    friend QuadElem operator+(QuadElem lhs, const QuadElem& rhs) { return lhs += rhs; }
    friend QuadElem operator-(QuadElem lhs, const QuadElem& rhs) { return lhs -= rhs; }
    friend QuadElem operator*(QuadElem lhs, const QuadElem& rhs) { return lhs *= rhs; }
    friend QuadElem operator/(QuadElem lhs, const QuadElem& rhs) { return lhs /= rhs; }
    QuadElem operator-() const;

    friend bool operator==(const QuadElem& lhs, const QuadElem& rhs);

private:
    void normalize();
    /// Radicand shared by *this and rhs; throws on a mismatch.
    [[nodiscard]] Rational common_radicand(const QuadElem& rhs) const;

    Rational p_;
    Rational q_;
    Rational d_;
};

/// Exact sign of the real number x.
int sign(const QuadElem& x);

/// sign(|x| - |y|), i.e. sign(x^2 - y^2).
int cmp_abs(const QuadElem& x, const QuadElem& y);

/// Three-way comparison of two real values.
inline int compare(const QuadElem& x, const QuadElem& y) { return sign(x - y); }

enum class DiscriminantSign { negative = -1, zero = 0, positive = 1 };

struct RootPair {
    Rational a;
    Rational b;
    Rational discriminant;  // a^2 - 4b
    DiscriminantSign discriminant_sign = DiscriminantSign::zero;
    std::optional<QuadElem> alpha_plus;   // present iff discriminant >= 0
    std::optional<QuadElem> alpha_minus;  // present iff discriminant >= 0
    std::optional<Rational> modulus_squared;  // = b, present iff discriminant < 0

    [[nodiscard]] bool real() const { return discriminant_sign != DiscriminantSign::negative; }
};

/// Roots of x^2 - a x + b. Requires ab != 0.
RootPair characteristic_roots(const Rational& a, const Rational& b);

/// Same as characteristic_roots without the ab != 0 precondition; used where
/// whole coefficient planes are scanned (a = 0 or b = 0 included).
RootPair characteristic_roots_unchecked(const Rational& a, const Rational& b);

struct OrderedRoots {
    QuadElem alpha;  // |alpha| >= |beta|
    QuadElem beta;
};

/// Relabels the real roots so that |alpha| >= |beta|. Ties (only possible for
/// alpha = beta, or alpha = -beta when a = 0) keep alpha = alpha_plus.
OrderedRoots order_by_modulus(const RootPair& roots);

/// sign(|alpha_+| - |alpha_-|) from the closed-form case table on the signs
/// of a and b, cross-checked against cmp_abs. Requires a^2 - 4b >= 0, ab != 0.
int modulus_gap_sign(const Rational& a, const Rational& b);

}  // namespace monorec
