#include "monorec/qfield.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "monorec/error.hpp"

namespace monorec {

namespace {

std::size_t bit_length(const Rational& r) {
    return mpz_sizeinbase(r.numerator().get_mpz_t(), 2) +
           mpz_sizeinbase(r.denominator().get_mpz_t(), 2);
}

mpf_class to_mpf(const Rational& r, mp_bitcnt_t precision) {
    mpf_class num(r.numerator(), precision);
    mpf_class den(r.denominator(), precision);
    return mpf_class(num / den, precision);
}

// %g-style rendering of a multiprecision float with `digits` significant digits.
std::string format_significant(const mpf_class& x, int digits) {
    if (sgn(x) == 0) {
        return "0";
    }
    mp_exp_t exponent = 0;
    char* raw = mpf_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits),
                            x.get_mpf_t());
    std::string mantissa(raw);
    void (*free_fn)(void*, std::size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(raw, std::char_traits<char>::length(raw) + 1);

    std::string sign;
    if (!mantissa.empty() && mantissa.front() == '-') {
        sign = "-";
        mantissa.erase(0, 1);
    }
    while (mantissa.size() > 1 && mantissa.back() == '0') {
        mantissa.pop_back();
    }
    // value = 0.mantissa * 10^exponent; decimal exponent of the leading digit:
    const long lead = static_cast<long>(exponent) - 1;
    std::string out;
    if (lead < -5 || lead >= digits) {
        out = mantissa.substr(0, 1);
        if (mantissa.size() > 1) {
            out += "." + mantissa.substr(1);
        }
        out += (lead < 0 ? "e-" : "e+");
        const long mag = std::labs(lead);
        out += (mag < 10 ? "0" : "") + std::to_string(mag);
    } else if (lead < 0) {
        out = "0." + std::string(static_cast<std::size_t>(-lead - 1), '0') + mantissa;
    } else {
        const auto int_digits = static_cast<std::size_t>(lead + 1);
        if (mantissa.size() <= int_digits) {
            out = mantissa + std::string(int_digits - mantissa.size(), '0');
        } else {
            out = mantissa.substr(0, int_digits) + "." + mantissa.substr(int_digits);
        }
    }
    return sign + out;
}

}  // namespace

QuadElem::QuadElem(Rational p, Rational q, Rational radicand)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(radicand)) {
    if (d_.sign() < 0) {
        throw InvalidArgument("negative radicand " + d_.to_string());
    }
    normalize();
}

QuadElem QuadElem::sqrt(const Rational& radicand) {
    return QuadElem(Rational(0), Rational(1), radicand);
}

void QuadElem::normalize() {
    Rational root;
    if (!q_.is_zero() && d_.is_square(&root)) {
        p_ += q_ * root;
        q_ = Rational(0);
    }
    if (q_.is_zero()) {
        d_ = Rational(0);
    }
}

const Rational& QuadElem::as_rational() const {
    if (!is_rational()) {
        throw Inconsistency("expected a rational value, got " + to_string());
    }
    return p_;
}

Rational QuadElem::common_radicand(const QuadElem& rhs) const {
    if (is_rational()) {
        return rhs.d_;
    }
    if (rhs.is_rational() || d_ == rhs.d_) {
        return d_;
    }
    throw InvalidArgument("mismatched radicands " + d_.to_string() + " and " +
                          rhs.d_.to_string());
}

QuadElem QuadElem::conjugate() const {
    QuadElem out = *this;
    out.q_ = -q_;
    return out;
}

QuadElem QuadElem::pow(std::uint64_t exponent) const {
    QuadElem result(Rational(1));
    QuadElem base = *this;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

QuadElem QuadElem::abs() const {
    return sign(*this) < 0 ? -*this : *this;
}

QuadElem& QuadElem::operator+=(const QuadElem& rhs) {
    d_ = common_radicand(rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    normalize();
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs) {
    d_ = common_radicand(rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    normalize();
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs) {
    const Rational d = common_radicand(rhs);
    if (rhs.is_rational()) {
        p_ *= rhs.p_;
        q_ *= rhs.p_;
    } else if (is_rational()) {
        q_ = p_ * rhs.q_;
        p_ *= rhs.p_;
    } else {
        Rational p = p_ * rhs.p_ + q_ * rhs.q_ * d;
        Rational q = p_ * rhs.q_ + q_ * rhs.p_;
        p_ = std::move(p);
        q_ = std::move(q);
    }
    d_ = d;
    normalize();
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& rhs) {
    if (rhs.is_zero()) {
        throw InvalidArgument("division by the zero element");
    }
    if (rhs.is_rational()) {
        (void)common_radicand(rhs);
        p_ /= rhs.p_;
        q_ /= rhs.p_;
        normalize();
        return *this;
    }
    // x / y = x * conj(y) / N(y); N(y) != 0 because sqrt(D) is irrational.
    const Rational norm = rhs.p_ * rhs.p_ - rhs.q_ * rhs.q_ * rhs.d_;
    *this *= rhs.conjugate();
    p_ /= norm;
    q_ /= norm;
    normalize();
    return *this;
}

QuadElem QuadElem::operator-() const {
    QuadElem out = *this;
    out.p_ = -p_;
    out.q_ = -q_;
    return out;
}

bool operator==(const QuadElem& lhs, const QuadElem& rhs) {
    return lhs.p_ == rhs.p_ && lhs.q_ == rhs.q_ && (lhs.q_.is_zero() || lhs.d_ == rhs.d_);
}

double QuadElem::to_double() const {
    if (is_rational()) {
        return p_.to_double();
    }
    const std::string text = to_decimal(17);
    return std::strtod(text.c_str(), nullptr);
}

std::string QuadElem::to_decimal(int digits) const {
    const std::size_t bits = std::max({bit_length(p_), bit_length(q_), bit_length(d_)});
    const auto precision = static_cast<mp_bitcnt_t>(2 * bits + 4 * digits + 128);
    mpf_class value = to_mpf(p_, precision);
    if (!is_rational()) {
        mpf_class root(0, precision);
        mpf_class radicand = to_mpf(d_, precision);
        mpf_sqrt(root.get_mpf_t(), radicand.get_mpf_t());
        value += to_mpf(q_, precision) * root;
    }
    return format_significant(value, digits);
}

std::string QuadElem::to_string() const {
    if (is_rational()) {
        return p_.to_string();
    }
    const std::string surd = q_.abs().to_string() + "*sqrt(" + d_.to_string() + ")";
    if (p_.is_zero()) {
        return (q_.sign() < 0 ? "-" : "") + surd;
    }
    return p_.to_string() + (q_.sign() < 0 ? " - " : " + ") + surd;
}

int sign(const QuadElem& x) {
    const int sp = x.rational_part().sign();
    const int sq = x.surd_coeff().sign();
    if (sq == 0) {
        return sp;
    }
    if (sp == 0 || sp == sq) {
        return sq;
    }
    // Mixed signs: the larger of p^2 and q^2 D wins.
    const Rational& p = x.rational_part();
    const Rational& q = x.surd_coeff();
    const Rational gap = p * p - q * q * x.radicand();
    return sp * gap.sign();
}

int cmp_abs(const QuadElem& x, const QuadElem& y) {
    if (!x.is_rational() && !y.is_rational() && x.radicand() != y.radicand()) {
        throw InvalidArgument("cmp_abs: mismatched radicands " + x.radicand().to_string() +
                              " and " + y.radicand().to_string());
    }
    return sign(x * x - y * y);
}

RootPair characteristic_roots_unchecked(const Rational& a, const Rational& b) {
    RootPair roots;
    roots.a = a;
    roots.b = b;
    roots.discriminant = a * a - Rational(4) * b;
    const int ds = roots.discriminant.sign();
    roots.discriminant_sign = static_cast<DiscriminantSign>(ds);
    if (ds < 0) {
        roots.modulus_squared = b;
        return roots;
    }
    const Rational half(1, 2);
    const QuadElem root_disc = QuadElem::sqrt(roots.discriminant);
    roots.alpha_plus = QuadElem(a * half) + root_disc * QuadElem(half);
    roots.alpha_minus = QuadElem(a * half) - root_disc * QuadElem(half);
    return roots;
}

RootPair characteristic_roots(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) {
        throw InvalidArgument("coefficients must satisfy ab != 0 (a = " + a.to_string() +
                              ", b = " + b.to_string() + ")");
    }
    return characteristic_roots_unchecked(a, b);
}

OrderedRoots order_by_modulus(const RootPair& roots) {
    if (!roots.real()) {
        throw InvalidArgument("complex characteristic roots have no modulus ordering; "
                              "use modulus_squared");
    }
    const QuadElem& plus = *roots.alpha_plus;
    const QuadElem& minus = *roots.alpha_minus;
    if (cmp_abs(plus, minus) >= 0) {
        return {plus, minus};
    }
    return {minus, plus};
}

int modulus_gap_sign(const Rational& a, const Rational& b) {
    const RootPair roots = characteristic_roots(a, b);
    if (!roots.real()) {
        throw InvalidArgument("modulus_gap_sign requires a^2 - 4b >= 0");
    }
    const int disc = roots.discriminant.sign();
    int table = 0;
    if (b.sign() > 0) {
        table = a.sign() > 0 ? disc : -disc;
    } else {
        table = a.sign();
    }
    const int direct = cmp_abs(*roots.alpha_plus, *roots.alpha_minus);
    if (table != direct) {
        throw Inconsistency("modulus gap table disagrees with direct comparison for a = " +
                            a.to_string() + ", b = " + b.to_string());
    }
    return table;
}

}  // namespace monorec
