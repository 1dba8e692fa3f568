#include "monorec/rational.hpp"

#include <ostream>
#include <regex>
#include <utility>

#include "monorec/error.hpp"

namespace monorec {

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    static const std::regex pattern(R"(([+-]?)([0-9]+)(?:/([0-9]+))?)");
    const std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) {
        throw InvalidArgument("malformed rational '" + s + "' (expected p/q or an integer)");
    }
    mpz_class num(m[2].str(), 10);
    mpz_class den(1);
    if (m[3].matched) {
        den = mpz_class(m[3].str(), 10);
        if (den == 0) {
            throw InvalidArgument("malformed rational '" + s + "' (zero denominator)");
        }
    }
    if (m[1].str() == "-") {
        num = -num;
    }
    return Rational(num, den);
}

bool is_perfect_square(const mpz_class& value, mpz_class* root) {
    if (value < 0) {
        return false;
    }
    if (mpz_perfect_square_p(value.get_mpz_t()) == 0) {
        return false;
    }
    if (root != nullptr) {
        mpz_sqrt(root->get_mpz_t(), value.get_mpz_t());
    }
    return true;
}

bool Rational::is_square(Rational* root) const {
    mpz_class num_root;
    mpz_class den_root;
    if (!is_perfect_square(value_.get_num(), &num_root) ||
        !is_perfect_square(value_.get_den(), &den_root)) {
        return false;
    }
    if (root != nullptr) {
        *root = Rational(num_root, den_root);
    }
    return true;
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw InvalidArgument("inverse of zero");
    }
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(std::uint64_t exponent) const {
    Rational result(1);
    Rational base = *this;
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

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw InvalidArgument("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace monorec
