#include "monorec/recurrence.hpp"

#include <utility>

#include "monorec/error.hpp"

namespace monorec {

RecurrenceSpec::RecurrenceSpec(Rational a, Rational b, Rational v0, Rational v1, bool h_type)
    : a_(std::move(a)), b_(std::move(b)), v0_(std::move(v0)), v1_(std::move(v1)),
      h_type_(h_type) {}

RecurrenceSpec RecurrenceSpec::make(Rational a, Rational b, Rational v0, Rational v1) {
    if (a.is_zero() || b.is_zero()) {
        throw InvalidArgument("coefficients must satisfy ab != 0");
    }
    if (v0.is_zero() && v1.is_zero()) {
        throw InvalidArgument("initial values (v0, v1) must not both be zero");
    }
    return RecurrenceSpec(std::move(a), std::move(b), std::move(v0), std::move(v1), false);
}

Rational RecurrenceSpec::previous_term() const {
    return (a_ * v0_ - v1_) / b_;
}

RecurrenceSpec make_h_spec(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero() || b.is_zero()) {
        throw InvalidArgument("coefficients must satisfy ab != 0");
    }
    if (c.is_zero()) {
        throw InvalidArgument("h-type initial value c must be non-zero");
    }
    return RecurrenceSpec(a, b, c, a * c, true);
}

RecurrenceSpec make_power_sum_spec(const Rational& a, const Rational& b) {
    return RecurrenceSpec::make(a, b, Rational(2), a);
}

SequenceWindow iterate(const RecurrenceSpec& spec, std::int64_t n_max) {
    if (n_max < 1) {
        throw InvalidArgument("iterate needs n_max >= 1");
    }
    SequenceWindow window;
    window.terms.reserve(static_cast<std::size_t>(n_max) + 1);
    window.terms.push_back(spec.v0());
    window.terms.push_back(spec.v1());
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const auto& t = window.terms;
        window.terms.push_back(spec.a() * t[t.size() - 1] - spec.b() * t[t.size() - 2]);
    }
    return window;
}

Rational closed_form_term(const RecurrenceSpec& spec, std::int64_t n) {
    if (n < 0) {
        throw InvalidArgument("closed_form_term needs n >= 0");
    }
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        throw Unsupported("closed form is only evaluated for real roots; use iterate");
    }
    const QuadElem c0(spec.v0());
    const QuadElem c1(spec.v1());
    const auto exponent = static_cast<std::uint64_t>(n);

    if (roots.discriminant_sign == DiscriminantSign::zero) {
        // c0 (n+1) alpha^n + (c1 - a c0) n alpha^{n-1}
        const QuadElem& alpha = *roots.alpha_plus;
        QuadElem value = c0 * QuadElem(Rational(n + 1)) * alpha.pow(exponent);
        if (n > 0) {
            value += (c1 - QuadElem(spec.a()) * c0) * QuadElem(Rational(n)) *
                     alpha.pow(exponent - 1);
        }
        return value.as_rational();
    }

    const QuadElem& plus = *roots.alpha_plus;
    const QuadElem& minus = *roots.alpha_minus;
    const QuadElem numerator =
        (c1 - c0 * minus) * plus.pow(exponent) - (c1 - c0 * plus) * minus.pow(exponent);
    return (numerator / QuadElem::sqrt(roots.discriminant)).as_rational();
}

std::optional<std::int64_t> exceptional_zero(const RecurrenceSpec& spec, std::int64_t horizon) {
    if (spec.v0().is_zero() || spec.v1().is_zero()) {
        throw InvalidArgument("exceptional_zero needs v0*v1 != 0");
    }
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        throw InvalidArgument("exceptional_zero needs a^2 - 4b >= 0");
    }

    if (roots.discriminant_sign == DiscriminantSign::zero) {
        // a_n = alpha^{n-1} (c0 alpha - (c0 alpha - c1) n)
        const Rational alpha = roots.alpha_plus->as_rational();
        const Rational lead = spec.v0() * alpha;
        const Rational slope = lead - spec.v1();
        if (slope.is_zero()) {
            return std::nullopt;
        }
        const Rational n = lead / slope;
        if (!n.is_integer() || n.sign() < 0) {
            return std::nullopt;
        }
        return n.numerator().get_si();
    }

    // a_n * sqrt(D) = P alpha^n - Q beta^n with |alpha| > |beta|.
    const OrderedRoots ordered = order_by_modulus(roots);
    const QuadElem c0(spec.v0());
    const QuadElem c1(spec.v1());
    const QuadElem big_coeff = c1 - c0 * ordered.beta;
    const QuadElem small_coeff = c1 - c0 * ordered.alpha;
    if (big_coeff.is_zero() || small_coeff.is_zero()) {
        return std::nullopt;  // pure geometric sequence, never zero
    }
    QuadElem big = big_coeff;
    QuadElem small = small_coeff;
    for (std::int64_t n = 0; n <= horizon; ++n) {
        if (big == small) {
            return n;
        }
        // |P alpha^n| grows strictly faster than |Q beta^n|; once ahead it stays ahead.
        if (cmp_abs(big, small) > 0) {
            return std::nullopt;
        }
        big *= ordered.alpha;
        small *= ordered.beta;
    }
    throw Unsupported("exceptional_zero: search horizon exhausted before the dominant "
                      "root took over; raise the horizon");
}

RatioLimit ratio_limit(const RecurrenceSpec& spec) {
    if (spec.v0().is_zero() || spec.v1().is_zero()) {
        throw InvalidArgument("ratio_limit needs v0*v1 != 0");
    }
    const RootPair roots = spec.roots();
    RatioLimit result;
    if (!roots.real()) {
        return result;
    }
    const OrderedRoots ordered = order_by_modulus(roots);
    result.converges = true;
    const bool on_beta = (QuadElem(spec.v1()) - QuadElem(spec.v0()) * ordered.beta).is_zero();
    if (on_beta && !(ordered.alpha == ordered.beta)) {
        result.limit = ordered.beta;
        result.which_root = RootLabel::beta;
    } else {
        result.limit = ordered.alpha;
        result.which_root = RootLabel::alpha;
    }
    return result;
}

}  // namespace monorec
