#include "monorec/oracle.hpp"

#include <algorithm>
#include <limits>

#include "monorec/error.hpp"

namespace monorec {

namespace {

/// Smallest i in [begin, end] with !holds(i), if any.
template <typename Pred>
std::optional<std::int64_t> first_failure(std::int64_t begin, std::int64_t end, Pred holds,
                                          Execution exec) {
    if (exec == Execution::serial) {
        for (std::int64_t i = begin; i <= end; ++i) {
            if (!holds(i)) {
                return i;
            }
        }
        return std::nullopt;
    }
    std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for reduction(min : first) schedule(dynamic, 16)
    for (std::int64_t i = begin; i <= end; ++i) {
        if (i < first && !holds(i)) {
            first = i;
        }
    }
    if (first == std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
    }
    return first;
}

WindowReport make_report(Property property, std::int64_t begin, std::int64_t end,
                         std::optional<std::int64_t> violation) {
    WindowReport report;
    report.property = property;
    report.range_begin = begin;
    report.range_end = end;
    report.first_violation = violation;
    report.holds_on_window = !violation.has_value();
    return report;
}

void require_window(std::int64_t n_max) {
    if (n_max < 1) {
        throw InvalidArgument("window checks need n_max >= 1");
    }
}

/// A_n = L^n M a_n, an integer sequence with A_{n+2} = a_L A_{n+1} - b_L A_n,
/// where L clears the denominators of a and b and M those of v0 and v1.
/// Ratios scale by the constant L, so the P2 comparison is unchanged.
struct ScaledSequence {
    mpz_class a;     // L a
    mpz_class disc;  // a_L^2 - 4 b_L = L^2 (a^2 - 4b)
    std::vector<mpz_class> terms;
};

ScaledSequence scale(const RecurrenceSpec& spec, std::int64_t n_max) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), spec.a().denominator().get_mpz_t(),
            spec.b().denominator().get_mpz_t());
    mpz_class m;
    mpz_lcm(m.get_mpz_t(), spec.v0().denominator().get_mpz_t(),
            spec.v1().denominator().get_mpz_t());
    const mpz_class a_l = spec.a().numerator() * (l / spec.a().denominator());
    const mpz_class b_l = spec.b().numerator() * (l * l / spec.b().denominator());

    ScaledSequence seq;
    seq.a = a_l;
    seq.disc = a_l * a_l - 4 * b_l;
    seq.terms.reserve(static_cast<std::size_t>(n_max) + 1);
    seq.terms.push_back(spec.v0().numerator() * (m / spec.v0().denominator()));
    seq.terms.push_back(l * spec.v1().numerator() * (m / spec.v1().denominator()));
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const std::size_t k = seq.terms.size();
        seq.terms.push_back(a_l * seq.terms[k - 1] - b_l * seq.terms[k - 2]);
    }
    return seq;
}

/// sign(p + q sqrt(d)) for integers, d >= 0.
int surd_sign(const mpz_class& p, const mpz_class& q, const mpz_class& d) {
    const int sp = sgn(p);
    const int sq = sgn(d) == 0 ? 0 : sgn(q);
    if (sq == 0) {
        return sp;
    }
    if (sp == 0 || sp == sq) {
        return sq;
    }
    return sp * sgn(mpz_class(p * p - q * q * d));
}

}  // namespace

WindowReport check_p1_window(const RecurrenceSpec& spec, std::int64_t k, std::int64_t n_max,
                             Execution exec) {
    if (k < 0 || n_max <= k) {
        throw InvalidArgument("check_p1_window needs 0 <= k < n_max");
    }
    const SequenceWindow window = iterate(spec, n_max + 1);
    const Rational previous = spec.previous_term();
    auto term = [&](std::int64_t n) -> const Rational& {
        return n < 0 ? previous : window.at(n);
    };
    auto holds = [&](std::int64_t n) { return term(n) <= term(n + 1); };
    return make_report(Property::P1, k - 1, n_max, first_failure(k - 1, n_max, holds, exec));
}

WindowReport check_p2_window(const RecurrenceSpec& spec, std::int64_t n_max, Execution exec) {
    require_window(n_max);
    return check_p2_window(spec, 0, n_max, exec);
}

WindowReport check_p2_window(const RecurrenceSpec& spec, std::int64_t n_min, std::int64_t n_max,
                             Execution exec) {
    if (n_min < 0 || n_min > n_max) {
        throw InvalidArgument("check_p2_window needs 0 <= n_min <= n_max");
    }
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        throw InvalidArgument("P2 is not defined over the reals for complex roots");
    }
    const ScaledSequence seq = scale(spec, n_max + 2);
    const mpz_class& ta = seq.a;
    const auto& t = seq.terms;
    const int s = order_by_modulus(roots).alpha == *roots.alpha_plus ? 1 : -1;

    std::vector<std::int64_t> zeros;
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (sgn(t[j]) == 0) {
            zeros.push_back(static_cast<std::int64_t>(j));
        }
    }
    // With 2 L alpha = a_L + s sqrt(D_L):
    //   2X = ((a_L A_n - 2 A_{n+1}) + s A_n sqrt(D_L)) A_{n+1}
    //   2Y = ((a_L A_{n+1} - 2 A_{n+2}) + s A_{n+1} sqrt(D_L)) A_n
    // and |X| >= |Y| iff sign(X - Y) sign(X + Y) >= 0.
    auto holds = [&](std::int64_t n) {
        const auto i = static_cast<std::size_t>(n);
        if (sgn(t[i]) == 0 || sgn(t[i + 1]) == 0) {
            return true;
        }
        const mpz_class xp = (ta * t[i] - 2 * t[i + 1]) * t[i + 1];
        const mpz_class xq = s * t[i] * t[i + 1];
        const mpz_class yp = (ta * t[i + 1] - 2 * t[i + 2]) * t[i];
        const mpz_class yq = s * t[i + 1] * t[i];
        const int minus = surd_sign(xp - yp, xq - yq, seq.disc);
        const int plus = surd_sign(xp + yp, xq + yq, seq.disc);
        return minus * plus >= 0;
    };
    WindowReport report =
        make_report(Property::P2, n_min, n_max, first_failure(n_min, n_max, holds, exec));
    report.skipped_indices = std::move(zeros);
    return report;
}

WindowReport check_p3_window(const RecurrenceSpec& spec, std::int64_t n_max, Execution exec) {
    require_window(n_max);
    const RootPair roots = spec.roots();
    const SequenceWindow window = iterate(spec, n_max + 2);
    const auto& t = window.terms;

    if (!roots.real()) {
        // alpha = a/2 + i sqrt(4b - a^2)/2, so
        // |a_n alpha - a_{n+1}|^2 = (a_n a/2 - a_{n+1})^2 + a_n^2 (4b - a^2)/4.
        const Rational half_a = spec.a() / Rational(2);
        const Rational imag_sq = -roots.discriminant / Rational(4);
        std::vector<Rational> modulus_sq(static_cast<std::size_t>(n_max) + 2);
        for (std::size_t n = 0; n < modulus_sq.size(); ++n) {
            const Rational re = t[n] * half_a - t[n + 1];
            modulus_sq[n] = re * re + t[n] * t[n] * imag_sq;
        }
        auto holds = [&](std::int64_t n) {
            const auto i = static_cast<std::size_t>(n);
            return modulus_sq[i] >= modulus_sq[i + 1];
        };
        return make_report(Property::P3, 0, n_max, first_failure(0, n_max, holds, exec));
    }

    const QuadElem alpha = order_by_modulus(roots).alpha;
    std::vector<QuadElem> residual(static_cast<std::size_t>(n_max) + 2);
    for (std::size_t n = 0; n < residual.size(); ++n) {
        residual[n] = QuadElem(t[n]) * alpha - QuadElem(t[n + 1]);
    }
    auto holds = [&](std::int64_t n) {
        const auto i = static_cast<std::size_t>(n);
        return cmp_abs(residual[i], residual[i + 1]) >= 0;
    };
    return make_report(Property::P3, 0, n_max, first_failure(0, n_max, holds, exec));
}

std::optional<std::int64_t> find_n0(const RecurrenceSpec& spec, std::int64_t n_cap) {
    if (n_cap < 1) {
        throw InvalidArgument("find_n0 needs n_cap >= 1");
    }
    const SequenceWindow window = iterate(spec, n_cap + 1);
    for (std::int64_t n = n_cap; n >= 0; --n) {
        if (window.at(n) > window.at(n + 1)) {
            if (n == n_cap) {
                return std::nullopt;
            }
            return n + 1;
        }
    }
    return 0;
}

std::vector<std::optional<QuadElem>> ratio_distances(const RecurrenceSpec& spec,
                                                     std::int64_t count) {
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        throw InvalidArgument("ratio distances need real roots");
    }
    const QuadElem alpha = order_by_modulus(roots).alpha;
    const SequenceWindow window = iterate(spec, std::max<std::int64_t>(count, 1));
    std::vector<std::optional<QuadElem>> out;
    for (std::int64_t n = 0; n < count; ++n) {
        if (window.at(n).is_zero()) {
            out.emplace_back(std::nullopt);
            continue;
        }
        out.emplace_back((alpha - QuadElem(window.at(n + 1) / window.at(n))).abs());
    }
    return out;
}

std::vector<QuadElem> weighted_residuals(const RecurrenceSpec& spec, std::int64_t count) {
    const RootPair roots = spec.roots();
    if (!roots.real()) {
        throw InvalidArgument("weighted residuals are reported for real roots only");
    }
    const QuadElem alpha = order_by_modulus(roots).alpha;
    const SequenceWindow window = iterate(spec, std::max<std::int64_t>(count, 1));
    std::vector<QuadElem> out;
    for (std::int64_t n = 0; n < count; ++n) {
        out.push_back((QuadElem(window.at(n)) * alpha - QuadElem(window.at(n + 1))).abs());
    }
    return out;
}

}  // namespace monorec
