#pragma once

/**
 * @file recurrence.hpp
 * @brief Second-order recurrences a_{n+2} = a*a_{n+1} - b*a_n over Q.
 *
 * Indices start at 0 with initial pair (v0, v1). The "h-type" convention
 * a_{-1} = 0, a_0 = c is absorbed by make_h_spec, which sets v1 = a*c; the
 * resulting sequence is c * h_n(alpha_+, alpha_-), with h_n the complete
 * homogeneous symmetric polynomial.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "monorec/qfield.hpp"
#include "monorec/rational.hpp"

namespace monorec {

class RecurrenceSpec {
public:
    /// Validates ab != 0 and (v0, v1) != (0, 0).
    static RecurrenceSpec make(Rational a, Rational b, Rational v0, Rational v1);

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] const Rational& v0() const { return v0_; }
    [[nodiscard]] const Rational& v1() const { return v1_; }
    [[nodiscard]] bool h_type() const { return h_type_; }

    /// a_{-1}, reconstructed backwards from the recurrence: (a*v0 - v1)/b.
    [[nodiscard]] Rational previous_term() const;

    [[nodiscard]] RootPair roots() const { return characteristic_roots(a_, b_); }

    friend RecurrenceSpec make_h_spec(const Rational& a, const Rational& b, const Rational& c);

private:
    RecurrenceSpec(Rational a, Rational b, Rational v0, Rational v1, bool h_type);

    Rational a_;
    Rational b_;
    Rational v0_;
    Rational v1_;
    bool h_type_ = false;
};

/// Spec with a_{-1} = 0, a_0 = c (so a_1 = a*c). Requires ab != 0, c != 0.
RecurrenceSpec make_h_spec(const Rational& a, const Rational& b, const Rational& c);

/// Power-sum (Lucas-style) spec: v0 = 2, v1 = a.
RecurrenceSpec make_power_sum_spec(const Rational& a, const Rational& b);

struct SequenceWindow {
    std::int64_t start_index = 0;
    std::vector<Rational> terms;

    [[nodiscard]] const Rational& at(std::int64_t index) const {
        return terms.at(static_cast<std::size_t>(index - start_index));
    }
};

/// Exact terms a_0 .. a_{n_max}. Requires n_max >= 1.
SequenceWindow iterate(const RecurrenceSpec& spec, std::int64_t n_max);

/// a_n from the Binet-type closed form (distinct real roots) or the
/// polynomial-in-n form (double root). Throws Unsupported for complex roots.
Rational closed_form_term(const RecurrenceSpec& spec, std::int64_t n);

inline constexpr std::int64_t kDefaultZeroSearchHorizon = 10'000;

/// The unique index n >= 0 with a_n = 0, if any. Requires v0*v1 != 0 and
/// real roots. For distinct roots the search stops as soon as the dominant
/// root's term strictly outweighs the other in modulus (after which no zero
/// is possible); if neither a zero nor that cutoff is reached by `horizon`,
/// Unsupported is thrown rather than guessing.
std::optional<std::int64_t> exceptional_zero(const RecurrenceSpec& spec,
                                             std::int64_t horizon = kDefaultZeroSearchHorizon);

enum class RootLabel { alpha, beta };

struct RatioLimit {
    bool converges = false;
    std::optional<QuadElem> limit;
    std::optional<RootLabel> which_root;
};

/// Limit of a_{n+1}/a_n. Requires v0*v1 != 0.
RatioLimit ratio_limit(const RecurrenceSpec& spec);

}  // namespace monorec
