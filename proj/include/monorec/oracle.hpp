#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force window checks of the monotone properties.
 *
 * The oracle never consults the closed-form criteria: it generates terms by
 * the recurrence and compares them exactly. Modulus inequalities are decided
 * on squares, so there is no tolerance anywhere in this module.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "monorec/execution.hpp"
#include "monorec/recurrence.hpp"

namespace monorec {

enum class Property { P1, P2, P3 };

struct WindowReport {
    Property property = Property::P1;
    std::int64_t range_begin = 0;  // inclusive
    std::int64_t range_end = 0;    // inclusive
    bool holds_on_window = true;
    std::optional<std::int64_t> first_violation;
    /// Term indices j with a_j = 0; each voids the P2 comparisons at j-1 and j.
    std::vector<std::int64_t> skipped_indices;
};

/// a_n <= a_{n+1} for n in [k-1, n_max]; a_{-1} is reconstructed when k = 0.
WindowReport check_p1_window(const RecurrenceSpec& spec, std::int64_t k, std::int64_t n_max,
                             Execution exec = Execution::parallel);

/// |alpha - a_{n+1}/a_n| >= |alpha - a_{n+2}/a_{n+1}| for n in [0, n_max].
/// Requires real roots.
WindowReport check_p2_window(const RecurrenceSpec& spec, std::int64_t n_max,
                             Execution exec = Execution::parallel);

/// Same check restricted to n in [n_min, n_max], for tail scans.
WindowReport check_p2_window(const RecurrenceSpec& spec, std::int64_t n_min, std::int64_t n_max,
                             Execution exec = Execution::parallel);

/// |a_n alpha - a_{n+1}| >= |a_{n+1} alpha - a_{n+2}| for n in [0, n_max].
/// Complex roots are handled through the exact squared modulus.
WindowReport check_p3_window(const RecurrenceSpec& spec, std::int64_t n_max,
                             Execution exec = Execution::parallel);

/// Smallest n0 <= n_cap with a_n <= a_{n+1} for all n in [n0, n_cap]. A
/// finite witness only; eventual truth comes from the decision procedures.
std::optional<std::int64_t> find_n0(const RecurrenceSpec& spec, std::int64_t n_cap);

/// |alpha - a_{n+1}/a_n| for n in [0, count); nullopt where a_n = 0.
std::vector<std::optional<QuadElem>> ratio_distances(const RecurrenceSpec& spec,
                                                     std::int64_t count);

/// |a_n alpha - a_{n+1}| for n in [0, count), real roots only.
std::vector<QuadElem> weighted_residuals(const RecurrenceSpec& spec, std::int64_t count);

}  // namespace monorec
