#pragma once

/**
 * @file numtheory.hpp
 * @brief Integer-coefficient recurrences: irreducibility, quadratic Pisot
 *        test, generalized Fibonacci enumeration and the boundary
 *        characterization of the Fibonacci recursion.
 *
 * Sign conventions: a pair (a, b) stands for a_{n+2} - a a_{n+1} + b a_n = 0,
 * equivalently a_{n+2} = a a_{n+1} + c a_n with c = -b.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace monorec {

struct IntCoeffPair {
    std::int64_t a = 0;
    std::int64_t b = 0;

    [[nodiscard]] std::int64_t additive_c() const { return -b; }
    friend bool operator==(const IntCoeffPair&, const IntCoeffPair&) = default;
};

/// "a_{n+2} - 3a_{n+1} + 1a_n = 0" style rendering (difference form).
std::string difference_form(const IntCoeffPair& pair);
/// "a_{n+2} = 3a_{n+1} - 1a_n" style rendering (additive form, c = -b).
std::string additive_form(const IntCoeffPair& pair);

/// True iff x^2 - a x + b has no integer root.
bool is_irreducible(const IntCoeffPair& pair);

/// Integer points of D' obey the irreducibility test iff b is not -a-1, 0, a-1.
bool satisfies_irreducibility_condition(const IntCoeffPair& pair);

bool in_coefficient_domain(const IntCoeffPair& pair);

/// x^2 - a x + b irreducible, dominant root > 1, other root of modulus < 1.
bool is_quadratic_pisot(const IntCoeffPair& pair);

/// All (a, b) in Z^2 inside D' with 1 <= a <= a_max and b not in
/// {-a-1, 0, a-1}, ordered by a then b.
std::vector<IntCoeffPair> enumerate_generalized_fibonacci(std::int64_t a_max);

inline constexpr std::int64_t kDefaultScanBound = 1000;

/// Integer points of the boundary of D' passing the irreducibility test.
/// The scan covers 1 <= a <= scan_bound; beyond it the slanted boundary lines
/// factor as (x - 1)(x - (a-1)) and (x + 1)(x - (a+1)), which is re-verified
/// at every scanned a. Always [(1, -1)].
std::vector<IntCoeffPair> boundary_characterization(std::int64_t scan_bound = kDefaultScanBound);

}  // namespace monorec
