#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monorec/rational.hpp"

namespace monorec {

/// Orbit of the ratio map s -> (a s - b)/s, whose fixed points are the
/// characteristic roots. Starting from s_0 = a_1/a_0 it reproduces the
/// consecutive-term ratios a_{k+1}/a_k.
struct RiccatiOrbit {
    Rational a;
    Rational b;
    std::vector<Rational> states;
    /// Index of a zero state; the map is undefined past it and the orbit stops.
    std::optional<std::int64_t> terminated_early;
};

/// Requires ab != 0, b0 != 0 and n_max >= 1. Produces states s_0 .. s_{n_max}
/// unless a zero state ends the orbit first.
RiccatiOrbit riccati_orbit(const Rational& a, const Rational& b, const Rational& b0,
                           std::int64_t n_max);

}  // namespace monorec
