#include "monorec/riccati.hpp"

#include "monorec/error.hpp"

namespace monorec {

RiccatiOrbit riccati_orbit(const Rational& a, const Rational& b, const Rational& b0,
                           std::int64_t n_max) {
    if (a.is_zero() || b.is_zero()) {
        throw InvalidArgument("coefficients must satisfy ab != 0");
    }
    if (b0.is_zero()) {
        throw InvalidArgument("initial state 0: the map is undefined immediately");
    }
    if (n_max < 1) {
        throw InvalidArgument("riccati_orbit needs n_max >= 1");
    }
    RiccatiOrbit orbit{a, b, {b0}, std::nullopt};
    for (std::int64_t k = 1; k <= n_max; ++k) {
        const Rational& s = orbit.states.back();
        orbit.states.push_back((a * s - b) / s);
        if (orbit.states.back().is_zero()) {
            orbit.terminated_early = k;
            break;
        }
    }
    return orbit;
}

}  // namespace monorec
