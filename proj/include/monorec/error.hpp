#pragma once

#include <stdexcept>
#include <string>

namespace monorec {

/// A caller violated a documented precondition (ab = 0, zero initial pair,
/// malformed input, wrong region plane, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The operation is well-posed but outside what the implementation supports,
/// e.g. the closed form for complex characteristic roots.
class Unsupported : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A decision procedure disagreed with the brute-force oracle, or an internal
/// cross-check failed. Indicates a bug, never bad input.
class Inconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace monorec
