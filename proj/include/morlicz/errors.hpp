#pragma once

#include <stdexcept>
#include <string>

namespace morlicz {

// Input/contract violations (bad descriptors, precondition failures).
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base for failures of the numerics themselves.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-finite evaluation; carries the offending argument.
class range_error : public numerical_error {
public:
    range_error(const std::string& what, double offending)
        : numerical_error(what + " (at value " + std::to_string(offending) + ")"),
          offending_value(offending) {}
    double offending_value;
};

// A bracket grew past its cap without capturing the target.
class divergence_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

// Adaptive quadrature failed to reach its tolerance within the refinement cap.
class integrability_error : public numerical_error {
public:
    integrability_error(const std::string& what, double error_estimate)
        : numerical_error(what), estimate(error_estimate) {}
    double estimate;
};

// Inverting the Sobolev conjugate past its saturation value.
class conjugate_range_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

// Level-set denominator vanished (ball entirely above the level).
class degenerate_level_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

// A sampling plan produced no admissible samples.
class sampling_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

// The natural-number search for the De Giorgi s exceeded its cap.
class constant_explosion_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

} // namespace morlicz
