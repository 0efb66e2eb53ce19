#pragma once

#include <stdexcept>
#include <string>

namespace lattes {

// Exception taxonomy mirrors the CLI exit codes:
//   precondition_error -> 3, precision_error / resource_error -> 4.

// A caller violated a documented precondition (singular curve, |m| < 2,
// zero polynomial, point outside the skeleton, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A certified computation could not reach the requested accuracy.  Never
// raised in place of returning a wrong value.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable resource cap (coefficient bit budget, iteration cap) was
// hit.  Carries the best estimate obtained so far together with its bound.
struct resource_error : std::runtime_error {
    double partial_value = 0.0;
    double partial_bound = 0.0;
    long iterations = 0;
    resource_error(const std::string& msg, double value, double bound, long iters)
        : std::runtime_error(msg), partial_value(value), partial_bound(bound), iterations(iters) {}
};

}  // namespace lattes
