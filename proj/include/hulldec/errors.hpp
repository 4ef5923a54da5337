#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hulldec {

// Well-formed input, but the requested object does not exist. The CLI maps
// these to exit code 2; malformed input maps to exit code 1.

struct NotMajorizedError : std::runtime_error {
    explicit NotMajorizedError(const std::string& what) : std::runtime_error(what) {}
};

// Carries the violated inequality lhs <= rhs (d*max vs. the total) as
// decimal/rational strings so diagnostics stay exact in rational mode.
struct InfeasibleError : std::runtime_error {
    std::string lhs;
    std::string rhs;
    InfeasibleError(const std::string& what, std::string lhs_value, std::string rhs_value)
        : std::runtime_error(what), lhs(std::move(lhs_value)), rhs(std::move(rhs_value)) {}
};

struct NotInHullError : std::runtime_error {
    explicit NotInHullError(const std::string& what) : std::runtime_error(what) {}
};

struct EigenConvergenceError : std::runtime_error {
    explicit EigenConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hulldec
