#pragma once

#include <stdexcept>
#include <string>

namespace thermoprior {

/// Mathematically invalid input (division by the zero series, odd-valuation
/// square root, argument outside a special function's supported range, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// API misuse: inconsistent argument shapes, unknown ids, bad options.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numeric routine failed to meet its tolerance. Carries the best estimate
/// it reached so callers can still inspect it.
struct NumericError : std::runtime_error {
    NumericError(const std::string& msg, double best, double err)
        : std::runtime_error(msg), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

}  // namespace thermoprior
