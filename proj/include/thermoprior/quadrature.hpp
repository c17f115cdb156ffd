#pragma once

#include <functional>
#include <optional>

namespace thermoprior {

enum class EndpointSingularity { None, InverseSqrtLeft, InverseSqrtRight };

/// Declared envelope |f(x)| <= scale * exp(-rate * x) for x >= onset.
/// Required for semi-infinite intervals; used to place the truncation point.
struct ExponentialTail {
    double rate;
    double scale;
    double onset = 0.0;
};

/// An integrand with its interval and endpoint behaviour declared up front.
struct Quadrant {
    std::function<double(double)> integrand;
    double lower = 0.0;
    double upper = 0.0;                  // ignored when semi_infinite
    bool semi_infinite = false;          // [lower, inf)
    EndpointSingularity singularity = EndpointSingularity::None;
    std::optional<ExponentialTail> tail;
};

struct QuadResult {
    double value;
    double error_estimate;
    bool achieved;  // whether the requested tolerance was met
};

/// Adaptive Gauss-Kronrod (G7,K15) integration to absolute tolerance `tol`.
/// Inverse-square-root endpoints are removed by the substitution u = t^2 at
/// the singular end; semi-infinite integrals are truncated where the declared
/// exponential bound drops below tol/10. Throws NumericError (carrying the
/// best estimate) when the subdivision budget is exhausted.
QuadResult quad(const Quadrant& q, double tol);

}  // namespace thermoprior
