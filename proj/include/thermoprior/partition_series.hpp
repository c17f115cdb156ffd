#pragma once

#include "thermoprior/laurent_series.hpp"
#include "thermoprior/rational.hpp"
#include "thermoprior/scaled_series.hpp"

namespace thermoprior {

/// Partition function in log-derivative-friendly form:
///   Z(beta) = constant * beta^exponent * unit(beta)
/// with unit(0) = 1 exactly. The constant never survives a log-derivative,
/// so Fisher-prior output cannot depend on it.
struct PartitionSeries {
    ConstFactor constant;
    Rational exponent;
    LaurentSeries unit;  // valuation 0, leading coefficient 1
};

/// Exact series of d^2/dbeta^2 log Z = -exponent/beta^2 + (unit'/unit)'.
LaurentSeries log_z_second_derivative(const PartitionSeries& z);

}  // namespace thermoprior
