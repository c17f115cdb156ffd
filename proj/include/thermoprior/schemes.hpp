#pragma once

#include <optional>
#include <string>

#include "thermoprior/models.hpp"
#include "thermoprior/partition_series.hpp"

namespace thermoprior {

/// High-temperature expansion of a prior omega(beta).
struct PriorExpansion {
    std::string model_id;
    Scheme scheme;
    ScaledSeries expansion;
    int order;
};

enum class ClassifyMethod { Series, NumericSlope };

struct ClassificationResult {
    Verdict verdict;
    int pole_order = 0;                    // for Verdict::Other
    std::optional<ConstFactor> leading;    // exact, series method only
    double leading_value = 0.0;            // numeric estimate of the leading coefficient
    ClassifyMethod method = ClassifyMethod::Series;
    double slope = 0.0;                    // d log w / d log beta probe, numeric method
};

struct PriorMoments {
    bool proper;
    std::string divergence;                // where the integral fails, for improper priors
    std::optional<double> normalization;
    std::optional<double> mean;
    std::optional<double> second_moment;
};

/// Fisher prior series: sqrt(d^2/dbeta^2 log Z), computed exactly from the
/// partition series. The proportionality is resolved as equality (no extra
/// constant). Requires order >= 6.
ScaledSeries lavenda_series(const PartitionSeries& z, int order);

/// Exact series of the closed-form Bures volume elements (the three
/// infinite-dimensional quantum models).
ScaledSeries quantum_prior_series(const ThermalModel& m, int order);

/// Expansion of the model's prior under the given scheme.
PriorExpansion prior_expansion(const ThermalModel& m, Scheme scheme, int order);

/// Verdict by valuation: -1 pole => Jeffreys, constant => Bayes-Laplace.
ClassificationResult classify_series(const PriorExpansion& p);

/// Independent check: log-log slope of the numeric prior between
/// beta = 1e-3 and 1e-4. |s+1| < 0.05 => Jeffreys, |s| < 0.05 => Bayes-Laplace.
ClassificationResult classify_numeric(const ThermalModel& m, Scheme scheme);

/// Improperness decided by the series valuation at 0 and the declared decay
/// at infinity; proper priors get normalization/mean/second moment by
/// quadrature to 1e-8 (1e-11 for the normalization).
PriorMoments prior_moments(const ThermalModel& m, Scheme scheme);

}  // namespace thermoprior
