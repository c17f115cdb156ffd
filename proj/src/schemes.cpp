#include "thermoprior/schemes.hpp"

#include <cmath>

#include "thermoprior/errors.hpp"
#include "thermoprior/special_functions.hpp"

namespace thermoprior {

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
}

ScaledSeries lavenda_series(const PartitionSeries& z, int order) {
    if (order < 6) throw UsageError("lavenda_series: order must be >= 6");
    LaurentSeries var = log_z_second_derivative(z);
    // sqrt_even rejects odd valuations and negative leading coefficients;
    // no registry model reaches either branch.
    return sqrt_even(var);
}

ScaledSeries quantum_prior_series(const ThermalModel& m, int order) {
    const int K = order + 2;
    if (m.id == "squeezed-thermal-quantum") {
        LaurentSeries w = scale_argument(elementary(Elementary::Cosh, K), R(1, 4)) *
                          scale_argument(elementary(Elementary::Coth, K), R(1, 4)) *
                          scale_argument(elementary(Elementary::Sech, K), R(1, 2));
        return ScaledSeries::of(w.scaled(R(1, 8)).truncated(order));
    }
    if (m.id == "displaced-thermal-quantum") {
        LaurentSeries w = scale_argument(elementary(Elementary::Sech, K), R(1, 2));
        return ScaledSeries::of(w.truncated(order), ConstFactor(R(1), R(1), -1));
    }
    if (m.id == "displaced-squeezed-quantum") {
        LaurentSeries c4 = scale_argument(elementary(Elementary::Cosh, K), R(1, 4));
        LaurentSeries s2 = scale_argument(elementary(Elementary::Sech, K), R(1, 2));
        LaurentSeries w = c4 * c4 * pow_rational(s2, R(3, 2));
        return ScaledSeries::of(w.scaled(R(1, 2)).truncated(order));
    }
    throw UsageError("quantum_prior_series: model '" + m.id + "' has no quantum volume element");
}

PriorExpansion prior_expansion(const ThermalModel& m, Scheme scheme, int order) {
    if (scheme == Scheme::Quantum) return {m.id, scheme, quantum_prior_series(m, order), order};
    ScaledSeries w = lavenda_series(z_partition_series(m, order + 2), order + 2);
    w.unit = w.unit.truncated(order);
    return {m.id, scheme, std::move(w), order};
}

ClassificationResult classify_series(const PriorExpansion& p) {
    if (p.expansion.unit.is_zero()) throw UsageError("classify_series: empty expansion");
    ClassificationResult r;
    r.method = ClassifyMethod::Series;
    const int val = p.expansion.unit.valuation();
    if (val == -1)
        r.verdict = Verdict::Jeffreys;
    else if (val == 0)
        r.verdict = Verdict::BayesLaplace;
    else {
        r.verdict = Verdict::Other;
        r.pole_order = -val;
    }
    r.leading = p.expansion.factor;
    r.leading_value = p.expansion.factor.to_double();
    return r;
}

ClassificationResult classify_numeric(const ThermalModel& m, Scheme scheme) {
    const double b1 = 1e-3, b2 = 1e-4;
    const double w1 = omega_eval(m, b1, scheme);
    const double w2 = omega_eval(m, b2, scheme);
    if (!(w1 > 0.0) || !(w2 > 0.0) || !std::isfinite(w1) || !std::isfinite(w2))
        throw NumericError("classify_numeric: prior not evaluable near 0", w1, 0.0);
    ClassificationResult r;
    r.method = ClassifyMethod::NumericSlope;
    r.slope = (std::log(w1) - std::log(w2)) / (std::log(b1) - std::log(b2));
    if (std::abs(r.slope + 1.0) < 0.05) {
        r.verdict = Verdict::Jeffreys;
        r.leading_value = w1 * b1;
    } else if (std::abs(r.slope) < 0.05) {
        r.verdict = Verdict::BayesLaplace;
        r.leading_value = w2;
    } else {
        r.verdict = Verdict::Other;
        r.pole_order = static_cast<int>(std::lround(-r.slope));
        r.leading_value = w1 * std::pow(b1, -r.slope);
    }
    return r;
}

namespace {

// Envelope for beta^k * w(beta) given |w| <= scale e^{-rate beta}:
// beta^k e^{-rate beta} <= peak * e^{-rate beta / 2} with the peak at 2k/rate.
ExponentialTail moment_tail(const ExponentialTail& t, int k) {
    if (k == 0) return t;
    const double peak = std::pow(2.0 * k / (std::exp(1.0) * t.rate), k);
    return {0.5 * t.rate, t.scale * peak, t.onset};
}

double moment_integral(const ThermalModel& m, Scheme scheme, const ExponentialTail& tail, int k,
                       double tol) {
    Quadrant q;
    q.integrand = [&m, scheme, k](double b) {
        return (k == 0 ? 1.0 : std::pow(b, k)) * omega_eval(m, b, scheme);
    };
    q.lower = 0.0;
    q.semi_infinite = true;
    q.tail = moment_tail(tail, k);
    return quad(q, tol).value;
}

}  // namespace

PriorMoments prior_moments(const ThermalModel& m, Scheme scheme) {
    PriorExpansion p = prior_expansion(m, scheme, 8);
    PriorMoments out;
    if (p.expansion.unit.valuation() < 0) {
        out.proper = false;
        out.divergence = "beta -> 0 (1/beta pole)";
        return out;
    }
    const bool integrable =
        scheme == Scheme::Quantum ? m.quantum_tail_integrable : m.lavenda_tail_integrable;
    if (!integrable) {
        out.proper = false;
        out.divergence = "beta -> infinity (tail not integrable)";
        return out;
    }
    const ExponentialTail& tail = scheme == Scheme::Quantum ? m.quantum_tail : m.lavenda_tail;
    out.proper = true;
    const double norm = moment_integral(m, scheme, tail, 0, 1e-11);
    out.normalization = norm;
    out.mean = moment_integral(m, scheme, tail, 1, 1e-9) / norm;
    out.second_moment = moment_integral(m, scheme, tail, 2, 1e-9) / norm;
    return out;
}

}  // namespace thermoprior
