#pragma once

#include <string>

#include "thermoprior/laurent_series.hpp"
#include "thermoprior/rational.hpp"

namespace thermoprior {

/// Exact constant of the form r * sqrt(s) * pi^p. Canonical: s is a
/// squarefree positive integer (square factors and the sqrt of a
/// denominator are folded into r).
class ConstFactor {
public:
    ConstFactor() : r_(1), s_(1), pi_(0) {}
    explicit ConstFactor(const Rational& r) : r_(r), s_(1), pi_(0) {}
    /// Value r * sqrt(sqrt_arg) * pi^pi_power; sqrt_arg must be > 0.
    ConstFactor(const Rational& r, const Rational& sqrt_arg, int pi_power);
    /// sqrt(x) for rational x > 0, in canonical form.
    static ConstFactor sqrt_of(const Rational& x);

    const Rational& rational_part() const { return r_; }
    const mpz_class& sqrt_part() const { return s_; }
    int pi_power() const { return pi_; }

    bool is_rational() const { return s_ == 1 && pi_ == 0; }
    /// The exact value when is_rational().
    Rational as_rational() const;
    /// Exact square of the value with the pi part kept as a power.
    ConstFactor squared() const;

    ConstFactor operator*(const ConstFactor& o) const;
    ConstFactor operator*(const Rational& c) const;
    friend bool operator==(const ConstFactor& a, const ConstFactor& b) {
        return a.r_ == b.r_ && a.s_ == b.s_ && a.pi_ == b.pi_;
    }

    double to_double() const;
    /// High-precision evaluation (default 256 bits, ~77 decimal digits).
    mpf_class to_mpf(mp_bitcnt_t prec = 256) const;
    /// e.g. "1/2", "2/35 sqrt(14)", "1/pi".
    std::string str() const;

private:
    Rational r_;
    mpz_class s_;
    int pi_;
};

/// Exact constant prefactor times a unit-normalized Laurent series
/// (leading coefficient exactly 1).
struct ScaledSeries {
    ConstFactor factor;
    LaurentSeries unit;

    /// Factors the leading coefficient of s (times an optional extra
    /// constant) out into the prefactor. s must be nonzero.
    static ScaledSeries of(const LaurentSeries& s, const ConstFactor& extra = ConstFactor());
};

/// Equal prefactors in canonical form and termwise-equal units up to the
/// smaller order.
bool matches(const ScaledSeries& a, const ScaledSeries& b);

/// sqrt of a series with even valuation and positive leading coefficient.
/// The prefactor is sqrt(leading) in canonical form; the unit squares back
/// to a / leading-term up to the propagated order.
ScaledSeries sqrt_even(const LaurentSeries& a);

SeriesEval eval_truncated(const ScaledSeries& s, double beta);

std::string to_string(const ScaledSeries& s);

}  // namespace thermoprior
