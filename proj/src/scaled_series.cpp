#include "thermoprior/scaled_series.hpp"

#include <cmath>
#include <sstream>

#include "thermoprior/errors.hpp"

namespace thermoprior {

namespace {

// pi to 40 digits; enough for the 30-significant-digit contract.
const char* kPiDigits = "3.141592653589793238462643383279502884197";

// Splits n > 0 as n = square * rest with rest squarefree.
void extract_square(const mpz_class& n, mpz_class& root, mpz_class& rest) {
    root = 1;
    rest = n;
    for (mpz_class d = 2; d * d <= rest; ++d) {
        mpz_class dd = d * d;
        while (mpz_divisible_p(rest.get_mpz_t(), dd.get_mpz_t())) {
            rest /= dd;
            root *= d;
        }
    }
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        root *= r;
        rest = 1;
    }
}

}  // namespace

ConstFactor::ConstFactor(const Rational& r, const Rational& sqrt_arg, int pi_power)
    : r_(r), s_(1), pi_(pi_power) {
    if (sqrt_arg.sign() <= 0) throw DomainError("ConstFactor: sqrt argument must be positive");
    if (r_.is_zero()) {
        pi_ = 0;
        return;
    }
    // sqrt(p/q) = sqrt(p*q)/q, then pull square factors out of p*q.
    mpz_class pq = sqrt_arg.num() * sqrt_arg.den();
    mpz_class root, rest;
    extract_square(pq, root, rest);
    r_ *= Rational(mpq_class(root, sqrt_arg.den()));
    s_ = rest;
}

ConstFactor ConstFactor::sqrt_of(const Rational& x) {
    if (x.sign() <= 0) throw DomainError("ConstFactor::sqrt_of: argument must be positive");
    return ConstFactor(Rational(1), x, 0);
}

Rational ConstFactor::as_rational() const {
    if (!is_rational()) throw DomainError("ConstFactor: value is irrational");
    return r_;
}

ConstFactor ConstFactor::squared() const {
    ConstFactor out;
    out.r_ = r_ * r_ * Rational(s_);
    out.s_ = 1;
    out.pi_ = 2 * pi_;
    return out;
}

ConstFactor ConstFactor::operator*(const ConstFactor& o) const {
    // s and o.s_ are squarefree; their gcd is the full square part of the product.
    mpz_class g = gcd(s_, o.s_);
    ConstFactor out;
    out.r_ = r_ * o.r_ * Rational(g);
    out.s_ = (s_ / g) * (o.s_ / g);
    out.pi_ = pi_ + o.pi_;
    if (out.r_.is_zero()) {
        out.s_ = 1;
        out.pi_ = 0;
    }
    return out;
}

ConstFactor ConstFactor::operator*(const Rational& c) const {
    ConstFactor out = *this;
    out.r_ *= c;
    if (out.r_.is_zero()) {
        out.s_ = 1;
        out.pi_ = 0;
    }
    return out;
}

double ConstFactor::to_double() const {
    return to_mpf().get_d();
}

mpf_class ConstFactor::to_mpf(mp_bitcnt_t prec) const {
    mpf_class value(0, prec);
    value = mpf_class(r_.num(), prec);
    value /= mpf_class(r_.den(), prec);
    if (s_ != 1) {
        mpf_class s(s_, prec);
        mpf_class root(0, prec);
        mpf_sqrt(root.get_mpf_t(), s.get_mpf_t());
        value *= root;
    }
    if (pi_ != 0) {
        mpf_class pi(kPiDigits, prec);
        for (int i = 0; i < std::abs(pi_); ++i) {
            if (pi_ > 0)
                value *= pi;
            else
                value /= pi;
        }
    }
    return value;
}

std::string ConstFactor::str() const {
    if (is_rational()) return r_.str();
    std::string out = r_.str();
    if (s_ != 1) out += " sqrt(" + s_.get_str() + ")";
    if (pi_ == -1)
        out += "/pi";
    else if (pi_ == 1)
        out += " pi";
    else if (pi_ != 0)
        out += " pi^" + std::to_string(pi_);
    return out;
}

ScaledSeries ScaledSeries::of(const LaurentSeries& s, const ConstFactor& extra) {
    if (s.is_zero()) throw DomainError("ScaledSeries: zero series has no unit form");
    Rational lead = s.leading();
    return {extra * lead, s.scaled(lead.reciprocal())};
}

bool matches(const ScaledSeries& a, const ScaledSeries& b) {
    return a.factor == b.factor && matches(a.unit, b.unit);
}

ScaledSeries sqrt_even(const LaurentSeries& a) {
    if (a.is_zero()) throw DomainError("sqrt_even: zero series");
    if (a.valuation() % 2 != 0)
        throw DomainError("sqrt_even: odd valuation (half-integer powers unsupported)");
    if (a.leading().sign() < 0) throw DomainError("sqrt_even: negative leading coefficient");
    const Rational lead = a.leading();
    const int val = a.valuation();
    LaurentSeries u = a.scaled(lead.reciprocal()).shifted(-val);
    LaurentSeries root = pow_rational(u, Rational(1, 2)).shifted(val / 2);
    return {ConstFactor::sqrt_of(lead), root};
}

SeriesEval eval_truncated(const ScaledSeries& s, double beta) {
    SeriesEval e = eval_truncated(s.unit, beta);
    double f = s.factor.to_double();
    return {e.value * f, e.truncation * std::abs(f)};
}

std::string to_string(const ScaledSeries& s) {
    if (s.factor == ConstFactor()) return to_string(s.unit);
    return "(" + s.factor.str() + ") * (" + to_string(s.unit) + ")";
}

}  // namespace thermoprior
