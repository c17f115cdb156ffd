#pragma once

#include <string>
#include <vector>

#include "thermoprior/rational.hpp"

namespace thermoprior {

/// Truncated Laurent series in beta over exact rationals.
///
/// A series knows its coefficients exactly for every exponent in
/// [valuation, order); everything at or above `order` is O(beta^order),
/// unknown. Storage is sparse at the edges: leading and trailing zero
/// coefficients are stripped, exponents between the last stored entry and
/// `order` are implicitly zero. The zero series is represented with no
/// stored coefficients and valuation == order.
///
/// Order propagation through arithmetic is conservative and exact:
///   add:  min(order_a, order_b)
///   mul:  min(order_a + val_b, order_b + val_a)
///   div:  a * inverse(b), where inverse(b) has order order_b - 2*val_b
/// so a claimed coefficient never depends on unknown terms of the inputs.
class LaurentSeries {
public:
    /// Order used for values that are exact to all orders (monomials).
    static constexpr int kExactOrder = 1 << 20;

    LaurentSeries() : valuation_(0), order_(0) {}

    static LaurentSeries zero(int order) { return LaurentSeries(order, order, {}); }
    static LaurentSeries constant(const Rational& c, int order = kExactOrder);
    static LaurentSeries monomial(const Rational& c, int exponent, int order = kExactOrder);
    /// coeffs[i] is the coefficient of beta^(valuation + i) and must span
    /// [valuation, order) exactly; the result is normalized.
    static LaurentSeries from_coeffs(int valuation, std::vector<Rational> coeffs, int order);

    int valuation() const { return valuation_; }
    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of beta^exponent; zero outside the stored block.
    /// Only meaningful for exponent < order().
    Rational coeff(int exponent) const;
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.front(); }
    /// Exponents carrying a nonzero coefficient, ascending.
    std::vector<int> support() const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

    /// c * this. Scaling by zero gives the zero series with the same order.
    LaurentSeries scaled(const Rational& c) const;
    /// beta^k * this (exact shift of exponents and order).
    LaurentSeries shifted(int k) const;
    /// Forgets coefficients at exponents >= new_order.
    LaurentSeries truncated(int new_order) const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

private:
    LaurentSeries(int valuation, int order, std::vector<Rational> coeffs)
        : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {}
    void normalize();

    int valuation_;
    int order_;
    std::vector<Rational> coeffs_;  // nonempty implies front() != 0 and back() != 0

    friend LaurentSeries make_series(int, int, std::vector<Rational>);
};

/// Termwise agreement on the shared known range [min val, min order).
bool matches(const LaurentSeries& a, const LaurentSeries& b);

/// Termwise d/dbeta; order decreases by one.
LaurentSeries differentiate(const LaurentSeries& a);

/// beta -> c*beta substitution: coefficient of beta^k picks up c^k. c != 0.
LaurentSeries scale_argument(const LaurentSeries& a, const Rational& c);

/// Multiplicative inverse of a nonzero series.
LaurentSeries inverse(const LaurentSeries& b);

/// u^q for rational q via exp(q log u); u must have valuation 0 and
/// leading coefficient exactly 1.
LaurentSeries pow_rational(const LaurentSeries& u, const Rational& q);

/// u'/u for nonzero u. Stays inside Laurent series (log u itself need not).
LaurentSeries log_derivative(const LaurentSeries& u);

enum class Elementary { Exp, Sinh, Cosh, Tanh, Coth, Sech, Csch, Sin, Cos };

/// Exact truncated series of the named function; coth and csch have
/// valuation -1. The result's order is exactly `order`.
LaurentSeries elementary(Elementary kind, int order);

struct SeriesEval {
    double value;
    double truncation;  // magnitude of the last retained term, a crude cutoff indicator
};

/// Partial sum at beta > 0 (beta = 0 allowed only for valuation >= 0).
SeriesEval eval_truncated(const LaurentSeries& a, double beta);

/// Human-readable form, e.g. "1/2 beta^-1 - 7/192 beta^1 + 667/184320 beta^3 + O(beta^5)".
std::string to_string(const LaurentSeries& a);

}  // namespace thermoprior
