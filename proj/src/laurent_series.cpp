#include "thermoprior/laurent_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "thermoprior/errors.hpp"

namespace thermoprior {

namespace {

int clamp_order(long o) {
    if (o >= LaurentSeries::kExactOrder) return LaurentSeries::kExactOrder;
    if (o <= -LaurentSeries::kExactOrder) return -LaurentSeries::kExactOrder;
    return static_cast<int>(o);
}

}  // namespace

LaurentSeries make_series(int valuation, int order, std::vector<Rational> coeffs);

void LaurentSeries::normalize() {
    order_ = clamp_order(order_);
    // Drop anything at or above the order.
    if (valuation_ + static_cast<long>(coeffs_.size()) > order_) {
        long keep = order_ - static_cast<long>(valuation_);
        coeffs_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
    }
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        valuation_ = order_;
        return;
    }
    size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1].is_zero()) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        std::vector<Rational> trimmed(coeffs_.begin() + lead, coeffs_.begin() + tail);
        coeffs_ = std::move(trimmed);
        valuation_ += static_cast<int>(lead);
    }
}

LaurentSeries make_series(int valuation, int order, std::vector<Rational> coeffs) {
    LaurentSeries s(valuation, order, std::move(coeffs));
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::constant(const Rational& c, int order) {
    return make_series(0, order, {c});
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int order) {
    return make_series(exponent, order, {c});
}

LaurentSeries LaurentSeries::from_coeffs(int valuation, std::vector<Rational> coeffs, int order) {
    if (order <= valuation)
        throw UsageError("from_coeffs: order must exceed valuation");
    if (static_cast<long>(coeffs.size()) != static_cast<long>(order) - valuation)
        throw UsageError("from_coeffs: coefficient count must equal order - valuation");
    return make_series(valuation, order, std::move(coeffs));
}

Rational LaurentSeries::coeff(int exponent) const {
    long idx = static_cast<long>(exponent) - valuation_;
    if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(idx)];
}

std::vector<int> LaurentSeries::support() const {
    std::vector<int> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.push_back(valuation_ + static_cast<int>(i));
    return out;
}

LaurentSeries LaurentSeries::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return LaurentSeries(valuation_, order_, std::move(c));
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int order = std::min(a.order_, b.order_);
    if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(order);
    int lo = std::min(a.is_zero() ? order : a.valuation_, b.is_zero() ? order : b.valuation_);
    long hi_stored = std::max(a.valuation_ + static_cast<long>(a.coeffs_.size()),
                              b.valuation_ + static_cast<long>(b.coeffs_.size()));
    long hi = std::min(static_cast<long>(order), hi_stored);
    if (hi <= lo) return LaurentSeries::zero(order);
    std::vector<Rational> c(static_cast<size_t>(hi - lo));
    for (long e = lo; e < hi; ++e)
        c[static_cast<size_t>(e - lo)] = a.coeff(static_cast<int>(e)) + b.coeff(static_cast<int>(e));
    return make_series(lo, order, std::move(c));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    int order = clamp_order(std::min(static_cast<long>(a.order_) + b.valuation_,
                                     static_cast<long>(b.order_) + a.valuation_));
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(order);
    long lo = static_cast<long>(a.valuation_) + b.valuation_;
    long hi = std::min(static_cast<long>(order),
                       lo + static_cast<long>(a.coeffs_.size()) + static_cast<long>(b.coeffs_.size()) - 1);
    if (hi <= lo) return LaurentSeries::zero(order);
    std::vector<Rational> c(static_cast<size_t>(hi - lo));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            long e = static_cast<long>(a.valuation_) + static_cast<long>(i) +
                     b.valuation_ + static_cast<long>(j);
            if (e >= hi) break;
            c[static_cast<size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return make_series(static_cast<int>(lo), order, std::move(c));
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * inverse(b); }

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(order_);
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return LaurentSeries(valuation_, order_, std::move(out));
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries s = *this;
    // Exactness is preserved under monomial shifts.
    s.order_ = order_ >= kExactOrder ? kExactOrder : clamp_order(static_cast<long>(order_) + k);
    s.valuation_ = is_zero() ? s.order_ : clamp_order(static_cast<long>(valuation_) + k);
    return s;
}

LaurentSeries LaurentSeries::truncated(int new_order) const {
    if (new_order >= order_) return *this;
    return make_series(valuation_, new_order, coeffs_);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.valuation_ == b.valuation_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

bool matches(const LaurentSeries& a, const LaurentSeries& b) {
    int order = std::min(a.order(), b.order());
    int lo = std::min(a.is_zero() ? order : a.valuation(), b.is_zero() ? order : b.valuation());
    for (int e = lo; e < order; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

LaurentSeries differentiate(const LaurentSeries& a) {
    int order = clamp_order(static_cast<long>(a.order()) - 1);
    if (a.is_zero()) return LaurentSeries::zero(order);
    std::vector<Rational> c;
    int val = a.valuation();
    std::vector<int> sup = a.support();
    int lo = val - 1;
    int hi = sup.back();  // derivative of beta^e lands at e-1
    c.resize(static_cast<size_t>(hi - lo));
    for (int e : sup) c[static_cast<size_t>(e - 1 - lo)] = a.coeff(e) * Rational(e);
    return make_series(lo, order, std::move(c));
}

LaurentSeries scale_argument(const LaurentSeries& a, const Rational& c) {
    if (c.is_zero()) throw UsageError("scale_argument: zero scale");
    if (a.is_zero()) return a;
    const int last = a.support().back();
    std::vector<Rational> out(static_cast<size_t>(last - a.valuation() + 1));
    for (int e = a.valuation(); e <= last; ++e)
        out[static_cast<size_t>(e - a.valuation())] = a.coeff(e) * c.pow(e);
    return make_series(a.valuation(), a.order(), std::move(out));
}

namespace {

// log(1 + g) for g with valuation >= 1: Mercator sum of (-1)^(n+1) g^n / n.
LaurentSeries log_one_plus(const LaurentSeries& g) {
    if (g.is_zero()) return LaurentSeries::zero(g.order());
    LaurentSeries acc = LaurentSeries::zero(g.order());
    LaurentSeries power = g;
    for (int n = 1; power.valuation() < acc.order() && !power.is_zero(); ++n) {
        acc = acc + power.scaled(Rational(n % 2 == 1 ? 1 : -1, n));
        power = power * g;
    }
    return acc;
}

// exp(h) for h with valuation >= 1: terminating Taylor sum.
LaurentSeries exp_series(const LaurentSeries& h) {
    if (!h.is_zero() && h.valuation() < 1)
        throw DomainError("exp_series: argument must vanish at 0");
    LaurentSeries acc = LaurentSeries::constant(Rational(1), h.order());
    LaurentSeries power = LaurentSeries::constant(Rational(1), h.order());
    mpz_class fact = 1;
    for (int n = 1; !h.is_zero(); ++n) {
        power = power * h;
        if (power.is_zero() || power.valuation() >= acc.order()) break;
        fact *= n;
        acc = acc + power.scaled(Rational(mpq_class(1, fact)));
    }
    return acc;
}

}  // namespace

LaurentSeries inverse(const LaurentSeries& b) {
    if (b.is_zero()) throw DomainError("inverse: zero series");
    const Rational lead = b.leading();
    const int val = b.valuation();
    // b = lead * beta^val * (1 + g); 1/b = (1/lead) beta^-val * sum (-g)^n.
    LaurentSeries g = (b.scaled(lead.reciprocal()).shifted(-val) -
                       LaurentSeries::constant(Rational(1), LaurentSeries::kExactOrder));
    int order = b.order() - 2 * val;
    LaurentSeries acc = LaurentSeries::constant(Rational(1), b.order() - val);
    LaurentSeries power = LaurentSeries::constant(Rational(1), b.order() - val);
    LaurentSeries neg_g = -g;
    while (!neg_g.is_zero()) {
        power = power * neg_g;
        if (power.is_zero() || power.valuation() >= acc.order()) break;
        acc = acc + power;
    }
    return acc.scaled(lead.reciprocal()).shifted(-val).truncated(order);
}

LaurentSeries pow_rational(const LaurentSeries& u, const Rational& q) {
    if (u.valuation() != 0 || !u.leading().is_one())
        throw DomainError("pow_rational: series must start at 1 (factor first)");
    if (q.is_zero()) return LaurentSeries::constant(Rational(1), u.order());
    LaurentSeries g = u - LaurentSeries::constant(Rational(1), LaurentSeries::kExactOrder);
    return exp_series(log_one_plus(g).scaled(q));
}

LaurentSeries log_derivative(const LaurentSeries& u) {
    if (u.is_zero()) throw DomainError("log_derivative: zero series");
    return differentiate(u) / u;
}

LaurentSeries elementary(Elementary kind, int order) {
    if (order < 1) throw UsageError("elementary: order must be >= 1");
    auto taylor = [](int ord, int start, int step, bool alternating) {
        // sum of (+-1)^k x^(start + k*step) / (start + k*step)!
        std::vector<Rational> c;
        if (ord <= start) return LaurentSeries::zero(ord);
        c.resize(static_cast<size_t>(ord - start));
        int sign = 1;
        for (int e = start; e < ord; e += step) {
            c[static_cast<size_t>(e - start)] =
                Rational(mpq_class(sign, factorial(static_cast<unsigned long>(e))));
            if (alternating) sign = -sign;
        }
        return make_series(start, ord, std::move(c));
    };
    switch (kind) {
        case Elementary::Exp: return taylor(order, 0, 1, false);
        case Elementary::Sinh: return taylor(order, 1, 2, false);
        case Elementary::Cosh: return taylor(order, 0, 2, false);
        case Elementary::Sin: return taylor(order, 1, 2, true);
        case Elementary::Cos: return taylor(order, 0, 2, true);
        case Elementary::Tanh:
            return (taylor(order + 2, 1, 2, false) / taylor(order + 2, 0, 2, false)).truncated(order);
        case Elementary::Sech:
            return inverse(taylor(order, 0, 2, false)).truncated(order);
        case Elementary::Coth:
            return (taylor(order + 2, 0, 2, false) / taylor(order + 2, 1, 2, false)).truncated(order);
        case Elementary::Csch:
            return inverse(taylor(order + 2, 1, 2, false)).truncated(order);
    }
    throw UsageError("elementary: unknown kind");
}

SeriesEval eval_truncated(const LaurentSeries& a, double beta) {
    if (beta <= 0.0 && a.valuation() < 0 && !a.is_zero())
        throw DomainError("eval_truncated: beta must be positive for a pole");
    double value = 0.0;
    double last = 0.0;
    for (int e : a.support()) {
        double term = a.coeff(e).to_double() * std::pow(beta, e);
        value += term;
        last = term;
    }
    return {value, std::abs(last)};
}

std::string to_string(const LaurentSeries& a) {
    std::ostringstream os;
    if (a.is_zero()) {
        os << "0 + O(beta^" << a.order() << ")";
        return os.str();
    }
    bool first = true;
    for (int e : a.support()) {
        Rational c = a.coeff(e);
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        os << c.str();
        if (e != 0) os << " beta^" << e;
    }
    if (a.order() < LaurentSeries::kExactOrder) os << " + O(beta^" << a.order() << ")";
    return os.str();
}

}  // namespace thermoprior
