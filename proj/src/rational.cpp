#include "thermoprior/rational.hpp"

#include <ostream>

#include "thermoprior/errors.hpp"

namespace thermoprior {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw DomainError("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw UsageError("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw DomainError("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DomainError("Rational: 0 to a negative power");
        return Rational(0);
    }
    const Rational base = e > 0 ? *this : reciprocal();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den().get_mpz_t(), n);
    Rational r;
    r.q_ = mpq_class(num) / mpq_class(den);
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("Rational: reciprocal of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace thermoprior
