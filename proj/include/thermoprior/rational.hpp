#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace thermoprior {

/// Arbitrary-precision rational scalar. Always canonical: lowest terms,
/// denominator > 0. All arithmetic is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(int n) : q_(static_cast<signed long>(n)) {}   // NOLINT
    Rational(long num, long den);
    explicit Rational(mpq_class q);
    explicit Rational(const mpz_class& n) : q_(n) {}

    /// Parses "num", "num/den" or a decimal fraction is not accepted.
    static Rational from_string(const std::string& s);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws DomainError on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// x^e for integer e; e < 0 requires x != 0.
    Rational pow(long e) const;
    Rational abs() const;
    Rational reciprocal() const;

    double to_double() const { return q_.get_d(); }
    /// "num" when the denominator is 1, else "num/den".
    std::string str() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact integer (n >= 0).
mpz_class factorial(unsigned long n);

}  // namespace thermoprior
