#include "doctest.h"

#include <random>
#include <vector>

#include "thermoprior/errors.hpp"
#include "thermoprior/laurent_series.hpp"

using namespace thermoprior;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

LaurentSeries one(int order = LaurentSeries::kExactOrder) {
    return LaurentSeries::constant(R(1), order);
}

}  // namespace

TEST_CASE("from_coeffs normalizes") {
    LaurentSeries c = LaurentSeries::from_coeffs(0, {R(1)}, 1);
    CHECK(c.valuation() == 0);
    CHECK(c.coeff(0) == R(1));

    // 1/(2 beta) - 7 beta/192 + O(beta^2), entered with a leading block.
    LaurentSeries s = LaurentSeries::from_coeffs(-1, {R(1, 2), R(0), R(-7, 192)}, 2);
    CHECK(s.valuation() == -1);
    CHECK(s.order() == 2);
    CHECK(s.coeff(-1) == R(1, 2));
    CHECK(s.coeff(0) == R(0));
    CHECK(s.coeff(1) == R(-7, 192));

    LaurentSeries z = LaurentSeries::from_coeffs(0, {R(0), R(0)}, 2);
    CHECK(z.is_zero());
    CHECK(z.order() == 2);

    // leading zeros adjust the valuation
    LaurentSeries t = LaurentSeries::from_coeffs(-2, {R(0), R(3), R(0)}, 1);
    CHECK(t.valuation() == -1);
    CHECK(t.leading() == R(3));

    CHECK_THROWS_AS(LaurentSeries::from_coeffs(0, {R(1)}, 3), UsageError);
    CHECK_THROWS_AS(LaurentSeries::from_coeffs(2, {}, 2), UsageError);
}

TEST_CASE("addition") {
    LaurentSeries a = LaurentSeries::from_coeffs(0, {R(1), R(1)}, 2);
    LaurentSeries b = LaurentSeries::from_coeffs(0, {R(1), R(-1)}, 2);
    LaurentSeries sum = a + b;
    CHECK(sum.coeff(0) == R(2));
    CHECK(sum.coeff(1) == R(0));
    CHECK(sum.valuation() == 0);

    // cosh + sinh = exp, termwise to order 12
    CHECK(matches(elementary(Elementary::Cosh, 12) + elementary(Elementary::Sinh, 12),
                  elementary(Elementary::Exp, 12)));

    LaurentSeries pole = LaurentSeries::monomial(R(1), -1, 8);
    CHECK((pole + (-pole)).is_zero());
    CHECK((pole + (-pole)).order() == 8);
}

TEST_CASE("multiplication") {
    // coth * sinh = cosh to order 10
    CHECK(matches(elementary(Elementary::Coth, 10) * elementary(Elementary::Sinh, 10),
                  elementary(Elementary::Cosh, 10)));

    // cosh(b/4) coth(b/4) sech(b/2) / 8 = 1/(2b) - 7b/192 + 667b^3/184320 + ...
    int K = 12;
    LaurentSeries w = scale_argument(elementary(Elementary::Cosh, K), R(1, 4)) *
                      scale_argument(elementary(Elementary::Coth, K), R(1, 4)) *
                      scale_argument(elementary(Elementary::Sech, K), R(1, 2));
    w = w.scaled(R(1, 8));
    CHECK(w.valuation() == -1);
    CHECK(w.coeff(-1) == R(1, 2));
    CHECK(w.coeff(0) == R(0));
    CHECK(w.coeff(1) == R(-7, 192));
    CHECK(w.coeff(2) == R(0));
    CHECK(w.coeff(3) == R(667, 184320));
    CHECK(w.coeff(5) == Rational::from_string("-45517/123863040"));

    // beta * (1/beta) = 1
    LaurentSeries x = LaurentSeries::monomial(R(1), 1);
    LaurentSeries xinv = LaurentSeries::monomial(R(1), -1);
    LaurentSeries prod = x * xinv;
    CHECK(prod.coeff(0) == R(1));
    CHECK(prod.support() == std::vector<int>{0});
}

TEST_CASE("division") {
    // cosh/sinh = coth = 1/x + x/3 - x^3/45 + 2x^5/945 + ...
    LaurentSeries coth = elementary(Elementary::Cosh, 12) / elementary(Elementary::Sinh, 12);
    CHECK(coth.coeff(-1) == R(1));
    CHECK(coth.coeff(1) == R(1, 3));
    CHECK(coth.coeff(3) == R(-1, 45));
    CHECK(coth.coeff(5) == R(2, 945));
    // multiply back: coth * sinh = cosh
    CHECK(matches(coth * elementary(Elementary::Sinh, 12), elementary(Elementary::Cosh, 12)));

    // 1/exp = exp(-x)
    CHECK(matches(one(12) / elementary(Elementary::Exp, 12),
                  scale_argument(elementary(Elementary::Exp, 12), R(-1))));

    // sinh x / x = 1 + x^2/6 + x^4/120 (Z of the half-integer-Bessel model)
    LaurentSeries s = elementary(Elementary::Sinh, 9) / LaurentSeries::monomial(R(1), 1);
    CHECK(s.coeff(0) == R(1));
    CHECK(s.coeff(2) == R(1, 6));
    CHECK(s.coeff(4) == R(1, 120));

    CHECK_THROWS_AS(one(4) / LaurentSeries::zero(4), DomainError);
}

TEST_CASE("differentiate") {
    LaurentSeries a = LaurentSeries::monomial(R(1, 8), 2, 10);
    LaurentSeries da = differentiate(a);
    CHECK(da.coeff(1) == R(1, 4));
    CHECK(da.order() == 9);

    LaurentSeries p = LaurentSeries::monomial(R(1), -1, 10);
    CHECK(differentiate(p).coeff(-2) == R(-1));

    // d/db (b^2/8 - b^4/384) = b/4 - b^3/96, the first log-derivative of Z for
    // the spin-half Bures model
    LaurentSeries logz = LaurentSeries::from_coeffs(2, {R(1, 8), R(0), R(-1, 384)}, 5);
    LaurentSeries d1 = differentiate(logz);
    CHECK(d1.coeff(1) == R(1, 4));
    CHECK(d1.coeff(3) == R(-1, 96));
    // second derivative starts 1/4 - b^2/32
    LaurentSeries d2 = differentiate(d1);
    CHECK(d2.coeff(0) == R(1, 4));
    CHECK(d2.coeff(2) == R(-1, 32));

    // derivative of a constant is the zero series, order drops by one
    CHECK(differentiate(one(7)).is_zero());
    CHECK(differentiate(one(7)).order() == 6);
}

TEST_CASE("scale_argument") {
    // sech(x) with c = 1/2: 1 - b^2/8 + 5b^4/384 + O(b^6)
    LaurentSeries s = scale_argument(elementary(Elementary::Sech, 6), R(1, 2));
    CHECK(s.coeff(0) == R(1));
    CHECK(s.coeff(2) == R(-1, 8));
    CHECK(s.coeff(4) == R(5, 384));

    LaurentSeries any = LaurentSeries::from_coeffs(-1, {R(2), R(3)}, 1);
    CHECK(scale_argument(any, R(1)) == any);

    // csch(b/4)/4 = 1/b - b/96 + 7b^3/92160 (note beta^3, not beta^2)
    LaurentSeries c = scale_argument(elementary(Elementary::Csch, 6), R(1, 4)).scaled(R(1, 4));
    CHECK(c.coeff(-1) == R(1));
    CHECK(c.coeff(1) == R(-1, 96));
    CHECK(c.coeff(2) == R(0));
    CHECK(c.coeff(3) == R(7, 92160));

    CHECK_THROWS_AS(scale_argument(any, R(0)), UsageError);
}

TEST_CASE("pow_rational") {
    // (1 - b^2/8 + 5b^4/384)^(3/2) = 1 - 3b^2/16 + 13b^4/512
    LaurentSeries base = LaurentSeries::from_coeffs(0, {R(1), R(0), R(-1, 8), R(0), R(5, 384)}, 5);
    LaurentSeries p = pow_rational(base, R(3, 2));
    CHECK(p.coeff(0) == R(1));
    CHECK(p.coeff(2) == R(-3, 16));
    CHECK(p.coeff(4) == R(13, 512));

    CHECK(pow_rational(base, R(0)) == one(5));

    // (1 + b)^(-1) is the alternating geometric series
    LaurentSeries geo = pow_rational(
        LaurentSeries::from_coeffs(0, {R(1), R(1), R(0), R(0), R(0), R(0)}, 6), R(-1));
    CHECK(geo.coeff(0) == R(1));
    CHECK(geo.coeff(1) == R(-1));
    CHECK(geo.coeff(2) == R(1));
    CHECK(geo.coeff(3) == R(-1));

    CHECK_THROWS_AS(pow_rational(LaurentSeries::monomial(R(1), 1, 6), R(1, 2)), DomainError);
    CHECK_THROWS_AS(pow_rational(one(6).scaled(R(2)), R(1, 2)), DomainError);
}

TEST_CASE("elementary generators") {
    // csch: 1/x - x/6 + 7x^3/360 - 31x^5/15120
    LaurentSeries csch = elementary(Elementary::Csch, 6);
    CHECK(csch.valuation() == -1);
    CHECK(csch.coeff(-1) == R(1));
    CHECK(csch.coeff(1) == R(-1, 6));
    CHECK(csch.coeff(3) == R(7, 360));
    CHECK(csch.coeff(5) == R(-31, 15120));
    CHECK(csch.order() == 6);
    CHECK(matches(csch * elementary(Elementary::Sinh, 8), one(6)));

    LaurentSeries cosh = elementary(Elementary::Cosh, 5);
    CHECK(cosh.coeff(0) == R(1));
    CHECK(cosh.coeff(2) == R(1, 2));
    CHECK(cosh.coeff(4) == R(1, 24));

    LaurentSeries sech = elementary(Elementary::Sech, 6);
    CHECK(sech.coeff(0) == R(1));
    CHECK(sech.coeff(2) == R(-1, 2));
    CHECK(sech.coeff(4) == R(5, 24));
    CHECK(matches(sech * elementary(Elementary::Cosh, 8), one(6)));

    // trig pair for the squeeze-parameter metadata
    LaurentSeries sin = elementary(Elementary::Sin, 6);
    CHECK(sin.coeff(1) == R(1));
    CHECK(sin.coeff(3) == R(-1, 6));
    LaurentSeries tanh = elementary(Elementary::Tanh, 8);
    CHECK(tanh.coeff(1) == R(1));
    CHECK(tanh.coeff(3) == R(-1, 3));
    CHECK(tanh.coeff(5) == R(2, 15));
    CHECK(tanh.coeff(7) == R(-17, 315));

    CHECK_THROWS_AS(elementary(Elementary::Exp, 0), UsageError);
}

TEST_CASE("elementary identities to order 14") {
    const int K = 14;
    LaurentSeries sinh = elementary(Elementary::Sinh, K);
    LaurentSeries cosh = elementary(Elementary::Cosh, K);
    CHECK(matches(cosh * cosh - sinh * sinh, one(K)));
    CHECK(matches(elementary(Elementary::Sech, K) * cosh, one(K)));
    CHECK(matches(elementary(Elementary::Coth, K) * sinh, cosh));
    CHECK(matches(elementary(Elementary::Exp, K) *
                      scale_argument(elementary(Elementary::Exp, K), R(-1)),
                  one(K)));
    CHECK(matches(elementary(Elementary::Sin, K) * elementary(Elementary::Sin, K) +
                      elementary(Elementary::Cos, K) * elementary(Elementary::Cos, K),
                  one(K)));
}

TEST_CASE("log_derivative") {
    CHECK(matches(log_derivative(elementary(Elementary::Exp, 10)), one(9)));

    // u = 1 + b^2/8 + b^4/192 + b^6/9216 has (log u)' = b/4 - b^3/96 + ...
    LaurentSeries u = LaurentSeries::from_coeffs(
        0, {R(1), R(0), R(1, 8), R(0), R(1, 192), R(0), R(1, 9216)}, 7);
    LaurentSeries ld = log_derivative(u);
    CHECK(ld.coeff(1) == R(1, 4));
    CHECK(ld.coeff(3) == R(-1, 96));

    // sum rule over factors: (log b(1+b))' = 1/b + 1 - b + b^2 ...
    LaurentSeries v = LaurentSeries::monomial(R(1), 1, 8) *
                      LaurentSeries::from_coeffs(0, {R(1), R(1), R(0), R(0), R(0), R(0)}, 6);
    LaurentSeries lv = log_derivative(v);
    CHECK(lv.coeff(-1) == R(1));
    CHECK(lv.coeff(0) == R(1));
    CHECK(lv.coeff(1) == R(-1));
    CHECK(lv.coeff(2) == R(1));

    CHECK_THROWS_AS(log_derivative(LaurentSeries::zero(5)), DomainError);
}

TEST_CASE("eval_truncated") {
    LaurentSeries w = LaurentSeries::from_coeffs(-1, {R(1, 2), R(0), R(-7, 192), R(0), R(667, 184320)},
                                                 4);
    SeriesEval e = eval_truncated(w, 0.1);
    CHECK(e.value == doctest::Approx(4.99635778537326).epsilon(1e-12));
    CHECK(e.truncation == doctest::Approx(667.0 / 184320 * 1e-3).epsilon(1e-12));

    CHECK(eval_truncated(one(3), 42.0).value == 1.0);
    CHECK(eval_truncated(LaurentSeries::zero(5), 1.0).value == 0.0);
    CHECK_THROWS_AS(eval_truncated(w, 0.0), DomainError);
}

// --- property suite -------------------------------------------------------

namespace {

struct SeriesGen {
    std::mt19937 rng{20260811};
    std::uniform_int_distribution<int> val_dist{-3, 3};
    std::uniform_int_distribution<int> len_dist{1, 7};
    std::uniform_int_distribution<long> num_dist{-9, 9};
    std::uniform_int_distribution<long> den_dist{1, 9};

    Rational rational() { return Rational(num_dist(rng), den_dist(rng)); }

    LaurentSeries series(bool allow_zero = true) {
        int val = val_dist(rng);
        int len = len_dist(rng);
        std::vector<Rational> c;
        c.reserve(len);
        for (int i = 0; i < len; ++i) c.push_back(rational());
        LaurentSeries s = LaurentSeries::from_coeffs(val, c, val + len);
        if (!allow_zero && s.is_zero()) return one(val + len);
        return s;
    }

    LaurentSeries unit_series() {
        LaurentSeries s = series();
        // force valuation 0 and leading coefficient 1
        return one(12) + s.shifted(1 - s.valuation()).truncated(12);
    }
};

}  // namespace

TEST_CASE("ring axioms on fuzzed series") {
    SeriesGen gen;
    for (int i = 0; i < 220; ++i) {
        LaurentSeries a = gen.series(), b = gen.series(), c = gen.series();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(matches(a * (b + c), a * b + a * c));
        CHECK((a - a).is_zero());
        CHECK(matches(a * one(), a));
    }
}

TEST_CASE("pow_rational round trip") {
    SeriesGen gen;
    std::uniform_int_distribution<long> qnum{-4, 4};
    std::uniform_int_distribution<long> qden{1, 4};
    for (int i = 0; i < 60; ++i) {
        LaurentSeries u = gen.unit_series();
        long n = qnum(gen.rng);
        if (n == 0) n = 3;
        Rational q(n, qden(gen.rng));
        LaurentSeries round = pow_rational(pow_rational(u, q), q.reciprocal());
        CHECK(matches(round, u));
    }
}

TEST_CASE("division round trip") {
    SeriesGen gen;
    for (int i = 0; i < 80; ++i) {
        LaurentSeries a = gen.series();
        LaurentSeries b = gen.series(false);
        CHECK(matches((a / b) * b, a));
    }
}

TEST_CASE("log_derivative is additive over products") {
    SeriesGen gen;
    for (int i = 0; i < 60; ++i) {
        LaurentSeries u = gen.series(false);
        LaurentSeries v = gen.series(false);
        CHECK(matches(log_derivative(u * v), log_derivative(u) + log_derivative(v)));
    }
}

TEST_CASE("order propagation is sound") {
    // Recompute a full pipeline at a higher order; every coefficient the
    // low-order run claimed exact must be reproduced.
    auto pipeline = [](int K) {
        LaurentSeries w = scale_argument(elementary(Elementary::Cosh, K), R(1, 4)) *
                          scale_argument(elementary(Elementary::Coth, K), R(1, 4)) *
                          scale_argument(elementary(Elementary::Sech, K), R(1, 2));
        return log_derivative(pow_rational(w.scaled(R(1, 8)).shifted(1).scaled(R(2)), R(1, 2)));
    };
    LaurentSeries lo = pipeline(12);
    LaurentSeries hi = pipeline(16);
    CHECK(lo.order() >= 10);
    for (int e = lo.valuation(); e < lo.order(); ++e) CHECK(lo.coeff(e) == hi.coeff(e));
}
