#include "thermoprior/special_functions.hpp"

#include <cmath>
#include <limits>

#include "thermoprior/errors.hpp"

namespace thermoprior {

namespace {

// Ascending series I_n(x) = sum_k (x/2)^(2k+n) / (k! (k+n)!).
// All terms are positive, so the sum carries no cancellation.
double bessel_i_series(int n, double x) {
    const double q = 0.25 * x * x;
    double term = n == 0 ? 1.0 : 0.5 * x;
    double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<double>(k) * (k + n));
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// Large-argument expansion I_n(x) ~ e^x/sqrt(2 pi x) * sum_k (-1)^k a_k(n)/(8x)^k
// with a_k(n) = prod_{j=1..k} (4n^2 - (2j-1)^2) / (k! 8^k ...) folded into the
// running term. Truncated at the smallest term.
double bessel_i_asymptotic(int n, double x) {
    const double mu = 4.0 * n * n;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 40; ++k) {
        const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= -num / (8.0 * k * x);
        if (std::abs(term) >= prev) break;  // divergence point of the expansion
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(x) / std::sqrt(2.0 * kPi * x) * sum;
}

}  // namespace

double bessel_i(int n, double x) {
    if (n != 0 && n != 1) throw UsageError("bessel_i: order must be 0 or 1");
    if (x < 0.0 || x > 50.0) throw DomainError("bessel_i: argument outside [0, 50]");
    if (x <= 15.0) return bessel_i_series(n, x);
    return bessel_i_asymptotic(n, x);
}

double erfi(double x) {
    if (x < 0.0) return -erfi(-x);
    if (x > 10.0) throw DomainError("erfi: argument outside [-10, 10]");
    // (2/sqrt(pi)) sum_k x^(2k+1) / (k! (2k+1)); positive terms only.
    const double x2 = x * x;
    double power = x;  // x^(2k+1)/k!
    double sum = x;
    for (int k = 1; k < 400; ++k) {
        power *= x2 / k;
        const double term = power / (2 * k + 1);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return 2.0 / std::sqrt(kPi) * sum;
}

double langevin(double x) {
    if (x < 0.0) throw DomainError("langevin: argument must be nonnegative");
    if (x < 0.1) {
        const double x2 = x * x;
        return x * (1.0 / 3.0 +
                    x2 * (-1.0 / 45.0 +
                          x2 * (2.0 / 945.0 + x2 * (-1.0 / 4725.0 + x2 * (2.0 / 93555.0)))));
    }
    if (x > 20.0) return 1.0 - 1.0 / x + 2.0 * std::exp(-2.0 * x);  // coth ~ 1 + 2e^{-2x}
    return 1.0 / std::tanh(x) - 1.0 / x;
}

}  // namespace thermoprior
