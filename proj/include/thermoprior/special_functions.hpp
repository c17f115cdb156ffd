#pragma once

namespace thermoprior {

/// Modified Bessel function of the first kind, n in {0, 1}, 0 <= x <= 50.
/// Relative error <= 1e-12: ascending series for x <= 15, the large-argument
/// asymptotic expansion beyond.
double bessel_i(int n, double x);

/// Imaginary error function erf(ix)/i for 0 <= x <= 10, relative error
/// <= 1e-12. Odd extension for negative arguments.
double erfi(double x);

/// Langevin function coth(x) - 1/x for x >= 0, with the removable
/// singularity at 0 handled by its Taylor series. Relative error <= 1e-12.
double langevin(double x);

/// Catalan's constant to 30 digits. Verification constant only; the
/// published value 0.95966 is checked against it by the report.
inline constexpr double kCatalan = 0.915965594177219015054603514932;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace thermoprior
