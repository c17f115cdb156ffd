#pragma once

#include <functional>
#include <vector>

namespace thermoprior {

/// d^2/dbeta^2 of log_z at beta by Richardson-extrapolated central second
/// differences. Step h = max(4e-3, beta*5e-3); requires beta > 2h. Target
/// relative error ~1e-7 for smooth log_z.
double second_log_derivative_numeric(const std::function<double(double)>& log_z, double beta);

struct FitResult {
    std::vector<int> exponents;
    std::vector<double> coefficients;
    double residual;   // max relative deviation over the fit grid
    double condition;  // estimate for the scaled design matrix
};

/// Least-squares fit f(beta) ~ sum c_k beta^(e_k) over the grid, weighted so
/// the deviation is relative to |f|. The grid must lie in (0, 0.5] and hold
/// at least twice as many points as there are exponents. A consistency
/// oracle only -- never a source of exact coefficients.
FitResult fit_laurent_oracle(const std::function<double(double)>& f,
                             const std::vector<int>& exponents,
                             const std::vector<double>& grid);

/// Geometric grid of n points between lo and hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int n);

}  // namespace thermoprior
