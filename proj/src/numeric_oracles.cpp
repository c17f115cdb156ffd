#include "thermoprior/numeric_oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "thermoprior/errors.hpp"

namespace thermoprior {

double second_log_derivative_numeric(const std::function<double(double)>& log_z, double beta) {
    // The step balances the eps/h^2 roundoff floor of the second difference
    // against the h^4 truncation left after Richardson extrapolation; 1e-4
    // steps would pin the roundoff near 1e-6 relative and miss the target.
    const double h = std::max(4e-3, beta * 5e-3);
    if (!(beta > 2.0 * h))
        throw DomainError("second_log_derivative_numeric: beta too close to 0 for the step");
    auto central = [&](double step) {
        return (log_z(beta + step) - 2.0 * log_z(beta) + log_z(beta - step)) / (step * step);
    };
    const double d1 = central(h);
    const double d2 = central(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw UsageError("geometric_grid: bad parameters");
    std::vector<double> g(n);
    const double ratio = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(ratio * i);
    g.front() = lo;  // snap the endpoints: exp/log round-trip may overshoot
    g.back() = hi;
    return g;
}

FitResult fit_laurent_oracle(const std::function<double(double)>& f,
                             const std::vector<int>& exponents,
                             const std::vector<double>& grid) {
    const int m = static_cast<int>(grid.size());
    const int n = static_cast<int>(exponents.size());
    if (n == 0) throw UsageError("fit_laurent_oracle: no exponents");
    if (m < 2 * n) throw UsageError("fit_laurent_oracle: need at least 2x as many points as exponents");
    for (double b : grid)
        if (!(b > 0.0) || b > 0.5)
            throw UsageError("fit_laurent_oracle: grid must lie strictly inside (0, 0.5]");

    Eigen::MatrixXd A(m, n);
    Eigen::VectorXd rhs(m);
    std::vector<double> fv(m);
    for (int i = 0; i < m; ++i) {
        fv[i] = f(grid[i]);
        const double w = 1.0 / std::max(std::abs(fv[i]), 1e-300);  // relative weighting
        for (int j = 0; j < n; ++j) A(i, j) = w * std::pow(grid[i], exponents[j]);
        rhs(i) = w * fv[i];
    }
    // Scale columns to unit norm so the condition estimate is meaningful.
    Eigen::VectorXd scale(n);
    for (int j = 0; j < n; ++j) {
        scale(j) = A.col(j).norm();
        if (scale(j) == 0.0) scale(j) = 1.0;
        A.col(j) /= scale(j);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    const auto& R = qr.matrixR();
    double rmax = 0.0, rmin = std::numeric_limits<double>::max();
    for (int j = 0; j < n; ++j) {
        const double d = std::abs(R(j, j));
        rmax = std::max(rmax, d);
        rmin = std::min(rmin, d);
    }
    const double condition = rmin > 0.0 ? rmax / rmin : std::numeric_limits<double>::infinity();
    if (!(condition < 1e13))
        throw NumericError("fit_laurent_oracle: basis too ill-conditioned on this grid", 0.0,
                           condition);
    Eigen::VectorXd c = qr.solve(rhs);
    for (int j = 0; j < n; ++j) c(j) /= scale(j);

    double residual = 0.0;
    for (int i = 0; i < m; ++i) {
        double fit = 0.0;
        for (int j = 0; j < n; ++j) fit += c(j) * std::pow(grid[i], exponents[j]);
        residual = std::max(residual, std::abs(fit - fv[i]) / std::max(std::abs(fv[i]), 1e-300));
    }
    return {exponents, std::vector<double>(c.data(), c.data() + n), residual, condition};
}

}  // namespace thermoprior
