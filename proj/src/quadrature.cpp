#include "thermoprior/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "thermoprior/errors.hpp"

namespace thermoprior {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double kNodes[8] = {
    0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
    0.405845151377397166906606412076961, 0.586087235467691130294144838258730,
    0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
    0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
constexpr double kWeightsK[8] = {
    0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
    0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
    0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
constexpr double kWeightsG[4] = {
    0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
    0.279705391489276667901467771423780, 0.129484966168869693270611432679082};

struct Panel {
    double a, b;
    double value, error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double k15 = kWeightsK[0] * f0;
    double g7 = kWeightsG[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i];
        const double fi = f(mid + dx) + f(mid - dx);
        k15 += kWeightsK[i] * fi;
        if (i % 2 == 0) g7 += kWeightsG[i / 2] * fi;
    }
    k15 *= half;
    g7 *= half;
    // |K15 - G7| overestimates the K15 error on smooth panels; we accept the
    // extra subdivisions that buys.
    const double diff = std::abs(k15 - g7);
    return {a, b, k15, std::max(diff, std::abs(k15) * 1e-16)};
}

QuadResult adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
    constexpr int kMaxPanels = 4000;
    std::vector<Panel> panels;
    panels.reserve(64);
    panels.push_back(evaluate_panel(f, a, b));
    for (int iter = 0; iter < kMaxPanels; ++iter) {
        double total_err = 0.0, total_val = 0.0;
        size_t worst = 0;
        for (size_t i = 0; i < panels.size(); ++i) {
            total_err += panels[i].error;
            total_val += panels[i].value;
            if (panels[i].error > panels[worst].error) worst = i;
        }
        if (total_err <= tol) return {total_val, total_err, true};
        Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b || panels.size() + 1 >= kMaxPanels) {
            // Cannot refine further: width at roundoff or budget exhausted.
            if (panels.size() + 1 >= kMaxPanels)
                throw NumericError("quad: subdivision budget exhausted", total_val, total_err);
            return {total_val, total_err, false};
        }
        panels[worst] = evaluate_panel(f, p.a, mid);
        panels.push_back(evaluate_panel(f, mid, p.b));
    }
    double total_err = 0.0, total_val = 0.0;
    for (const Panel& p : panels) {
        total_err += p.error;
        total_val += p.value;
    }
    throw NumericError("quad: subdivision budget exhausted", total_val, total_err);
}

}  // namespace

QuadResult quad(const Quadrant& q, double tol) {
    if (tol <= 0.0) throw UsageError("quad: tolerance must be positive");
    if (!q.integrand) throw UsageError("quad: missing integrand");

    double a = q.lower;
    double b = q.upper;
    if (q.semi_infinite) {
        if (!q.tail) throw UsageError("quad: semi-infinite interval needs a declared tail");
        // Truncate where the tail integral bound C e^(-rate T)/rate < tol/10.
        const ExponentialTail& t = *q.tail;
        if (t.rate <= 0.0 || t.scale <= 0.0) throw UsageError("quad: invalid tail declaration");
        double T = std::log(10.0 * t.scale / (t.rate * tol)) / t.rate;
        b = std::max({T, t.onset, a + 1.0});
    }
    if (!(b > a)) throw UsageError("quad: empty interval");

    std::function<double(double)> f = q.integrand;
    switch (q.singularity) {
        case EndpointSingularity::None:
            break;
        case EndpointSingularity::InverseSqrtLeft: {
            // x = a + t^2, dx = 2t dt kills a 1/sqrt(x-a) endpoint.
            auto g = q.integrand;
            double offset = a;
            f = [g, offset](double t) { return 2.0 * t * g(offset + t * t); };
            b = std::sqrt(b - a);
            a = 0.0;
            break;
        }
        case EndpointSingularity::InverseSqrtRight: {
            auto g = q.integrand;
            double offset = b;
            f = [g, offset](double t) { return 2.0 * t * g(offset - t * t); };
            b = std::sqrt(b - a);
            a = 0.0;
            break;
        }
    }
    return adaptive(f, a, b, tol);
}

}  // namespace thermoprior
