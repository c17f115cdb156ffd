#include "thermoprior/models.hpp"

#include <cmath>
#include <sstream>

#include "thermoprior/errors.hpp"
#include "thermoprior/special_functions.hpp"

namespace thermoprior {

std::string to_string(Family f) {
    switch (f) {
        case Family::QuantumBures: return "quantum-bures";
        case Family::FisherLavenda: return "fisher-lavenda";
        case Family::ReferenceClassical: return "reference-classical";
    }
    return "?";
}

std::string to_string(Scheme s) { return s == Scheme::Quantum ? "quantum" : "lavenda"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Jeffreys: return "Jeffreys";
        case Verdict::BayesLaplace: return "BayesLaplace";
        case Verdict::Other: return "Other";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "quantum") return Scheme::Quantum;
    if (s == "lavenda") return Scheme::Lavenda;
    throw UsageError("unknown scheme '" + s + "' (expected quantum or lavenda)");
}

LaurentSeries log_z_second_derivative(const PartitionSeries& z) {
    LaurentSeries from_unit = differentiate(log_derivative(z.unit));
    LaurentSeries pole = LaurentSeries::monomial(-z.exponent, -2);
    return pole + from_unit;
}

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

// ---- exact series builders -------------------------------------------------

// Z = (2 sinh(beta/4))^-1 = 2 * beta^-1 * (sinh(beta/4)/(beta/4))^-1
PartitionSeries squeezed_z_series(int order) {
    LaurentSeries s = scale_argument(elementary(Elementary::Sinh, order + 2), R(1, 4));
    LaurentSeries u0 = s / LaurentSeries::monomial(R(1, 4), 1);
    return {ConstFactor(R(2)), R(-1), inverse(u0).truncated(order)};
}

// Z = 2 I1(beta)/beta: unit coefficients 1/(4^k k! (k+1)!) at beta^(2k).
PartitionSeries bessel_z_series(int order) {
    std::vector<Rational> c(static_cast<size_t>(order), R(0));
    mpz_class four_k = 1;
    for (int k = 0; 2 * k < order; ++k) {
        mpz_class den = four_k * factorial(k) * factorial(k + 1);
        c[static_cast<size_t>(2 * k)] = Rational(mpq_class(1, den));
        four_k *= 4;
    }
    return {ConstFactor(R(1)), R(0), LaurentSeries::from_coeffs(0, std::move(c), order)};
}

// Z = sinh(beta)/beta
PartitionSeries sinh_z_series(int order) {
    LaurentSeries u =
        elementary(Elementary::Sinh, order + 2) / LaurentSeries::monomial(R(1), 1);
    return {ConstFactor(R(1)), R(0), u.truncated(order)};
}

// Z of the spin-1 extension. The closed form carries erfi(sqrt(beta)) and
// beta^(3/2); algebraically every half-integer power cancels:
//   Z = (3/(4 beta)) e^-beta [ (1+2beta) S(beta) - e^beta ],
//   S(beta) = sum_k beta^k / (k! (2k+1)).
PartitionSeries spin_one_z_series(int order) {
    const int K = order + 2;
    std::vector<Rational> sc(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k)
        sc[static_cast<size_t>(k)] = Rational(mpq_class(1, factorial(k) * (2 * k + 1)));
    LaurentSeries S = LaurentSeries::from_coeffs(0, std::move(sc), K);
    LaurentSeries one_plus_2b = LaurentSeries::constant(R(1)) + LaurentSeries::monomial(R(2), 1);
    LaurentSeries bracket = one_plus_2b * S - elementary(Elementary::Exp, K);
    LaurentSeries unit = bracket.shifted(-1)
                             .scaled(R(3, 4)) *
                         scale_argument(elementary(Elementary::Exp, K), R(-1));
    return {ConstFactor(R(1)), R(0), unit.truncated(order)};
}

// Z = beta^(-3/2)
PartitionSeries ideal_gas_z_series(int order) {
    return {ConstFactor(R(1)), R(-3, 2), LaurentSeries::constant(R(1), order)};
}

// Z = (1 - e^(-nu beta))^-1 = (1/nu) beta^-1 ((1-e^(-nu beta))/(nu beta))^-1
PartitionSeries bose_z_series(int order, const Rational& nu) {
    LaurentSeries e = scale_argument(elementary(Elementary::Exp, order + 2), -nu);
    LaurentSeries denom = LaurentSeries::constant(R(1)) - e;  // valuation 1, leading nu
    LaurentSeries u0 = denom / LaurentSeries::monomial(nu, 1);
    return {ConstFactor(nu.reciprocal()), R(-1), inverse(u0).truncated(order)};
}

// Z = 1 + e^(-eps0 beta) = 2 * (1 + e^(-eps0 beta))/2
PartitionSeries fermi_z_series(int order, const Rational& eps0) {
    LaurentSeries e = scale_argument(elementary(Elementary::Exp, order + 2), -eps0);
    LaurentSeries unit = (LaurentSeries::constant(R(1)) + e).scaled(R(1, 2));
    return {ConstFactor(R(2)), R(0), unit.truncated(order)};
}

// ---- closed forms ----------------------------------------------------------

double squeezed_z(double b) { return 0.5 / std::sinh(0.25 * b); }

double spin_one_z(double b) {
    if (b < 1e-3) {
        // leading exact coefficients; truncation ~ (64/15015) b^5
        return 1.0 + b * (-0.8 + b * (12.0 / 35 + b * (-32.0 / 315 + b * (16.0 / 693))));
    }
    const double rb = std::sqrt(b);
    return 3.0 * std::exp(-b) *
           ((1.0 + 2.0 * b) * std::sqrt(kPi) * erfi(rb) - 2.0 * rb * std::exp(b)) /
           (8.0 * b * rb);
}

// (log Z)'' closed forms.
double squeezed_log_z_dd(double b) {
    const double s = std::sinh(0.25 * b);
    return 1.0 / (16.0 * s * s);
}

double bessel_log_z_dd(double b) {
    const double r = bessel_i(0, b) / bessel_i(1, b);
    return 1.0 - r * r + r / b + 2.0 / (b * b);
}

double sinh_log_z_dd(double b) {
    const double s = std::sinh(b);
    return 1.0 / (b * b) - 1.0 / (s * s);
}

double spin_one_log_z_dd(double b) {
    // Z = (3/(4b)) e^-b B with B = (1+2b)S - e^b and S = sqrt(pi) erfi(sqrt b)/(2 sqrt b);
    // S' = (e^b - S)/(2b), so (log Z)'' = 1/b^2 + B''/B - (B'/B)^2.
    const double eb = std::exp(b);
    const double S = std::sqrt(kPi) * erfi(std::sqrt(b)) / (2.0 * std::sqrt(b));
    const double S1 = (eb - S) / (2.0 * b);
    const double S2 = (eb - S1) / (2.0 * b) - (eb - S) / (2.0 * b * b);
    const double B = (1.0 + 2.0 * b) * S - eb;
    const double B1 = 2.0 * S + (1.0 + 2.0 * b) * S1 - eb;
    const double B2 = 4.0 * S1 + (1.0 + 2.0 * b) * S2 - eb;
    return 1.0 / (b * b) + B2 / B - (B1 / B) * (B1 / B);
}

// ---- registry --------------------------------------------------------------

std::vector<ThermalModel> build_registry(const ModelParams& params) {
    std::vector<ThermalModel> out;
    const double nu = params.nu.to_double();
    const double e0 = params.eps0.to_double();

    {
        ThermalModel m;
        m.id = "squeezed-thermal-quantum";
        m.description = "squeezed thermal states, Bures volume element";
        m.family = Family::QuantumBures;
        m.degrees_of_freedom = 3;
        m.native_scheme = Scheme::Quantum;
        m.published_verdict = Verdict::Jeffreys;
        m.z_closed = squeezed_z;
        m.z_series = squeezed_z_series;
        m.omega_closed = [](double b) {
            const double c = std::cosh(0.25 * b);
            return c * c / (8.0 * std::sinh(0.25 * b) * std::cosh(0.5 * b));
        };
        m.log_z_dd_closed = squeezed_log_z_dd;
        m.r_part = [](double r) { return std::sinh(2.0 * r); };
        m.volume_element = "v(r) w(beta) dr dbeta dtheta, v(r) = sinh 2r (theta-independent)";
        out.push_back(std::move(m));
    }
    {
        ThermalModel m;
        m.id = "displaced-thermal-quantum";
        m.description = "displaced thermal states, Bures volume element";
        m.family = Family::QuantumBures;
        m.degrees_of_freedom = 3;
        m.native_scheme = Scheme::Quantum;
        m.published_verdict = Verdict::BayesLaplace;
        m.z_closed = squeezed_z;
        m.z_series = squeezed_z_series;
        m.omega_closed = [](double b) { return 1.0 / (kPi * std::cosh(0.5 * b)); };
        m.log_z_dd_closed = squeezed_log_z_dd;
        m.volume_element = "sech(beta/2)/8 dp dq dbeta";
        m.quantum_tail_integrable = true;
        m.quantum_tail = {0.5, 2.0 / kPi, 0.0};
        out.push_back(std::move(m));
    }
    {
        ThermalModel m;
        m.id = "displaced-squeezed-quantum";
        m.description = "displaced squeezed thermal states, Bures volume element";
        m.family = Family::QuantumBures;
        m.degrees_of_freedom = 4;
        m.native_scheme = Scheme::Quantum;
        m.published_verdict = Verdict::BayesLaplace;
        m.z_closed = squeezed_z;
        m.z_series = squeezed_z_series;
        m.omega_closed = [](double b) {
            const double c = std::cosh(0.25 * b);
            return 0.5 * c * c * std::pow(std::cosh(0.5 * b), -1.5);
        };
        m.log_z_dd_closed = squeezed_log_z_dd;
        m.r_part = [](double r) {
            const double c = std::cosh(2.0 * r);
            const double s = std::sin(2.0 * r);
            return std::sqrt(4.0 * c * c - s * s);
        };
        m.volume_element = "v(r) w(beta) dp dq dr dbeta, v(r) = sqrt(4 cosh^2 2r - sin^2 2r)";
        m.quantum_tail_integrable = true;
        m.quantum_tail = {0.25, std::sqrt(2.0), 0.0};
        out.push_back(std::move(m));
    }
    {
        ThermalModel m;
        m.id = "spin-half-bures";
        m.description = "spin-1/2, Bures marginal as structure function";
        m.family = Family::FisherLavenda;
        m.level_count = 2;
        m.degrees_of_freedom = 3;
        m.native_scheme = Scheme::Lavenda;
        m.published_verdict = Verdict::BayesLaplace;
        m.z_closed = [](double b) { return 2.0 * bessel_i(1, b) / b; };
        m.z_series = bessel_z_series;
        m.log_z_dd_closed = bessel_log_z_dd;
        m.dos = DensityOfStates{-1.0, 1.0,
                                [](double z) { return 2.0 * std::sqrt(1.0 - z * z) / kPi; },
                                EndpointSingularity::None};
        m.hamiltonian = Hamiltonian{"diag(1, -1)", {1.0, -1.0}};
        out.push_back(std::move(m));
    }
    {
        ThermalModel m;
        m.id = "spin-half-maximal";
        m.description = "spin-1/2, maximal monotone metric (Langevin mean energy)";
        m.family = Family::FisherLavenda;
        m.level_count = 2;
        m.degrees_of_freedom = 3;
        m.native_scheme = Scheme::Lavenda;
        m.published_verdict = Verdict::BayesLaplace;
        m.z_closed = [](double b) { return std::sinh(b) / b; };
        m.z_series = sinh_z_series;
        m.log_z_dd_closed = sinh_log_z_dd;
        out.push_back(std::move(m));
    }
    {
        ThermalModel m;
        m.id = "spin-one-extended";
        m.description = "spin-1 one-parameter extension, Bures marginal as structure function";
        m.family = Family::FisherLavenda;
        m.level_count = 3;
        m.degrees_of_freedom = 4;
        m.native_scheme = Scheme::Lavenda;
        m.published_verdict = Verdict::Jeffreys;
        m.verdict_disputed = true;  // finite variance at beta=0 contradicts the printed pole
        m.z_closed = spin_one_z;
        m.z_series = spin_one_z_series;
        m.log_z_dd_closed = spin_one_log_z_dd;
        m.dos = DensityOfStates{0.0, 1.0,
                                [](double v) { return 3.0 * v / (4.0 * std::sqrt(1.0 - v)); },
                                EndpointSingularity::InverseSqrtRight};
        m.hamiltonian = Hamiltonian{"(1/2) diag(1, 0, 1)", {0.5, 0.0, 0.5}};
        out.push_back(std::move(m));
    }
    {
        ThermalModel m;
        m.id = "squeezed-thermal-lavenda";
        m.description = "squeezed thermal states, Fisher prior from the trace normalization";
        m.family = Family::FisherLavenda;
        m.degrees_of_freedom = 3;
        m.native_scheme = Scheme::Lavenda;
        m.published_verdict = Verdict::Jeffreys;
        m.z_closed = squeezed_z;
        m.z_series = squeezed_z_series;
        m.log_z_dd_closed = squeezed_log_z_dd;
        out.push_back(std::move(m));
    }
    {
        ThermalModel m;
        m.id = "ideal-gas";
        m.description = "ideal monatomic gas, log Z = -(3/2) log beta";
        m.family = Family::ReferenceClassical;
        m.degrees_of_freedom = 3;
        m.native_scheme = Scheme::Lavenda;
        m.published_verdict = Verdict::Jeffreys;
        m.z_closed = [](double b) { return std::pow(b, -1.5); };
        m.z_series = ideal_gas_z_series;
        m.log_z_dd_closed = [](double b) { return 1.5 / (b * b); };
        out.push_back(std::move(m));
    }
    {
        ThermalModel m;
        m.id = "harmonic-oscillator";
        m.description = "harmonic oscillator, Bose partition function";
        m.family = Family::ReferenceClassical;
        m.native_scheme = Scheme::Lavenda;
        m.published_verdict = Verdict::Jeffreys;
        const Rational nu_r = params.nu;
        m.z_closed = [nu](double b) { return 1.0 / (1.0 - std::exp(-nu * b)); };
        m.z_series = [nu_r](int order) { return bose_z_series(order, nu_r); };
        m.log_z_dd_closed = [nu](double b) {
            const double s = std::sinh(0.5 * nu * b);
            return 0.25 * nu * nu / (s * s);
        };
        out.push_back(std::move(m));
    }
    {
        ThermalModel m;
        m.id = "fermi-oscillator";
        m.description = "Fermi oscillator with two levels 0 and eps0";
        m.family = Family::ReferenceClassical;
        m.level_count = 2;
        m.native_scheme = Scheme::Lavenda;
        m.published_verdict = Verdict::BayesLaplace;
        const Rational e0_r = params.eps0;
        m.z_closed = [e0](double b) { return 1.0 + std::exp(-e0 * b); };
        m.z_series = [e0_r](int order) { return fermi_z_series(order, e0_r); };
        m.log_z_dd_closed = [e0](double b) {
            const double c = std::cosh(0.5 * e0 * b);
            return 0.25 * e0 * e0 / (c * c);
        };
        m.lavenda_tail_integrable = true;
        m.lavenda_tail = {0.5 * e0, e0, 0.0};
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

const std::vector<ThermalModel>& registry() {
    static const std::vector<ThermalModel> models = build_registry(ModelParams{});
    return models;
}

std::vector<ThermalModel> registry(const ModelParams& params) { return build_registry(params); }

std::string resolve_alias(const std::string& id) {
    if (id == "displaced-thermal-lavenda" || id == "displaced-squeezed-lavenda")
        return "squeezed-thermal-lavenda";
    return id;
}

const ThermalModel& lookup(const std::string& id, const std::vector<ThermalModel>& models) {
    const std::string key = resolve_alias(id);
    for (const ThermalModel& m : models)
        if (m.id == key) return m;
    std::ostringstream os;
    os << "unknown model '" << id << "'; valid ids:";
    for (const ThermalModel& m : models) os << " " << m.id;
    throw UsageError(os.str());
}

const ThermalModel& lookup(const std::string& id) { return lookup(id, registry()); }

PartitionSeries z_partition_series(const ThermalModel& m, int order) {
    if (order < 4) throw UsageError("z_partition_series: order must be >= 4");
    return m.z_series(order);
}

double z_eval(const ThermalModel& m, double beta) {
    if (!(beta > 0.0)) throw DomainError("z_eval: beta must be positive");
    return m.z_closed(beta);
}

double omega_eval(const ThermalModel& m, double beta, Scheme scheme) {
    if (!(beta > 0.0)) throw DomainError("omega_eval: beta must be positive");
    if (scheme == Scheme::Quantum) {
        if (!m.omega_closed)
            throw UsageError("omega_eval: model '" + m.id + "' has no quantum volume element");
        return m.omega_closed(beta);
    }
    if (!m.log_z_dd_closed)
        throw UsageError("omega_eval: model '" + m.id + "' has no partition function");
    return std::sqrt(m.log_z_dd_closed(beta));
}

double dos_partition(const ThermalModel& m, double beta) {
    if (!m.dos) throw UsageError("dos_partition: model '" + m.id + "' has no structure function");
    const DensityOfStates& d = *m.dos;
    Quadrant q;
    q.integrand = [&d, beta](double e) { return d.weight(e) * std::exp(-beta * e); };
    q.lower = d.lower;
    q.upper = d.upper;
    q.singularity = d.singularity;
    return quad(q, 1e-10).value;
}

const std::vector<BuresDensity>& bures_densities() {
    static const std::vector<BuresDensity> densities = [] {
        std::vector<BuresDensity> out;
        {
            // p(v,x,y,z) = 3 / (4 pi^2 v sqrt(1-v) sqrt(v^2-x^2-y^2-z^2)) on the
            // ball x^2+y^2+z^2 <= v^2, 0 <= v <= 1.
            BuresDensity d;
            d.id = "spin-one-extended";
            d.dimension = 4;
            d.marginal_variable = "v";
            d.lower = 0.0;
            d.upper = 1.0;
            d.prefactor = [](double v) {
                return 3.0 / (4.0 * kPi * kPi * v * std::sqrt(1.0 - v));
            };
            d.block_radius = [](double v) { return v; };
            d.block_dimension = 3;
            d.marginal_closed = [](double v) { return 3.0 * v / (4.0 * std::sqrt(1.0 - v)); };
            out.push_back(std::move(d));
        }
        {
            // p(x,y,z) = 1 / (pi^2 sqrt(1-x^2-y^2-z^2)) on the unit ball.
            BuresDensity d;
            d.id = "spin-half-bures";
            d.dimension = 3;
            d.marginal_variable = "z";
            d.lower = -1.0;
            d.upper = 1.0;
            d.prefactor = [](double) { return 1.0 / (kPi * kPi); };
            d.block_radius = [](double z) { return std::sqrt(1.0 - z * z); };
            d.block_dimension = 2;
            d.marginal_closed = [](double z) { return 2.0 * std::sqrt(1.0 - z * z) / kPi; };
            out.push_back(std::move(d));
        }
        return out;
    }();
    return densities;
}

const BuresDensity& bures_density(const std::string& id) {
    for (const BuresDensity& d : bures_densities())
        if (d.id == id) return d;
    throw UsageError("no Bures density for model '" + id + "'");
}

double radial_block_volume(int block_dimension, double radius) {
    // int over the ball/disk of radius R of 1/sqrt(R^2 - r^2).
    if (block_dimension == 3) return kPi * kPi * radius * radius;
    if (block_dimension == 2) return 2.0 * kPi * radius;
    throw UsageError("radial_block_volume: unsupported block dimension");
}

double marginal_reduce(const BuresDensity& d, double point) {
    if (!(point > d.lower) || !(point < d.upper))
        throw DomainError("marginal_reduce: point must be strictly inside (" +
                          std::to_string(d.lower) + ", " + std::to_string(d.upper) + ")");
    return d.prefactor(point) * radial_block_volume(d.block_dimension, d.block_radius(point));
}

}  // namespace thermoprior
