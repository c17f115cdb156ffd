#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thermoprior/partition_series.hpp"
#include "thermoprior/quadrature.hpp"

namespace thermoprior {

enum class Family { QuantumBures, FisherLavenda, ReferenceClassical };
enum class Scheme { Quantum, Lavenda };
enum class Verdict { Jeffreys, BayesLaplace, Other };

std::string to_string(Family f);
std::string to_string(Scheme s);
std::string to_string(Verdict v);
Scheme scheme_from_string(const std::string& s);

/// Structure function Omega(eps): a normalized weight over energy whose
/// Boltzmann-weighted integral reproduces the partition function.
struct DensityOfStates {
    double lower;
    double upper;
    std::function<double(double)> weight;
    EndpointSingularity singularity = EndpointSingularity::None;
};

struct Hamiltonian {
    std::string form;              // e.g. "diag(1, -1)"
    std::vector<double> diagonal;
};

/// One registry entry: closed-form evaluators, exact series builder, and
/// the metadata the report needs.
struct ThermalModel {
    std::string id;
    std::string description;
    Family family;
    std::optional<int> level_count;        // empty: infinite-dimensional
    std::optional<int> degrees_of_freedom;
    Scheme native_scheme;                  // the scheme this entry embodies
    Verdict published_verdict;             // high-temperature behaviour as printed
    bool verdict_disputed = false;         // published verdict is oracle-arbitrated

    std::function<double(double)> z_closed;
    std::function<PartitionSeries(int order)> z_series;
    std::function<double(double)> omega_closed;     // quantum Jeffreys prior density
    std::function<double(double)> log_z_dd_closed;  // analytic (log Z)''
    std::optional<DensityOfStates> dos;
    std::optional<Hamiltonian> hamiltonian;
    std::function<double(double)> r_part;           // squeeze-block factor v(r), metadata
    std::string volume_element;                     // product form of dV, metadata

    // Tail declarations for moment quadrature (valid where the flag is set).
    bool quantum_tail_integrable = false;
    bool lavenda_tail_integrable = false;
    ExponentialTail quantum_tail{1.0, 1.0, 0.0};
    ExponentialTail lavenda_tail{1.0, 1.0, 0.0};
};

/// Scale parameters for the reference models; classification is invariant
/// to them, so they default to 1.
struct ModelParams {
    Rational nu = Rational(1);    // harmonic-oscillator frequency
    Rational eps0 = Rational(1);  // Fermi-oscillator level spacing
};

/// All ten models, stable ids, canonical parameters.
const std::vector<ThermalModel>& registry();
/// Registry with overridden reference-model parameters.
std::vector<ThermalModel> registry(const ModelParams& params);

/// Lookup by id; "displaced-thermal-lavenda" and
/// "displaced-squeezed-lavenda" resolve to the squeezed-thermal Lavenda
/// entry (their normalization factors coincide). Unknown ids throw
/// UsageError listing the valid ones.
const ThermalModel& lookup(const std::string& id);
const ThermalModel& lookup(const std::string& id, const std::vector<ThermalModel>& models);
std::string resolve_alias(const std::string& id);

/// Exact series of Z; order must be >= 4.
PartitionSeries z_partition_series(const ThermalModel& m, int order);

/// Closed-form Z(beta), beta > 0.
double z_eval(const ThermalModel& m, double beta);

/// Numeric prior density. Quantum requires a closed-form volume element;
/// Lavenda evaluates sqrt of the analytic (log Z)''.
double omega_eval(const ThermalModel& m, double beta, Scheme scheme);

/// Boltzmann-weighted integral of the structure function, tolerance 1e-10.
double dos_partition(const ThermalModel& m, double beta);

/// A multivariate Bures volume element with an analytically reducible
/// radial block, and the univariate marginal that reduction produces.
struct BuresDensity {
    std::string id;             // matching model id
    int dimension;              // number of state parameters (3 or 4)
    std::string marginal_variable;
    double lower, upper;        // marginal domain
    std::function<double(double)> prefactor;     // joint density without the radial block
    std::function<double(double)> block_radius;  // radius of the block at the marginal point
    int block_dimension;                         // 3: ball, 2: disk
    std::function<double(double)> marginal_closed;
};

const std::vector<BuresDensity>& bures_densities();
const BuresDensity& bures_density(const std::string& id);

/// Volume of the radial block against its inverse-sqrt weight:
/// ball of radius R: pi^2 R^2; disk of radius R: 2 pi R.
double radial_block_volume(int block_dimension, double radius);

/// Marginal density at an interior point via the analytic radial reduction.
double marginal_reduce(const BuresDensity& d, double point);

}  // namespace thermoprior
