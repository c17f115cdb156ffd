#include "thermoprior/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "thermoprior/errors.hpp"
#include "thermoprior/numeric_oracles.hpp"
#include "thermoprior/special_functions.hpp"

namespace thermoprior {

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Match: return "match";
        case ClaimStatus::PaperDiscrepancy: return "paper-discrepancy";
        case ClaimStatus::OracleMismatch: return "oracle-mismatch";
    }
    return "?";
}

bool VerificationReport::ok() const {
    return count(ClaimStatus::OracleMismatch) == 0;
}

int VerificationReport::count(ClaimStatus s) const {
    int n = 0;
    for (const ReportRow& r : rows)
        if (r.status == s) ++n;
    return n;
}

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

PaperClaim expansion_claim(std::string id, std::string citation, std::string model, Scheme scheme,
                           ConstFactor prefactor,
                           std::vector<std::pair<int, Rational>> coefficients,
                           bool arbitrated = false) {
    PaperClaim c;
    c.id = std::move(id);
    c.citation = std::move(citation);
    c.kind = ClaimKind::Expansion;
    c.model_id = std::move(model);
    c.scheme = scheme;
    c.prefactor = prefactor;
    c.coefficients = std::move(coefficients);
    c.arbitrated = arbitrated;
    return c;
}

PaperClaim classification_claim(const ThermalModel& m) {
    PaperClaim c;
    c.id = "classification-" + m.id;
    c.citation = "high-temperature verdict as printed for " + m.id;
    c.kind = ClaimKind::Classification;
    c.model_id = m.id;
    c.scheme = m.native_scheme;
    c.verdict = m.published_verdict;
    c.arbitrated = m.verdict_disputed;
    return c;
}

std::string render_terms(const ConstFactor& prefactor,
                         const std::vector<std::pair<int, Rational>>& coefficients) {
    std::ostringstream os;
    if (!(prefactor == ConstFactor())) os << "(" << prefactor.str() << ") * ";
    os << "[";
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (i) os << ", ";
        os << coefficients[i].second.str() << " beta^" << coefficients[i].first;
    }
    os << "]";
    return os.str();
}

// Numeric prior for the fit oracle. The spin-1 model goes through the fully
// numeric pipeline (finite differences of log of the closed form): it is the
// arbitrated case, so it must not share anything with the series engine.
std::function<double(double)> oracle_prior(const ThermalModel& m, Scheme scheme) {
    if (m.id == "spin-one-extended") {
        auto z = m.z_closed;
        return [z](double b) {
            return std::sqrt(
                second_log_derivative_numeric([&z](double t) { return std::log(z(t)); }, b));
        };
    }
    return [&m, scheme](double b) { return omega_eval(m, b, scheme); };
}

struct ExpansionCheck {
    bool engine_matches_published;
    bool oracle_matches_engine;
    std::string engine_str, oracle_str, detail;
};

ExpansionCheck check_expansion(const PaperClaim& claim, int order) {
    const ThermalModel& m = lookup(claim.model_id);
    PriorExpansion e = prior_expansion(m, claim.scheme, order);

    // Exact comparison at the published exponents.
    bool exact = true;
    for (const auto& [exp, coeff] : claim.coefficients) {
        ConstFactor published = claim.prefactor * coeff;
        ConstFactor engine = e.expansion.factor * e.expansion.unit.coeff(exp);
        if (!(published == engine)) exact = false;
    }

    // Fit oracle over the numeric prior with guard exponents soaking up the
    // omitted tail.
    std::vector<int> exps;
    for (const auto& [exp, coeff] : claim.coefficients) exps.push_back(exp);
    // Arbitrated expansions: also fit the engine's candidate exponents so
    // both versions are on the table.
    if (claim.arbitrated) {
        const int cutoff = exps.back() + 1;
        for (int exp : e.expansion.unit.support())
            if (exp <= cutoff && std::find(exps.begin(), exps.end(), exp) == exps.end())
                exps.push_back(exp);
        std::sort(exps.begin(), exps.end());
    }
    const int step = e.expansion.unit.support().size() > 1
                         ? e.expansion.unit.support()[1] - e.expansion.unit.support()[0]
                         : 2;
    const int guards = 3;
    for (int g = 0; g < guards; ++g) exps.push_back(exps.back() + step);

    std::ostringstream engine_os;
    engine_os << "(" << e.expansion.factor.str() << ") * [";
    for (size_t j = 0; j + guards < exps.size(); ++j) {
        if (j) engine_os << ", ";
        engine_os << e.expansion.unit.coeff(exps[j]).str() << " beta^" << exps[j];
    }
    engine_os << "]";

    FitResult fit =
        fit_laurent_oracle(oracle_prior(m, claim.scheme), exps, geometric_grid(0.02, 0.4, 40));

    // The fit must confirm the engine's leading three coefficients; engine
    // zeros must come back at noise level (well under any printed value).
    // The finite-difference pipeline behind the spin-1 claim carries a smooth
    // ~1e-7 relative bias that the fit projects onto the higher basis
    // coefficients, so that claim gets a wider absolute floor (still far
    // below the +-1e-4 arbitration bar).
    const double scale = std::abs(e.expansion.factor.to_double());
    const bool numeric_pipeline = m.id == "spin-one-extended";
    const double floor = (numeric_pipeline ? 1e-4 : 1e-6) * scale;
    bool oracle_ok = fit.residual < 1e-5;
    std::ostringstream oracle_os;
    oracle_os << "fit [";
    int compared = 0;
    for (size_t j = 0; j + guards < exps.size(); ++j) {
        const double engine_c =
            e.expansion.factor.to_double() * e.expansion.unit.coeff(exps[j]).to_double();
        const double fit_c = fit.coefficients[j];
        if (j) oracle_os << ", ";
        oracle_os << fmt(fit_c) << " beta^" << exps[j];
        if (engine_c == 0.0) {
            if (std::abs(fit_c) > floor) oracle_ok = false;
        } else if (compared < 3) {
            if (std::abs(fit_c - engine_c) > std::max(1e-5 * std::abs(engine_c), floor))
                oracle_ok = false;
            ++compared;
        }
    }
    oracle_os << "], residual " << fmt(fit.residual);

    std::string detail;
    if (!exact) {
        std::ostringstream d;
        d << "engine differs from the printed coefficients";
        if (claim.id == "twamclass-third-term")
            d << ": the 7/92160 term sits at beta^3 (engine coeff at beta^2 is exactly "
              << e.expansion.unit.coeff(2).str() << ")";
        if (claim.id == "M6-expansion")
            d << ": engine expansion is finite at beta=0 with constant sqrt(8/175); the printed "
                 "1/beta pole is not reproducible from the printed structure function";
        detail = d.str();
    }
    return {exact, oracle_ok, engine_os.str(), oracle_os.str(), detail};
}

}  // namespace

std::vector<PaperClaim> paper_expectations() {
    std::vector<PaperClaim> claims;

    claims.push_back(expansion_claim(
        "eqslat1", "squeezed-thermal volume element: 1/(2b) - 7b/192 + 667b^3/184320",
        "squeezed-thermal-quantum", Scheme::Quantum, ConstFactor(),
        {{-1, R(1, 2)}, {1, R(-7, 192)}, {3, R(667, 184320)}}));
    claims.push_back(expansion_claim(
        "eqpara", "displaced-thermal volume element: (1/pi)(1 - b^2/8 + 5b^4/384)",
        "displaced-thermal-quantum", Scheme::Quantum, ConstFactor(R(1), R(1), -1),
        {{0, R(1)}, {2, R(-1, 8)}, {4, R(5, 384)}}));
    claims.push_back(expansion_claim(
        "kwekvol", "displaced-squeezed volume element: 1/2 - b^2/16 + 23b^4/3072",
        "displaced-squeezed-quantum", Scheme::Quantum, ConstFactor(),
        {{0, R(1, 2)}, {2, R(-1, 16)}, {4, R(23, 3072)}}));
    claims.push_back(expansion_claim(
        "parthyper-expansion", "spin-half Bures Fisher prior: 1/2 - b^2/32 + 7b^4/3072",
        "spin-half-bures", Scheme::Lavenda, ConstFactor(),
        {{0, R(1, 2)}, {2, R(-1, 32)}, {4, R(7, 3072)}}));
    claims.push_back(expansion_claim(
        "maximal-monotone-expansion",
        "maximal monotone Fisher prior: (1/sqrt3)(1 - b^2/10 + 137b^4/12600)",
        "spin-half-maximal", Scheme::Lavenda, ConstFactor::sqrt_of(R(1, 3)),
        {{0, R(1)}, {2, R(-1, 10)}, {4, R(137, 12600)}}));
    claims.push_back(expansion_claim(
        "twamclass", "squeezed-thermal Fisher prior, leading terms: 1/b - b/96",
        "squeezed-thermal-lavenda", Scheme::Lavenda, ConstFactor(),
        {{-1, R(1)}, {1, R(-1, 96)}}));
    claims.push_back(expansion_claim(
        "twamclass-third-term", "squeezed-thermal Fisher prior, printed third term: 7b^2/92160",
        "squeezed-thermal-lavenda", Scheme::Lavenda, ConstFactor(), {{2, R(7, 92160)}}, true));
    claims.push_back(expansion_claim(
        "M6-expansion", "spin-1 Fisher prior as printed: 1/b - 119b/40 + 1891b^2/140",
        "spin-one-extended", Scheme::Lavenda, ConstFactor(),
        {{-1, R(1)}, {1, R(-119, 40)}, {2, R(1891, 140)}}, true));

    {
        PaperClaim c;
        c.id = "ext3-marginal";
        c.citation = "spin-1 Bures marginal: 3v/(4 sqrt(1-v)) on [0,1]";
        c.kind = ClaimKind::Marginal;
        c.model_id = "spin-one-extended";
        claims.push_back(std::move(c));
    }
    {
        PaperClaim c;
        c.id = "univartwo-marginal";
        c.citation = "spin-half Bures marginal: 2 sqrt(1-z^2)/pi on [-1,1]";
        c.kind = ClaimKind::Marginal;
        c.model_id = "spin-half-bures";
        claims.push_back(std::move(c));
    }
    {
        PaperClaim c;
        c.id = "parthyper-dos";
        c.citation = "Z = 2 I1(beta)/beta equals the Boltzmann integral of the marginal";
        c.kind = ClaimKind::PartitionIdentity;
        c.model_id = "spin-half-bures";
        claims.push_back(std::move(c));
    }
    {
        PaperClaim c;
        c.id = "erfi-partition-dos";
        c.citation = "Z = 3e^-b((1+2b) sqrt(pi) erfi(sqrt b) - 2 sqrt(b) e^b)/(8 b^(3/2))";
        c.kind = ClaimKind::PartitionIdentity;
        c.model_id = "spin-one-extended";
        claims.push_back(std::move(c));
    }
    {
        PaperClaim c;
        c.id = "M2-normalization";
        c.citation = "sech(beta/2)/pi is a proper prior (normalization 1)";
        c.kind = ClaimKind::ScalarMoment;
        c.model_id = "displaced-thermal-quantum";
        c.scheme = Scheme::Quantum;
        c.scalar = 1.0;
        claims.push_back(std::move(c));
    }
    {
        PaperClaim c;
        c.id = "M2-second-moment";
        c.citation = "second moment of beta is pi^2";
        c.kind = ClaimKind::ScalarMoment;
        c.model_id = "displaced-thermal-quantum";
        c.scheme = Scheme::Quantum;
        c.scalar = kPi * kPi;
        claims.push_back(std::move(c));
    }
    {
        PaperClaim c;
        c.id = "M2-mean-catalan";
        c.citation = "mean of beta printed as (8/pi) * 0.95966 (Catalan's constant)";
        c.kind = ClaimKind::ScalarMoment;
        c.model_id = "displaced-thermal-quantum";
        c.scheme = Scheme::Quantum;
        c.scalar = 8.0 * 0.95966 / kPi;  // as printed; the standard value is 0.9159655941...
        c.arbitrated = true;
        claims.push_back(std::move(c));
    }

    for (const ThermalModel& m : registry()) claims.push_back(classification_claim(m));
    return claims;
}

VerificationReport run_verification(int order, double tol) {
    if (order < 10) throw UsageError("run_verification: order must be >= 10");
    if (!(tol > 0.0)) throw UsageError("run_verification: tolerance must be positive");

    VerificationReport report;
    report.order = order;
    report.tolerance = tol;

    for (const PaperClaim& claim : paper_expectations()) {
        ReportRow row;
        row.claim_id = claim.id;
        switch (claim.kind) {
            case ClaimKind::Expansion: {
                ExpansionCheck c = check_expansion(claim, order);
                row.engine = c.engine_str;
                row.oracle = c.oracle_str;
                row.published = render_terms(claim.prefactor, claim.coefficients);
                row.detail = c.detail;
                if (!c.oracle_matches_engine)
                    row.status = ClaimStatus::OracleMismatch;
                else
                    row.status = c.engine_matches_published ? ClaimStatus::Match
                                                            : ClaimStatus::PaperDiscrepancy;
                break;
            }
            case ClaimKind::PartitionIdentity: {
                const ThermalModel& m = lookup(claim.model_id);
                double worst = 0.0;
                std::ostringstream engine_os, oracle_os;
                for (double b : {0.1, 1.0, 5.0}) {
                    const double closed = z_eval(m, b);
                    const double integral = dos_partition(m, b);
                    worst = std::max(worst, std::abs(closed - integral));
                    if (b != 0.1) {
                        engine_os << ", ";
                        oracle_os << ", ";
                    }
                    engine_os << "Z(" << fmt(b) << ")=" << fmt(closed);
                    oracle_os << fmt(integral);
                }
                row.engine = engine_os.str();
                row.oracle = oracle_os.str();
                row.published = "closed form == Boltzmann-weighted structure function";
                row.status = worst <= tol ? ClaimStatus::Match : ClaimStatus::OracleMismatch;
                if (worst > tol) row.detail = "max deviation " + fmt(worst);
                break;
            }
            case ClaimKind::Marginal: {
                const BuresDensity& d = bures_density(claim.model_id);
                double worst = 0.0;
                for (int i = 1; i <= 9; ++i) {
                    const double t = d.lower + (d.upper - d.lower) * i / 10.0;
                    if (t <= d.lower || t >= d.upper) continue;
                    worst = std::max(worst, std::abs(marginal_reduce(d, t) - d.marginal_closed(t)));
                }
                Quadrant q;
                q.integrand = d.marginal_closed;
                q.lower = d.lower;
                q.upper = d.upper;
                q.singularity = d.block_dimension == 3 ? EndpointSingularity::InverseSqrtRight
                                                       : EndpointSingularity::None;
                const double norm = quad(q, 1e-10).value;
                row.engine = "radial reduction, max |diff| " + fmt(worst);
                row.oracle = "normalization " + fmt(norm);
                row.published = claim.citation;
                row.status = (worst <= 1e-8 && std::abs(norm - 1.0) <= 1e-8)
                                 ? ClaimStatus::Match
                                 : ClaimStatus::OracleMismatch;
                break;
            }
            case ClaimKind::ScalarMoment: {
                const ThermalModel& m = lookup(claim.model_id);
                PriorMoments mo = prior_moments(m, claim.scheme);
                double engine_value = 0.0, oracle_value = 0.0, claim_tol = 1e-8;
                if (claim.id == "M2-normalization") {
                    engine_value = 1.0;  // exact: (1/pi) int sech(b/2) db = 1
                    oracle_value = mo.normalization.value();
                    claim_tol = 1e-10;
                } else if (claim.id == "M2-second-moment") {
                    engine_value = kPi * kPi;
                    oracle_value = mo.second_moment.value();
                } else {
                    engine_value = 8.0 * kCatalan / kPi;  // 30-digit Catalan constant
                    oracle_value = mo.mean.value();
                    claim_tol = 1e-4;
                }
                row.engine = fmt(engine_value);
                row.oracle = fmt(oracle_value);
                row.published = fmt(*claim.scalar);
                if (std::abs(engine_value - oracle_value) > claim_tol)
                    row.status = ClaimStatus::OracleMismatch;
                else if (std::abs(*claim.scalar - engine_value) > claim_tol)
                    row.status = ClaimStatus::PaperDiscrepancy;
                else
                    row.status = ClaimStatus::Match;
                if (row.status == ClaimStatus::PaperDiscrepancy && claim.id == "M2-mean-catalan")
                    row.detail = "printed Catalan value 0.95966 vs standard 0.915965594177219...";
                break;
            }
            case ClaimKind::Classification: {
                const ThermalModel& m = lookup(claim.model_id);
                ClassificationResult s =
                    classify_series(prior_expansion(m, claim.scheme, order));
                ClassificationResult n = classify_numeric(m, claim.scheme);
                row.engine = to_string(s.verdict);
                row.oracle = to_string(n.verdict) + " (slope " + fmt(n.slope) + ")";
                row.published = to_string(*claim.verdict);
                if (s.verdict != n.verdict)
                    row.status = ClaimStatus::OracleMismatch;
                else if (s.verdict != *claim.verdict)
                    row.status = ClaimStatus::PaperDiscrepancy;
                else
                    row.status = ClaimStatus::Match;
                if (row.status == ClaimStatus::PaperDiscrepancy)
                    row.detail = "engine and slope oracle agree on " + to_string(s.verdict);
                break;
            }
        }
        report.rows.push_back(std::move(row));
    }

    std::sort(report.rows.begin(), report.rows.end(),
              [](const ReportRow& a, const ReportRow& b) { return a.claim_id < b.claim_id; });
    return report;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "verification report (order " << report.order << ", tol " << fmt(report.tolerance)
       << ")\n";
    for (const ReportRow& r : report.rows) {
        os << "  [" << to_string(r.status) << "] " << r.claim_id << "\n";
        os << "      engine:    " << r.engine << "\n";
        os << "      oracle:    " << r.oracle << "\n";
        os << "      published: " << r.published << "\n";
        if (!r.detail.empty()) os << "      note:      " << r.detail << "\n";
    }
    os << "rows: " << report.rows.size() << ", match " << report.count(ClaimStatus::Match)
       << ", paper-discrepancy " << report.count(ClaimStatus::PaperDiscrepancy)
       << ", oracle-mismatch " << report.count(ClaimStatus::OracleMismatch) << "\n";
    return os.str();
}

}  // namespace thermoprior
