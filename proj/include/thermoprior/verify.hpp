#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thermoprior/models.hpp"
#include "thermoprior/schemes.hpp"

namespace thermoprior {

enum class ClaimKind { Expansion, ScalarMoment, PartitionIdentity, Marginal, Classification };

/// One published value with its source anchor. Read-only data: the table is
/// the artifact's record of what the literature prints, kept verbatim even
/// where the engine disagrees.
struct PaperClaim {
    std::string id;
    std::string citation;  // source label plus the printed form
    ClaimKind kind;
    std::string model_id;
    Scheme scheme = Scheme::Lavenda;

    // Expansion payload: printed prefactor times printed coefficients.
    ConstFactor prefactor;
    std::vector<std::pair<int, Rational>> coefficients;

    std::optional<double> scalar;      // ScalarMoment payload
    std::optional<Verdict> verdict;    // Classification payload
    bool arbitrated = false;           // published value is itself under oracle review
};

enum class ClaimStatus { Match, PaperDiscrepancy, OracleMismatch };

std::string to_string(ClaimStatus s);

struct ReportRow {
    std::string claim_id;
    std::string engine;     // exact-engine value
    std::string oracle;     // independent numeric value
    std::string published;  // printed value
    ClaimStatus status;
    std::string detail;
};

struct VerificationReport {
    int order;
    double tolerance;
    std::vector<ReportRow> rows;  // sorted by claim id

    bool ok() const;  // no oracle mismatches
    int count(ClaimStatus s) const;
};

/// The full claim table (>= 14 claims: seven expansions, two marginals,
/// two partition identities, moment claims, one classification per model).
std::vector<PaperClaim> paper_expectations();

/// Evaluates every claim three ways where applicable (exact engine series,
/// closed-form numerics, fit/quadrature oracle). order >= 10.
/// An engine-vs-oracle disagreement marks the row OracleMismatch (a failing
/// build); engine+oracle agreeing against the printed value marks it
/// PaperDiscrepancy (informational).
VerificationReport run_verification(int order, double tol);

std::string to_text(const VerificationReport& report);

}  // namespace thermoprior
