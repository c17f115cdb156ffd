#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thermoprior/errors.hpp"
#include "thermoprior/models.hpp"
#include "thermoprior/numeric_oracles.hpp"
#include "thermoprior/schemes.hpp"
#include "thermoprior/special_functions.hpp"
#include "thermoprior/verify.hpp"
#include "thermoprior/version.hpp"

namespace py = pybind11;
using namespace thermoprior;

namespace {

Scheme pick_scheme(const ThermalModel& m, const std::string& scheme) {
    return scheme.empty() ? m.native_scheme : scheme_from_string(scheme);
}

py::dict factor_dict(const ConstFactor& f) {
    py::dict d;
    d["rational"] = f.rational_part().str();
    d["sqrt"] = f.sqrt_part().get_str();
    d["pi_power"] = f.pi_power();
    d["value"] = f.to_double();
    d["display"] = f.str();
    return d;
}

py::list models_list() {
    py::list out;
    for (const ThermalModel& m : registry()) {
        py::dict d;
        d["id"] = m.id;
        d["description"] = m.description;
        d["family"] = to_string(m.family);
        if (m.level_count)
            d["levels"] = *m.level_count;
        else
            d["levels"] = py::none();
        if (m.degrees_of_freedom)
            d["degrees_of_freedom"] = *m.degrees_of_freedom;
        else
            d["degrees_of_freedom"] = py::none();
        d["native_scheme"] = to_string(m.native_scheme);
        d["published_classification"] = to_string(m.published_verdict);
        d["verdict_disputed"] = m.verdict_disputed;
        out.append(std::move(d));
    }
    return out;
}

py::dict expand_py(const std::string& id, const std::string& scheme, int order) {
    const ThermalModel& m = lookup(id);
    PriorExpansion p = prior_expansion(m, pick_scheme(m, scheme), order);
    py::dict d;
    d["model"] = m.id;
    d["scheme"] = to_string(p.scheme);
    d["order"] = p.order;
    d["valuation"] = p.expansion.unit.valuation();
    d["factor"] = factor_dict(p.expansion.factor);
    py::list terms;
    for (int e : p.expansion.unit.support()) {
        py::dict t;
        t["exponent"] = e;
        t["coefficient"] = p.expansion.unit.coeff(e).str();
        t["value"] = p.expansion.unit.coeff(e).to_double() * p.expansion.factor.to_double();
        terms.append(std::move(t));
    }
    d["terms"] = std::move(terms);
    d["display"] = to_string(p.expansion);
    return d;
}

py::dict classify_py(const std::string& id, const std::string& scheme, const std::string& method) {
    const ThermalModel& m = lookup(id);
    const Scheme s = pick_scheme(m, scheme);
    ClassificationResult r;
    if (method == "series")
        r = classify_series(prior_expansion(m, s, 12));
    else if (method == "numeric")
        r = classify_numeric(m, s);
    else
        throw UsageError("unknown method '" + method + "'");
    py::dict d;
    d["model"] = m.id;
    d["scheme"] = to_string(s);
    d["method"] = method;
    d["verdict"] = to_string(r.verdict);
    d["leading_value"] = r.leading_value;
    if (r.leading) d["leading"] = factor_dict(*r.leading);
    if (method == "numeric") d["slope"] = r.slope;
    return d;
}

py::dict moments_py(const std::string& id, const std::string& scheme) {
    const ThermalModel& m = lookup(id);
    PriorMoments mo = prior_moments(m, pick_scheme(m, scheme));
    py::dict d;
    d["model"] = m.id;
    d["proper"] = mo.proper;
    if (mo.proper) {
        d["normalization"] = *mo.normalization;
        d["mean"] = *mo.mean;
        d["second_moment"] = *mo.second_moment;
    } else {
        d["divergence"] = mo.divergence;
    }
    return d;
}

py::dict verify_py(int order, double tol) {
    VerificationReport r = run_verification(order, tol);
    py::dict d;
    py::list rows;
    for (const ReportRow& row : r.rows) {
        py::dict x;
        x["claim"] = row.claim_id;
        x["status"] = to_string(row.status);
        x["engine"] = row.engine;
        x["oracle"] = row.oracle;
        x["published"] = row.published;
        x["note"] = row.detail;
        rows.append(std::move(x));
    }
    d["rows"] = std::move(rows);
    d["match"] = r.count(ClaimStatus::Match);
    d["paper_discrepancy"] = r.count(ClaimStatus::PaperDiscrepancy);
    d["oracle_mismatch"] = r.count(ClaimStatus::OracleMismatch);
    d["ok"] = r.ok();
    return d;
}

double omega_py(const std::string& id, double beta, const std::string& scheme) {
    const ThermalModel& m = lookup(id);
    return omega_eval(m, beta, pick_scheme(m, scheme));
}

double z_py(const std::string& id, double beta) { return z_eval(lookup(id), beta); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "High-temperature expansions and classification of thermal priors "
              "over inverse temperature";
    m.attr("__version__") = kVersion;

    m.def("models", &models_list, "Model registry with metadata");
    m.def("expand", &expand_py, py::arg("model"), py::arg("scheme") = "", py::arg("order") = 12,
          "Exact high-temperature expansion of the prior (coefficients as 'num/den' strings)");
    m.def("classify", &classify_py, py::arg("model"), py::arg("scheme") = "",
          py::arg("method") = "series", "High-temperature verdict");
    m.def("moments", &moments_py, py::arg("model"), py::arg("scheme") = "",
          "Normalization, mean and second moment of the prior");
    m.def("verify", &verify_py, py::arg("order") = 12, py::arg("tol") = 1e-9,
          "Full verification report against the published values");
    m.def("omega", &omega_py, py::arg("model"), py::arg("beta"), py::arg("scheme") = "",
          "Numeric prior density");
    m.def("z", &z_py, py::arg("model"), py::arg("beta"), "Closed-form partition function");
    m.def("bessel_i", &bessel_i, py::arg("n"), py::arg("x"));
    m.def("erfi", &erfi, py::arg("x"));
    m.def("langevin", &langevin, py::arg("x"));

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
}
