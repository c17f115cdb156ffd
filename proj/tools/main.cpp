#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "thermoprior/errors.hpp"
#include "thermoprior/models.hpp"
#include "thermoprior/schemes.hpp"
#include "thermoprior/verify.hpp"
#include "thermoprior/version.hpp"

using json = nlohmann::ordered_json;
using namespace thermoprior;

namespace {

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt17(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json envelope(const std::string& command, json parameters, json result) {
    json env;
    env["command"] = command;
    env["parameters"] = std::move(parameters);
    env["result"] = std::move(result);
    env["version"] = kVersion;
    return env;
}

void emit(const json& env) { std::cout << env.dump(2) << "\n"; }

json factor_json(const ConstFactor& f) {
    json j;
    j["rational"] = f.rational_part().str();
    j["sqrt"] = f.sqrt_part().get_str();
    j["pi_power"] = f.pi_power();
    j["value"] = f.to_double();
    j["display"] = f.str();
    return j;
}

Scheme pick_scheme(const ThermalModel& m, const std::string& scheme_arg) {
    return scheme_arg.empty() ? m.native_scheme : scheme_from_string(scheme_arg);
}

struct ModelOptions {
    std::string id;
    std::string scheme;
    std::string nu = "1";
    std::string eps0 = "1";

    std::vector<ThermalModel> models() const {
        return registry(ModelParams{Rational::from_string(nu), Rational::from_string(eps0)});
    }
};

void add_param_flags(CLI::App* cmd, ModelOptions& opt) {
    cmd->add_option("--nu", opt.nu, "harmonic-oscillator frequency (rational, default 1)");
    cmd->add_option("--eps0", opt.eps0, "Fermi-oscillator level spacing (rational, default 1)");
}

int cmd_models(bool as_json) {
    json rows = json::array();
    for (const ThermalModel& m : registry()) {
        json r;
        r["id"] = m.id;
        r["description"] = m.description;
        r["family"] = to_string(m.family);
        r["levels"] = m.level_count ? json(*m.level_count) : json("infinite");
        r["degrees_of_freedom"] = m.degrees_of_freedom ? json(*m.degrees_of_freedom) : json();
        r["native_scheme"] = to_string(m.native_scheme);
        r["published_classification"] = to_string(m.published_verdict);
        r["verdict_disputed"] = m.verdict_disputed;
        r["has_structure_function"] = m.dos.has_value();
        if (m.hamiltonian) r["hamiltonian"] = m.hamiltonian->form;
        rows.push_back(std::move(r));
    }
    if (as_json) {
        emit(envelope("models", json::object(), rows));
        return 0;
    }
    for (const auto& r : rows) {
        std::cout << r["id"].get<std::string>() << "\n  " << r["description"].get<std::string>()
                  << "\n  family " << r["family"].get<std::string>() << ", levels "
                  << (r["levels"].is_string() ? r["levels"].get<std::string>()
                                              : std::to_string(r["levels"].get<int>()))
                  << ", scheme " << r["native_scheme"].get<std::string>() << ", published "
                  << r["published_classification"].get<std::string>()
                  << (r["verdict_disputed"].get<bool>() ? " (disputed)" : "") << "\n";
    }
    return 0;
}

int cmd_expand(const ModelOptions& opt, int order, bool as_json) {
    std::vector<ThermalModel> models = opt.models();
    const ThermalModel& m = lookup(opt.id, models);
    const Scheme scheme = pick_scheme(m, opt.scheme);
    PriorExpansion p = prior_expansion(m, scheme, order);
    const bool fold = p.expansion.factor.is_rational();

    json terms = json::array();
    for (int e : p.expansion.unit.support()) {
        Rational c = p.expansion.unit.coeff(e);
        json t;
        t["exponent"] = e;
        if (fold) {
            Rational folded = c * p.expansion.factor.as_rational();
            t["coefficient"] = folded.str();
            t["value"] = folded.to_double();
        } else {
            t["coefficient"] = c.str();
            t["value"] = c.to_double() * p.expansion.factor.to_double();
        }
        terms.push_back(std::move(t));
    }
    const std::string display =
        fold ? to_string(p.expansion.unit.scaled(p.expansion.factor.as_rational()))
             : "(" + p.expansion.factor.str() + ") * (" + to_string(p.expansion.unit) + ")";

    json result;
    result["model"] = m.id;
    result["scheme"] = to_string(scheme);
    result["order"] = p.order;
    result["valuation"] = p.expansion.unit.valuation();
    result["factor"] = factor_json(p.expansion.factor);
    result["terms"] = std::move(terms);
    result["display"] = display;

    if (as_json) {
        json params;
        params["model"] = opt.id;
        params["scheme"] = to_string(scheme);
        params["order"] = order;
        params["nu"] = opt.nu;
        params["eps0"] = opt.eps0;
        emit(envelope("expand", std::move(params), std::move(result)));
        return 0;
    }
    std::cout << "model:  " << m.id << "\nscheme: " << to_string(scheme)
              << "\norder:  " << order << "\nomega(beta) = " << display << "\n";
    for (const auto& t : result["terms"])
        std::cout << "  " << t["coefficient"].get<std::string>() << " beta^"
                  << t["exponent"].get<int>() << "  (~ " << fmt12(t["value"].get<double>())
                  << ")\n";
    return 0;
}

int cmd_classify(const ModelOptions& opt, const std::string& method, bool as_json) {
    std::vector<ThermalModel> models = opt.models();
    const ThermalModel& m = lookup(opt.id, models);
    const Scheme scheme = pick_scheme(m, opt.scheme);

    ClassificationResult r;
    if (method == "series")
        r = classify_series(prior_expansion(m, scheme, 12));
    else if (method == "numeric")
        r = classify_numeric(m, scheme);
    else
        throw UsageError("unknown method '" + method + "' (expected series or numeric)");

    json result;
    result["model"] = m.id;
    result["scheme"] = to_string(scheme);
    result["method"] = method;
    result["verdict"] = to_string(r.verdict);
    if (r.verdict == Verdict::Other) result["pole_order"] = r.pole_order;
    if (r.leading) result["leading"] = factor_json(*r.leading);
    result["leading_value"] = r.leading_value;
    if (method == "numeric") result["slope"] = r.slope;

    if (as_json) {
        json params;
        params["model"] = opt.id;
        params["scheme"] = to_string(scheme);
        params["method"] = method;
        emit(envelope("classify", std::move(params), std::move(result)));
        return 0;
    }
    std::cout << m.id << " (" << to_string(scheme) << ", " << method << "): "
              << to_string(r.verdict);
    if (r.leading)
        std::cout << ", leading " << r.leading->str();
    std::cout << " (~ " << fmt12(r.leading_value) << ")";
    if (method == "numeric") std::cout << ", slope " << fmt12(r.slope);
    std::cout << "\n";
    return 0;
}

int cmd_prior_table(const ModelOptions& opt, double beta_min, double beta_max, int points,
                    int order, bool as_csv, bool as_json) {
    if (!(beta_min > 0.0) || !(beta_max > beta_min) || points < 2)
        throw UsageError("prior-table: need 0 < beta-min < beta-max and points >= 2");
    std::vector<ThermalModel> models = opt.models();
    const ThermalModel& m = lookup(opt.id, models);
    const Scheme scheme = pick_scheme(m, opt.scheme);
    PriorExpansion p = prior_expansion(m, scheme, order);

    json rows = json::array();
    for (int i = 0; i < points; ++i) {
        const double b = beta_min + (beta_max - beta_min) * i / (points - 1);
        const double w = omega_eval(m, b, scheme);
        SeriesEval ev = eval_truncated(p.expansion, b);
        json r;
        r["beta"] = b;
        r["omega"] = w;
        r["truncation_indicator"] = ev.truncation;
        rows.push_back(std::move(r));
    }

    if (as_json) {
        json params;
        params["model"] = opt.id;
        params["scheme"] = to_string(scheme);
        params["beta_min"] = beta_min;
        params["beta_max"] = beta_max;
        params["points"] = points;
        params["order"] = order;
        emit(envelope("prior-table", std::move(params), rows));
        return 0;
    }
    if (as_csv) {
        std::cout << "beta,omega,truncation_indicator\n";
        for (const auto& r : rows)
            std::cout << fmt17(r["beta"].get<double>()) << "," << fmt17(r["omega"].get<double>())
                      << "," << fmt17(r["truncation_indicator"].get<double>()) << "\n";
        return 0;
    }
    std::cout << "beta            omega           truncation\n";
    for (const auto& r : rows)
        std::printf("%-15.6g %-15.10g %-12.3g\n", r["beta"].get<double>(),
                    r["omega"].get<double>(), r["truncation_indicator"].get<double>());
    return 0;
}

int cmd_moments(const ModelOptions& opt, bool as_json) {
    std::vector<ThermalModel> models = opt.models();
    const ThermalModel& m = lookup(opt.id, models);
    const Scheme scheme = pick_scheme(m, opt.scheme);
    PriorMoments mo = prior_moments(m, scheme);

    json result;
    result["model"] = m.id;
    result["scheme"] = to_string(scheme);
    result["proper"] = mo.proper;
    if (mo.proper) {
        result["normalization"] = *mo.normalization;
        result["mean"] = *mo.mean;
        result["second_moment"] = *mo.second_moment;
    } else {
        result["divergence"] = mo.divergence;
    }

    if (as_json) {
        json params;
        params["model"] = opt.id;
        params["scheme"] = to_string(scheme);
        emit(envelope("moments", std::move(params), std::move(result)));
        return 0;
    }
    if (mo.proper)
        std::cout << m.id << " (" << to_string(scheme) << "): proper prior\n  normalization "
                  << fmt12(*mo.normalization) << "\n  mean          " << fmt12(*mo.mean)
                  << "\n  second moment " << fmt12(*mo.second_moment) << "\n";
    else
        std::cout << m.id << " (" << to_string(scheme) << "): improper prior, diverges at "
                  << mo.divergence << "\n";
    return 0;
}

int cmd_verify(int order, double tol, bool as_json) {
    VerificationReport report = run_verification(order, tol);
    if (as_json) {
        json rows = json::array();
        for (const ReportRow& r : report.rows) {
            json j;
            j["claim"] = r.claim_id;
            j["status"] = to_string(r.status);
            j["engine"] = r.engine;
            j["oracle"] = r.oracle;
            j["published"] = r.published;
            if (!r.detail.empty()) j["note"] = r.detail;
            rows.push_back(std::move(j));
        }
        json result;
        result["rows"] = std::move(rows);
        result["match"] = report.count(ClaimStatus::Match);
        result["paper_discrepancy"] = report.count(ClaimStatus::PaperDiscrepancy);
        result["oracle_mismatch"] = report.count(ClaimStatus::OracleMismatch);
        result["ok"] = report.ok();
        json params;
        params["order"] = order;
        params["tol"] = tol;
        emit(envelope("verify", std::move(params), std::move(result)));
    } else {
        std::cout << to_text(report);
    }
    return report.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-temperature expansions and classification of thermal priors over "
                 "inverse temperature"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    bool json_models = false;
    CLI::App* models_cmd = app.add_subcommand("models", "list the model registry");
    models_cmd->add_flag("--json", json_models, "machine-readable output");

    ModelOptions expand_opt;
    int expand_order = 12;
    bool json_expand = false;
    CLI::App* expand_cmd =
        app.add_subcommand("expand", "exact high-temperature expansion of a prior");
    expand_cmd->add_option("model", expand_opt.id, "model id")->required();
    expand_cmd->add_option("--scheme", expand_opt.scheme, "quantum or lavenda");
    expand_cmd->add_option("--order", expand_order, "truncation order (default 12)")
        ->check(CLI::Range(4, 64));
    expand_cmd->add_flag("--json", json_expand, "machine-readable output");
    add_param_flags(expand_cmd, expand_opt);

    ModelOptions classify_opt;
    std::string classify_method = "series";
    bool json_classify = false;
    CLI::App* classify_cmd = app.add_subcommand("classify", "high-temperature verdict");
    classify_cmd->add_option("model", classify_opt.id, "model id")->required();
    classify_cmd->add_option("--scheme", classify_opt.scheme, "quantum or lavenda");
    classify_cmd->add_option("--method", classify_method, "series or numeric");
    classify_cmd->add_flag("--json", json_classify, "machine-readable output");
    add_param_flags(classify_cmd, classify_opt);

    ModelOptions table_opt;
    double beta_min = 0.1, beta_max = 5.0;
    int table_points = 50, table_order = 12;
    bool table_csv = false, json_table = false;
    CLI::App* table_cmd = app.add_subcommand("prior-table", "omega(beta) on a grid");
    table_cmd->add_option("model", table_opt.id, "model id")->required();
    table_cmd->add_option("--scheme", table_opt.scheme, "quantum or lavenda");
    table_cmd->add_option("--beta-min", beta_min, "grid start (default 0.1)");
    table_cmd->add_option("--beta-max", beta_max, "grid end (default 5)");
    table_cmd->add_option("--points", table_points, "grid size (default 50)");
    table_cmd->add_option("--order", table_order, "series order for the truncation column")
        ->check(CLI::Range(4, 64));
    table_cmd->add_flag("--csv", table_csv, "CSV output (beta,omega,truncation_indicator)");
    table_cmd->add_flag("--json", json_table, "machine-readable output");
    add_param_flags(table_cmd, table_opt);

    ModelOptions moments_opt;
    bool json_moments = false;
    CLI::App* moments_cmd = app.add_subcommand("moments", "normalization, mean, second moment");
    moments_cmd->add_option("model", moments_opt.id, "model id")->required();
    moments_cmd->add_option("--scheme", moments_opt.scheme, "quantum or lavenda");
    moments_cmd->add_flag("--json", json_moments, "machine-readable output");
    add_param_flags(moments_cmd, moments_opt);

    int verify_order = 12;
    double verify_tol = 1e-9;
    bool json_verify = false;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the full published-value verification report");
    verify_cmd->add_option("--order", verify_order, "series order (default 12)")
        ->check(CLI::Range(10, 64));
    verify_cmd->add_option("--tol", verify_tol, "identity tolerance (default 1e-9)");
    verify_cmd->add_flag("--json", json_verify, "machine-readable output");

    try {
        app.parse(argc, argv);
        if (models_cmd->parsed()) return cmd_models(json_models);
        if (expand_cmd->parsed()) return cmd_expand(expand_opt, expand_order, json_expand);
        if (classify_cmd->parsed()) return cmd_classify(classify_opt, classify_method, json_classify);
        if (table_cmd->parsed())
            return cmd_prior_table(table_opt, beta_min, beta_max, table_points, table_order,
                                   table_csv, json_table);
        if (moments_cmd->parsed()) return cmd_moments(moments_opt, json_moments);
        if (verify_cmd->parsed()) return cmd_verify(verify_order, verify_tol, json_verify);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << " (best estimate " << e.best_estimate
                  << ")\n";
        return 1;
    }
    return 1;
}
