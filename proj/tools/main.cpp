// contactgeo: exact verification of contact pseudo-metric structures,
// curvature, classification, and eta-Ricci soliton checks on JSON manifold
// documents.
//
// Exit codes: 0 every requested check passed, 1 a mathematical check
// failed, 2 input/parse/usage error.

#include "contactgeo/curvature.hpp"
#include "contactgeo/errors.hpp"
#include "contactgeo/expr.hpp"
#include "contactgeo/manifold_io.hpp"
#include "contactgeo/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace contactgeo;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string format = "human";
    bool json() const { return format == "json"; }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw ParseError("flag " + flag + ": " + e.what());
    }
}

int parse_epsilon_flag(const std::string& text) {
    if (text == "1" || text == "+1") return 1;
    if (text == "-1") return -1;
    throw ParseError("flag --epsilon: expected +1 or -1, got '" + text + "'");
}

// Resolve the soliton constants: explicit flags override the document block.
std::pair<Rational, Rational> resolve_constants(const LoadedManifold& m,
                                                const std::optional<std::string>& lambda_flag,
                                                const std::optional<std::string>& mu_flag) {
    std::optional<Rational> lambda, mu;
    if (m.soliton) {
        lambda = m.soliton->lambda;
        mu = m.soliton->mu;
    }
    if (lambda_flag) lambda = parse_rational_flag(*lambda_flag, "--lambda");
    if (mu_flag) mu = parse_rational_flag(*mu_flag, "--mu");
    if (!lambda || !mu)
        throw ParseError("soliton constants required: pass --lambda/--mu or add a soliton block");
    return {*lambda, *mu};
}

int run_verify(const std::string& path, const Options& opt) {
    LoadedManifold m = load_manifold_file(path);
    StructureReport rep = structure_identity_report(m.structure);
    if (opt.json()) {
        json out;
        out["command"] = "verify";
        out["name"] = m.document.name;
        out["report"] = report_to_json(rep);
        emit(out);
    } else {
        std::cout << "identity suite for '" << m.document.name << "'\n"
                  << report_to_table(rep);
    }
    return rep.all_hold() ? kExitPass : kExitCheckFailed;
}

int run_curvature(const std::string& path, const Options& opt) {
    LoadedManifold m = load_manifold_file(path);
    const TensorField& g = m.structure.metric();
    RationalFunction det = metric_determinant(g);
    ConnectionCoefficients conn = christoffel(g);
    TensorField ric = ricci(g);
    RationalFunction r = scalar_curvature(g);
    size_t dim = g.dim();

    json gamma = json::object();
    size_t nonzero = 0;
    for (size_t h = 0; h < dim; ++h)
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = i; j < dim; ++j) {
                const RationalFunction& c = conn.gamma(h, i, j);
                if (c.is_zero()) continue;
                ++nonzero;
                gamma[std::to_string(h) + "," + std::to_string(i) + "," + std::to_string(j)] =
                    c.to_string();
            }
    if (opt.json()) {
        json out;
        out["command"] = "curvature";
        out["name"] = m.document.name;
        out["metric_determinant"] = det.to_string();
        out["christoffel_nonzero_count"] = nonzero;
        out["christoffel"] = std::move(gamma);
        json ric_rows = json::array();
        for (size_t i = 0; i < dim; ++i) {
            json row = json::array();
            for (size_t j = 0; j < dim; ++j) row.push_back(ric.at({i, j}).to_string());
            ric_rows.push_back(std::move(row));
        }
        out["ricci"] = std::move(ric_rows);
        out["scalar_curvature"] = r.to_string();
        emit(out);
    } else {
        std::cout << "curvature of '" << m.document.name << "'\n";
        std::cout << "det g = " << det.to_string() << "\n";
        std::cout << "christoffel symbols (" << nonzero << " nonzero, upper-lower-lower):\n";
        for (auto& [key, value] : gamma.items())
            std::cout << "  gamma[" << key << "] = " << value.get<std::string>() << "\n";
        std::cout << "ricci tensor:\n";
        for (size_t i = 0; i < dim; ++i) {
            std::cout << "  [";
            for (size_t j = 0; j < dim; ++j)
                std::cout << (j ? ", " : " ") << ric.at({i, j}).to_string();
            std::cout << " ]\n";
        }
        std::cout << "scalar curvature r = " << r.to_string() << "\n";
    }
    return kExitPass;
}

int run_classify(const std::string& path, const Options& opt) {
    LoadedManifold m = load_manifold_file(path);
    ClassificationResult c;
    try {
        c = classify(m.structure);
    } catch (const NotContact& e) {
        if (opt.json()) {
            json out;
            out["command"] = "classify";
            out["name"] = m.document.name;
            out["error"] = e.what();
            emit(out);
        } else {
            std::cout << e.what() << "\n";
        }
        return kExitCheckFailed;
    }
    if (opt.json()) {
        json out;
        out["command"] = "classify";
        out["name"] = m.document.name;
        out["classification"] = classification_to_json(c);
        emit(out);
    } else {
        std::cout << "classification of '" << m.document.name << "'\n"
                  << classification_to_table(c);
    }
    return kExitPass;
}

int run_soliton(const std::string& path, const std::optional<std::string>& lambda_flag,
                const std::optional<std::string>& mu_flag, const Options& opt) {
    LoadedManifold m = load_manifold_file(path);
    if (!m.soliton || !m.soliton->has_vector())
        throw ParseError("document carries no soliton vector field"
                         " (use gradient-soliton for scalar potentials)");
    auto [lambda, mu] = resolve_constants(m, lambda_flag, mu_flag);
    SolitonData data = SolitonData::with_vector(m.soliton->vector(), lambda, mu);
    SolitonVerdict v = soliton_residual(m.structure, data);
    bool tau_naming = false;
    try {
        ClassificationResult c = classify(m.structure);
        tau_naming = c.kappa_mu && c.kappa_mu->mu.has_value();
    } catch (const NotContact&) {
    }
    if (opt.json()) {
        json out;
        out["command"] = "soliton";
        out["name"] = m.document.name;
        out["verdict"] = verdict_to_json(v, lambda, mu, tau_naming);
        emit(out);
    } else {
        std::cout << verdict_to_table(v, lambda, mu, tau_naming);
    }
    return v.is_soliton ? kExitPass : kExitCheckFailed;
}

int run_gradient_soliton(const std::string& path, const std::optional<std::string>& potential_flag,
                         const std::optional<std::string>& lambda_flag,
                         const std::optional<std::string>& mu_flag, const Options& opt) {
    LoadedManifold m = load_manifold_file(path);
    std::optional<RationalFunction> f;
    if (potential_flag) {
        try {
            f = parse_expression(*potential_flag, m.structure.chart().vars());
        } catch (const Error& e) {
            throw ParseError(std::string("flag --potential: ") + e.what());
        }
    } else if (m.soliton && !m.soliton->has_vector()) {
        f = m.soliton->scalar();
    }
    if (!f) throw ParseError("no scalar potential: pass --potential or add one to the document");
    auto [lambda, mu] = resolve_constants(m, lambda_flag, mu_flag);
    SolitonData data = SolitonData::with_potential(*f, lambda, mu);
    SolitonVerdict v = gradient_soliton_residual(m.structure, data);
    bool tau_naming = false;
    try {
        ClassificationResult c = classify(m.structure);
        tau_naming = c.kappa_mu && c.kappa_mu->mu.has_value();
    } catch (const NotContact&) {
    }
    if (opt.json()) {
        json out;
        out["command"] = "gradient-soliton";
        out["name"] = m.document.name;
        out["verdict"] = verdict_to_json(v, lambda, mu, tau_naming);
        emit(out);
    } else {
        std::cout << verdict_to_table(v, lambda, mu, tau_naming);
    }
    return v.is_soliton ? kExitPass : kExitCheckFailed;
}

int run_deform(const std::string& path, const std::string& t_text, const std::string& out_path,
               const Options& opt) {
    LoadedManifold m = load_manifold_file(path);
    Rational t = parse_rational_flag(t_text, "--t");
    ContactStructure deformed = d_homothetic_deform(m.structure, t);
    ManifoldDocument doc = document_from_structure(
        deformed, m.soliton, m.document.name + "-deformed-t-" + t.to_string());
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write file: " + out_path);
    out << serialize_document(doc);
    out.close();
    StructureReport rep = verify_contact_condition(deformed);
    if (opt.json()) {
        json j;
        j["command"] = "deform";
        j["name"] = m.document.name;
        j["t"] = t.to_string();
        j["output"] = out_path;
        j["contact_condition"] = report_to_json(rep);
        emit(j);
    } else {
        std::cout << "deformed '" << m.document.name << "' by t = " << t.to_string() << " -> "
                  << out_path << "\n"
                  << report_to_table(rep);
    }
    return rep.all_hold() ? kExitPass : kExitCheckFailed;
}

int run_theorems(const std::string& path, const std::optional<std::string>& lambda_flag,
                 const std::optional<std::string>& mu_flag, const Options& opt) {
    LoadedManifold m = load_manifold_file(path);
    const ContactStructure& s = m.structure;

    std::optional<SolitonData> data;
    if (m.soliton) {
        auto [lambda, mu] = resolve_constants(m, lambda_flag, mu_flag);
        data = m.soliton->has_vector()
                   ? SolitonData::with_vector(m.soliton->vector(), lambda, mu)
                   : SolitonData::with_potential(m.soliton->scalar(), lambda, mu);
    }
    std::vector<TheoremReport> reports = theorem_suite(s, data);
    if (!data && lambda_flag && mu_flag) {
        // constants without a potential: the trace identity with the
        // soliton existence assumed
        auto [lambda, mu] = resolve_constants(m, lambda_flag, mu_flag);
        reports.push_back(verify_eta_einstein_trace_identity(s, lambda, mu));
    }
    std::optional<StructureReport> kappa_mu_package = kappa_mu_package_if_applicable(s);

    bool violation = false;
    for (const TheoremReport& rep : reports)
        if (rep.overall() == TheoremReport::Overall::Violation) violation = true;
    if (kappa_mu_package && !kappa_mu_package->all_hold()) violation = true;

    if (opt.json()) {
        json out;
        out["command"] = "theorems";
        out["name"] = m.document.name;
        json list = json::array();
        for (const TheoremReport& rep : reports) list.push_back(theorem_to_json(rep));
        out["theorems"] = std::move(list);
        if (kappa_mu_package)
            out["kappa_mu_identity_package"] = report_to_json(*kappa_mu_package);
        emit(out);
    } else {
        std::cout << "theorem reports for '" << m.document.name << "'\n";
        for (const TheoremReport& rep : reports) std::cout << theorem_to_table(rep);
        if (kappa_mu_package)
            std::cout << "kappa-mu identity package:\n" << report_to_table(*kappa_mu_package);
    }
    return violation ? kExitCheckFailed : kExitPass;
}

int run_example(const std::string& eps_text, const std::string& lambda_text,
                const std::string& mu_text, const std::optional<std::string>& out_path) {
    int eps = parse_epsilon_flag(eps_text);
    Rational lambda = parse_rational_flag(lambda_text, "--lambda");
    Rational mu = parse_rational_flag(mu_text, "--mu");
    ManifoldDocument doc = builtin_example_document(eps, lambda, mu);
    std::string text = serialize_document(doc);
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) throw ParseError("cannot write file: " + *out_path);
        out << text;
    } else {
        std::cout << text;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tensor calculus for contact pseudo-metric structures"};
    app.require_subcommand(1);

    std::string path, t_text, out_path;
    std::optional<std::string> lambda_flag, mu_flag, potential_flag, example_out;
    std::string eps_text = "+1", ex_lambda = "6", ex_mu = "0";
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"human", "json"}))
            ->default_val("human");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the full identity suite");
    verify->add_option("document", path, "manifold document")->required();
    add_format(verify);

    CLI::App* curvature = app.add_subcommand("curvature", "christoffel summary, Ric and r");
    curvature->add_option("document", path)->required();
    add_format(curvature);

    CLI::App* classify_cmd = app.add_subcommand("classify", "detect structure classes");
    classify_cmd->add_option("document", path)->required();
    add_format(classify_cmd);

    CLI::App* soliton = app.add_subcommand("soliton", "check the eta-Ricci soliton equation");
    soliton->add_option("document", path)->required();
    soliton->add_option("--lambda", lambda_flag, "soliton constant lambda (p/q)");
    soliton->add_option("--mu", mu_flag, "soliton constant mu (p/q)");
    add_format(soliton);

    CLI::App* gradient = app.add_subcommand("gradient-soliton",
                                            "check the gradient eta-Ricci soliton equation");
    gradient->add_option("document", path)->required();
    gradient->add_option("--potential", potential_flag, "scalar potential expression");
    gradient->add_option("--lambda", lambda_flag, "soliton constant lambda (p/q)");
    gradient->add_option("--mu", mu_flag, "soliton constant mu (p/q)");
    add_format(gradient);

    CLI::App* deform = app.add_subcommand("deform", "apply a D-homothetic deformation");
    deform->add_option("document", path)->required();
    deform->add_option("--t", t_text, "deformation parameter (p/q, nonzero)")->required();
    deform->add_option("--out", out_path, "output document path")->required();
    add_format(deform);

    CLI::App* theorems = app.add_subcommand("theorems", "run every applicable theorem report");
    theorems->add_option("document", path)->required();
    theorems->add_option("--lambda", lambda_flag, "soliton constant lambda (p/q)");
    theorems->add_option("--mu", mu_flag, "soliton constant mu (p/q)");
    add_format(theorems);

    CLI::App* example = app.add_subcommand("example", "emit the built-in R^3 example document");
    example->add_option("--epsilon", eps_text, "+1 or -1")->default_val("+1");
    example->add_option("--lambda", ex_lambda, "lambda (p/q)")->default_val("6");
    example->add_option("--mu", ex_mu, "mu (p/q)")->default_val("0");
    example->add_option("--out", example_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (verify->parsed()) return run_verify(path, opt);
        if (curvature->parsed()) return run_curvature(path, opt);
        if (classify_cmd->parsed()) return run_classify(path, opt);
        if (soliton->parsed()) return run_soliton(path, lambda_flag, mu_flag, opt);
        if (gradient->parsed())
            return run_gradient_soliton(path, potential_flag, lambda_flag, mu_flag, opt);
        if (deform->parsed()) return run_deform(path, t_text, out_path, opt);
        if (theorems->parsed()) return run_theorems(path, lambda_flag, mu_flag, opt);
        if (example->parsed()) return run_example(eps_text, ex_lambda, ex_mu, example_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UnknownVariable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ZeroParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInputError;
}
