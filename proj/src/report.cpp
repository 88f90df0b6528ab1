#include "contactgeo/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace contactgeo {

namespace {

using json = nlohmann::ordered_json;

json residual_components(const TensorField& t) {
    json obj = json::object();
    std::vector<size_t> idx(t.rank(), 0);
    do {
        const RationalFunction& c = t.at(idx);
        if (c.is_zero()) continue;
        std::string key;
        for (size_t i = 0; i < idx.size(); ++i) key += (i ? "," : "") + std::to_string(idx[i]);
        obj[key] = c.to_string();
    } while (next_multi_index(idx, t.dim()));
    return obj;
}

std::string status_name(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::Holds: return "holds";
        case HypothesisStatus::Fails: return "fails";
        case HypothesisStatus::Assumed: return "assumed";
    }
    return "?";
}

} // namespace

json report_to_json(const StructureReport& rep) {
    StructureReport sorted = rep;
    sorted.sort_by_name();
    json checks = json::array();
    for (const IdentityCheck& c : sorted.checks) {
        json item;
        item["identity"] = c.name;
        item["holds"] = c.holds;
        if (!c.holds) item["residual"] = c.residual;
        checks.push_back(std::move(item));
    }
    json out;
    out["all_hold"] = sorted.all_hold();
    out["checks"] = std::move(checks);
    return out;
}

json classification_to_json(const ClassificationResult& c) {
    json out;
    out["is_contact"] = c.is_contact;
    out["is_k_contact"] = c.is_k_contact;
    out["is_sasakian"] = c.is_sasakian;
    if (c.eta_einstein) {
        json ee;
        ee["a"] = c.eta_einstein->first.to_string();
        ee["b"] = c.eta_einstein->second.to_string();
        out["eta_einstein"] = std::move(ee);
    } else {
        out["eta_einstein"] = nullptr;
    }
    out["eta_einstein_nonconstant"] = c.eta_einstein_nonconstant;
    if (c.kappa_mu) {
        json km;
        km["kappa"] = c.kappa_mu->kappa.to_string();
        km["mu"] = c.kappa_mu->mu ? json(c.kappa_mu->mu->to_string()) : json("indeterminate");
        out["kappa_mu"] = std::move(km);
    } else {
        out["kappa_mu"] = nullptr;
    }
    out["d_homothetically_fixed"] = c.d_fixed;
    return out;
}

json verdict_to_json(const SolitonVerdict& v, const Rational& lambda, const Rational& mu,
                     bool tau_naming) {
    json out;
    out["is_soliton"] = v.is_soliton;
    out["lambda"] = lambda.to_string();
    out[tau_naming ? "tau" : "mu"] = mu.to_string();
    out["soliton_class"] = to_string(v.soliton_class);
    out["potential_is_killing"] = v.potential_is_killing;
    out["lie_phi_vanishes"] = v.lie_phi_vanishes;
    out["residual"] = residual_components(v.residual);
    return out;
}

json theorem_to_json(const TheoremReport& rep) {
    json out;
    out["id"] = rep.id;
    out["overall"] = to_string(rep.overall());
    json hyp = json::array();
    for (const HypothesisCheck& h : rep.hypotheses) {
        json item;
        item["name"] = h.name;
        item["status"] = status_name(h.status);
        if (!h.detail.empty()) item["detail"] = h.detail;
        hyp.push_back(std::move(item));
    }
    out["hypotheses"] = std::move(hyp);
    json con = json::array();
    for (const ConclusionCheck& c : rep.conclusions) {
        json item;
        item["name"] = c.name;
        item["holds"] = c.holds;
        if (!c.holds) item["residual"] = c.residual;
        con.push_back(std::move(item));
    }
    out["conclusions"] = std::move(con);
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

std::string report_to_table(const StructureReport& rep) {
    StructureReport sorted = rep;
    sorted.sort_by_name();
    size_t width = 10;
    for (const IdentityCheck& c : sorted.checks) width = std::max(width, c.name.size());
    std::ostringstream out;
    for (const IdentityCheck& c : sorted.checks) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << c.name
            << (c.holds ? "PASS" : "FAIL") << "\n";
        if (!c.holds && !c.residual.empty()) out << "    residual: " << c.residual << "\n";
    }
    out << (sorted.all_hold() ? "all identities hold\n" : "some identities FAILED\n");
    return out.str();
}

std::string classification_to_table(const ClassificationResult& c) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "contact:                  " << yn(c.is_contact) << "\n";
    out << "K-contact:                " << yn(c.is_k_contact) << "\n";
    out << "Sasakian:                 " << yn(c.is_sasakian) << "\n";
    out << "eta-Einstein:             ";
    if (c.eta_einstein)
        out << "a = " << c.eta_einstein->first.to_string()
            << ", b = " << c.eta_einstein->second.to_string() << "\n";
    else if (c.eta_einstein_nonconstant)
        out << "residual vanishes, coefficients not constant (not certified)\n";
    else
        out << "no\n";
    out << "(kappa, mu) nullity:      ";
    if (c.kappa_mu)
        out << "kappa = " << c.kappa_mu->kappa.to_string() << ", mu = "
            << (c.kappa_mu->mu ? c.kappa_mu->mu->to_string() : "indeterminate") << "\n";
    else
        out << "no\n";
    out << "D-homothetically fixed:   " << yn(c.d_fixed) << "\n";
    return out.str();
}

std::string verdict_to_table(const SolitonVerdict& v, const Rational& lambda, const Rational& mu,
                             bool tau_naming) {
    std::ostringstream out;
    out << (tau_naming ? "gradient eta-Ricci soliton (lambda = " : "eta-Ricci soliton (lambda = ")
        << lambda.to_string() << (tau_naming ? ", tau = " : ", mu = ") << mu.to_string()
        << "): " << (v.is_soliton ? "YES" : "NO") << "\n";
    out << "soliton class:        " << to_string(v.soliton_class) << "\n";
    out << "potential is Killing: " << (v.potential_is_killing ? "yes" : "no") << "\n";
    out << "L_V phi vanishes:     " << (v.lie_phi_vanishes ? "yes" : "no") << "\n";
    if (!v.is_soliton) out << "residual: " << residual_description(v.residual) << "\n";
    return out.str();
}

std::string theorem_to_table(const TheoremReport& rep) {
    std::ostringstream out;
    out << "[" << to_string(rep.overall()) << "] " << rep.id << "\n";
    for (const HypothesisCheck& h : rep.hypotheses) {
        out << "  hypothesis " << std::left << std::setw(36) << h.name << " "
            << status_name(h.status);
        if (!h.detail.empty()) out << "  (" << h.detail << ")";
        out << "\n";
    }
    for (const ConclusionCheck& c : rep.conclusions) {
        out << "  conclusion " << std::left << std::setw(36) << c.name << " "
            << (c.holds ? "holds" : "FAILS");
        if (!c.holds && !c.residual.empty()) out << "  residual: " << c.residual;
        out << "\n";
    }
    if (!rep.note.empty()) out << "  note: " << rep.note << "\n";
    return out.str();
}

} // namespace contactgeo
