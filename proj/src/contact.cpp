#include "contactgeo/contact.hpp"

#include "contactgeo/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace contactgeo {

void StructureReport::add(std::string name, bool holds, std::string residual) {
    checks.push_back({std::move(name), holds, std::move(residual)});
}

bool StructureReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.holds; });
}

const IdentityCheck* StructureReport::find(const std::string& name) const {
    for (const IdentityCheck& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

void StructureReport::sort_by_name() {
    std::sort(checks.begin(), checks.end(),
              [](const IdentityCheck& a, const IdentityCheck& b) { return a.name < b.name; });
}

std::string residual_description(const TensorField& t) {
    std::ostringstream out;
    int shown = 0;
    std::vector<size_t> idx(t.rank(), 0);
    do {
        const RationalFunction& c = t.at(idx);
        if (c.is_zero()) continue;
        if (shown == 6) {
            out << "; ...";
            break;
        }
        if (shown) out << "; ";
        out << "[";
        for (size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
        out << "] = " << c.to_string();
        ++shown;
    } while (next_multi_index(idx, t.dim()));
    return out.str();
}

std::string residual_description(const RationalFunction& f) { return f.to_string(); }

std::optional<Rational> rf_constant(const RationalFunction& f) {
    if (!f.is_constant()) return std::nullopt;
    return f.constant_value();
}

namespace {

void require_shapes(const Chart& chart, const TensorField& phi, const VectorField& xi,
                    const TensorField& eta, const TensorField& g) {
    if (!chart.odd_dimensional() || chart.dim() < 3)
        throw InvariantViolation("contact structure needs an odd chart dimension >= 3");
    auto check = [&](const TensorField& t, std::vector<Variance> want, const char* what) {
        if (t.chart() != chart) throw ChartMismatch(std::string(what) + " uses a different chart");
        if (t.slots() != want) throw SlotMismatch(std::string(what) + " has the wrong valence");
    };
    check(phi, {Variance::Upper, Variance::Lower}, "phi");
    check(xi, {Variance::Upper}, "xi");
    check(eta, {Variance::Lower}, "eta");
    check(g, {Variance::Lower, Variance::Lower}, "g");
    for (size_t i = 0; i < chart.dim(); ++i)
        for (size_t j = i + 1; j < chart.dim(); ++j)
            if (g.at({i, j}) != g.at({j, i}))
                throw InvariantViolation("metric matrix is not symmetric");
}

RationalFunction pair_form_vector(const TensorField& form, const VectorField& v) {
    RationalFunction r = RationalFunction::zero(form.chart().vars());
    for (size_t i = 0; i < form.dim(); ++i) r = r + form.at({i}) * v.at({i});
    return r;
}

RationalFunction metric_pair(const TensorField& g, const VectorField& a, const VectorField& b) {
    RationalFunction r = RationalFunction::zero(g.chart().vars());
    for (size_t i = 0; i < g.dim(); ++i)
        for (size_t j = 0; j < g.dim(); ++j) r = r + g.at({i, j}) * a.at({i}) * b.at({j});
    return r;
}

// g_ab phi^a_i phi^b_j
TensorField phi_pullback_metric(const TensorField& g, const TensorField& phi) {
    TensorField half = contract(tensor_product(g, phi), 1, 2); // g_ia phi^a_j
    return contract(tensor_product(phi, half), 0, 2);          // phi^a_i (g_ab phi^b_j)
}

} // namespace

ContactStructure::ContactStructure(Chart chart, TensorField phi, VectorField xi, TensorField eta,
                                   TensorField g, int eps)
    : chart_(std::move(chart)),
      phi_(std::move(phi)),
      xi_(std::move(xi)),
      eta_(std::move(eta)),
      g_(std::move(g)),
      eps_(eps) {}

ContactStructure ContactStructure::create_unchecked(Chart chart, TensorField phi, VectorField xi,
                                                    TensorField eta, TensorField g, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw InvariantViolation("epsilon must be +1 or -1");
    require_shapes(chart, phi, xi, eta, g);
    return ContactStructure(std::move(chart), std::move(phi), std::move(xi), std::move(eta),
                            std::move(g), epsilon);
}

ContactStructure ContactStructure::create(Chart chart, TensorField phi, VectorField xi,
                                          TensorField eta, TensorField g, int epsilon) {
    ContactStructure s = create_unchecked(std::move(chart), std::move(phi), std::move(xi),
                                          std::move(eta), std::move(g), epsilon);
    StructureReport report = verify_structure(s);
    if (!report.all_hold()) {
        std::string what = "almost-contact axioms failed:";
        for (const IdentityCheck& c : report.checks) {
            if (!c.holds) what += " " + c.name + " (residual " + c.residual + ");";
        }
        throw InvariantViolation(what);
    }
    return s;
}

TensorField d_one_form(const TensorField& eta) {
    if (eta.slots() != std::vector<Variance>{Variance::Lower})
        throw SlotMismatch("d expects a one-form");
    TensorField r = make_metric_shape(eta.chart());
    Rational half(1, 2);
    for (size_t i = 0; i < eta.dim(); ++i)
        for (size_t j = 0; j < eta.dim(); ++j)
            r.at_mut({i, j}) = (eta.at({j}).partial(i) - eta.at({i}).partial(j)).scaled(half);
    return r;
}

TensorField fundamental_two_form(const TensorField& g, const TensorField& phi) {
    return contract(tensor_product(g, phi), 1, 2); // Phi_ij = g_ia phi^a_j
}

TensorField nijenhuis(const TensorField& phi) {
    const Chart& chart = phi.chart();
    const size_t n = chart.dim();
    TensorField r(chart, {Variance::Upper, Variance::Lower, Variance::Lower});
    for (size_t h = 0; h < n; ++h)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                RationalFunction v = RationalFunction::zero(chart.vars());
                for (size_t a = 0; a < n; ++a) {
                    v = v + phi.at({a, i}) * phi.at({h, j}).partial(a) -
                        phi.at({a, j}) * phi.at({h, i}).partial(a) +
                        phi.at({h, a}) * (phi.at({a, i}).partial(j) - phi.at({a, j}).partial(i));
                }
                r.at_mut({h, j, i}) = -v;
                r.at_mut({h, i, j}) = std::move(v);
            }
    return r;
}

StructureReport verify_structure(const ContactStructure& s) {
    StructureReport rep;
    const Chart& chart = s.chart();
    const VarsPtr& vars = chart.vars();
    const Rational eps(s.epsilon());

    RationalFunction eta_xi = pair_form_vector(s.eta(), s.xi()) - RationalFunction::one(vars);
    rep.add("axiom.eta_of_xi_is_one", eta_xi.is_zero(), residual_description(eta_xi));

    TensorField phi_square = compose(s.phi(), s.phi()) + kronecker_delta(chart) -
                             tensor_product(s.xi(), s.eta());
    rep.add("axiom.phi_square", phi_square.is_zero(), residual_description(phi_square));

    TensorField compat = phi_pullback_metric(s.metric(), s.phi()) - s.metric() +
                         tensor_product(s.eta(), s.eta()).scaled(eps);
    rep.add("axiom.phi_metric_compatibility", compat.is_zero(), residual_description(compat));

    TensorField gxi = contract(tensor_product(s.metric(), s.xi()), 1, 2); // g_ij xi^j
    TensorField dual = s.eta() - gxi.scaled(eps);
    rep.add("axiom.eta_is_metric_dual_of_xi", dual.is_zero(), residual_description(dual));

    RationalFunction norm = metric_pair(s.metric(), s.xi(), s.xi()) -
                            RationalFunction::constant(vars, eps);
    rep.add("axiom.reeb_norm_is_epsilon", norm.is_zero(), residual_description(norm));

    // derived identities
    VectorField phi_xi = apply_endomorphism(s.phi(), s.xi());
    rep.add("derived.phi_xi_vanishes", phi_xi.is_zero(), residual_description(phi_xi));
    TensorField eta_phi = contract(tensor_product(s.eta(), s.phi()), 0, 1);
    rep.add("derived.eta_composed_phi_vanishes", eta_phi.is_zero(),
            residual_description(eta_phi));
    TensorField fund = fundamental_two_form(s.metric(), s.phi());
    TensorField sym = make_metric_shape(chart);
    for (size_t i = 0; i < chart.dim(); ++i)
        for (size_t j = 0; j < chart.dim(); ++j)
            sym.at_mut({i, j}) = fund.at({i, j}) + fund.at({j, i});
    rep.add("derived.fundamental_form_antisymmetric", sym.is_zero(), residual_description(sym));

    for (IdentityCheck& c : rep.checks)
        if (c.holds) c.residual.clear();
    rep.sort_by_name();
    return rep;
}

namespace {

// Coefficient of the top-degree form eta ^ (d eta)^n: the alternating sum
// over permutations. Nonzero iff the contact nondegeneracy condition holds.
RationalFunction eta_wedge_deta_power(const TensorField& eta, const TensorField& deta, size_t n) {
    const size_t dim = eta.dim();
    std::vector<size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    RationalFunction total = RationalFunction::zero(eta.chart().vars());
    do {
        int inversions = 0;
        for (size_t a = 0; a < dim; ++a)
            for (size_t b = a + 1; b < dim; ++b)
                if (perm[a] > perm[b]) ++inversions;
        RationalFunction term = eta.at({perm[0]});
        for (size_t k = 0; k < n; ++k)
            term = term * deta.at({perm[1 + 2 * k], perm[2 + 2 * k]});
        total = (inversions % 2 == 0) ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

void add_tensor_check(StructureReport& rep, std::string name, const TensorField& residual) {
    bool ok = residual.is_zero();
    rep.add(std::move(name), ok, ok ? "" : residual_description(residual));
}

void add_scalar_check(StructureReport& rep, std::string name, const RationalFunction& residual) {
    bool ok = residual.is_zero();
    rep.add(std::move(name), ok, ok ? "" : residual_description(residual));
}

TensorField normality_tensor(const ContactStructure& s) {
    return nijenhuis(s.phi()) +
           tensor_product(s.xi(), d_one_form(s.eta()).scaled(Rational(2)));
}

} // namespace

StructureReport verify_contact_condition(const ContactStructure& s) {
    StructureReport rep;
    TensorField fund = fundamental_two_form(s.metric(), s.phi());
    TensorField deta = d_one_form(s.eta());
    TensorField diff = fund - deta;
    rep.add("contact.fundamental_form_equals_d_eta", diff.is_zero(), residual_description(diff));
    RationalFunction top = eta_wedge_deta_power(s.eta(), deta, s.n());
    rep.add("contact.eta_wedge_d_eta_nonzero", !top.is_zero(),
            top.is_zero() ? "eta ^ (d eta)^n = 0" : "");
    for (IdentityCheck& c : rep.checks)
        if (c.holds) c.residual.clear();
    rep.sort_by_name();
    return rep;
}

TensorField compute_h(const ContactStructure& s) {
    return lie_derivative(s.phi(), s.xi()).scaled(Rational(1, 2));
}

TensorField compute_ell(const ContactStructure& s) {
    TensorField riem = riemann(s.metric());
    TensorField r = make_endomorphism_shape(s.chart());
    const size_t n = s.chart().dim();
    for (size_t h = 0; h < n; ++h)
        for (size_t k = 0; k < n; ++k) {
            RationalFunction v = RationalFunction::zero(s.chart().vars());
            for (size_t j = 0; j < n; ++j)
                for (size_t i = 0; i < n; ++i)
                    v = v + riem.at({h, k, j, i}) * s.xi().at({j}) * s.xi().at({i});
            r.at_mut({h, k}) = std::move(v);
        }
    return r;
}

StructureReport structure_identity_report(const ContactStructure& s) {
    StructureReport rep = verify_structure(s);
    StructureReport contact = verify_contact_condition(s);
    bool is_contact = rep.all_hold() && contact.all_hold();
    rep.checks.insert(rep.checks.end(), contact.checks.begin(), contact.checks.end());
    // The h/ell package and the conditional groups presuppose a contact
    // pseudo-metric structure; on other inputs only the axiom and contact
    // verdicts are reported.
    if (!is_contact) {
        rep.sort_by_name();
        return rep;
    }

    const Chart& chart = s.chart();
    const VarsPtr& vars = chart.vars();
    const Rational eps(s.epsilon());
    const Rational two_n(static_cast<long long>(2 * s.n()));

    TensorField h = compute_h(s);
    TensorField ell = compute_ell(s);
    const TensorField& g = s.metric();
    TensorField ginv = metric_inverse(g);
    ConnectionCoefficients conn = christoffel(g, ginv);
    TensorField ric = ricci(g);

    add_scalar_check(rep, "package.trace_h_vanishes", endomorphism_trace(h));
    add_scalar_check(rep, "package.trace_h_phi_vanishes", endomorphism_trace(compose(h, s.phi())));
    add_tensor_check(rep, "package.eta_composed_h_vanishes",
                     contract(tensor_product(s.eta(), h), 0, 1));
    add_tensor_check(rep, "package.ell_xi_vanishes", apply_endomorphism(ell, s.xi()));
    add_tensor_check(rep, "package.h_xi_vanishes", apply_endomorphism(h, s.xi()));
    add_tensor_check(rep, "package.h_phi_anticommutes",
                     compose(h, s.phi()) + compose(s.phi(), h));

    // self-adjointness of h and ell with respect to g
    auto symmetry_residual = [&](const TensorField& endo) {
        TensorField lowered = lower_slot(endo, 0, g); // g(e_i, endo e_j)
        TensorField r = make_metric_shape(chart);
        for (size_t i = 0; i < chart.dim(); ++i)
            for (size_t j = 0; j < chart.dim(); ++j)
                r.at_mut({i, j}) = lowered.at({i, j}) - lowered.at({j, i});
        return r;
    };
    add_tensor_check(rep, "package.h_self_adjoint", symmetry_residual(h));
    add_tensor_check(rep, "package.ell_self_adjoint", symmetry_residual(ell));

    // nabla_xi phi = 0
    TensorField dphi = covariant_derivative(s.phi(), conn); // (a, i, direction)
    TensorField nabla_xi_phi = make_endomorphism_shape(chart);
    for (size_t a = 0; a < chart.dim(); ++a)
        for (size_t i = 0; i < chart.dim(); ++i) {
            RationalFunction v = RationalFunction::zero(vars);
            for (size_t d = 0; d < chart.dim(); ++d)
                v = v + dphi.at({a, i, d}) * s.xi().at({d});
            nabla_xi_phi.at_mut({a, i}) = std::move(v);
        }
    add_tensor_check(rep, "package.nabla_xi_phi_vanishes", nabla_xi_phi);

    // nabla_X xi = -eps phi X - phi h X
    TensorField dxi = covariant_derivative(s.xi(), conn); // (a, direction)
    add_tensor_check(rep, "package.nabla_xi_formula",
                     dxi + s.phi().scaled(eps) + compose(s.phi(), h));

    // Ric(xi, xi) = 2n - tr h^2
    RationalFunction ric_xi_xi = RationalFunction::zero(vars);
    for (size_t i = 0; i < chart.dim(); ++i)
        for (size_t j = 0; j < chart.dim(); ++j)
            ric_xi_xi = ric_xi_xi + ric.at({i, j}) * s.xi().at({i}) * s.xi().at({j});
    RationalFunction tr_h2 = endomorphism_trace(compose(h, h));
    add_scalar_check(rep, "package.ricci_reeb_reeb_trace",
                     ric_xi_xi - RationalFunction::constant(vars, two_n) + tr_h2);

    // K-contact identity group, checked when h = 0.
    if (h.is_zero()) {
        TensorField q = raise_slot(ric, 0, ginv);
        add_tensor_check(rep, "k_contact.q_xi_eigenvalue",
                         apply_endomorphism(q, s.xi()) - s.xi().scaled(two_n * eps));
        add_tensor_check(rep, "k_contact.nabla_xi_is_minus_eps_phi", dxi + s.phi().scaled(eps));
        TensorField dq = covariant_derivative(q, conn); // (a, j, direction)
        // (nabla_X Q) xi = -2n phi X + eps Q phi X
        TensorField lhs1 = make_endomorphism_shape(chart);
        for (size_t a = 0; a < chart.dim(); ++a)
            for (size_t d = 0; d < chart.dim(); ++d) {
                RationalFunction v = RationalFunction::zero(vars);
                for (size_t j = 0; j < chart.dim(); ++j)
                    v = v + dq.at({a, j, d}) * s.xi().at({j});
                lhs1.at_mut({a, d}) = std::move(v);
            }
        TensorField rhs1 = s.phi().scaled(-two_n) + compose(q, s.phi()).scaled(eps);
        add_tensor_check(rep, "k_contact.nabla_q_xi_identity", lhs1 - rhs1);
        // (nabla_xi Q) X = eps (Q phi - phi Q) X
        TensorField lhs2 = make_endomorphism_shape(chart);
        for (size_t a = 0; a < chart.dim(); ++a)
            for (size_t j = 0; j < chart.dim(); ++j) {
                RationalFunction v = RationalFunction::zero(vars);
                for (size_t d = 0; d < chart.dim(); ++d)
                    v = v + dq.at({a, j, d}) * s.xi().at({d});
                lhs2.at_mut({a, j}) = std::move(v);
            }
        TensorField rhs2 = (compose(q, s.phi()) - compose(s.phi(), q)).scaled(eps);
        add_tensor_check(rep, "k_contact.nabla_xi_q_identity", lhs2 - rhs2);
    }

    // Sasakian identity group, checked when the normality tensor vanishes.
    TensorField normality = normality_tensor(s);
    add_tensor_check(rep, "sasakian.normality_tensor_vanishes", normality);
    if (normality.is_zero()) {
        // (nabla_X phi) Y = g(X, Y) xi - eps eta(Y) X
        TensorField crit(chart, {Variance::Upper, Variance::Lower, Variance::Lower});
        for (size_t a = 0; a < chart.dim(); ++a)
            for (size_t i = 0; i < chart.dim(); ++i)
                for (size_t d = 0; d < chart.dim(); ++d) {
                    RationalFunction want = g.at({d, i}) * s.xi().at({a});
                    if (a == d) want = want - s.eta().at({i}).scaled(eps);
                    crit.at_mut({a, i, d}) = dphi.at({a, i, d}) - want;
                }
        add_tensor_check(rep, "sasakian.covariant_phi_criterion", crit);
        // R(X, Y) xi = eta(Y) X - eta(X) Y
        TensorField riem = riemann(g);
        TensorField curv(chart, {Variance::Upper, Variance::Lower, Variance::Lower});
        for (size_t a = 0; a < chart.dim(); ++a)
            for (size_t k = 0; k < chart.dim(); ++k)
                for (size_t j = 0; j < chart.dim(); ++j) {
                    RationalFunction v = RationalFunction::zero(vars);
                    for (size_t i = 0; i < chart.dim(); ++i)
                        v = v + riem.at({a, k, j, i}) * s.xi().at({i});
                    RationalFunction want = RationalFunction::zero(vars);
                    if (a == k) want = want + s.eta().at({j});
                    if (a == j) want = want - s.eta().at({k});
                    curv.at_mut({a, k, j}) = v - want;
                }
        add_tensor_check(rep, "sasakian.reeb_curvature_criterion", curv);
        // Q phi = phi Q
        TensorField q = raise_slot(ric, 0, ginv);
        add_tensor_check(rep, "sasakian.q_phi_commute",
                         compose(q, s.phi()) - compose(s.phi(), q));
    }

    rep.sort_by_name();
    return rep;
}

ClassificationResult classify(const ContactStructure& s) {
    StructureReport axioms = verify_structure(s);
    StructureReport contact = verify_contact_condition(s);
    if (!axioms.all_hold() || !contact.all_hold()) {
        std::string what = "not a contact pseudo-metric structure:";
        for (const StructureReport* rep : {&axioms, &contact})
            for (const IdentityCheck& c : rep->checks)
                if (!c.holds) what += " " + c.name + ";";
        throw NotContact(what);
    }
    ClassificationResult result;
    result.is_contact = true;

    const Chart& chart = s.chart();
    const VarsPtr& vars = chart.vars();
    const Rational eps(s.epsilon());
    const size_t dim = chart.dim();

    TensorField h = compute_h(s);
    result.is_k_contact = h.is_zero();
    result.is_sasakian = normality_tensor(s).is_zero();
    if (result.is_sasakian && !result.is_k_contact)
        throw Error("internal: normality holds but h != 0 on a contact structure");

    const TensorField& g = s.metric();
    TensorField ginv = metric_inverse(g);
    TensorField ric = ricci(g);
    ConnectionCoefficients conn = christoffel(g, ginv);

    // Cross-check of the Sasakian verdict against the covariant criterion;
    // a disagreement would be an engine bug, not an input property.
    {
        TensorField dphi = covariant_derivative(s.phi(), conn);
        bool covariant = true;
        for (size_t a = 0; a < dim && covariant; ++a)
            for (size_t i = 0; i < dim && covariant; ++i)
                for (size_t d = 0; d < dim && covariant; ++d) {
                    RationalFunction want = g.at({d, i}) * s.xi().at({a});
                    if (a == d) want = want - s.eta().at({i}).scaled(eps);
                    if (dphi.at({a, i, d}) != want) covariant = false;
                }
        if (covariant != result.is_sasakian)
            throw Error("internal: normality and covariant Sasakian criteria disagree");
    }

    // eta-Einstein detection: solve (a, b) from the xi-xi contraction and
    // one phi-plane component, then certify by the exact residual.
    {
        RationalFunction ric_xi_xi = RationalFunction::zero(vars);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j)
                ric_xi_xi = ric_xi_xi + ric.at({i, j}) * s.xi().at({i}) * s.xi().at({j});
        TensorField eta_eta = tensor_product(s.eta(), s.eta());
        std::optional<std::pair<size_t, size_t>> plane;
        for (size_t i = 0; i < dim && !plane; ++i)
            for (size_t j = 0; j < dim && !plane; ++j) {
                if (!(g.at({i, j}) - eta_eta.at({i, j}).scaled(eps)).is_zero()) plane = {{i, j}};
            }
        if (plane) {
            auto [i, j] = *plane;
            RationalFunction denom = g.at({i, j}) - eta_eta.at({i, j}).scaled(eps);
            RationalFunction a = (ric.at({i, j}) - eta_eta.at({i, j}) * ric_xi_xi) / denom;
            RationalFunction b = ric_xi_xi - a.scaled(eps);
            TensorField residual = ric - g.scaled(a) - eta_eta.scaled(b);
            if (residual.is_zero()) {
                auto ca = rf_constant(a);
                auto cb = rf_constant(b);
                if (ca && cb)
                    result.eta_einstein = std::make_pair(*ca, *cb);
                else
                    result.eta_einstein_nonconstant = true;
            }
        }
    }

    // (kappa, mu) nullity detection: kappa from the trace of ell, mu from
    // the h-contraction; certified by the exact nullity residual.
    {
        TensorField ell = compute_ell(s);
        const Rational two_n(static_cast<long long>(2 * s.n()));
        RationalFunction kappa_rf = endomorphism_trace(ell).scaled(eps / two_n);
        auto kappa_const = rf_constant(kappa_rf);
        std::optional<Rational> mu_const;
        bool mu_indeterminate = h.is_zero();
        bool solvable = kappa_const.has_value();
        if (solvable && !mu_indeterminate) {
            RationalFunction tr_h2 = endomorphism_trace(compose(h, h));
            if (!tr_h2.is_zero()) {
                RationalFunction mu_rf =
                    (endomorphism_trace(compose(ell, h)).scaled(eps) -
                     endomorphism_trace(h).scaled(*kappa_const)) /
                    tr_h2;
                auto c = rf_constant(mu_rf);
                if (c)
                    mu_const = *c;
                else
                    solvable = false;
            } else {
                // h nonzero with tr h^2 = 0: no supported contraction route.
                solvable = false;
            }
        }
        if (solvable) {
            TensorField riem = riemann(g);
            bool ok = true;
            for (size_t a = 0; a < dim && ok; ++a)
                for (size_t k = 0; k < dim && ok; ++k)
                    for (size_t j = 0; j < dim && ok; ++j) {
                        RationalFunction v = RationalFunction::zero(vars);
                        for (size_t i = 0; i < dim; ++i)
                            v = v + riem.at({a, k, j, i}) * s.xi().at({i});
                        RationalFunction want = RationalFunction::zero(vars);
                        if (a == k) want = want + s.eta().at({j}).scaled(eps * *kappa_const);
                        if (a == j) want = want - s.eta().at({k}).scaled(eps * *kappa_const);
                        if (mu_const) {
                            want = want + (s.eta().at({j}) * h.at({a, k})).scaled(eps * *mu_const);
                            want = want - (s.eta().at({k}) * h.at({a, j})).scaled(eps * *mu_const);
                        }
                        if (v != want) ok = false;
                    }
            if (ok) result.kappa_mu = KappaMu{*kappa_const, mu_const};
        }
    }

    result.d_fixed = result.is_k_contact && result.eta_einstein &&
                     result.eta_einstein->first == Rational(-2 * s.epsilon());
    return result;
}

Rational deformed_eta_einstein_a(const Rational& a, int eps, const Rational& t) {
    Rational e(eps);
    return (a - Rational(2) * e * t + Rational(2) * e) / t;
}

ContactStructure d_homothetic_deform(const ContactStructure& s, const Rational& t) {
    if (t.is_zero()) throw ZeroParameter("deformation parameter t must be nonzero");
    const Rational eps(s.epsilon());
    TensorField eta = s.eta().scaled(t);
    VectorField xi = s.xi().scaled(t.inverse());
    TensorField eta_eta = tensor_product(s.eta(), s.eta());
    TensorField g = s.metric().scaled(t) + eta_eta.scaled(eps * t * (t - Rational(1)));
    return ContactStructure::create(s.chart(), s.phi(), std::move(xi), std::move(eta),
                                    std::move(g), s.epsilon());
}

} // namespace contactgeo
