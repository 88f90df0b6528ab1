#include "contactgeo/soliton.hpp"

#include "contactgeo/errors.hpp"

#include <algorithm>

namespace contactgeo {

SolitonData SolitonData::with_vector(VectorField v, Rational lambda, Rational mu) {
    if (v.rank() != 1 || v.slots()[0] != Variance::Upper)
        throw SlotMismatch("potential must be a vector field");
    return SolitonData{std::move(v), std::move(lambda), std::move(mu)};
}

SolitonData SolitonData::with_potential(RationalFunction f, Rational lambda, Rational mu) {
    return SolitonData{std::move(f), std::move(lambda), std::move(mu)};
}

std::string to_string(SolitonClass c) {
    switch (c) {
        case SolitonClass::Shrinking: return "shrinking";
        case SolitonClass::Steady: return "steady";
        case SolitonClass::Expanding: return "expanding";
    }
    return "?";
}

std::string to_string(TheoremReport::Overall o) {
    switch (o) {
        case TheoremReport::Overall::Verified: return "verified";
        case TheoremReport::Overall::HypothesisNotMet: return "hypothesis_not_met";
        case TheoremReport::Overall::Violation: return "violation";
    }
    return "?";
}

TheoremReport::Overall TheoremReport::overall() const {
    for (const HypothesisCheck& h : hypotheses)
        if (h.status == HypothesisStatus::Fails) return Overall::HypothesisNotMet;
    if (std::all_of(conclusions.begin(), conclusions.end(),
                    [](const ConclusionCheck& c) { return c.holds; }))
        return Overall::Verified;
    // A failed conclusion under an assumed (unverifiable) hypothesis refutes
    // the assumption rather than the theorem.
    for (const HypothesisCheck& h : hypotheses)
        if (h.status == HypothesisStatus::Assumed) return Overall::HypothesisNotMet;
    return Overall::Violation;
}

namespace {

SolitonClass class_of(const Rational& lambda) {
    if (lambda.sign() < 0) return SolitonClass::Shrinking;
    if (lambda.sign() > 0) return SolitonClass::Expanding;
    return SolitonClass::Steady;
}

TensorField eta_outer(const ContactStructure& s) {
    return tensor_product(s.eta(), s.eta());
}

void add_hyp(TheoremReport& rep, std::string name, bool ok, std::string detail = "") {
    rep.hypotheses.push_back(
        {std::move(name), ok ? HypothesisStatus::Holds : HypothesisStatus::Fails,
         std::move(detail)});
}

void add_conclusion_tensor(TheoremReport& rep, std::string name, const TensorField& residual) {
    bool ok = residual.is_zero();
    rep.conclusions.push_back({std::move(name), ok, ok ? "" : residual_description(residual)});
}

void add_conclusion_scalar(TheoremReport& rep, std::string name,
                           const RationalFunction& residual) {
    bool ok = residual.is_zero();
    rep.conclusions.push_back({std::move(name), ok, ok ? "" : residual_description(residual)});
}

void add_conclusion_rational(TheoremReport& rep, std::string name, const Rational& residual) {
    bool ok = residual.is_zero();
    rep.conclusions.push_back({std::move(name), ok, ok ? "" : residual.to_string()});
}

std::optional<ClassificationResult> classify_or_null(const ContactStructure& s,
                                                     std::string* why = nullptr) {
    try {
        return classify(s);
    } catch (const NotContact& e) {
        if (why) *why = e.what();
        return std::nullopt;
    }
}

VectorField potential_vector(const ContactStructure& s, const SolitonData& d) {
    if (d.has_vector()) return d.vector();
    return gradient(d.scalar(), s.metric());
}

} // namespace

SolitonVerdict soliton_residual(const ContactStructure& s, const SolitonData& d) {
    if (!d.has_vector()) throw Error("soliton_residual needs a vector potential");
    const VectorField& v = d.vector();
    if (v.chart() != s.chart()) throw ChartMismatch("potential lives on a different chart");
    TensorField lie_g = lie_derivative(s.metric(), v);
    TensorField residual = lie_g + ricci(s.metric()).scaled(Rational(2)) +
                           s.metric().scaled(Rational(2) * d.lambda) +
                           eta_outer(s).scaled(Rational(2) * d.mu);
    SolitonVerdict verdict{residual.is_zero(), std::move(residual), class_of(d.lambda),
                           lie_g.is_zero(), lie_derivative(s.phi(), v).is_zero()};
    return verdict;
}

SolitonVerdict gradient_soliton_residual(const ContactStructure& s, const SolitonData& d) {
    if (d.has_vector()) throw Error("gradient_soliton_residual needs a scalar potential");
    const RationalFunction& f = d.scalar();
    if (!same_vars(f.vars(), s.chart().vars()))
        throw ChartMismatch("potential lives on a different chart");
    TensorField hess = hessian(f, s.metric());
    TensorField residual = hess + ricci(s.metric()) + s.metric().scaled(d.lambda) +
                           eta_outer(s).scaled(d.mu);
    // L_{Df} g = 2 Hess f, so Df is Killing iff the hessian vanishes.
    VectorField df = gradient(f, s.metric());
    SolitonVerdict verdict{residual.is_zero(), std::move(residual), class_of(d.lambda),
                           hess.is_zero(), lie_derivative(s.phi(), df).is_zero()};
    return verdict;
}

TheoremReport verify_sasakian_soliton_eta_einstein(const ContactStructure& s,
                                                   const SolitonData& d) {
    TheoremReport rep;
    rep.id = "sasakian_soliton_eta_einstein";
    std::string why;
    auto cls = classify_or_null(s, &why);
    add_hyp(rep, "structure_is_contact", cls.has_value(), cls ? "" : why);
    add_hyp(rep, "structure_is_sasakian", cls && cls->is_sasakian);
    if (!cls) return rep;

    VectorField v = potential_vector(s, d);
    SolitonData vec = SolitonData::with_vector(v, d.lambda, d.mu);
    SolitonVerdict verdict = soliton_residual(s, vec);
    add_hyp(rep, "eta_ricci_soliton", verdict.is_soliton,
            verdict.is_soliton ? "" : residual_description(verdict.residual));

    const Rational eps(s.epsilon());
    const Rational n(static_cast<long long>(s.n()));
    const Rational& lambda = d.lambda;
    const Rational& mu = d.mu;
    // a = n eps + (mu eps - lambda)/2
    Rational a = n * eps + (mu * eps - lambda) / Rational(2);
    // b = n/2 (eps+1) + lambda/4 (eps+1) + (eps-3)/4 mu
    Rational b = n / Rational(2) * (eps + Rational(1)) +
                 lambda / Rational(4) * (eps + Rational(1)) +
                 (eps - Rational(3)) / Rational(4) * mu;
    // r = eps/4 (lambda - mu + 8 n^2 + (4 mu + 6) n) + (-lambda + mu - 4 lambda n + 2 n)/4
    Rational r = eps / Rational(4) *
                     (lambda - mu + Rational(8) * n * n + (Rational(4) * mu + Rational(6)) * n) +
                 (-lambda + mu - Rational(4) * lambda * n + Rational(2) * n) / Rational(4);

    TensorField predicted = s.metric().scaled(a) + eta_outer(s).scaled(b);
    add_conclusion_tensor(rep, "ricci_equals_closed_form", ricci(s.metric()) - predicted);
    RationalFunction r_residual = scalar_curvature(s.metric()) -
                                  RationalFunction::constant(s.chart().vars(), r);
    add_conclusion_scalar(rep, "scalar_curvature_equals_closed_form", r_residual);
    rep.note = "closed form a = " + a.to_string() + ", b = " + b.to_string() +
               ", r = " + r.to_string();
    return rep;
}

TheoremReport verify_eta_einstein_trace_identity(const ContactStructure& s,
                                                 const Rational& lambda, const Rational& mu,
                                                 const VectorField* potential) {
    TheoremReport rep;
    rep.id = "eta_einstein_trace_identity";
    std::string why;
    auto cls = classify_or_null(s, &why);
    add_hyp(rep, "structure_is_contact", cls.has_value(), cls ? "" : why);
    bool einstein = cls && cls->eta_einstein.has_value();
    add_hyp(rep, "eta_einstein_constant_coefficients", einstein,
            einstein ? "" : "no constant (a, b) with Ric = a g + b eta (x) eta");
    if (potential) {
        SolitonVerdict verdict =
            soliton_residual(s, SolitonData::with_vector(*potential, lambda, mu));
        add_hyp(rep, "eta_ricci_soliton", verdict.is_soliton,
                verdict.is_soliton ? "" : residual_description(verdict.residual));
    } else {
        rep.hypotheses.push_back({"eta_ricci_soliton", HypothesisStatus::Assumed,
                                  "no potential supplied; constants taken as given"});
    }
    if (!einstein) return rep;

    const TensorField& g = s.metric();
    TensorField ginv = metric_inverse(g);
    TensorField ric = ricci(g);
    TensorField ric_up = raise_slot(raise_slot(ric, 0, ginv), 1, ginv);
    RationalFunction ric_norm2 = RationalFunction::zero(s.chart().vars());
    for (size_t i = 0; i < g.dim(); ++i)
        for (size_t j = 0; j < g.dim(); ++j)
            ric_norm2 = ric_norm2 + ric_up.at({i, j}) * ric.at({i, j});
    RationalFunction r = trace_with_metric_inverse(ric, ginv);
    auto [a, b] = *cls->eta_einstein;
    const Rational eps(s.epsilon());
    RationalFunction identity =
        ric_norm2 + r.scaled(lambda) +
        RationalFunction::constant(s.chart().vars(), mu * (eps * a + b));
    add_conclusion_scalar(rep, "ricci_square_trace_identity", identity);

    const Rational two_n(static_cast<long long>(2 * s.n()));
    Rational factor = (-lambda + mu + two_n + Rational(4)) * (lambda + mu + two_n);
    rep.note = "ricci_square = " + residual_description(ric_norm2) +
               "; dichotomy factor (-lambda+mu+2n+4)(lambda+mu+2n) = " + factor.to_string();
    return rep;
}

TheoremReport verify_soliton_dichotomy(const ContactStructure& s, const SolitonData& d) {
    TheoremReport rep;
    rep.id = "soliton_killing_or_d_fixed";
    std::string why;
    auto cls = classify_or_null(s, &why);
    add_hyp(rep, "structure_is_contact", cls.has_value(), cls ? "" : why);
    add_hyp(rep, "structure_is_sasakian", cls && cls->is_sasakian);
    add_hyp(rep, "potential_is_vector_field", d.has_vector());
    if (!cls || !d.has_vector()) return rep;

    SolitonVerdict verdict = soliton_residual(s, d);
    add_hyp(rep, "eta_ricci_soliton", verdict.is_soliton,
            verdict.is_soliton ? "" : residual_description(verdict.residual));

    if (s.epsilon() == -1) {
        rep.note = "timelike Reeb field: case (a)";
        rep.conclusions.push_back({"potential_is_killing", verdict.potential_is_killing,
                                   verdict.potential_is_killing
                                       ? ""
                                       : residual_description(
                                             lie_derivative(s.metric(), d.vector()))});
        return rep;
    }

    rep.note = "spacelike Reeb field: case (b)";
    add_hyp(rep, "potential_not_killing", !verdict.potential_is_killing,
            verdict.potential_is_killing ? "L_V g = 0" : "");
    const Rational n(static_cast<long long>(s.n()));
    TensorField predicted = s.metric().scaled(Rational(-2)) +
                            eta_outer(s).scaled(Rational(2) * (n + Rational(1)));
    add_conclusion_tensor(rep, "ricci_equals_minus_two_g_form", ricci(s.metric()) - predicted);
    rep.conclusions.push_back({"d_homothetically_fixed", cls->d_fixed,
                               cls->d_fixed ? "" : "eta-Einstein coefficient a != -2 eps"});
    add_conclusion_tensor(rep, "lie_v_phi_vanishes", lie_derivative(s.phi(), d.vector()));
    add_conclusion_rational(rep, "lambda_minus_mu_is_2n_plus_4",
                            d.lambda - d.mu - (Rational(2) * n + Rational(4)));
    return rep;
}

TheoremReport verify_k_contact_gradient_soliton(const ContactStructure& s, const SolitonData& d) {
    TheoremReport rep;
    rep.id = "k_contact_gradient_eta_einstein";
    std::string why;
    auto cls = classify_or_null(s, &why);
    add_hyp(rep, "structure_is_contact", cls.has_value(), cls ? "" : why);
    add_hyp(rep, "structure_is_k_contact", cls && cls->is_k_contact);
    add_hyp(rep, "potential_is_gradient", !d.has_vector(),
            d.has_vector() ? "scalar potential required" : "");
    if (!cls || d.has_vector()) return rep;

    SolitonVerdict verdict = gradient_soliton_residual(s, d);
    add_hyp(rep, "gradient_eta_ricci_soliton", verdict.is_soliton,
            verdict.is_soliton ? "" : residual_description(verdict.residual));

    TensorField predicted = s.metric().scaled(-d.lambda) + eta_outer(s).scaled(-d.mu);
    add_conclusion_tensor(rep, "ricci_equals_minus_lambda_g_minus_mu_eta_eta",
                          ricci(s.metric()) - predicted);
    const Rational eps(s.epsilon());
    const Rational two_n(static_cast<long long>(2 * s.n()));
    add_conclusion_rational(rep, "minus_eps_lambda_minus_mu_is_2n",
                            -eps * d.lambda - d.mu - two_n);
    return rep;
}

TheoremReport verify_reeb_colinear_potential(const ContactStructure& s, const SolitonData& d) {
    TheoremReport rep;
    rep.id = "reeb_colinear_potential";
    std::string why;
    auto cls = classify_or_null(s, &why);
    add_hyp(rep, "structure_is_contact", cls.has_value(), cls ? "" : why);
    add_hyp(rep, "potential_is_vector_field", d.has_vector());
    if (!cls || !d.has_vector()) return rep;

    // V = f xi forces f = eta(V); check V - eta(V) xi = 0
    RationalFunction eta_v = RationalFunction::zero(s.chart().vars());
    for (size_t i = 0; i < s.chart().dim(); ++i)
        eta_v = eta_v + s.eta().at({i}) * d.vector().at({i});
    TensorField colinear_residual = d.vector() - s.xi().scaled(eta_v);
    add_hyp(rep, "potential_colinear_with_reeb", colinear_residual.is_zero(),
            colinear_residual.is_zero() ? "" : residual_description(colinear_residual));

    const TensorField& g = s.metric();
    TensorField q = raise_slot(ricci(g), 0, metric_inverse(g));
    TensorField commute = compose(q, s.phi()) - compose(s.phi(), q);
    add_hyp(rep, "q_phi_commute", commute.is_zero(),
            commute.is_zero() ? "" : residual_description(commute));

    SolitonVerdict verdict = soliton_residual(s, d);
    add_hyp(rep, "eta_ricci_soliton", verdict.is_soliton,
            verdict.is_soliton ? "" : residual_description(verdict.residual));

    rep.conclusions.push_back({"structure_is_k_contact", cls->is_k_contact,
                               cls->is_k_contact ? "" : "h != 0"});
    TensorField predicted = g.scaled(-d.lambda) + eta_outer(s).scaled(-d.mu);
    add_conclusion_tensor(rep, "ricci_equals_minus_lambda_g_minus_mu_eta_eta",
                          ricci(g) - predicted);
    const Rational eps(s.epsilon());
    const Rational two_n(static_cast<long long>(2 * s.n()));
    add_conclusion_rational(rep, "minus_eps_lambda_minus_mu_is_2n",
                            -eps * d.lambda - d.mu - two_n);
    return rep;
}

TheoremReport verify_kappa_mu_gradient_soliton(const ContactStructure& s, const SolitonData& d) {
    TheoremReport rep;
    rep.id = "kappa_mu_gradient_soliton";
    std::string why;
    auto cls = classify_or_null(s, &why);
    add_hyp(rep, "structure_is_contact", cls.has_value(), cls ? "" : why);
    const Rational eps(s.epsilon());
    bool nullity = cls && cls->kappa_mu.has_value();
    add_hyp(rep, "kappa_mu_nullity_condition", nullity);
    bool strict = nullity && eps * cls->kappa_mu->kappa < Rational(1);
    add_hyp(rep, "eps_kappa_below_one", strict,
            nullity ? "eps kappa = " + (eps * cls->kappa_mu->kappa).to_string() : "");
    bool mu_known = nullity && cls->kappa_mu->mu.has_value();
    if (strict)
        add_hyp(rep, "nullity_mu_determinate", mu_known);
    add_hyp(rep, "potential_is_gradient", !d.has_vector(),
            d.has_vector() ? "scalar potential required" : "");
    if (!cls || !strict || !mu_known || d.has_vector()) return rep;

    SolitonVerdict verdict = gradient_soliton_residual(s, d);
    add_hyp(rep, "gradient_eta_ricci_soliton", verdict.is_soliton,
            verdict.is_soliton ? "" : residual_description(verdict.residual));

    const Rational kappa = cls->kappa_mu->kappa;
    const Rational mu = *cls->kappa_mu->mu;
    const Rational& tau = d.mu;
    const Rational n(static_cast<long long>(s.n()));
    // eps kappa (mu - 2) = n mu + mu + tau
    add_conclusion_rational(rep, "nullity_soliton_scalar_constraint",
                            eps * kappa * (mu - Rational(2)) - (n * mu + mu + tau));
    bool branch1 = mu.is_zero() && tau == Rational(-2) * eps * kappa;
    Rational tau2 = Rational(2) * n * n - Rational(2) - Rational(2) * n * eps * kappa;
    bool branch2 = mu == Rational(2) - Rational(2) * n && tau == tau2;
    rep.conclusions.push_back(
        {"mu_tau_in_branch_alternative", branch1 || branch2,
         branch1 || branch2 ? "" : "mu = " + mu.to_string() + ", tau = " + tau.to_string()});
    if (tau.is_zero()) {
        // gradient Ricci soliton: R(X, Y) xi = 0
        TensorField riem = riemann(s.metric());
        TensorField a(s.chart(), {Variance::Upper, Variance::Lower, Variance::Lower});
        for (size_t hh = 0; hh < s.chart().dim(); ++hh)
            for (size_t k = 0; k < s.chart().dim(); ++k)
                for (size_t j = 0; j < s.chart().dim(); ++j) {
                    RationalFunction v = RationalFunction::zero(s.chart().vars());
                    for (size_t i = 0; i < s.chart().dim(); ++i)
                        v = v + riem.at({hh, k, j, i}) * s.xi().at({i});
                    a.at_mut({hh, k, j}) = std::move(v);
                }
        add_conclusion_tensor(rep, "reeb_curvature_vanishes", a);
    }
    return rep;
}

TheoremReport verify_nullity_branch_identities(size_t n, int epsilon) {
    TheoremReport rep;
    rep.id = "nullity_branch_identities";
    Chart chart({"kappa"});
    const VarsPtr& vars = chart.vars();
    RationalFunction kappa = RationalFunction::variable(vars, 0);
    const Rational eps(epsilon);
    const Rational nn(static_cast<long long>(n));
    auto constraint = [&](const RationalFunction& mu, const RationalFunction& tau) {
        // eps kappa (mu - 2) - (n mu + mu + tau), kappa symbolic
        return kappa.scaled(eps) * (mu - RationalFunction::constant(vars, Rational(2))) -
               (mu.scaled(nn) + mu + tau);
    };
    // branch 1: mu = 0, tau = -2 eps kappa
    RationalFunction zero = RationalFunction::zero(vars);
    add_conclusion_scalar(rep, "branch_mu_zero_identity",
                          constraint(zero, kappa.scaled(Rational(-2) * eps)));
    // branch 2: mu = 2 - 2n, tau = 2n(-1/n + n - eps kappa) = 2n^2 - 2 - 2n eps kappa
    RationalFunction mu2 = RationalFunction::constant(vars, Rational(2) - Rational(2) * nn);
    RationalFunction tau2 =
        kappa.scaled(Rational(-2) * nn * eps) +
        RationalFunction::constant(vars, Rational(2) * nn * nn - Rational(2));
    add_conclusion_scalar(rep, "branch_mu_two_minus_two_n_identity", constraint(mu2, tau2));
    rep.note = "kappa treated as an indeterminate chart variable; n = " + nn.to_string() +
               ", eps = " + eps.to_string();
    return rep;
}

StructureReport kappa_mu_identity_report(const ContactStructure& s, const Rational& kappa,
                                         const Rational& mu) {
    StructureReport rep;
    const Chart& chart = s.chart();
    const VarsPtr& vars = chart.vars();
    const Rational eps(s.epsilon());
    const Rational n(static_cast<long long>(s.n()));
    TensorField h = compute_h(s);
    const TensorField& g = s.metric();
    TensorField ginv = metric_inverse(g);
    TensorField ric = ricci(g);
    TensorField q = raise_slot(ric, 0, ginv);

    auto add = [&rep](std::string name, const TensorField& residual) {
        bool ok = residual.is_zero();
        rep.checks.push_back({std::move(name), ok, ok ? "" : residual_description(residual)});
    };

    // h^2 = (eps kappa - 1) phi^2
    add("kappa_mu.h_square_equals_phi_square_scaled",
        compose(h, h) - compose(s.phi(), s.phi()).scaled(eps * kappa - Rational(1)));
    // Q xi = 2 n kappa xi
    add("kappa_mu.q_xi_eigenvalue",
        apply_endomorphism(q, s.xi()) - s.xi().scaled(Rational(2) * n * kappa));
    // nabla_xi h = -eps mu phi h
    ConnectionCoefficients conn = christoffel(g, ginv);
    TensorField dh = covariant_derivative(h, conn); // (a, j, direction)
    TensorField nxh = make_endomorphism_shape(chart);
    for (size_t a = 0; a < chart.dim(); ++a)
        for (size_t j = 0; j < chart.dim(); ++j) {
            RationalFunction v = RationalFunction::zero(vars);
            for (size_t dslot = 0; dslot < chart.dim(); ++dslot)
                v = v + dh.at({a, j, dslot}) * s.xi().at({dslot});
            nxh.at_mut({a, j}) = std::move(v);
        }
    add("kappa_mu.nabla_xi_h_formula",
        nxh + compose(s.phi(), h).scaled(eps * mu));
    // Q = eps(2(n-1) - n mu) I + (2(n-1) + mu) h + (2(1-n) eps + 2 n kappa + n eps mu) xi (x) eta
    Rational c_id = eps * (Rational(2) * (n - Rational(1)) - n * mu);
    Rational c_h = Rational(2) * (n - Rational(1)) + mu;
    Rational c_eta = Rational(2) * (Rational(1) - n) * eps + Rational(2) * n * kappa + n * eps * mu;
    TensorField q_pred = kronecker_delta(chart).scaled(c_id) + h.scaled(c_h) +
                         tensor_product(s.xi(), s.eta()).scaled(c_eta);
    add("kappa_mu.ricci_operator_closed_form", q - q_pred);
    // r = 2n(kappa - 2 eps) + 2 n^2 eps (2 - mu)
    Rational r_pred = Rational(2) * n * (kappa - Rational(2) * eps) +
                      Rational(2) * n * n * eps * (Rational(2) - mu);
    RationalFunction r_res = trace_with_metric_inverse(ric, ginv) -
                             RationalFunction::constant(vars, r_pred);
    bool ok = r_res.is_zero();
    rep.checks.push_back(
        {"kappa_mu.scalar_curvature_closed_form", ok, ok ? "" : residual_description(r_res)});
    rep.sort_by_name();
    return rep;
}

std::vector<TheoremReport> theorem_suite(const ContactStructure& s,
                                         const std::optional<SolitonData>& d) {
    std::vector<TheoremReport> reports;
    reports.push_back(verify_nullity_branch_identities(s.n(), s.epsilon()));
    if (!d) return reports;
    if (d->has_vector()) {
        reports.push_back(verify_sasakian_soliton_eta_einstein(s, *d));
        reports.push_back(verify_eta_einstein_trace_identity(s, d->lambda, d->mu, &d->vector()));
        reports.push_back(verify_soliton_dichotomy(s, *d));
        reports.push_back(verify_reeb_colinear_potential(s, *d));
    } else {
        reports.push_back(verify_sasakian_soliton_eta_einstein(s, *d));
        VectorField df = gradient(d->scalar(), s.metric());
        reports.push_back(verify_eta_einstein_trace_identity(s, d->lambda, d->mu, &df));
        reports.push_back(verify_k_contact_gradient_soliton(s, *d));
        reports.push_back(verify_kappa_mu_gradient_soliton(s, *d));
    }
    return reports;
}

std::optional<StructureReport> kappa_mu_package_if_applicable(const ContactStructure& s) {
    std::optional<ClassificationResult> cls;
    try {
        cls = classify(s);
    } catch (const NotContact&) {
        return std::nullopt;
    }
    if (cls->kappa_mu && cls->kappa_mu->mu &&
        Rational(s.epsilon()) * cls->kappa_mu->kappa < Rational(1)) {
        return kappa_mu_identity_report(s, cls->kappa_mu->kappa, *cls->kappa_mu->mu);
    }
    return std::nullopt;
}

std::pair<ContactStructure, SolitonData> builtin_example(int epsilon, const Rational& lambda,
                                                         const Rational& mu) {
    if (epsilon != 1 && epsilon != -1) throw InvariantViolation("epsilon must be +1 or -1");
    Chart chart({"x", "y", "z"});
    const VarsPtr& vars = chart.vars();
    const Rational eps(epsilon);
    RationalFunction x = RationalFunction::variable(vars, 0);
    RationalFunction y = RationalFunction::variable(vars, 1);
    RationalFunction z = RationalFunction::variable(vars, 2);

    VectorField xi = make_vector_field(chart);
    xi.at_mut({2}) = RationalFunction::constant(vars, Rational(2));

    TensorField eta = make_one_form(chart);
    eta.at_mut({0}) = y.scaled(Rational(-1, 2));
    eta.at_mut({2}) = RationalFunction::constant(vars, Rational(1, 2));

    TensorField phi = make_endomorphism_shape(chart);
    phi.at_mut({1, 0}) = RationalFunction::constant(vars, Rational(-1));
    phi.at_mut({0, 1}) = RationalFunction::one(vars);
    phi.at_mut({2, 1}) = y;

    // g = eps eta (x) eta + (dx^2 + dy^2)/4
    TensorField g = tensor_product(eta, eta).scaled(eps);
    g.at_mut({0, 0}) = g.at({0, 0}) + RationalFunction::constant(vars, Rational(1, 4));
    g.at_mut({1, 1}) = g.at({1, 1}) + RationalFunction::constant(vars, Rational(1, 4));

    ContactStructure s = ContactStructure::create(chart, std::move(phi), std::move(xi),
                                                  std::move(eta), std::move(g), epsilon);

    // V = (2 - 6 eps + (eps - 1) lambda + (1 - 2 eps) mu) x d/dx
    //   + (2 eps - lambda) y d/dy - (2 + eps lambda + mu) z d/dz
    Rational c1 = Rational(2) - Rational(6) * eps + (eps - Rational(1)) * lambda +
                  (Rational(1) - Rational(2) * eps) * mu;
    Rational c2 = Rational(2) * eps - lambda;
    Rational c3 = -(Rational(2) + eps * lambda + mu);
    VectorField v = make_vector_field(chart);
    v.at_mut({0}) = x.scaled(c1);
    v.at_mut({1}) = y.scaled(c2);
    v.at_mut({2}) = z.scaled(c3);

    return {std::move(s), SolitonData::with_vector(std::move(v), lambda, mu)};
}

} // namespace contactgeo
