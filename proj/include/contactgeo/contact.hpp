#pragma once

#include "contactgeo/curvature.hpp"
#include "contactgeo/lie.hpp"
#include "contactgeo/tensor.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace contactgeo {

// One verified identity: holds, or a description of the nonzero residual.
struct IdentityCheck {
    std::string name;
    bool holds = false;
    std::string residual; // empty when the identity holds
};

struct StructureReport {
    std::vector<IdentityCheck> checks;

    void add(std::string name, bool holds, std::string residual = "");
    bool all_hold() const;
    const IdentityCheck* find(const std::string& name) const;
    void sort_by_name();
};

// The tuple (phi, xi, eta, g, epsilon) on an odd-dimensional chart.
class ContactStructure {
public:
    // Validates shapes and the almost-contact axioms; throws
    // InvariantViolation naming every failed axiom.
    static ContactStructure create(Chart chart, TensorField phi, VectorField xi,
                                   TensorField eta, TensorField g, int epsilon);
    // Validates shapes only; verify_structure reports axiom failures.
    static ContactStructure create_unchecked(Chart chart, TensorField phi, VectorField xi,
                                             TensorField eta, TensorField g, int epsilon);

    const Chart& chart() const { return chart_; }
    const TensorField& phi() const { return phi_; }
    const VectorField& xi() const { return xi_; }
    const TensorField& eta() const { return eta_; }
    const TensorField& metric() const { return g_; }
    int epsilon() const { return eps_; }
    size_t n() const { return chart_.contact_n(); } // dim = 2n + 1

private:
    ContactStructure(Chart chart, TensorField phi, VectorField xi, TensorField eta,
                     TensorField g, int eps);
    Chart chart_;
    TensorField phi_;
    VectorField xi_;
    TensorField eta_;
    TensorField g_;
    int eps_;
};

// Exterior derivative of a one-form with the contact-geometry
// normalization d eta(X, Y) = 1/2 (X eta(Y) - Y eta(X) - eta([X, Y])).
TensorField d_one_form(const TensorField& eta);

// Fundamental form Phi(X, Y) = g(X, phi Y).
TensorField fundamental_two_form(const TensorField& g, const TensorField& phi);

// Nijenhuis tensor [phi, phi] of a (1,1) field.
TensorField nijenhuis(const TensorField& phi);

// Algebraic axioms plus derived identities (phi xi = 0, eta o phi = 0,
// antisymmetry of the fundamental form).
StructureReport verify_structure(const ContactStructure& s);

// Phi = d eta exactly, plus nondegeneracy eta ^ (d eta)^n != 0.
StructureReport verify_contact_condition(const ContactStructure& s);

// h = 1/2 L_xi phi and ell = R(., xi) xi.
TensorField compute_h(const ContactStructure& s);
TensorField compute_ell(const ContactStructure& s);

// Every identity the engine can check on s: axioms, contact condition,
// the h/ell package, and (when applicable) the K-contact and Sasakian
// identity groups.
StructureReport structure_identity_report(const ContactStructure& s);

struct KappaMu {
    Rational kappa;
    std::optional<Rational> mu; // nullopt: structurally indeterminate (h = 0)
};

struct ClassificationResult {
    bool is_contact = false;
    bool is_k_contact = false;
    bool is_sasakian = false;
    std::optional<std::pair<Rational, Rational>> eta_einstein; // constants (a, b)
    bool eta_einstein_nonconstant = false; // residual vanishes, coefficients not constant
    std::optional<KappaMu> kappa_mu;
    bool d_fixed = false;
};

// Throws NotContact when the axioms or the contact condition fail.
ClassificationResult classify(const ContactStructure& s);

// eta -> t eta, xi -> xi / t, phi -> phi, g -> t g + eps t (t - 1) eta (x) eta.
// Throws ZeroParameter for t = 0. The result is validated on construction.
ContactStructure d_homothetic_deform(const ContactStructure& s, const Rational& t);

// Transformed eta-Einstein coefficient (a - 2 eps t + 2 eps) / t.
Rational deformed_eta_einstein_a(const Rational& a, int eps, const Rational& t);

// Short deterministic description of the nonzero components of a tensor.
std::string residual_description(const TensorField& t);
std::string residual_description(const RationalFunction& f);

// Constant value of a rational function, when it is constant.
std::optional<Rational> rf_constant(const RationalFunction& f);

} // namespace contactgeo
