#pragma once

#include "contactgeo/contact.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace contactgeo {

// Potential data for an eta-Ricci soliton: either a vector field V for
//   L_V g + 2 Ric + 2 lambda g + 2 mu eta (x) eta = 0
// or a scalar potential f for the gradient form
//   Hess f + Ric + lambda g + mu eta (x) eta = 0.
// On (kappa, mu)-classified structures the constant in the mu slot is
// conventionally called tau; it is the same field.
struct SolitonData {
    std::variant<VectorField, RationalFunction> potential;
    Rational lambda;
    Rational mu;

    static SolitonData with_vector(VectorField v, Rational lambda, Rational mu);
    static SolitonData with_potential(RationalFunction f, Rational lambda, Rational mu);

    bool has_vector() const { return std::holds_alternative<VectorField>(potential); }
    const VectorField& vector() const { return std::get<VectorField>(potential); }
    const RationalFunction& scalar() const { return std::get<RationalFunction>(potential); }
};

enum class SolitonClass { Shrinking, Steady, Expanding };
std::string to_string(SolitonClass c);

struct SolitonVerdict {
    bool is_soliton = false;
    TensorField residual;            // (0,2), identically zero iff is_soliton
    SolitonClass soliton_class;      // sign of lambda only
    bool potential_is_killing = false;
    bool lie_phi_vanishes = false;
};

// Exact residual of the eta-Ricci soliton equation for vector data.
SolitonVerdict soliton_residual(const ContactStructure& s, const SolitonData& d);

// Exact residual of the gradient equation for scalar data.
SolitonVerdict gradient_soliton_residual(const ContactStructure& s, const SolitonData& d);

enum class HypothesisStatus { Holds, Fails, Assumed };

struct HypothesisCheck {
    std::string name;
    HypothesisStatus status = HypothesisStatus::Fails;
    std::string detail;
};

struct ConclusionCheck {
    std::string name;
    bool holds = false;
    std::string residual;
};

// A theorem instantiated on one concrete structure. Hypotheses are always
// re-verified, never assumed silently; a failing conclusion under verified
// hypotheses is a violation (the harness doubles as a counterexample
// hunter).
struct TheoremReport {
    enum class Overall { Verified, HypothesisNotMet, Violation };

    std::string id;
    std::vector<HypothesisCheck> hypotheses;
    std::vector<ConclusionCheck> conclusions;
    std::string note;

    Overall overall() const;
};
std::string to_string(TheoremReport::Overall o);

// Sasakian + eta-Ricci soliton implies eta-Einstein with closed-form
// coefficients and scalar curvature.
TheoremReport verify_sasakian_soliton_eta_einstein(const ContactStructure& s,
                                                   const SolitonData& d);

// Constant eta-Einstein structures carrying a soliton satisfy
// Ric^{ij} Ric_{ij} + lambda r + mu (eps a + b) = 0. When the potential is
// supplied the soliton hypothesis is checked, otherwise it is assumed.
TheoremReport verify_eta_einstein_trace_identity(const ContactStructure& s,
                                                 const Rational& lambda, const Rational& mu,
                                                 const VectorField* potential = nullptr);

// Timelike Reeb field: V is Killing. Spacelike Reeb field with non-Killing
// V: the structure is D-homothetically fixed, L_V phi = 0, and
// lambda - mu = 2n + 4 with Ric = -2 g + 2 (n + 1) eta (x) eta.
TheoremReport verify_soliton_dichotomy(const ContactStructure& s, const SolitonData& d);

// K-contact + gradient soliton: eta-Einstein with Ric = -lambda g
// - mu eta (x) eta and -eps lambda - mu = 2n.
TheoremReport verify_k_contact_gradient_soliton(const ContactStructure& s, const SolitonData& d);

// Potential colinear with the Reeb field and Q phi = phi Q: the structure
// is K-contact eta-Einstein with the same closed form as above.
TheoremReport verify_reeb_colinear_potential(const ContactStructure& s, const SolitonData& d);

// Gradient solitons on (kappa, mu) structures with eps kappa < 1: the
// scalar constraint eps kappa (mu - 2) = n mu + mu + tau, the two-branch
// alternative for (mu, tau), and R(X, Y) xi = 0 when tau = 0.
TheoremReport verify_kappa_mu_gradient_soliton(const ContactStructure& s, const SolitonData& d);

// The two branch substitutions solve the scalar constraint identically in
// kappa; checked symbolically with kappa as a chart variable.
TheoremReport verify_nullity_branch_identities(size_t n, int epsilon);

// Identity package for a supplied (kappa, mu) structure with eps kappa < 1:
// h^2 = (eps kappa - 1) phi^2, Q xi = 2 n kappa xi,
// nabla_xi h = -eps mu phi h, the Ricci operator closed form and the
// scalar curvature closed form.
StructureReport kappa_mu_identity_report(const ContactStructure& s, const Rational& kappa,
                                         const Rational& mu);

// The R^3 structure with xi = 2 d/dz, eta = (dz - y dx)/2, the rotation
// phi, g = eps eta (x) eta + (dx^2 + dy^2)/4, and the scaling potential
// field whose coefficients depend on (eps, lambda, mu).
std::pair<ContactStructure, SolitonData> builtin_example(int epsilon, const Rational& lambda,
                                                         const Rational& mu);

// Every theorem report applicable to the given structure and optional
// soliton data: the branch identities always, the soliton theorems when
// data is present (vector data drives the vector-potential results,
// scalar data the gradient ones).
std::vector<TheoremReport> theorem_suite(const ContactStructure& s,
                                         const std::optional<SolitonData>& d);

// The (kappa, mu) identity package when the structure is classified with
// eps kappa < 1 and a determinate mu; nullopt otherwise.
std::optional<StructureReport> kappa_mu_package_if_applicable(const ContactStructure& s);

} // namespace contactgeo
