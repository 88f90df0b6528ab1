#pragma once

#include "contactgeo/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace contactgeo {

// Ordered coordinate names shared by every expression on a chart.
using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;

// Exponent vector, one entry per chart coordinate.
using Monomial = std::vector<uint32_t>;

// Graded lexicographic order: total degree first, ties broken
// lexicographically with earlier coordinates weighing more.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial with rational coefficients over a fixed
// coordinate list. Terms are kept in a grlex-ordered map with no zero
// coefficients stored.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    static Polynomial zero(VarsPtr vars);
    static Polynomial constant(VarsPtr vars, Rational c);
    static Polynomial variable(VarsPtr vars, size_t index);
    static Polynomial from_terms(VarsPtr vars, Terms terms);

    const VarsPtr& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // zero polynomial yields 0

    long total_degree() const; // -1 for the zero polynomial
    long degree_in(size_t var) const;

    // Leading term under grlex; polynomial must be nonzero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned exp) const;

    Polynomial partial(size_t var) const;
    Rational eval(const std::vector<Rational>& values) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Polynomial(VarsPtr vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}
    VarsPtr vars_;
    Terms terms_;
};

// True when both polynomials live over the same coordinate list.
bool same_vars(const VarsPtr& a, const VarsPtr& b);
void require_same_vars(const Polynomial& a, const Polynomial& b);

// Exact multivariate gcd, returned as the integer-primitive representative
// with positive leading coefficient (1 for coprime inputs, 0 only when both
// inputs are 0).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Cancels the common polynomial factor of num/den and rescales so the
// denominator's grlex leading coefficient is +1. den must be nonzero.
void reduce_fraction(Polynomial& num, Polynomial& den);

} // namespace contactgeo
