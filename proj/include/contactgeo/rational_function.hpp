#pragma once

#include "contactgeo/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace contactgeo {

// An evaluation point: one exact rational value per chart coordinate.
class Point {
public:
    Point(VarsPtr vars, std::vector<Rational> values);
    // Requires exactly the chart coordinates as keys, each once.
    static Point from_assignments(VarsPtr vars,
                                  const std::map<std::string, Rational>& assignment);

    const VarsPtr& vars() const { return vars_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& value(size_t i) const { return values_.at(i); }

private:
    VarsPtr vars_;
    std::vector<Rational> values_;
};

// Exact multivariate rational function in canonical form: numerator and
// denominator share no polynomial factor and the denominator's grlex
// leading coefficient is +1. Zero is 0/1. All operations return canonical
// values; every operation is pure.
class RationalFunction {
public:
    RationalFunction(Polynomial num, Polynomial den); // throws DivisionByZero
    explicit RationalFunction(Polynomial num);

    static RationalFunction zero(VarsPtr vars);
    static RationalFunction one(VarsPtr vars);
    static RationalFunction constant(VarsPtr vars, Rational c);
    static RationalFunction variable(VarsPtr vars, size_t index);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const VarsPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const; // requires is_constant

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const; // throws DivisionByZero
    RationalFunction pow(long exp) const;
    RationalFunction scaled(const Rational& c) const;

    RationalFunction partial(size_t var) const;
    Rational eval(const Point& p) const; // throws PoleAtPoint

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

} // namespace contactgeo
