#include "contactgeo/rational_function.hpp"

#include "contactgeo/errors.hpp"

#include <algorithm>

namespace contactgeo {

Point::Point(VarsPtr vars, std::vector<Rational> values)
    : vars_(std::move(vars)), values_(std::move(values)) {
    if (values_.size() != vars_->size())
        throw Error("point does not assign every chart coordinate");
}

Point Point::from_assignments(VarsPtr vars, const std::map<std::string, Rational>& assignment) {
    std::vector<Rational> values;
    values.reserve(vars->size());
    for (const std::string& name : *vars) {
        auto it = assignment.find(name);
        if (it == assignment.end())
            throw Error("point is missing coordinate '" + name + "'");
        values.push_back(it->second);
    }
    if (assignment.size() != vars->size()) {
        for (const auto& [name, v] : assignment) {
            if (std::find(vars->begin(), vars->end(), name) == vars->end())
                throw UnknownVariable(name);
        }
    }
    return Point(std::move(vars), std::move(values));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_vars(num_, den_);
    reduce_fraction(num_, den_);
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), Rational(1))) {}

RationalFunction RationalFunction::zero(VarsPtr vars) {
    return RationalFunction(Polynomial::zero(std::move(vars)));
}

RationalFunction RationalFunction::one(VarsPtr vars) {
    return constant(std::move(vars), Rational(1));
}

RationalFunction RationalFunction::constant(VarsPtr vars, Rational c) {
    return RationalFunction(Polynomial::constant(std::move(vars), std::move(c)));
}

RationalFunction RationalFunction::variable(VarsPtr vars, size_t index) {
    return RationalFunction(Polynomial::variable(std::move(vars), index));
}

Rational RationalFunction::constant_value() const {
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(long exp) const {
    if (exp < 0) {
        if (is_zero()) throw DivisionByZero("zero raised to a negative power");
        return RationalFunction(den_.pow(static_cast<unsigned>(-exp)),
                                num_.pow(static_cast<unsigned>(-exp)));
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(exp)),
                            den_.pow(static_cast<unsigned>(exp)));
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
    return RationalFunction(num_.scaled(c), den_);
}

RationalFunction RationalFunction::partial(size_t var) const {
    // Quotient rule; the constructor restores canonical form.
    Polynomial dn = num_.partial(var) * den_ - num_ * den_.partial(var);
    return RationalFunction(std::move(dn), den_ * den_);
}

Rational RationalFunction::eval(const Point& p) const {
    if (!same_vars(vars(), p.vars()))
        throw ChartMismatch("evaluation point lives on a different chart");
    Rational d = den_.eval(p.values());
    if (d.is_zero()) throw PoleAtPoint();
    return num_.eval(p.values()) / d;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    if (!same_vars(vars(), o.vars()))
        throw ChartMismatch("comparing rational functions on different charts");
    return num_ == o.num_ && den_ == o.den_;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) return num_.to_string(); // canonical constant den is 1
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace contactgeo
