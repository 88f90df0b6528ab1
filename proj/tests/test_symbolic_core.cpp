#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contactgeo/errors.hpp"
#include "contactgeo/expr.hpp"
#include "contactgeo/polynomial.hpp"
#include "contactgeo/rational_function.hpp"

#include "test_support.hpp"

#include <map>
#include <string>

#if CONTACTGEO_HAVE_GMP_ORACLE
#include <gmpxx.h>
#endif

using namespace contactgeo;
using testsupport::Rng;

namespace {

VarsPtr xyz() {
    static VarsPtr vars = std::make_shared<const Vars>(Vars{"x", "y", "z"});
    return vars;
}

RationalFunction rf(const std::string& text) { return parse_expression(text, xyz()); }

Point point(long long x, long long y, long long z) {
    return Point(xyz(), {Rational(x), Rational(y), Rational(z)});
}

} // namespace

#if CONTACTGEO_HAVE_GMP_ORACLE
TEST_CASE("bigint arithmetic agrees with gmp") {
    Rng rng(2024);
    auto random_decimal = [&](int max_digits) {
        std::string s;
        if (rng.range(0, 1)) s += "-";
        int digits = static_cast<int>(rng.range(1, max_digits));
        s += static_cast<char>('1' + rng.range(0, 8));
        for (int i = 1; i < digits; ++i) s += static_cast<char>('0' + rng.range(0, 9));
        return s;
    };
    for (int iter = 0; iter < 400; ++iter) {
        std::string sa = random_decimal(45), sb = random_decimal(30);
        BigInt a = BigInt::from_decimal(sa), b = BigInt::from_decimal(sb);
        mpz_class ga(sa), gb(sb);
        CHECK((a + b).to_decimal() == mpz_class(ga + gb).get_str());
        CHECK((a - b).to_decimal() == mpz_class(ga - gb).get_str());
        CHECK((a * b).to_decimal() == mpz_class(ga * gb).get_str());
        CHECK((a / b).to_decimal() == mpz_class(ga / gb).get_str());
        CHECK((a % b).to_decimal() == mpz_class(ga % gb).get_str());
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
        CHECK(BigInt::gcd(a, b).to_decimal() == gg.get_str());
        CHECK(a.to_decimal() == ga.get_str());
        CHECK((a < b) == (ga < gb));
    }
}
#endif

TEST_CASE("bigint edge cases") {
    CHECK(BigInt(0).to_decimal() == "0");
    CHECK(BigInt(-1).to_decimal() == "-1");
    CHECK((BigInt(1) - BigInt(1)).is_zero());
    long long min64 = std::numeric_limits<long long>::min();
    CHECK(BigInt(min64).to_decimal() == "-9223372036854775808");
    CHECK(BigInt(min64).fits_int64());
    CHECK(BigInt(min64).to_int64() == min64);
    BigInt big = BigInt::pow(BigInt(2), 100);
    CHECK(big.to_decimal() == "1267650600228229401496703205376");
    CHECK_FALSE(big.fits_int64());
    CHECK(big.bit_length() == 101);
    CHECK_THROWS_AS(BigInt(5) / BigInt(0), DivisionByZero);
    // truncated division signs
    CHECK((BigInt(-7) / BigInt(2)).to_decimal() == "-3");
    CHECK((BigInt(-7) % BigInt(2)).to_decimal() == "-1");
    CHECK((BigInt(7) / BigInt(-2)).to_decimal() == "-3");
    CHECK((BigInt(7) % BigInt(-2)).to_decimal() == "1");
}

TEST_CASE("rational reduction and arithmetic") {
    Rational r(BigInt(6), BigInt(-8));
    CHECK(r.to_string() == "-3/4");
    CHECK(r.den() > BigInt(0));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK(Rational(3, 7).pow(-2) == Rational(49, 9));
    CHECK(Rational(-5, 4) < Rational(-1, 8));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
}

TEST_CASE("rational function arithmetic") {
    // subtraction of identical inputs
    CHECK((rf("y") - rf("y")).is_zero());
    // g_xx of the reference metric with eps = 1, minus the plane part
    CHECK(rf("y^2/4 + 1/4") - rf("1/4") == rf("y^2/4"));
    // inverse cancels
    CHECK(rf("1/y") * rf("y") == RationalFunction::one(xyz()));
    CHECK_THROWS_AS(rf("x") / RationalFunction::zero(xyz()), DivisionByZero);
}

TEST_CASE("rational function partial derivatives") {
    CHECK(rf("y^2/4 + 1/4").partial(1) == rf("y/2"));
    CHECK(rf("7/3").partial(0).is_zero());
    CHECK(rf("1/y").partial(1) == rf("-1/y^2"));
    CHECK_THROWS_AS(rf("x").partial(17), UnknownVariable);
}

TEST_CASE("rational function evaluation") {
    CHECK(rf("y/2").eval(point(0, 3, 0)) == Rational(3, 2));
    CHECK_THROWS_AS(rf("1/y").eval(point(1, 0, 1)), PoleAtPoint);
    CHECK(rf("y^2/4 + 1/4").eval(point(0, 1, 0)) == Rational(1, 2));
}

TEST_CASE("rational function equality") {
    CHECK(rf("y*(1/y)") == RationalFunction::one(xyz()));
    CHECK(rf("y") != rf("y+1"));
    CHECK(rf("(y^2-1)/(y-1)") == rf("y+1"));
    VarsPtr other = std::make_shared<const Vars>(Vars{"u"});
    CHECK_THROWS_AS((void)(rf("y") == RationalFunction::one(other)), ChartMismatch);
}

TEST_CASE("canonical form") {
    // denominator leading coefficient is +1, common factors cancel
    RationalFunction f(parse_expression("2*x^2 - 2", xyz()).num(),
                       parse_expression("-4*x - 4", xyz()).num());
    CHECK(f.den().leading_coefficient().is_one());
    CHECK(f == rf("(1-x)/2"));
    // canonicalization is idempotent
    RationalFunction again(f.num(), f.den());
    CHECK(again.num() == f.num());
    CHECK(again.den() == f.den());
    // zero is 0/1
    RationalFunction z = rf("x") - rf("x");
    CHECK(z.num().is_zero());
    CHECK(z.den() == Polynomial::constant(xyz(), Rational(1)));
}

TEST_CASE("polynomial gcd") {
    auto p = [&](const std::string& s) { return parse_expression(s, xyz()).num(); };
    CHECK(poly_gcd(p("y^2-1"), p("y-1")) == p("y-1"));
    CHECK(poly_gcd(p("x*y"), p("x*z")) == p("x"));
    CHECK(poly_gcd(p("6*x"), p("4*x^2")) == p("2*x"));
    CHECK(poly_gcd(p("x+1"), p("x+2")) == p("1"));
    CHECK(poly_gcd(p("0"), p("-3*x")) == p("3*x"));
    // multivariate content + primitive part
    CHECK(poly_gcd(p("(x+y)*(x-y)*z"), p("(x+y)^2")) == p("x+y"));
    CHECK(poly_gcd(p("(x^2+2*x*y+y^2)*(z-1)"), p("(x+y)*(z^2-1)")) == p("(x+y)*(z-1)"));
}

TEST_CASE("ring laws on randomized inputs") {
    Rng rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        RationalFunction a = testsupport::random_rational_function(rng, xyz());
        RationalFunction b = testsupport::random_rational_function(rng, xyz());
        RationalFunction c = testsupport::random_rational_function(rng, xyz());
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("canonical equality agrees with cross multiplication") {
    // a/b == c/d decided on canonical forms must match the gcd-free route
    // a*d == c*b; a common random factor must cancel completely.
    Rng rng(97);
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial p = testsupport::random_polynomial(rng, xyz());
        Polynomial q = testsupport::random_polynomial(rng, xyz(), 3, 1, 3);
        Polynomial r = testsupport::random_polynomial(rng, xyz(), 3, 2, 3);
        if (q.is_zero()) q = Polynomial::constant(xyz(), Rational(1));
        if (r.is_zero()) r = Polynomial::constant(xyz(), Rational(2));
        RationalFunction lhs(p * r, q * r);
        RationalFunction rhs(p, q);
        CHECK(lhs == rhs);
        CHECK(poly_gcd(lhs.num(), lhs.den()).is_constant());
        CHECK(lhs.den().leading_coefficient().is_one());
        // unequal pair: perturb the numerator
        RationalFunction off(p * r + q * r, q * r);
        CHECK((off == rhs) == (off.num() * rhs.den() == rhs.num() * off.den()));
    }
    for (int iter = 0; iter < 25; ++iter) {
        RationalFunction a = testsupport::random_rational_function(rng, xyz());
        RationalFunction b = testsupport::random_rational_function(rng, xyz());
        bool canonical_eq = a == b;
        bool cross_eq = a.num() * b.den() == b.num() * a.den();
        CHECK(canonical_eq == cross_eq);
    }
}

TEST_CASE("derivative linearity and leibniz rule") {
    Rng rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        RationalFunction f = testsupport::random_rational_function(rng, xyz());
        RationalFunction g = testsupport::random_rational_function(rng, xyz());
        for (size_t v = 0; v < 3; ++v) {
            CHECK((f + g).partial(v) == f.partial(v) + g.partial(v));
            CHECK((f * g).partial(v) == f.partial(v) * g + f * g.partial(v));
        }
    }
}

TEST_CASE("central differences of rf_partial converge at order >= 2") {
    RationalFunction f = rf("y^3/(x+5) + x^2*y + 1/(y+9)");
    Point p = point(1, 2, 0);
    size_t var = 1;
    Rational exact = f.partial(var).eval(p);
    auto error_at = [&](int k) {
        Rational h(1, 1);
        for (int i = 0; i < k; ++i) h = h * Rational(1, 2);
        Rational plus = f.eval(testsupport::shifted_point(p, var, h));
        Rational minus = f.eval(testsupport::shifted_point(p, var, -h));
        return ((plus - minus) / (h + h) - exact).abs();
    };
    Rational e10 = error_at(10);
    Rational e20 = error_at(20);
    REQUIRE_FALSE(e10.is_zero());
    // order >= 2 over ten halvings, with slack factor 2
    CHECK(e20 * Rational(BigInt::pow(BigInt(2), 20), BigInt(1)) <= e10 + e10);
    // quadratic functions differentiate exactly
    RationalFunction q = rf("x^2 + 3*y - 4");
    Rational qplus = q.eval(testsupport::shifted_point(p, 0, Rational(1, 1024)));
    Rational qminus = q.eval(testsupport::shifted_point(p, 0, -Rational(1, 1024)));
    CHECK((qplus - qminus) / Rational(2, 1024) == q.partial(0).eval(p));
}

TEST_CASE("expression grammar") {
    CHECK(rf("2*x + 3*y - z") == rf("z*0 + 2*x+3*y-z"));
    CHECK(rf("x^3") == rf("x*x*x"));
    CHECK(rf("-x^2") == -rf("x^2")); // unary minus binds outside the power
    CHECK(rf("(x+y)^2") == rf("x^2 + 2*x*y + y^2"));
    CHECK(rf("3/4*x") == rf("x*3/4"));
    CHECK(rf("1/2/2") == rf("1/4"));
    CHECK(rf("x - - y") == rf("x + y"));
    CHECK_THROWS_AS(rf("sin(x)"), ParseError);
    CHECK_THROWS_AS(rf("2.5"), ParseError);
    CHECK_THROWS_AS(rf("x^-2"), ParseError);
    CHECK_THROWS_AS(rf("w + 1"), UnknownVariable);
    CHECK_THROWS_AS(rf("(x"), ParseError);
    CHECK_THROWS_AS(rf("x +"), ParseError);
    CHECK_THROWS_AS(rf("1/(x-x)"), DivisionByZero);
}

TEST_CASE("printing round trips through the parser") {
    Rng rng(23);
    for (int iter = 0; iter < 25; ++iter) {
        RationalFunction f = testsupport::random_rational_function(rng, xyz());
        CHECK(parse_expression(f.to_string(), xyz()) == f);
    }
    CHECK(rf("0").to_string() == "0");
    CHECK(rf("-y/2").to_string() == "-1/2*y");
}

TEST_CASE("points must assign every coordinate exactly once") {
    std::map<std::string, Rational> good{{"x", Rational(1)}, {"y", Rational(2)}, {"z", Rational(0)}};
    Point p = Point::from_assignments(xyz(), good);
    CHECK(p.value(1) == Rational(2));
    std::map<std::string, Rational> missing{{"x", Rational(1)}, {"y", Rational(2)}};
    CHECK_THROWS(Point::from_assignments(xyz(), missing));
    std::map<std::string, Rational> extra = good;
    extra.emplace("w", Rational(9));
    CHECK_THROWS_AS(Point::from_assignments(xyz(), extra), UnknownVariable);
}
