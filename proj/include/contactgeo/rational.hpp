#pragma once

#include "contactgeo/bigint.hpp"

#include <string>
#include <string_view>

namespace contactgeo {

// Exact rational number. Always reduced: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den); // reduces; throws DivisionByZero on den == 0
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "p", "p/q", optional sign on p (and on q, folded into p).
    static Rational parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws DivisionByZero
    Rational inverse() const;
    Rational abs() const;
    Rational pow(long exp) const; // negative exp inverts; throws on 0^-n

    int compare(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }
    bool operator>(const Rational& o) const { return compare(o) > 0; }
    bool operator>=(const Rational& o) const { return compare(o) >= 0; }

    std::string to_string() const; // "p" when den = 1, else "p/q"
    double to_double() const;

private:
    BigInt num_;
    BigInt den_;
    void reduce();
};

} // namespace contactgeo
