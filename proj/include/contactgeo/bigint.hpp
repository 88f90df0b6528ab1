#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace contactgeo {

// Arbitrary-precision signed integer. Magnitude is stored as base-2^32
// limbs, least significant first, with no trailing zero limbs; zero has an
// empty limb vector and sign 0. Immutable in spirit: all operators return
// fresh values.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_decimal(std::string_view s); // optional leading '-'

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_one() const;
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated division (C semantics: quotient rounds toward zero,
    // remainder has the sign of the dividend). Divisor must be nonzero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    // Division known to be exact; asserts a zero remainder.
    BigInt divexact(const BigInt& o) const;

    static BigInt gcd(const BigInt& a, const BigInt& b); // result >= 0
    static BigInt pow(const BigInt& base, unsigned long exp);

    int compare(const BigInt& o) const; // -1, 0, +1
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

    std::string to_decimal() const;
    double to_double() const;

    // True when the value fits in a signed 64-bit integer.
    bool fits_int64() const;
    long long to_int64() const; // valid only when fits_int64()

    size_t bit_length() const;

private:
    int sign_ = 0;
    std::vector<uint32_t> limbs_;

    void trim();
    static int compare_abs(const BigInt& a, const BigInt& b);
    static std::vector<uint32_t> add_abs(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_abs(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_abs(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void shift_left_bits(std::vector<uint32_t>& v, size_t bits);
    static void divmod_abs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace contactgeo
