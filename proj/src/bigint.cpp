#include "contactgeo/bigint.hpp"

#include "contactgeo/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace contactgeo {

namespace {
constexpr uint64_t kBase = 1ull << 32;
} // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid UB on LLONG_MIN by widening before negation.
    uint64_t mag = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
    if (mag >> 32) limbs_.push_back(static_cast<uint32_t>(mag >> 32));
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

bool BigInt::is_one() const {
    return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::compare_abs(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = compare_abs(*this, o);
    return sign_ >= 0 ? c : -c;
}

std::vector<uint32_t> BigInt::add_abs(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& hi = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(lo.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < lo.size(); ++i) {
        uint64_t s = carry + lo[i] + (i < hi.size() ? hi[i] : 0);
        r[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    r[lo.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_abs(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_abs(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.limbs_ = add_abs(limbs_, o.limbs_);
        r.sign_ = sign_;
    } else {
        int c = compare_abs(*this, o);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = sub_abs(limbs_, o.limbs_);
            r.sign_ = sign_;
        } else {
            r.limbs_ = sub_abs(o.limbs_, limbs_);
            r.sign_ = o.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_ = mul_abs(limbs_, o.limbs_);
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = 0;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return (limbs_.size() - 1) * 32 + bits;
}

void BigInt::shift_left_bits(std::vector<uint32_t>& v, size_t bits) {
    if (v.empty() || bits == 0) return;
    size_t limb_shift = bits / 32;
    size_t bit_shift = bits % 32;
    v.insert(v.begin(), limb_shift, 0u);
    if (bit_shift) {
        uint32_t carry = 0;
        for (size_t i = limb_shift; i < v.size(); ++i) {
            uint64_t cur = (static_cast<uint64_t>(v[i]) << bit_shift) | carry;
            v[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = static_cast<uint32_t>(cur >> 32);
        }
        if (carry) v.push_back(carry);
    }
}

// Binary (shift-subtract) long division on magnitudes.
void BigInt::divmod_abs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    BigInt av, bv;
    av.limbs_ = a;
    av.sign_ = a.empty() ? 0 : 1;
    bv.limbs_ = b;
    bv.sign_ = 1;
    if (compare_abs(av, bv) < 0) {
        q.clear();
        r = a;
        return;
    }
    size_t shift = av.bit_length() - bv.bit_length();
    std::vector<uint32_t> d = b;
    shift_left_bits(d, shift);
    std::vector<uint32_t> rem = a;
    q.assign(shift / 32 + 1, 0u);
    for (size_t s = shift + 1; s-- > 0;) {
        BigInt remv, dv;
        remv.limbs_ = rem;
        remv.sign_ = rem.empty() ? 0 : 1;
        dv.limbs_ = d;
        dv.sign_ = 1;
        if (compare_abs(remv, dv) >= 0) {
            rem = sub_abs(rem, d);
            q[s / 32] |= (1u << (s % 32));
        }
        // shift d right one bit
        uint32_t carry = 0;
        for (size_t i = d.size(); i-- > 0;) {
            uint32_t next = d[i] & 1u;
            d[i] = (d[i] >> 1) | (carry << 31);
            carry = next;
        }
        while (!d.empty() && d.back() == 0) d.pop_back();
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = rem;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw DivisionByZero("integer division by zero");
    if (a.sign_ == 0) {
        q = BigInt();
        r = BigInt();
        return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_abs(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.limbs_ = std::move(rm);
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    q.trim();
    r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::divexact(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    if (!r.is_zero()) throw Error("divexact: division was not exact");
    return q;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
    BigInt result(1), b = base;
    while (exp) {
        if (exp & 1ul) result = result * b;
        exp >>= 1;
        if (exp) b = b * b;
    }
    return result;
}

BigInt BigInt::from_decimal(std::string_view s) {
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i >= s.size()) throw ParseError("empty integer literal");
    BigInt r;
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError(std::string("invalid digit in integer literal: '") + s[i] + "'");
        r = r * ten + BigInt(s[i] - '0');
    }
    if (sign < 0) r = -r;
    return r;
}

std::string BigInt::to_decimal() const {
    if (sign_ == 0) return "0";
    std::string digits;
    BigInt v = abs();
    BigInt chunk(1000000000); // 10^9 per division step
    while (!v.is_zero()) {
        BigInt q, r;
        divmod(v, chunk, q, r);
        uint64_t part = r.limbs_.empty() ? 0 : r.limbs_[0];
        if (r.limbs_.size() > 1) part |= static_cast<uint64_t>(r.limbs_[1]) << 32;
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + part % 10));
            part /= 10;
        }
        v = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    double r = 0.0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return sign_ < 0 ? -r : r;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return sign_ > 0 ? mag <= 0x7fffffffffffffffull : mag <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    uint64_t mag = 0;
    if (!limbs_.empty()) mag = limbs_[0];
    if (limbs_.size() > 1) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
    return sign_ < 0 ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

} // namespace contactgeo
