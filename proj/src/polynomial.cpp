#include "contactgeo/polynomial.hpp"

#include "contactgeo/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace contactgeo {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    assert(a.size() == b.size());
    unsigned long da = 0, db = 0;
    for (uint32_t e : a) da += e;
    for (uint32_t e : b) db += e;
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_vars(const Polynomial& a, const Polynomial& b) {
    if (!same_vars(a.vars(), b.vars()))
        throw ChartMismatch("polynomials over different coordinate lists");
}

Polynomial Polynomial::zero(VarsPtr vars) {
    return Polynomial(std::move(vars), Terms{});
}

Polynomial Polynomial::constant(VarsPtr vars, Rational c) {
    Terms t;
    if (!c.is_zero()) t.emplace(Monomial(vars->size(), 0), std::move(c));
    return Polynomial(std::move(vars), std::move(t));
}

Polynomial Polynomial::variable(VarsPtr vars, size_t index) {
    if (index >= vars->size()) throw UnknownVariable("index out of range");
    Monomial m(vars->size(), 0);
    m[index] = 1;
    Terms t;
    t.emplace(std::move(m), Rational(1));
    return Polynomial(std::move(vars), std::move(t));
}

Polynomial Polynomial::from_terms(VarsPtr vars, Terms terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != vars->size())
            throw Error("monomial arity does not match coordinate list");
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
    return Polynomial(std::move(vars), std::move(terms));
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](uint32_t e) { return e == 0; });
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.begin()->second;
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const Monomial& m = leading_monomial();
    long d = 0;
    for (uint32_t e : m) d += e;
    return d;
}

long Polynomial::degree_in(size_t var) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
    return terms_.empty() ? -1 : d;
}

const Monomial& Polynomial::leading_monomial() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

Polynomial Polynomial::operator-() const {
    Terms t;
    for (const auto& [m, c] : terms_) t.emplace(m, -c);
    return Polynomial(vars_, std::move(t));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_vars(*this, o);
    Terms t = terms_;
    for (const auto& [m, c] : o.terms_) {
        auto it = t.find(m);
        if (it == t.end()) {
            t.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return Polynomial(vars_, std::move(t));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_vars(*this, o);
    Terms t;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            Rational c = ca * cb;
            auto it = t.find(m);
            if (it == t.end()) {
                t.emplace(std::move(m), std::move(c));
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) t.erase(it);
            }
        }
    }
    return Polynomial(vars_, std::move(t));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(vars_);
    Terms t;
    for (const auto& [m, k] : terms_) t.emplace(m, k * c);
    return Polynomial(vars_, std::move(t));
}

Polynomial Polynomial::pow(unsigned exp) const {
    Polynomial result = constant(vars_, Rational(1));
    Polynomial base = *this;
    while (exp) {
        if (exp & 1u) result = result * base;
        exp >>= 1;
        if (exp) base = base * base;
    }
    return result;
}

Polynomial Polynomial::partial(size_t var) const {
    if (var >= nvars()) throw UnknownVariable("index out of range");
    Terms t;
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        t.emplace(std::move(d), c * Rational(static_cast<long long>(m[var])));
    }
    return Polynomial(vars_, std::move(t));
}

Rational Polynomial::eval(const std::vector<Rational>& values) const {
    if (values.size() != nvars()) throw Error("evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i]) term = term * values[i].pow(m[i]);
        }
        acc = acc + term;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_vars(vars_, o.vars_) && terms_ == o.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending grlex order for a stable, human-friendly form.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        bool has_vars = std::any_of(m.begin(), m.end(), [](uint32_t e) { return e != 0; });
        if (!has_vars) {
            out << c.to_string();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            out << c.to_string();
            printed = true;
        }
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (printed) out << "*";
            out << (*vars_)[i];
            if (m[i] > 1) out << "^" << m[i];
            printed = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Exact gcd machinery over integer polynomials.
// ---------------------------------------------------------------------------

namespace {

using ZTerms = std::map<Monomial, BigInt, GrlexLess>;

bool z_is_zero(const ZTerms& p) { return p.empty(); }

void z_insert(ZTerms& t, Monomial m, BigInt c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) {
        t.emplace(std::move(m), std::move(c));
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t.erase(it);
    }
}

ZTerms z_sub(const ZTerms& a, const ZTerms& b) {
    ZTerms r = a;
    for (const auto& [m, c] : b) z_insert(r, m, -c);
    return r;
}

// a * (coeff * monomial shift)
ZTerms z_mul_term(const ZTerms& a, const Monomial& shift, const BigInt& coeff) {
    ZTerms r;
    if (coeff.is_zero()) return r;
    for (const auto& [m, c] : a) {
        Monomial mm(m.size());
        for (size_t i = 0; i < m.size(); ++i) mm[i] = m[i] + shift[i];
        r.emplace(std::move(mm), c * coeff);
    }
    return r;
}

ZTerms z_mul(const ZTerms& a, const ZTerms& b) {
    ZTerms r;
    for (const auto& [m, c] : b) {
        ZTerms part = z_mul_term(a, m, c);
        for (auto& [mm, cc] : part) z_insert(r, mm, cc);
    }
    return r;
}

long z_degree_in(const ZTerms& p, size_t var) {
    long d = -1;
    for (const auto& [m, c] : p) d = std::max(d, static_cast<long>(m[var]));
    return d;
}

// Coefficient of var^k, with that exponent removed.
ZTerms z_coeff_of(const ZTerms& p, size_t var, uint32_t k) {
    ZTerms r;
    for (const auto& [m, c] : p) {
        if (m[var] != k) continue;
        Monomial mm = m;
        mm[var] = 0;
        r.emplace(std::move(mm), c);
    }
    return r;
}

BigInt z_integer_content(const ZTerms& p) {
    BigInt g;
    for (const auto& [m, c] : p) {
        g = BigInt::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

ZTerms z_div_bigint(const ZTerms& p, const BigInt& d) {
    ZTerms r;
    for (const auto& [m, c] : p) r.emplace(m, c.divexact(d));
    return r;
}

// Exact multivariate division under grlex leading-term elimination.
ZTerms z_divexact(const ZTerms& a, const ZTerms& b) {
    if (z_is_zero(b)) throw DivisionByZero("polynomial divexact by zero");
    ZTerms rem = a, q;
    const Monomial& mb = b.rbegin()->first;
    const BigInt& cb = b.rbegin()->second;
    while (!rem.empty()) {
        const Monomial& mr = rem.rbegin()->first;
        const BigInt& cr = rem.rbegin()->second;
        Monomial mq(mr.size());
        for (size_t i = 0; i < mr.size(); ++i) {
            if (mr[i] < mb[i]) throw Error("polynomial division was not exact");
            mq[i] = mr[i] - mb[i];
        }
        BigInt cq = cr.divexact(cb);
        z_insert(q, mq, cq);
        rem = z_sub(rem, z_mul_term(b, mq, cq));
    }
    return q;
}

ZTerms z_gcd(const ZTerms& a, const ZTerms& b);

// Content of p viewed as univariate in var: gcd of its coefficients.
ZTerms z_content_in(const ZTerms& p, size_t var) {
    long d = z_degree_in(p, var);
    ZTerms g;
    for (long k = 0; k <= d; ++k) {
        ZTerms ck = z_coeff_of(p, var, static_cast<uint32_t>(k));
        if (z_is_zero(ck)) continue;
        g = z_gcd(g, ck);
    }
    return g;
}

// Pseudo-remainder of a by b in var; both must have positive degree in var,
// deg_var(a) >= deg_var(b). Result is a unit multiple of a modulo b. The
// integer content is stripped after every step to slow coefficient swell.
ZTerms z_prem(ZTerms a, const ZTerms& b, size_t var) {
    long db = z_degree_in(b, var);
    ZTerms lcb = z_coeff_of(b, var, static_cast<uint32_t>(db));
    while (!z_is_zero(a)) {
        long da = z_degree_in(a, var);
        if (da < db) break;
        ZTerms lca = z_coeff_of(a, var, static_cast<uint32_t>(da));
        Monomial shift(a.begin()->first.size(), 0);
        shift[var] = static_cast<uint32_t>(da - db);
        // a = lc(b)*a - lc(a)*var^(da-db)*b ; leading terms in var cancel.
        a = z_sub(z_mul(lcb, a), z_mul(z_mul_term(lca, shift, BigInt(1)), b));
        BigInt ic = z_integer_content(a);
        if (!ic.is_zero() && !ic.is_one()) a = z_div_bigint(a, ic);
    }
    return a;
}

BigInt z_max_abs_coeff(const ZTerms& p) {
    BigInt m(0);
    for (const auto& [mono, c] : p) {
        BigInt a = c.abs();
        if (a > m) m = std::move(a);
    }
    return m;
}

// Substitute var = xi.
ZTerms z_eval_var(const ZTerms& p, size_t var, const BigInt& xi) {
    long d = z_degree_in(p, var);
    std::vector<BigInt> powers(static_cast<size_t>(d) + 1, BigInt(1));
    for (long k = 1; k <= d; ++k) powers[static_cast<size_t>(k)] = powers[static_cast<size_t>(k - 1)] * xi;
    ZTerms r;
    for (const auto& [m, c] : p) {
        Monomial mm = m;
        uint32_t e = mm[var];
        mm[var] = 0;
        z_insert(r, std::move(mm), c * powers[e]);
    }
    return r;
}

// Recovers a polynomial in var from its value at xi via balanced xi-adic
// digits. Fails when the digit count exceeds deg_cap + 1.
bool z_reconstruct_from_value(ZTerms gamma, size_t var, const BigInt& xi, long deg_cap,
                              ZTerms& out) {
    out.clear();
    long k = 0;
    while (!z_is_zero(gamma)) {
        if (k > deg_cap) return false;
        ZTerms next;
        for (const auto& [m, c] : gamma) {
            BigInt q, r;
            BigInt::divmod(c, xi, q, r);
            if (r.sign() < 0) { // Euclidean remainder
                r = r + xi;
                q = q - BigInt(1);
            }
            if ((r + r) > xi) { // balanced digit in (-xi/2, xi/2]
                r = r - xi;
                q = q + BigInt(1);
            }
            if (!r.is_zero()) {
                Monomial mm = m;
                mm[var] = static_cast<uint32_t>(k);
                z_insert(out, std::move(mm), std::move(r));
            }
            if (!q.is_zero()) z_insert(next, m, std::move(q));
        }
        gamma = std::move(next);
        ++k;
    }
    return true;
}

bool z_divides(const ZTerms& divisor, const ZTerms& p) {
    try {
        z_divexact(p, divisor);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// Heuristic gcd (integer gcd at a large evaluation point, verified by exact
// division). Inputs must be primitive in var with positive degree there.
// Returns false when no attempt verifies; the caller then falls back to the
// pseudo-remainder sequence.
bool z_gcd_heuristic(const ZTerms& a, const ZTerms& b, size_t var, ZTerms& out) {
    BigInt na = z_max_abs_coeff(a), nb = z_max_abs_coeff(b);
    BigInt xi = (na < nb ? na : nb);
    xi = xi + xi + BigInt(2);
    if (xi < BigInt(4)) xi = BigInt(4);
    long deg_cap = std::min(z_degree_in(a, var), z_degree_in(b, var));
    for (int attempt = 0; attempt < 5; ++attempt) {
        ZTerms ea = z_eval_var(a, var, xi);
        ZTerms eb = z_eval_var(b, var, xi);
        if (!z_is_zero(ea) && !z_is_zero(eb)) {
            ZTerms gamma = z_gcd(ea, eb);
            ZTerms g;
            if (z_reconstruct_from_value(std::move(gamma), var, xi, deg_cap, g) &&
                !z_is_zero(g)) {
                BigInt ic = z_integer_content(g);
                if (!ic.is_one()) g = z_div_bigint(g, ic);
                if (z_divides(g, a) && z_divides(g, b)) {
                    out = std::move(g);
                    return true;
                }
            }
        }
        xi = xi * xi + BigInt(1);
    }
    return false;
}

ZTerms z_abs(ZTerms p) {
    if (!p.empty() && p.rbegin()->second.sign() < 0) {
        ZTerms r;
        for (const auto& [m, c] : p) r.emplace(m, -c);
        return r;
    }
    return p;
}

ZTerms z_constant(size_t nvars, BigInt c) {
    ZTerms r;
    if (!c.is_zero()) r.emplace(Monomial(nvars, 0), std::move(c));
    return r;
}

bool z_is_constant(const ZTerms& p) {
    if (p.empty()) return true;
    if (p.size() > 1) return false;
    const Monomial& m = p.begin()->first;
    return std::all_of(m.begin(), m.end(), [](uint32_t e) { return e == 0; });
}

ZTerms z_gcd(const ZTerms& a, const ZTerms& b) {
    if (z_is_zero(a)) return z_abs(b);
    if (z_is_zero(b)) return z_abs(a);
    size_t nvars = a.begin()->first.size();
    if (z_is_constant(a) && z_is_constant(b)) {
        return z_constant(nvars, BigInt::gcd(a.begin()->second, b.begin()->second));
    }
    // Pick the last coordinate occurring in either operand as the main one.
    size_t var = 0;
    long da = -1, db = -1;
    for (size_t v = nvars; v-- > 0;) {
        da = z_degree_in(a, v);
        db = z_degree_in(b, v);
        if (da > 0 || db > 0) {
            var = v;
            break;
        }
    }
    if (da <= 0 && db > 0) return z_gcd(a, z_content_in(b, var));
    if (db <= 0 && da > 0) return z_gcd(z_content_in(a, var), b);

    ZTerms ca = z_content_in(a, var);
    ZTerms cb = z_content_in(b, var);
    ZTerms c = z_gcd(ca, cb);
    ZTerms pa = z_divexact(a, ca);
    ZTerms pb = z_divexact(b, cb);
    if (z_degree_in(pa, var) < z_degree_in(pb, var)) std::swap(pa, pb);
    ZTerms g;
    if (!z_gcd_heuristic(pa, pb, var, g)) {
        // Primitive pseudo-remainder sequence fallback.
        while (true) {
            ZTerms r = z_prem(pa, pb, var);
            if (z_is_zero(r)) {
                g = pb;
                break;
            }
            if (z_degree_in(r, var) <= 0) {
                // Primitive operands with a var-free remainder are coprime in var.
                g = z_constant(nvars, BigInt(1));
                break;
            }
            ZTerms cr = z_content_in(r, var);
            pa = std::move(pb);
            pb = z_divexact(r, cr);
        }
        g = z_divexact(g, z_content_in(g, var));
    }
    return z_abs(z_mul(c, g));
}

// Rewrites p as (integer polynomial) / scale with scale a positive integer.
std::pair<ZTerms, BigInt> to_integer_poly(const Polynomial& p) {
    BigInt scale(1);
    for (const auto& [m, c] : p.terms()) {
        BigInt g = BigInt::gcd(scale, c.den());
        scale = scale.divexact(g) * c.den();
    }
    ZTerms z;
    for (const auto& [m, c] : p.terms()) {
        z.emplace(m, c.num() * scale.divexact(c.den()));
    }
    return {std::move(z), std::move(scale)};
}

Polynomial from_integer_poly(const VarsPtr& vars, const ZTerms& z, const BigInt& denom) {
    Polynomial::Terms t;
    for (const auto& [m, c] : z) t.emplace(m, Rational(c, denom));
    return Polynomial::from_terms(vars, std::move(t));
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a, b);
    auto [za, sa] = to_integer_poly(a);
    auto [zb, sb] = to_integer_poly(b);
    ZTerms g = z_gcd(za, zb);
    return from_integer_poly(a.vars(), g, BigInt(1));
}

void reduce_fraction(Polynomial& num, Polynomial& den) {
    require_same_vars(num, den);
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    if (num.is_zero()) {
        num = Polynomial::zero(num.vars());
        den = Polynomial::constant(num.vars(), Rational(1));
        return;
    }
    auto [zn, sn] = to_integer_poly(num);
    auto [zd, sd] = to_integer_poly(den);
    // num/den = (zn/sn)/(zd/sd) = (zn*sd)/(zd*sn)
    for (auto& [m, c] : zn) c = c * sd;
    for (auto& [m, c] : zd) c = c * sn;
    ZTerms g = z_gcd(zn, zd);
    zn = z_divexact(zn, g);
    zd = z_divexact(zd, g);
    const BigInt& lead = zd.rbegin()->second;
    num = from_integer_poly(num.vars(), zn, lead);
    den = from_integer_poly(den.vars(), zd, lead);
}

} // namespace contactgeo
