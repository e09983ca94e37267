/*
   Copyright 2026 the supereig authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "sev/field.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace sev {

namespace {

constexpr long kMaxPrime = (1L << 31) - 1;  // keeps residue products in 64 bits

bool is_prime(long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

bool is_squarefree(long d) {
    unsigned long m = d < 0 ? static_cast<unsigned long>(-(d + 1)) + 1UL
                            : static_cast<unsigned long>(d);
    if (m == 0) return false;
    for (unsigned long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            m /= q;
            if (m % q == 0) return false;
        }
    }
    return true;
}

unsigned long addmod(unsigned long a, unsigned long b, unsigned long p) {
    unsigned long s = a + b;
    return s >= p ? s - p : s;
}

unsigned long submod(unsigned long a, unsigned long b, unsigned long p) {
    return a >= b ? a - b : a + p - b;
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return (a * b) % p;  // p < 2^31, so a*b < 2^62
}

unsigned long powmod(unsigned long a, mpz_class e, unsigned long p) {
    unsigned long r = 1 % p;
    a %= p;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

unsigned long invmod(unsigned long a, unsigned long p) {
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    long t = 0, new_t = 1;
    long r = static_cast<long>(p), new_r = static_cast<long>(a);
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return static_cast<unsigned long>(t < 0 ? t + static_cast<long>(p) : t);
}

// Square root mod an odd prime via Tonelli-Shanks; nullopt for non-residues.
std::optional<unsigned long> sqrtmod(unsigned long x, unsigned long p) {
    if (x == 0) return 0UL;
    if (powmod(x, mpz_class((p - 1) / 2), p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(x, mpz_class((p + 1) / 4), p);
    unsigned long q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    unsigned long z = 2;
    while (powmod(z, mpz_class((p - 1) / 2), p) != p - 1) ++z;
    unsigned long m = s;
    unsigned long c = powmod(z, mpz_class(q), p);
    unsigned long t = powmod(x, mpz_class(q), p);
    unsigned long r = powmod(x, mpz_class((q + 1) / 2), p);
    while (t != 1) {
        unsigned long i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        unsigned long b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

// Non-negative rational square root, if one exists.
std::optional<mpq_class> sqrt_rational(const mpq_class& x) {
    if (sgn(x) < 0) return std::nullopt;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

[[noreturn]] void kind_error(const char* what, const FieldDescriptor& f) {
    throw std::invalid_argument(std::string(what) + " is not defined over " + f.name());
}

void require_same(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (!(a == b))
        throw std::invalid_argument("field mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace

FieldDescriptor FieldDescriptor::rationals() {
    return FieldDescriptor(FieldKind::Rationals, 0, 0);
}

FieldDescriptor FieldDescriptor::prime_field(long p) {
    if (p < 3 || p > kMaxPrime || !is_prime(p))
        throw std::invalid_argument("GF(p) requires an odd prime p with 3 <= p < 2^31, got " +
                                    std::to_string(p));
    return FieldDescriptor(FieldKind::PrimeField, p, 0);
}

FieldDescriptor FieldDescriptor::quadratic_extension(long d) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw std::invalid_argument("Q(sqrt(d)) requires squarefree d outside {0, 1}, got " +
                                    std::to_string(d));
    return FieldDescriptor(FieldKind::QuadraticExtension, 0, d);
}

long FieldDescriptor::prime() const {
    if (kind_ != FieldKind::PrimeField) kind_error("prime()", *this);
    return p_;
}

long FieldDescriptor::radicand() const {
    if (kind_ != FieldKind::QuadraticExtension) kind_error("radicand()", *this);
    return d_;
}

unsigned long FieldDescriptor::characteristic() const {
    return kind_ == FieldKind::PrimeField ? static_cast<unsigned long>(p_) : 0;
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
        case FieldKind::QuadraticExtension:
            return "Q(sqrt(" + std::to_string(d_) + "))";
    }
    return "?";
}

FieldElement FieldElement::zero(const FieldDescriptor& f) { return from_int(f, 0); }
FieldElement FieldElement::one(const FieldDescriptor& f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(const FieldDescriptor& f, long v) {
    switch (f.kind()) {
        case FieldKind::Rationals: return FieldElement(f, mpq_class(v));
        case FieldKind::PrimeField: {
            long p = f.prime();
            long r = v % p;
            if (r < 0) r += p;
            return FieldElement(f, static_cast<unsigned long>(r));
        }
        case FieldKind::QuadraticExtension:
            return FieldElement(f, Quad{mpq_class(v), mpq_class(0)});
    }
    throw std::logic_error("bad field kind");
}

FieldElement FieldElement::from_rational(const FieldDescriptor& f, const mpq_class& v) {
    switch (f.kind()) {
        case FieldKind::Rationals: return FieldElement(f, v);
        case FieldKind::PrimeField: {
            unsigned long p = static_cast<unsigned long>(f.prime());
            mpz_class num = v.get_num() % static_cast<long>(p);
            if (num < 0) num += static_cast<long>(p);
            mpz_class den = v.get_den() % static_cast<long>(p);
            unsigned long dn = den.get_ui();
            if (dn == 0)
                throw std::invalid_argument("denominator divisible by p in GF(p) conversion");
            return FieldElement(f, mulmod(num.get_ui(), invmod(dn, p), p));
        }
        case FieldKind::QuadraticExtension:
            return FieldElement(f, Quad{v, mpq_class(0)});
    }
    throw std::logic_error("bad field kind");
}

FieldElement FieldElement::quadratic(const FieldDescriptor& f, const mpq_class& a,
                                     const mpq_class& b) {
    if (f.kind() != FieldKind::QuadraticExtension) kind_error("quadratic()", f);
    return FieldElement(f, Quad{a, b});
}

bool FieldElement::is_zero() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: return sgn(std::get<mpq_class>(v_)) == 0;
        case FieldKind::PrimeField: return std::get<unsigned long>(v_) == 0;
        case FieldKind::QuadraticExtension: {
            const Quad& q = std::get<Quad>(v_);
            return sgn(q.a) == 0 && sgn(q.b) == 0;
        }
    }
    return false;
}

bool FieldElement::is_one() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(v_) == 1;
        case FieldKind::PrimeField: return std::get<unsigned long>(v_) == 1;
        case FieldKind::QuadraticExtension: {
            const Quad& q = std::get<Quad>(v_);
            return q.a == 1 && sgn(q.b) == 0;
        }
    }
    return false;
}

FieldElement FieldElement::operator-() const {
    switch (field_.kind()) {
        case FieldKind::Rationals:
            return FieldElement(field_, mpq_class(-std::get<mpq_class>(v_)));
        case FieldKind::PrimeField: {
            unsigned long p = static_cast<unsigned long>(field_.prime());
            unsigned long r = std::get<unsigned long>(v_);
            return FieldElement(field_, r == 0 ? 0UL : p - r);
        }
        case FieldKind::QuadraticExtension: {
            const Quad& q = std::get<Quad>(v_);
            return FieldElement(field_, Quad{-q.a, -q.b});
        }
    }
    throw std::logic_error("bad field kind");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in " + field_.name());
    switch (field_.kind()) {
        case FieldKind::Rationals:
            return FieldElement(field_, mpq_class(1 / std::get<mpq_class>(v_)));
        case FieldKind::PrimeField: {
            unsigned long p = static_cast<unsigned long>(field_.prime());
            return FieldElement(field_, invmod(std::get<unsigned long>(v_), p));
        }
        case FieldKind::QuadraticExtension: {
            // (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - d b^2); the norm is
            // nonzero because d is not a rational square.
            const Quad& q = std::get<Quad>(v_);
            mpq_class nrm = q.a * q.a - field_.radicand() * q.b * q.b;
            return FieldElement(field_, Quad{q.a / nrm, -q.b / nrm});
        }
    }
    throw std::logic_error("bad field kind");
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same(field_, rhs.field_);
    switch (field_.kind()) {
        case FieldKind::Rationals:
            std::get<mpq_class>(v_) += std::get<mpq_class>(rhs.v_);
            break;
        case FieldKind::PrimeField: {
            unsigned long p = static_cast<unsigned long>(field_.prime());
            v_ = addmod(std::get<unsigned long>(v_), std::get<unsigned long>(rhs.v_), p);
            break;
        }
        case FieldKind::QuadraticExtension: {
            Quad& q = std::get<Quad>(v_);
            const Quad& r = std::get<Quad>(rhs.v_);
            q.a += r.a;
            q.b += r.b;
            break;
        }
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same(field_, rhs.field_);
    switch (field_.kind()) {
        case FieldKind::Rationals:
            std::get<mpq_class>(v_) -= std::get<mpq_class>(rhs.v_);
            break;
        case FieldKind::PrimeField: {
            unsigned long p = static_cast<unsigned long>(field_.prime());
            v_ = submod(std::get<unsigned long>(v_), std::get<unsigned long>(rhs.v_), p);
            break;
        }
        case FieldKind::QuadraticExtension: {
            Quad& q = std::get<Quad>(v_);
            const Quad& r = std::get<Quad>(rhs.v_);
            q.a -= r.a;
            q.b -= r.b;
            break;
        }
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same(field_, rhs.field_);
    switch (field_.kind()) {
        case FieldKind::Rationals:
            std::get<mpq_class>(v_) *= std::get<mpq_class>(rhs.v_);
            break;
        case FieldKind::PrimeField: {
            unsigned long p = static_cast<unsigned long>(field_.prime());
            v_ = mulmod(std::get<unsigned long>(v_), std::get<unsigned long>(rhs.v_), p);
            break;
        }
        case FieldKind::QuadraticExtension: {
            const Quad& q = std::get<Quad>(v_);
            const Quad& r = std::get<Quad>(rhs.v_);
            mpq_class a = q.a * r.a + field_.radicand() * q.b * r.b;
            mpq_class b = q.a * r.b + q.b * r.a;
            v_ = Quad{std::move(a), std::move(b)};
            break;
        }
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    return *this *= rhs.inverse();
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    if (!(field_ == rhs.field_)) return false;
    return v_ == rhs.v_;
}

FieldElement FieldElement::conjugate() const {
    if (field_.kind() != FieldKind::QuadraticExtension) kind_error("conjugate", field_);
    const Quad& q = std::get<Quad>(v_);
    return FieldElement(field_, Quad{q.a, -q.b});
}

std::optional<FieldElement> FieldElement::sqrt_if_square() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: {
            auto r = sqrt_rational(std::get<mpq_class>(v_));
            if (!r) return std::nullopt;
            return FieldElement(field_, std::move(*r));
        }
        case FieldKind::PrimeField: {
            unsigned long p = static_cast<unsigned long>(field_.prime());
            auto r = sqrtmod(std::get<unsigned long>(v_), p);
            if (!r) return std::nullopt;
            unsigned long w = std::min(*r, *r == 0 ? 0UL : p - *r);
            return FieldElement(field_, w);
        }
        case FieldKind::QuadraticExtension: {
            const Quad& q = std::get<Quad>(v_);
            long d = field_.radicand();
            if (sgn(q.b) == 0) {
                // Rational a: either sqrt(a) is rational, or a = d v^2.
                if (auto r = sqrt_rational(q.a))
                    return FieldElement(field_, Quad{std::move(*r), mpq_class(0)});
                if (auto r = sqrt_rational(q.a / d))
                    return FieldElement(field_, Quad{mpq_class(0), std::move(*r)});
                return std::nullopt;
            }
            // (u + v sqrt(d))^2 = a + b sqrt(d) with b != 0 forces u, v != 0,
            // u^2 = (a ± e)/2 where e^2 = a^2 - d b^2, and v = b / (2u).
            auto e = sqrt_rational(q.a * q.a - d * q.b * q.b);
            if (!e) return std::nullopt;
            for (int sign : {+1, -1}) {
                mpq_class u2 = (q.a + sign * *e) / 2;
                auto u = sqrt_rational(u2);
                if (!u || sgn(*u) == 0) continue;
                mpq_class v = q.b / (2 * *u);
                return FieldElement(field_, Quad{std::move(*u), std::move(v)});
            }
            return std::nullopt;
        }
    }
    throw std::logic_error("bad field kind");
}

const mpq_class& FieldElement::rational() const {
    if (field_.kind() != FieldKind::Rationals) kind_error("rational()", field_);
    return std::get<mpq_class>(v_);
}

unsigned long FieldElement::residue() const {
    if (field_.kind() != FieldKind::PrimeField) kind_error("residue()", field_);
    return std::get<unsigned long>(v_);
}

const mpq_class& FieldElement::quad_a() const {
    if (field_.kind() != FieldKind::QuadraticExtension) kind_error("quad_a()", field_);
    return std::get<Quad>(v_).a;
}

const mpq_class& FieldElement::quad_b() const {
    if (field_.kind() != FieldKind::QuadraticExtension) kind_error("quad_b()", field_);
    return std::get<Quad>(v_).b;
}

FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

int cmp(const FieldElement& a, const FieldElement& b) {
    require_same(a.field(), b.field());
    switch (a.field().kind()) {
        case FieldKind::Rationals: return cmp(a.rational(), b.rational());
        case FieldKind::PrimeField: {
            unsigned long x = a.residue(), y = b.residue();
            return x < y ? -1 : x > y ? 1 : 0;
        }
        case FieldKind::QuadraticExtension: {
            int c = cmp(a.quad_a(), b.quad_a());
            return c != 0 ? c : cmp(a.quad_b(), b.quad_b());
        }
    }
    return 0;
}

FieldElement pow(const FieldElement& x, const mpz_class& e) {
    if (sgn(e) < 0) return pow(x.inverse(), mpz_class(-e));
    FieldElement r = FieldElement::one(x.field());
    FieldElement base = x;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Text format: Q "a/b" | "a"; GF(p) "k"; Q(sqrt(d)) "a+b*sqrt(d)" with the
// usual degenerate forms ("a", "b*sqrt(d)", "sqrt(d)", "a-sqrt(d)", ...).
// ---------------------------------------------------------------------------

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

// Appends "b*sqrt(d)" for |b|, without sign.
void append_sqrt_term(std::string& out, const mpq_class& abs_b, long d) {
    if (abs_b != 1) {
        out += abs_b.get_str();
        out += '*';
    }
    out += "sqrt(";
    out += std::to_string(d);
    out += ')';
}

struct Cursor {
    std::string_view s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("cannot parse element '" + std::string(s) + "': " + why);
    }
};

// Unsigned rational literal: digits [ '/' digits ].
mpq_class parse_unsigned_rational(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected a number");
    mpz_class num(std::string(c.s.substr(start, c.i - start)), 10);
    if (c.eat('/')) {
        c.skip_ws();
        size_t dstart = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == dstart) c.fail("expected a denominator");
        mpz_class den(std::string(c.s.substr(dstart, c.i - dstart)), 10);
        if (den == 0) c.fail("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    return mpq_class(num);
}

bool peek_sqrt(Cursor& c) {
    c.skip_ws();
    return c.s.substr(c.i, 4) == "sqrt";
}

long parse_sqrt_radicand(Cursor& c) {
    c.skip_ws();
    if (c.s.substr(c.i, 4) != "sqrt") c.fail("expected sqrt(...)");
    c.i += 4;
    if (!c.eat('(')) c.fail("expected '(' after sqrt");
    bool neg = c.eat('-');
    mpq_class r = parse_unsigned_rational(c);
    if (!c.eat(')')) c.fail("expected ')'");
    if (r.get_den() != 1) c.fail("radicand must be an integer");
    long v = static_cast<long>(r.get_num().get_si());
    return neg ? -v : v;
}

// One signed term of a quadratic-extension element: either a rational or a
// rational multiple of sqrt(d). Adds it onto (a, b).
void parse_quad_term(Cursor& c, long d, mpq_class& a, mpq_class& b, bool leading) {
    int sign = 1;
    c.skip_ws();
    if (c.eat('-')) {
        sign = -1;
    } else if (c.eat('+')) {
        if (leading) c.fail("unexpected leading '+'");
    } else if (!leading) {
        c.fail("expected '+' or '-' between terms");
    }
    if (peek_sqrt(c)) {
        long rd = parse_sqrt_radicand(c);
        if (rd != d) c.fail("radicand does not match the field");
        b += sign;
        return;
    }
    mpq_class coeff = parse_unsigned_rational(c);
    c.skip_ws();
    if (c.i < c.s.size() && (c.s[c.i] == '*' || peek_sqrt(c))) {
        c.eat('*');
        long rd = parse_sqrt_radicand(c);
        if (rd != d) c.fail("radicand does not match the field");
        b += sign * coeff;
    } else {
        a += sign * coeff;
    }
}

}  // namespace

std::string FieldElement::to_string() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: return rational_str(rational());
        case FieldKind::PrimeField: return std::to_string(residue());
        case FieldKind::QuadraticExtension: {
            const mpq_class& a = quad_a();
            const mpq_class& b = quad_b();
            long d = field_.radicand();
            if (sgn(b) == 0) return rational_str(a);
            std::string out;
            if (sgn(a) != 0) {
                out = rational_str(a);
                out += sgn(b) < 0 ? '-' : '+';
            } else if (sgn(b) < 0) {
                out = "-";
            }
            append_sqrt_term(out, abs(b), d);
            return out;
        }
    }
    return "?";
}

FieldElement FieldElement::parse(const FieldDescriptor& f, std::string_view text) {
    Cursor c{text};
    switch (f.kind()) {
        case FieldKind::Rationals: {
            int sign = 1;
            if (c.eat('-')) sign = -1;
            mpq_class q = parse_unsigned_rational(c);
            if (!c.done()) c.fail("trailing characters");
            return from_rational(f, sign < 0 ? mpq_class(-q) : q);
        }
        case FieldKind::PrimeField: {
            int sign = 1;
            if (c.eat('-')) sign = -1;
            mpq_class q = parse_unsigned_rational(c);
            if (!c.done()) c.fail("trailing characters");
            if (q.get_den() != 1) c.fail("GF(p) elements are integers");
            return from_rational(f, sign < 0 ? mpq_class(-q) : q);
        }
        case FieldKind::QuadraticExtension: {
            mpq_class a(0), b(0);
            parse_quad_term(c, f.radicand(), a, b, true);
            c.skip_ws();
            while (!c.done()) parse_quad_term(c, f.radicand(), a, b, false);
            return quadratic(f, a, b);
        }
    }
    throw std::logic_error("bad field kind");
}

}  // namespace sev
