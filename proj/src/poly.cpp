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

#include "sev/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "sev/detail/berkowitz.hpp"
#include "sev/matrix.hpp"

namespace sev {

namespace {

void require_same(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (!(a == b))
        throw std::invalid_argument("field mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace

UniPoly::UniPoly(const FieldDescriptor& f, std::vector<FieldElement> ascending)
    : field_(f), c_(std::move(ascending)) {
    for (const FieldElement& e : c_) require_same(field_, e.field());
    strip();
}

void UniPoly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(FieldElement c) {
    UniPoly p(c.field());
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::monomial(FieldElement c, size_t degree) {
    UniPoly p(c.field());
    if (!c.is_zero()) {
        p.c_.resize(degree, FieldElement::zero(c.field()));
        p.c_.push_back(std::move(c));
    }
    return p;
}

UniPoly UniPoly::from_ints(const FieldDescriptor& f, std::initializer_list<long> ascending) {
    std::vector<FieldElement> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.push_back(FieldElement::from_int(f, v));
    return UniPoly(f, std::move(c));
}

FieldElement UniPoly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : FieldElement::zero(field_);
}

const FieldElement& UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(field_);
    r.c_.reserve(c_.size());
    for (const FieldElement& e : c_) r.c_.push_back(-e);
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    require_same(field_, rhs.field_);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), FieldElement::zero(field_));
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    strip();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    require_same(field_, rhs.field_);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), FieldElement::zero(field_));
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    strip();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    require_same(field_, rhs.field_);
    if (c_.empty() || rhs.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<FieldElement> out(c_.size() + rhs.c_.size() - 1, FieldElement::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    c_ = std::move(out);
    strip();
    return *this;
}

UniPoly& UniPoly::operator*=(const FieldElement& s) {
    require_same(field_, s.field());
    for (FieldElement& e : c_) e *= s;
    strip();
    return *this;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw std::domain_error("monic() of the zero polynomial");
    if (is_monic()) return *this;
    UniPoly r = *this;
    r *= leading().inverse();
    return r;
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    FieldElement acc = FieldElement::zero(field_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
UniPoly operator*(UniPoly lhs, const FieldElement& s) { return lhs *= s; }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
    require_same(f.field(), g.field());
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const FieldDescriptor& fd = f.field();
    std::vector<FieldElement> rem(f.coefficients());
    int dg = g.degree();
    if (f.degree() < dg) return {UniPoly::zero(fd), f};
    FieldElement lead_inv = g.leading().inverse();
    std::vector<FieldElement> quot(f.degree() - dg + 1, FieldElement::zero(fd));
    for (int i = f.degree(); i >= dg; --i) {
        FieldElement c = rem[i] * lead_inv;
        if (c.is_zero()) continue;
        quot[i - dg] = c;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= c * g.coeff(j);
    }
    return {UniPoly(fd, std::move(quot)), UniPoly(fd, std::move(rem))};
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
    UniPoly a = f, b = g;
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UniPoly derivative(const UniPoly& f) {
    const FieldDescriptor& fd = f.field();
    if (f.degree() <= 0) return UniPoly::zero(fd);
    std::vector<FieldElement> c;
    c.reserve(f.degree());
    for (int i = 1; i <= f.degree(); ++i)
        c.push_back(f.coeff(i) * FieldElement::from_int(fd, i));
    return UniPoly(fd, std::move(c));
}

UniPoly pow(const UniPoly& f, unsigned e) {
    UniPoly r = UniPoly::constant(FieldElement::one(f.field()));
    UniPoly base = f;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

int cmp(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

bool quadratic_irreducible(const UniPoly& g) {
    if (g.degree() != 2)
        throw std::invalid_argument("quadratic_irreducible expects degree 2, got degree " +
                                    std::to_string(g.degree()));
    FieldElement a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
    FieldElement four = FieldElement::from_int(g.field(), 4);
    FieldElement disc = b * b - four * a * c;
    return !disc.sqrt_if_square().has_value();
}

// ---------------------------------------------------------------------------
// BivarPoly
// ---------------------------------------------------------------------------

BivarPoly::BivarPoly(const FieldDescriptor& f, std::vector<std::vector<FieldElement>> grid)
    : field_(f), g_(std::move(grid)) {
    for (const auto& row : g_)
        for (const FieldElement& e : row) require_same(field_, e.field());
    strip();
}

void BivarPoly::strip() {
    for (auto& row : g_)
        while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!g_.empty() && g_.back().empty()) g_.pop_back();
}

BivarPoly BivarPoly::constant(FieldElement c) {
    BivarPoly p(c.field());
    if (!c.is_zero()) p.g_.push_back({std::move(c)});
    return p;
}

BivarPoly BivarPoly::var_t(const FieldDescriptor& f) {
    BivarPoly p(f);
    p.g_.push_back({});
    p.g_.push_back({FieldElement::one(f)});
    return p;
}

BivarPoly BivarPoly::var_d(const FieldDescriptor& f) {
    BivarPoly p(f);
    p.g_.push_back({FieldElement::zero(f), FieldElement::one(f)});
    return p;
}

int BivarPoly::degree_d() const {
    size_t m = 0;
    for (const auto& row : g_) m = std::max(m, row.size());
    return static_cast<int>(m) - 1;
}

FieldElement BivarPoly::coeff(size_t ti, size_t dj) const {
    if (ti < g_.size() && dj < g_[ti].size()) return g_[ti][dj];
    return FieldElement::zero(field_);
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r(field_);
    r.g_.reserve(g_.size());
    for (const auto& row : g_) {
        std::vector<FieldElement> nrow;
        nrow.reserve(row.size());
        for (const FieldElement& e : row) nrow.push_back(-e);
        r.g_.push_back(std::move(nrow));
    }
    return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    require_same(field_, rhs.field_);
    if (rhs.g_.size() > g_.size()) g_.resize(rhs.g_.size());
    for (size_t i = 0; i < rhs.g_.size(); ++i) {
        if (rhs.g_[i].size() > g_[i].size())
            g_[i].resize(rhs.g_[i].size(), FieldElement::zero(field_));
        for (size_t j = 0; j < rhs.g_[i].size(); ++j) g_[i][j] += rhs.g_[i][j];
    }
    strip();
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) { return *this += -rhs; }

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
    require_same(field_, rhs.field_);
    if (is_zero() || rhs.is_zero()) {
        g_.clear();
        return *this;
    }
    size_t dt = g_.size() + rhs.g_.size() - 1;
    size_t dd = static_cast<size_t>(degree_d() + rhs.degree_d()) + 1;
    std::vector<std::vector<FieldElement>> out(
        dt, std::vector<FieldElement>(dd, FieldElement::zero(field_)));
    for (size_t i = 0; i < g_.size(); ++i)
        for (size_t j = 0; j < g_[i].size(); ++j) {
            if (g_[i][j].is_zero()) continue;
            for (size_t k = 0; k < rhs.g_.size(); ++k)
                for (size_t l = 0; l < rhs.g_[k].size(); ++l)
                    out[i + k][j + l] += g_[i][j] * rhs.g_[k][l];
        }
    g_ = std::move(out);
    strip();
    return *this;
}

FieldElement BivarPoly::eval(const FieldElement& t, const FieldElement& d) const {
    FieldElement acc = FieldElement::zero(field_);
    for (size_t i = g_.size(); i-- > 0;) {
        FieldElement row = FieldElement::zero(field_);
        for (size_t j = g_[i].size(); j-- > 0;) row = row * d + g_[i][j];
        acc = acc * t + row;
    }
    return acc;
}

BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
BivarPoly operator*(BivarPoly lhs, const BivarPoly& rhs) { return lhs *= rhs; }

BivarPoly super_char_poly(const Mat& A) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("super_char_poly expects a square matrix");
    const FieldDescriptor& f = A.field();
    size_t n = A.rows();
    Mat a2 = A * A;
    // Entries of A^2 - tA + dI over the ring of bivariate polynomials.
    BivarPoly t = BivarPoly::var_t(f), d = BivarPoly::var_d(f);
    std::vector<BivarPoly> entries;
    entries.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BivarPoly e = BivarPoly::constant(a2.at(i, j));
            e -= t * BivarPoly::constant(A.at(i, j));
            if (i == j) e += d;
            entries.push_back(std::move(e));
        }
    struct Ops {
        const FieldDescriptor& f;
        BivarPoly zero() const { return BivarPoly(f); }
        BivarPoly one() const { return BivarPoly::constant(FieldElement::one(f)); }
        BivarPoly add(const BivarPoly& a, const BivarPoly& b) const { return a + b; }
        BivarPoly mul(const BivarPoly& a, const BivarPoly& b) const { return a * b; }
        BivarPoly neg(const BivarPoly& a) const { return -a; }
    };
    // det(M) = (-1)^n * [constant coefficient of det(S*I - M)], division-free.
    std::vector<BivarPoly> cp = detail::berkowitz_charpoly<BivarPoly>(entries, n, Ops{f});
    BivarPoly det = std::move(cp.front());
    if (n % 2 == 1) det = -det;
    return det;
}

// ---------------------------------------------------------------------------
// Text format: "T^4+1", "T^2-1/2*T+3", "(1+sqrt(2))*T^2"; composite
// coefficients are parenthesized.
// ---------------------------------------------------------------------------

namespace {

bool atomic_coeff_string(const std::string& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') return false;
    return true;
}

}  // namespace

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        FieldElement c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negated = false;
        if (!atomic_coeff_string(cs)) {
            cs = "(" + cs + ")";
        } else if (cs[0] == '-') {
            negated = true;
            cs = cs.substr(1);
        }
        if (out.empty()) {
            if (negated) out += '-';
        } else {
            out += negated ? '-' : '+';
        }
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") {
                out += cs;
                out += '*';
            }
            out += 'T';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

namespace {

// Splits on top-level + and - (ignoring signs inside parentheses and the
// leading sign of the string).
struct Term {
    int sign;
    std::string body;
};

std::vector<Term> split_terms(std::string_view s) {
    std::vector<Term> terms;
    int depth = 0;
    int sign = 1;
    std::string cur;
    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
    }
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            terms.push_back({sign, cur});
            cur.clear();
            sign = c == '-' ? -1 : 1;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
    }
    terms.push_back({sign, cur});
    return terms;
}

}  // namespace

UniPoly UniPoly::parse(const FieldDescriptor& f, std::string_view text) {
    UniPoly result(f);
    for (const Term& t : split_terms(text)) {
        if (t.body.empty())
            throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "'");
        // Split into coefficient part and T part.
        size_t tpos = std::string::npos;
        int depth = 0;
        for (size_t i = 0; i < t.body.size(); ++i) {
            char c = t.body[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            // 'T'/'t' at depth 0 marks the variable, except inside "sqrt".
            if (depth == 0 && (c == 'T' || c == 't') &&
                !(i + 1 < t.body.size() && t.body.substr(i, 2) == "t(") &&
                !(i >= 4 && t.body.substr(i - 4, 4) == "sqrt")) {
                tpos = i;
                break;
            }
        }
        size_t deg = 0;
        std::string coeff_str;
        if (tpos == std::string::npos) {
            coeff_str = t.body;
        } else {
            deg = 1;
            coeff_str = t.body.substr(0, tpos);
            if (!coeff_str.empty() && coeff_str.back() == '*') coeff_str.pop_back();
            std::string rest = t.body.substr(tpos + 1);
            if (!rest.empty()) {
                if (rest[0] != '^')
                    throw std::invalid_argument("cannot parse term '" + t.body + "'");
                deg = std::stoul(rest.substr(1));
            }
        }
        if (!coeff_str.empty() && coeff_str.front() == '(' && coeff_str.back() == ')')
            coeff_str = coeff_str.substr(1, coeff_str.size() - 2);
        FieldElement c = coeff_str.empty() ? FieldElement::one(f)
                                           : FieldElement::parse(f, coeff_str);
        if (t.sign < 0) c = -c;
        result += UniPoly::monomial(std::move(c), deg);
    }
    return result;
}

std::string BivarPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree_t(); i >= 0; --i)
        for (int j = static_cast<int>(i < static_cast<int>(g_.size()) ? g_[i].size() : 0) - 1;
             j >= 0; --j) {
            FieldElement c = coeff(i, j);
            if (c.is_zero()) continue;
            std::string cs = c.to_string();
            bool negated = false;
            if (!atomic_coeff_string(cs)) {
                cs = "(" + cs + ")";
            } else if (cs[0] == '-') {
                negated = true;
                cs = cs.substr(1);
            }
            if (out.empty()) {
                if (negated) out += '-';
            } else {
                out += negated ? '-' : '+';
            }
            std::string vars;
            if (i > 0) {
                vars += 't';
                if (i > 1) vars += "^" + std::to_string(i);
            }
            if (j > 0) {
                if (!vars.empty()) vars += '*';
                vars += 'd';
                if (j > 1) vars += "^" + std::to_string(j);
            }
            if (vars.empty()) {
                out += cs;
            } else {
                if (cs != "1") {
                    out += cs;
                    out += '*';
                }
                out += vars;
            }
        }
    return out;
}

}  // namespace sev
