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

/**
 * Complete irreducible factorization over the three supported fields.
 *
 * GF(p): squarefree decomposition (p-th power parts unwound through the
 * Frobenius), distinct-degree splitting with gcd(f, T^{p^e} - T), then
 * randomized Cantor-Zassenhaus equal-degree splitting using the odd
 * characteristic exponent (p^e - 1)/2.
 *
 * Q: squarefree decomposition, then factorization of the primitive integer
 * polynomial by reduction mod a good odd prime, quadratic Hensel lifting of
 * the modular factors past the Landau-Mignotte coefficient bound, and
 * Zassenhaus subset recombination.
 *
 * Q(sqrt(d)): Trager's norm method. Shift by s*sqrt(d) until the norm
 * N(T) = g(T) * conj(g)(T) is squarefree over Q, factor the norm with the
 * rational engine, and read the factors of g off as gcds.
 */

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

#include "sev/poly.hpp"

namespace sev {

namespace {

// ---------------------------------------------------------------------------
// GF(p)
// ---------------------------------------------------------------------------

UniPoly poly_mod(const UniPoly& f, const UniPoly& mod) { return divmod(f, mod).second; }

UniPoly poly_powmod(const UniPoly& base, const mpz_class& e, const UniPoly& mod) {
    const FieldDescriptor& f = base.field();
    UniPoly result = UniPoly::constant(FieldElement::one(f));
    UniPoly b = poly_mod(base, mod);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = poly_mod(result * b, mod);
        b = poly_mod(b * b, mod);
        k >>= 1;
    }
    return result;
}

// Inverse Frobenius: f(T) = g(T)^p with g carrying f's coefficients at the
// indices divisible by p (coefficients are fixed by x -> x^p over GF(p)).
UniPoly pth_root(const UniPoly& f) {
    unsigned long p = f.field().characteristic();
    std::vector<FieldElement> c;
    for (size_t i = 0; i <= static_cast<size_t>(f.degree()); ++i) {
        FieldElement ci = f.coeff(i);
        if (i % p == 0) {
            c.push_back(ci);
        } else if (!ci.is_zero()) {
            throw std::logic_error("pth_root: polynomial is not a p-th power");
        }
    }
    return UniPoly(f.field(), std::move(c));
}

// Squarefree decomposition of a monic polynomial, valid in characteristic 0
// and p. Returns pairwise coprime monic squarefree parts with multiplicities.
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& monic) {
    std::vector<std::pair<UniPoly, int>> out;
    const FieldDescriptor& fd = monic.field();
    UniPoly one = UniPoly::constant(FieldElement::one(fd));
    UniPoly f = monic;
    int outer = 1;
    while (f.degree() > 0) {
        UniPoly c = gcd(f, derivative(f));
        UniPoly w = divmod(f, c).first;
        int i = 1;
        while (w.degree() > 0) {
            UniPoly y = gcd(w, c);
            UniPoly z = divmod(w, y).first;
            if (z.degree() > 0) out.emplace_back(z.monic(), i * outer);
            w = std::move(y);
            c = divmod(c, w).first;
            ++i;
        }
        if (c.degree() > 0) {
            // Remaining p-th power part (characteristic p only).
            f = pth_root(c.monic());
            outer *= static_cast<int>(fd.characteristic());
        } else {
            break;
        }
    }
    return out;
}

// Distinct-degree splitting of a monic squarefree polynomial over GF(p):
// list of (product of the irreducible factors of degree e, e).
std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& sf) {
    const FieldDescriptor& fd = sf.field();
    mpz_class p(fd.prime());
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly g = sf;
    UniPoly x = UniPoly::monomial(FieldElement::one(fd), 1);
    UniPoly h = poly_mod(x, g);  // T^{p^e} mod g, maintained incrementally
    int e = 0;
    while (2 * (e + 1) <= g.degree()) {
        ++e;
        h = poly_powmod(h, p, g);
        UniPoly gd = gcd(h - x, g);
        if (gd.degree() > 0) {
            out.emplace_back(gd, e);
            g = divmod(g, gd).first;
            h = poly_mod(h, g);
        }
    }
    if (g.degree() > 0) out.emplace_back(g, g.degree());
    return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd characteristic): factors a
// monic squarefree product of irreducibles all of degree e.
void equal_degree(const UniPoly& prod, int e, std::mt19937_64& rng,
                  std::vector<UniPoly>& out) {
    if (prod.degree() == e) {
        out.push_back(prod.monic());
        return;
    }
    const FieldDescriptor& fd = prod.field();
    long p = fd.prime();
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>(e));
    mpz_class exponent = (pe - 1) / 2;
    UniPoly one = UniPoly::constant(FieldElement::one(fd));
    for (;;) {
        std::vector<FieldElement> c;
        for (int i = 0; i < prod.degree(); ++i)
            c.push_back(FieldElement::from_int(fd, static_cast<long>(rng() % static_cast<unsigned long>(p))));
        UniPoly a(fd, std::move(c));
        if (a.degree() < 1) continue;
        UniPoly b = poly_powmod(a, exponent, prod) - one;
        UniPoly g = gcd(b, prod);
        if (g.degree() > 0 && g.degree() < prod.degree()) {
            equal_degree(g, e, rng, out);
            equal_degree(divmod(prod, g).first, e, rng, out);
            return;
        }
    }
}

std::vector<FactorRecord> factor_gfp(const UniPoly& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eed5eedULL);
    std::vector<FactorRecord> out;
    for (const auto& [part, mult] : squarefree_decompose(f.monic())) {
        for (const auto& [prod, e] : distinct_degree(part)) {
            std::vector<UniPoly> irr;
            equal_degree(prod, e, rng, irr);
            for (UniPoly& g : irr) out.push_back({std::move(g), mult});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Z[x] machinery for the rational factorizer
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // ascending, trailing zeros stripped

void zstrip(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    zstrip(out);
    return out;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    zstrip(a);
    return a;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    zstrip(a);
    return a;
}

ZPoly zmod(ZPoly f, const mpz_class& m) {
    for (mpz_class& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    zstrip(f);
    return f;
}

// Coefficients into the symmetric range (-m/2, m/2].
ZPoly zsymmetric(ZPoly f, const mpz_class& m) {
    mpz_class half = m / 2;
    for (mpz_class& c : f) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    zstrip(f);
    return f;
}

mpz_class zcontent(const ZPoly& f) {
    mpz_class g(0);
    for (const mpz_class& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zprimitive(ZPoly f) {
    mpz_class c = zcontent(f);
    if (c == 0) return f;
    if (sgn(f.back()) < 0) c = -c;  // normalize positive leading coefficient
    for (mpz_class& e : f) e /= c;
    return f;
}

// Division by a monic divisor with all arithmetic mod m.
std::pair<ZPoly, ZPoly> zdivmod_monic_mod(const ZPoly& f, const ZPoly& g, const mpz_class& m) {
    if (g.empty() || g.back() != 1) throw std::logic_error("zdivmod_monic_mod: divisor not monic");
    ZPoly rem = zmod(f, m);
    int dg = zdeg(g);
    if (zdeg(rem) < dg) return {{}, rem};
    ZPoly quot(rem.size() - g.size() + 1, mpz_class(0));
    for (int i = zdeg(rem); i >= dg; --i) {
        if (static_cast<size_t>(i) >= rem.size()) continue;
        mpz_class c = rem[i];
        if (c == 0) continue;
        quot[i - dg] = c;
        for (int j = 0; j <= dg; ++j) {
            mpz_class& r = rem[i - dg + j];
            r = (r - c * g[j]) % m;
            if (r < 0) r += m;
        }
        zstrip(rem);
    }
    zstrip(quot);
    return {zmod(std::move(quot), m), rem};
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    return zmod(zmul(a, b), m);
}

// UniPoly over GF(p) -> integer polynomial with coefficients in [0, p).
ZPoly lift_gfp(const UniPoly& f) {
    ZPoly out;
    for (int i = 0; i <= f.degree(); ++i)
        out.emplace_back(static_cast<unsigned long>(f.coeff(i).residue()));
    zstrip(out);
    return out;
}

UniPoly to_gfp(const ZPoly& f, const FieldDescriptor& gf) {
    std::vector<FieldElement> c;
    for (const mpz_class& e : f) {
        mpz_class r = e % gf.prime();
        if (r < 0) r += gf.prime();
        c.push_back(FieldElement::from_int(gf, r.get_si()));
    }
    return UniPoly(gf, std::move(c));
}

UniPoly to_rational(const ZPoly& f, const FieldDescriptor& q) {
    std::vector<FieldElement> c;
    for (const mpz_class& e : f) c.push_back(FieldElement::from_rational(q, mpq_class(e)));
    return UniPoly(q, std::move(c));
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m),
// h monic, to the same data mod m^2. The lifted quotient and Bezout
// cofactor are recovered by monic division, which pins their degrees; the
// zero remainders are asserted.
struct HenselPair {
    ZPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZPoly one{mpz_class(1)};
    ZPoly e = zmod(zsub(zmod(f, m2), zmulmod(in.g, in.h, m2)), m2);
    ZPoly r = zdivmod_monic_mod(zmulmod(in.s, e, m2), in.h, m2).second;
    ZPoly h1 = zmod(zadd(in.h, r), m2);  // monic, same degree
    auto [g1, rem] = zdivmod_monic_mod(zmod(f, m2), h1, m2);
    if (!rem.empty()) throw std::logic_error("hensel_step: lift is inconsistent (g)");
    ZPoly b = zmod(zsub(zadd(zmulmod(in.s, g1, m2), zmulmod(in.t, h1, m2)), one), m2);
    ZPoly d2 = zdivmod_monic_mod(zmulmod(in.s, b, m2), h1, m2).second;
    ZPoly s1 = zmod(zsub(in.s, d2), m2);
    auto [t1, rem2] = zdivmod_monic_mod(zmod(zsub(one, zmulmod(s1, g1, m2)), m2), h1, m2);
    if (!rem2.empty()) throw std::logic_error("hensel_step: lift is inconsistent (t)");
    return HenselPair{g1, h1, s1, t1};
}

// Bezout cofactors over GF(p): s*a + t*b = 1 for coprime a, b.
std::pair<UniPoly, UniPoly> bezout_gfp(const UniPoly& a, const UniPoly& b) {
    const FieldDescriptor& fd = a.field();
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(FieldElement::one(fd)), s1 = UniPoly::zero(fd);
    UniPoly t0 = UniPoly::zero(fd), t1 = UniPoly::constant(FieldElement::one(fd));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw std::logic_error("bezout_gfp: inputs are not coprime");
    FieldElement inv = r0.leading().inverse();
    return {s0 * inv, t0 * inv};
}

// Lifts the mod-p factorization F = lc(F) * prod(fac) (mod p) to monic
// factors mod p^k with F = lc(F) * prod(result) (mod p^k).
std::vector<ZPoly> hensel_multifactor(const ZPoly& F, const std::vector<UniPoly>& fac,
                                      const FieldDescriptor& gf, const mpz_class& pk) {
    if (fac.size() == 1) {
        mpz_class lc = F.back() % pk;
        if (lc < 0) lc += pk;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t()) == 0)
            throw std::logic_error("hensel_multifactor: leading coefficient not invertible");
        ZPoly monic = zmod(zmul(F, {inv}), pk);
        return {std::move(monic)};
    }
    mpz_class p(gf.prime());
    size_t mid = (fac.size() + 1) / 2;
    std::vector<UniPoly> left(fac.begin(), fac.begin() + mid);
    std::vector<UniPoly> right(fac.begin() + mid, fac.end());

    UniPoly g0 = UniPoly::constant(to_gfp(ZPoly{F.back()}, gf).coeff(0));
    for (const UniPoly& u : left) g0 *= u;
    UniPoly h0 = UniPoly::constant(FieldElement::one(gf));
    for (const UniPoly& u : right) h0 *= u;
    auto [s0, t0] = bezout_gfp(g0, h0);

    HenselPair cur{lift_gfp(g0), lift_gfp(h0), lift_gfp(s0), lift_gfp(t0)};
    mpz_class m = p;
    while (m < pk) {
        cur = hensel_step(F, cur, m);
        m *= m;
    }
    ZPoly g = zmod(cur.g, pk), h = zmod(cur.h, pk);
    std::vector<ZPoly> out = hensel_multifactor(g, left, gf, pk);
    std::vector<ZPoly> rhs = hensel_multifactor(h, right, gf, pk);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

// Monic rational polynomial -> primitive integer polynomial (positive lc
// times the sign of the input's, here always +1 since input is monic).
ZPoly clear_denominators(const UniPoly& g) {
    mpz_class lcm(1);
    for (int i = 0; i <= g.degree(); ++i)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g.coeff(i).rational().get_den().get_mpz_t());
    ZPoly out;
    for (int i = 0; i <= g.degree(); ++i) {
        mpq_class c = g.coeff(i).rational() * lcm;
        out.push_back(c.get_num());
    }
    zstrip(out);
    return zprimitive(std::move(out));
}

bool zt_divides(const ZPoly& cand, ZPoly& current, const FieldDescriptor& q) {
    UniPoly num = to_rational(current, q);
    UniPoly den = to_rational(cand, q);
    auto [quot, rem] = divmod(num, den);
    if (!rem.is_zero()) return false;
    ZPoly zq;
    for (int i = 0; i <= quot.degree(); ++i) {
        mpq_class c = quot.coeff(i).rational();
        if (c.get_den() != 1) return false;  // non-primitive candidate; reject
        zq.push_back(c.get_num());
    }
    zstrip(zq);
    current = std::move(zq);
    return true;
}

// Factors a monic squarefree rational polynomial into monic irreducibles.
std::vector<UniPoly> factor_squarefree_q(const UniPoly& g, std::uint64_t seed) {
    const FieldDescriptor& q = g.field();
    std::vector<UniPoly> out;
    if (g.degree() == 1) {
        out.push_back(g);
        return out;
    }
    ZPoly G = clear_denominators(g);

    // A good odd prime: does not divide lc, reduction stays squarefree.
    long p = 1;
    std::vector<UniPoly> modular;
    FieldDescriptor gf = FieldDescriptor::prime_field(3);
    for (long cand = 3;; cand += 2) {
        bool prime = true;
        for (long t = 3; t * t <= cand; t += 2)
            if (cand % t == 0) { prime = false; break; }
        if (!prime) continue;
        if (mpz_divisible_ui_p(G.back().get_mpz_t(), static_cast<unsigned long>(cand))) continue;
        FieldDescriptor gfc = FieldDescriptor::prime_field(cand);
        UniPoly gp = to_gfp(G, gfc);
        if (gp.degree() != zdeg(G)) continue;
        if (gcd(gp, derivative(gp)).degree() != 0) continue;
        p = cand;
        gf = gfc;
        std::vector<FactorRecord> fr = factor_gfp(gp, seed);
        for (auto& r : fr) {
            if (r.multiplicity != 1) throw std::logic_error("squarefree reduction has multiplicity");
            modular.push_back(std::move(r.factor));
        }
        break;
    }
    if (modular.size() == 1) {
        out.push_back(g);
        return out;
    }
    std::sort(modular.begin(), modular.end(),
              [](const UniPoly& a, const UniPoly& b) { return cmp(a, b) < 0; });

    // Landau-Mignotte: coefficients of any factor of G times lc stay below
    // 2^deg * l2norm(G) * |lc|; lift past twice that.
    mpz_class norm2(0);
    for (const mpz_class& c : G) norm2 += c * c;
    mpz_class l2;
    mpz_sqrt(l2.get_mpz_t(), norm2.get_mpz_t());
    l2 += 1;
    mpz_class bound = abs(G.back()) * l2;
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(zdeg(G) + 1));
    bound *= two_pow;
    mpz_class pk(p);
    unsigned k = 1;
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }

    std::vector<ZPoly> lifted = hensel_multifactor(zmod(G, pk), modular, gf, pk);

    // Zassenhaus recombination over subsets of the lifted factors.
    std::vector<size_t> pool(lifted.size());
    for (size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    ZPoly current = G;
    std::vector<ZPoly> found;
    size_t s = 1;
    while (2 * s <= pool.size()) {
        std::vector<size_t> comb(s);
        for (size_t i = 0; i < s; ++i) comb[i] = i;
        bool advanced = false;
        for (;;) {
            ZPoly prod{current.back()};
            for (size_t i : comb) prod = zmulmod(prod, lifted[pool[i]], pk);
            ZPoly cand = zprimitive(zsymmetric(std::move(prod), pk));
            if (!cand.empty() && zt_divides(cand, current, q)) {
                found.push_back(cand);
                std::vector<size_t> next_pool;
                for (size_t i = 0, ci = 0; i < pool.size(); ++i) {
                    if (ci < s && comb[ci] == i) { ++ci; continue; }
                    next_pool.push_back(pool[i]);
                }
                pool = std::move(next_pool);
                advanced = true;
                break;
            }
            // next combination
            size_t i = s;
            while (i-- > 0) {
                if (comb[i] + (s - i) < pool.size()) {
                    ++comb[i];
                    for (size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0) goto combos_done;
            }
        }
    combos_done:
        if (!advanced) ++s;
    }
    if (zdeg(current) > 0) found.push_back(zprimitive(current));

    for (const ZPoly& h : found) out.push_back(to_rational(h, q).monic());
    return out;
}

std::vector<FactorRecord> factor_q(const UniPoly& f, std::uint64_t seed) {
    std::vector<FactorRecord> out;
    for (const auto& [part, mult] : squarefree_decompose(f.monic()))
        for (UniPoly& irr : factor_squarefree_q(part, seed))
            out.push_back({std::move(irr), mult});
    return out;
}

// ---------------------------------------------------------------------------
// Q(sqrt(d)): Trager
// ---------------------------------------------------------------------------

UniPoly conj_poly(const UniPoly& f) {
    std::vector<FieldElement> c;
    for (int i = 0; i <= f.degree(); ++i) c.push_back(f.coeff(i).conjugate());
    return UniPoly(f.field(), std::move(c));
}

// g(T + shift) by Horner composition.
UniPoly compose_linear(const UniPoly& g, const FieldElement& shift) {
    const FieldDescriptor& fd = g.field();
    UniPoly x_plus = UniPoly(fd, {shift, FieldElement::one(fd)});
    UniPoly acc = UniPoly::zero(fd);
    for (int i = g.degree(); i >= 0; --i) acc = acc * x_plus + UniPoly::constant(g.coeff(i));
    return acc;
}

std::vector<UniPoly> trager_squarefree(const UniPoly& g, std::uint64_t seed) {
    const FieldDescriptor& kf = g.field();
    FieldDescriptor q = FieldDescriptor::rationals();
    std::vector<UniPoly> out;
    if (g.degree() == 1) {
        out.push_back(g);
        return out;
    }
    FieldElement sqrt_d = FieldElement::quadratic(kf, 0, 1);
    for (long s = 0;; ++s) {
        FieldElement shift = FieldElement::from_int(kf, -s) * sqrt_d;
        UniPoly gs = compose_linear(g, shift);  // g(T - s*sqrt(d))
        UniPoly norm_k = gs * conj_poly(gs);
        std::vector<FieldElement> nc;
        bool rational_coeffs = true;
        for (int i = 0; i <= norm_k.degree(); ++i) {
            FieldElement c = norm_k.coeff(i);
            if (sgn(c.quad_b()) != 0) { rational_coeffs = false; break; }
            nc.push_back(FieldElement::from_rational(q, c.quad_a()));
        }
        if (!rational_coeffs) throw std::logic_error("trager: norm has irrational coefficients");
        UniPoly norm(q, std::move(nc));
        if (gcd(norm, derivative(norm)).degree() != 0) continue;  // bad shift

        FieldElement unshift = FieldElement::from_int(kf, s) * sqrt_d;
        for (const UniPoly& h : factor_squarefree_q(norm, seed)) {
            // Lift h into K[T] and intersect with gs.
            std::vector<FieldElement> hc;
            for (int i = 0; i <= h.degree(); ++i)
                hc.push_back(FieldElement::from_rational(kf, h.coeff(i).rational()));
            UniPoly w = gcd(gs, UniPoly(kf, std::move(hc)));
            if (w.degree() > 0) out.push_back(compose_linear(w, unshift).monic());
        }
        return out;
    }
}

std::vector<FactorRecord> factor_qsqrt(const UniPoly& f, std::uint64_t seed) {
    std::vector<FactorRecord> out;
    for (const auto& [part, mult] : squarefree_decompose(f.monic()))
        for (UniPoly& irr : trager_squarefree(part, seed))
            out.push_back({std::move(irr), mult});
    return out;
}

}  // namespace

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part of the zero polynomial");
    UniPoly out = UniPoly::constant(FieldElement::one(f.field()));
    for (const auto& [part, mult] : squarefree_decompose(f.monic())) out *= part;
    return out;
}

std::vector<FactorRecord> factor(const UniPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("factor: the zero polynomial has no factorization");
    if (f.degree() == 0) return {};
    std::vector<FactorRecord> out;
    switch (f.field().kind()) {
        case FieldKind::Rationals: out = factor_q(f, seed); break;
        case FieldKind::PrimeField: out = factor_gfp(f, seed); break;
        case FieldKind::QuadraticExtension: out = factor_qsqrt(f, seed); break;
    }
    std::sort(out.begin(), out.end(), [](const FactorRecord& a, const FactorRecord& b) {
        return cmp(a.factor, b.factor) < 0;
    });
    return out;
}

}  // namespace sev
