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

#include <doctest.h>

#include "sev/poly.hpp"
#include "test_helpers.hpp"

using namespace sev;
using namespace sev::testing;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor G3 = FieldDescriptor::prime_field(3);
const FieldDescriptor G5 = FieldDescriptor::prime_field(5);
const FieldDescriptor Q2 = FieldDescriptor::quadratic_extension(2);

UniPoly refactor(const UniPoly& f, const std::vector<FactorRecord>& records) {
    UniPoly prod = UniPoly::constant(f.leading());
    for (const FactorRecord& r : records)
        prod *= pow(r.factor, static_cast<unsigned>(r.multiplicity));
    return prod;
}

}  // namespace

TEST_CASE("T^4+1 over the four backends") {
    auto over_q = factor(t4_plus_1(Q));
    REQUIRE(over_q.size() == 1);
    CHECK(over_q[0].factor == t4_plus_1(Q));
    CHECK(over_q[0].multiplicity == 1);
    // Independent confirmation: no factor of degree <= 2 by divisor search.
    CHECK(!kronecker_find_factor(t4_plus_1(Q), 2));

    auto over_q2 = factor(t4_plus_1(Q2));
    REQUIRE(over_q2.size() == 2);
    UniPoly minus(Q2, {FieldElement::one(Q2), FieldElement::quadratic(Q2, 0, -1),
                       FieldElement::one(Q2)});
    UniPoly plus(Q2, {FieldElement::one(Q2), FieldElement::quadratic(Q2, 0, 1),
                      FieldElement::one(Q2)});
    CHECK(over_q2[0].factor == minus);
    CHECK(over_q2[1].factor == plus);
    CHECK(over_q2[0].multiplicity == 1);
    CHECK(over_q2[1].multiplicity == 1);

    auto over_g3 = factor(t4_plus_1(G3));
    REQUIRE(over_g3.size() == 2);
    CHECK(over_g3[0].factor == UniPoly::from_ints(G3, {2, 1, 1}));
    CHECK(over_g3[1].factor == UniPoly::from_ints(G3, {2, 2, 1}));

    auto over_g5 = factor(t4_plus_1(G5));
    REQUIRE(over_g5.size() == 2);
    CHECK(over_g5[0].factor == UniPoly::from_ints(G5, {2, 0, 1}));
    CHECK(over_g5[1].factor == UniPoly::from_ints(G5, {3, 0, 1}));
}

TEST_CASE("refactoring reproduces the input exactly") {
    std::mt19937_64 rng(31);
    for (const FieldDescriptor& f : {Q, G3, G5, Q2}) {
        for (int i = 0; i < 150; ++i) {
            UniPoly p = random_poly(f, 8, rng);
            if (p.degree() < 1) continue;
            auto records = factor(p, 17);
            CHECK(refactor(p, records) == p);
            for (const FactorRecord& r : records) {
                CHECK(r.factor.is_monic());
                CHECK(r.multiplicity >= 1);
            }
        }
    }
}

TEST_CASE("factors over GF(p) are irreducible of their stated degree") {
    std::mt19937_64 rng(32);
    for (const FieldDescriptor& f : {G3, G5}) {
        mpz_class p(f.prime());
        for (int i = 0; i < 40; ++i) {
            UniPoly g = random_poly(f, 6, rng);
            if (g.degree() < 1) continue;
            for (const FactorRecord& r : factor(g)) {
                int e = r.factor.degree();
                // g | T^{p^e} - T, and no roots when e >= 2.
                mpz_class pe;
                mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
                // T^{p^e} mod factor, by repeated squaring.
                UniPoly x = UniPoly::monomial(FieldElement::one(f), 1);
                UniPoly h = x;
                mpz_class k = pe;
                UniPoly acc = UniPoly::constant(FieldElement::one(f));
                while (k > 0) {
                    if (mpz_odd_p(k.get_mpz_t())) acc = divmod(acc * h, r.factor).second;
                    h = divmod(h * h, r.factor).second;
                    k >>= 1;
                }
                CHECK(divmod(acc - x, r.factor).second.is_zero());
                if (e >= 2)
                    for (long root = 0; root < f.prime(); ++root)
                        CHECK(!r.factor.eval(FieldElement::from_int(f, root)).is_zero());
            }
        }
    }
}

TEST_CASE("multiplicities through squarefree decomposition") {
    UniPoly f = pow(UniPoly::from_ints(Q, {1, 1}), 3) * pow(UniPoly::from_ints(Q, {1, 0, 1}), 2);
    auto records = factor(f);
    REQUIRE(records.size() == 2);
    CHECK(records[0].factor == UniPoly::from_ints(Q, {1, 1}));
    CHECK(records[0].multiplicity == 3);
    CHECK(records[1].factor == UniPoly::from_ints(Q, {1, 0, 1}));
    CHECK(records[1].multiplicity == 2);

    // Frobenius edge: (T^2 + T + 2)^3 over GF(3) is a polynomial in T^3.
    UniPoly g = pow(UniPoly::from_ints(G3, {2, 1, 1}), 3);
    auto grecords = factor(g);
    REQUIRE(grecords.size() == 1);
    CHECK(grecords[0].factor == UniPoly::from_ints(G3, {2, 1, 1}));
    CHECK(grecords[0].multiplicity == 3);
}

TEST_CASE("Kronecker oracle agrees on small-factor existence over Q") {
    std::mt19937_64 rng(33);
    int checked = 0;
    while (checked < 60) {
        UniPoly p = random_poly(Q, 5, rng);
        if (p.degree() < 2) continue;
        ++checked;
        auto records = factor(p);
        bool has_small = false;
        for (const FactorRecord& r : records)
            if (r.factor.degree() <= 2) has_small = true;
        auto found = kronecker_find_factor(p, 2);
        CHECK(has_small == found.has_value());
        if (found) CHECK(divmod(p, *found).second.is_zero());
    }
}

TEST_CASE("degenerate inputs") {
    CHECK(factor(UniPoly::constant(FieldElement::from_int(Q, 5))).empty());
    CHECK_THROWS_AS(factor(UniPoly::zero(Q)), std::invalid_argument);
    auto lin = factor(UniPoly::from_ints(Q, {3, 2}));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].factor == UniPoly(Q, {FieldElement::parse(Q, "3/2"), FieldElement::one(Q)}));
}

TEST_CASE("factorization does not depend on the seed") {
    std::mt19937_64 rng(34);
    for (const FieldDescriptor& f : {G3, Q2}) {
        for (int i = 0; i < 20; ++i) {
            UniPoly p = random_poly(f, 6, rng);
            if (p.degree() < 1) continue;
            auto a = factor(p, 1);
            auto b = factor(p, 999);
            REQUIRE(a.size() == b.size());
            for (size_t k = 0; k < a.size(); ++k) {
                CHECK(a[k].factor == b[k].factor);
                CHECK(a[k].multiplicity == b[k].multiplicity);
            }
        }
    }
}

TEST_CASE("Trager handles rational-coefficient inputs over Q(sqrt(d))") {
    // (T^2 - 2)(T^2 - 3) over Q(sqrt(2)): the first splits, the second stays.
    UniPoly f = UniPoly::from_ints(Q2, {-2, 0, 1}) * UniPoly::from_ints(Q2, {-3, 0, 1});
    auto records = factor(f);
    REQUIRE(records.size() == 3);
    UniPoly s2m(Q2, {FieldElement::quadratic(Q2, 0, -1), FieldElement::one(Q2)});
    UniPoly s2p(Q2, {FieldElement::quadratic(Q2, 0, 1), FieldElement::one(Q2)});
    CHECK(records[0].factor == s2m);
    CHECK(records[1].factor == s2p);
    CHECK(records[2].factor == UniPoly::from_ints(Q2, {-3, 0, 1}));
}
