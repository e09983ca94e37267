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

#include "sev/matrix.hpp"
#include "sev/oracle.hpp"
#include "test_helpers.hpp"

using namespace sev;
using namespace sev::testing;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor G3 = FieldDescriptor::prime_field(3);
const FieldDescriptor G5 = FieldDescriptor::prime_field(5);
const FieldDescriptor Q2 = FieldDescriptor::quadratic_extension(2);
}  // namespace

TEST_CASE("matrix arithmetic basics") {
    std::mt19937_64 rng(1);
    Mat A = random_matrix(G5, 3, 3, rng);
    CHECK(Mat::identity(G5, 3) * A == A);
    CHECK(A.transpose().transpose() == A);

    // The cyclic-sign matrix sends e1 to e2.
    Mat P = paper_matrix(Q);
    Vec e1(4, FieldElement::zero(Q));
    e1[0] = FieldElement::one(Q);
    Vec img = P.apply(e1);
    CHECK(img[1].is_one());
    CHECK(img[0].is_zero());
    CHECK(img[2].is_zero());
    CHECK(img[3].is_zero());

    CHECK_THROWS_AS(A * Mat::identity(G5, 4), std::invalid_argument);
    CHECK_THROWS_AS(A + random_matrix(G5, 2, 2, rng), std::invalid_argument);
}

TEST_CASE("determinants against the cofactor oracle") {
    CHECK(det(Mat::identity(Q, 4)).is_one());
    CHECK(det(paper_matrix(Q)).is_one());
    Mat repeated = Mat::from_ints(Q, {{1, 2, 3}, {1, 2, 3}, {0, 1, 5}});
    CHECK(det(repeated).is_zero());

    std::mt19937_64 rng(2);
    for (const FieldDescriptor& f : {Q, G3, Q2}) {
        for (int i = 0; i < 30; ++i) {
            Mat A = random_matrix(f, 3, 3, rng);
            CHECK(det(A) == cofactor_det(A));
            Mat B = random_matrix(f, 3, 3, rng);
            CHECK(det(A * B) == det(A) * det(B));
        }
        for (int i = 0; i < 10; ++i) {
            Mat A = random_matrix(f, 4, 4, rng);
            CHECK(det(A) == cofactor_det(A));
        }
    }
    CHECK_THROWS_AS(det(Mat::zero(Q, 2, 3)), std::invalid_argument);
}

TEST_CASE("charpoly examples") {
    CHECK(charpoly(paper_matrix(Q)) == t4_plus_1(Q));
    CHECK(charpoly(Mat::identity(Q, 3)) == UniPoly::from_ints(Q, {-1, 3, -3, 1}));
    CHECK(charpoly(Mat::from_ints(Q, {{1, 1}, {-2, -1}})) == UniPoly::from_ints(Q, {1, 0, 1}));
}

TEST_CASE("Berkowitz equals the determinant expansion of T*I - A") {
    // Exhaustive over all 2x2 matrices over GF(3).
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b)
            for (long c = 0; c < 3; ++c)
                for (long d = 0; d < 3; ++d) {
                    Mat m = Mat::from_ints(G3, {{a, b}, {c, d}});
                    CHECK(charpoly(m) == cofactor_charpoly(m));
                }
    std::mt19937_64 rng(3);
    for (size_t n : {3u, 4u}) {
        for (int i = 0; i < 25; ++i) {
            Mat m = random_matrix(G3, n, n, rng);
            CHECK(charpoly(m) == cofactor_charpoly(m));
        }
    }
}

TEST_CASE("Cayley-Hamilton") {
    std::mt19937_64 rng(4);
    for (const FieldDescriptor& f : {Q, G3, Q2}) {
        for (size_t n : {2u, 3u, 4u}) {
            Mat A = random_matrix(f, n, n, rng);
            CHECK(eval_poly(charpoly(A), A) == Mat::zero(f, n, n));
        }
    }
}

TEST_CASE("kernels") {
    // p_L(A) for the cyclic-sign matrix, p_L = T^2 - sqrt(2) T + 1.
    Mat A = paper_matrix(Q2);
    UniPoly pl(Q2, {FieldElement::one(Q2), FieldElement::quadratic(Q2, 0, -1),
                    FieldElement::one(Q2)});
    auto ker = kernel_basis(eval_poly(pl, A));
    REQUIRE(ker.size() == 2);
    Vec paper_u{FieldElement::from_int(Q2, 0), FieldElement::from_int(Q2, 1),
                FieldElement::quadratic(Q2, 0, 1), FieldElement::from_int(Q2, 1)};
    CHECK(in_span(ker, paper_u));
    for (const Vec& v : ker) CHECK(vec_is_zero(eval_poly(pl, A).apply(v)));

    CHECK(kernel_basis(Mat::identity(Q, 3)).empty());
    auto zker = kernel_basis(Mat::zero(Q, 3, 3));
    REQUIRE(zker.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(zker[i][i].is_one());
        for (size_t j = 0; j < 3; ++j)
            if (i != j) CHECK(zker[i][j].is_zero());
    }

    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        Mat M = random_matrix(G3, 4, 5, rng);
        auto basis = kernel_basis(M);
        CHECK(basis.size() + rank(M) == 5);
        for (const Vec& v : basis) CHECK(vec_is_zero(M.apply(v)));
    }
}

TEST_CASE("eval_poly") {
    Mat A = paper_matrix(Q);
    CHECK(eval_poly(t4_plus_1(Q), A) == Mat::zero(Q, 4, 4));
    CHECK(eval_poly(UniPoly::monomial(FieldElement::one(Q), 1), A) == A);
    Mat B = Mat::from_ints(Q, {{1, 1}, {-2, -1}});
    CHECK(eval_poly(UniPoly::from_ints(Q, {1, 0, 1}), B) == Mat::zero(Q, 2, 2));
}

TEST_CASE("similarity classes") {
    Mat L = Mat(Q2, 2, 2,
                {FieldElement::zero(Q2), FieldElement::from_int(Q2, -1),
                 FieldElement::one(Q2), FieldElement::quadratic(Q2, 0, 1)});
    SimilarityClass c = similarity_class(L);
    CHECK(c.trace == FieldElement::quadratic(Q2, 0, 1));
    CHECK(c.det.is_one());
    CHECK(c.tag == ClassTag::Irreducible);

    SimilarityClass sc = similarity_class(Mat::from_ints(Q, {{5, 0}, {0, 5}}));
    CHECK(sc.tag == ClassTag::Scalar);
    CHECK(sc.trace == FieldElement::from_int(Q, 10));
    CHECK(sc.det == FieldElement::from_int(Q, 25));

    SimilarityClass jc = similarity_class(Mat::from_ints(Q, {{1, 1}, {0, 1}}));
    CHECK(jc.tag == ClassTag::Jordan);
    CHECK(jc.trace == FieldElement::from_int(Q, 2));
    CHECK(jc.det.is_one());

    CHECK(similarity_class(Mat::from_ints(Q, {{1, 0}, {0, 2}})).tag == ClassTag::Split);
    CHECK_THROWS_AS(similarity_class(Mat::identity(Q, 3)), std::invalid_argument);
}

TEST_CASE("similarity class is a conjugation invariant") {
    std::mt19937_64 rng(6);
    int done = 0;
    while (done < 500) {
        Mat L = random_matrix(G5, 2, 2, rng);
        Mat S = random_matrix(G5, 2, 2, rng);
        FieldElement d = det(S);
        if (d.is_zero()) continue;
        // S L S^-1 via the adjugate.
        Mat adj(G5, 2, 2, {S.at(1, 1), -S.at(0, 1), -S.at(1, 0), S.at(0, 0)});
        Mat conj = S * L * adj * d.inverse();
        CHECK(similarity_class(conj) == similarity_class(L));
        ++done;
    }
}
