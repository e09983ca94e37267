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
 * Test-only oracles, independent of the library's computation paths:
 * cofactor-expansion determinants over arbitrary ring elements, a Kronecker
 * divisor-tuple factor search over Z[x], and exhaustive square tables mod p.
 */

#ifndef SEV_TEST_HELPERS_HPP
#define SEV_TEST_HELPERS_HPP

#include <optional>
#include <random>
#include <vector>

#include "sev/matrix.hpp"
#include "sev/poly.hpp"

namespace sev::testing {

// Cofactor expansion along the first row; exponential, for n <= 5.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m, const T& zero) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    T acc = zero;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<T>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][j] * cofactor_det(minor, zero);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline FieldElement cofactor_det(const Mat& a) {
    std::vector<std::vector<FieldElement>> m;
    for (size_t i = 0; i < a.rows(); ++i) m.push_back(a.row(i));
    return cofactor_det(m, FieldElement::zero(a.field()));
}

// det(T*I - A) by cofactor expansion over the polynomial ring.
inline UniPoly cofactor_charpoly(const Mat& a) {
    const FieldDescriptor& f = a.field();
    std::vector<std::vector<UniPoly>> m;
    for (size_t i = 0; i < a.rows(); ++i) {
        std::vector<UniPoly> row;
        for (size_t j = 0; j < a.cols(); ++j) {
            UniPoly e = UniPoly::constant(-a.at(i, j));
            if (i == j) e += UniPoly::monomial(FieldElement::one(f), 1);
            row.push_back(std::move(e));
        }
        m.push_back(std::move(row));
    }
    return cofactor_det(m, UniPoly::zero(f));
}

// det(A^2 - tA + dI) by cofactor expansion over the bivariate ring.
inline BivarPoly cofactor_super_char(const Mat& a) {
    const FieldDescriptor& f = a.field();
    Mat a2 = a * a;
    std::vector<std::vector<BivarPoly>> m;
    for (size_t i = 0; i < a.rows(); ++i) {
        std::vector<BivarPoly> row;
        for (size_t j = 0; j < a.cols(); ++j) {
            BivarPoly e = BivarPoly::constant(a2.at(i, j));
            e -= BivarPoly::var_t(f) * BivarPoly::constant(a.at(i, j));
            if (i == j) e += BivarPoly::var_d(f);
            row.push_back(std::move(e));
        }
        m.push_back(std::move(row));
    }
    return cofactor_det(m, BivarPoly(f));
}

// All divisors of |v| with both signs, ascending by absolute value.
std::vector<mpz_class> signed_divisors(const mpz_class& v);

// Kronecker divisor-tuple search: some monic rational factor of f with
// 1 <= degree <= kmax, or nullopt if none exists. f must be over Q.
// Exponential; intended for degree <= 8 with small coefficients.
std::optional<UniPoly> kronecker_find_factor(const UniPoly& f, int kmax);

// The set of squares modulo p by enumeration.
std::vector<bool> square_table(long p);

// Deterministic random element with small entries.
FieldElement random_element(const FieldDescriptor& f, std::mt19937_64& rng);
UniPoly random_poly(const FieldDescriptor& f, int max_degree, std::mt19937_64& rng);

// The paper's 4x4 cyclic-sign matrix (x1,x2,x3,x4) -> (-x4,x1,x2,x3).
inline Mat paper_matrix(const FieldDescriptor& f) {
    return Mat::from_ints(f, {{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
}

inline UniPoly t4_plus_1(const FieldDescriptor& f) {
    return UniPoly::from_ints(f, {1, 0, 0, 0, 1});
}

}  // namespace sev::testing

#endif
