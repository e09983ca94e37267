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
 * @file poly.hpp
 * @brief Univariate polynomials over the supported exact fields, complete
 *        irreducible factorization, the quadratic irreducibility test, and
 *        bivariate polynomials in (t, d) for the super-characteristic
 *        polynomial F(t, d) = det(A^2 - tA + dI).
 */

#ifndef SEV_POLY_HPP
#define SEV_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sev/field.hpp"

namespace sev {

class Mat;

/// Dense univariate polynomial, coefficients ascending by degree with
/// trailing zeros stripped (the zero polynomial has no coefficients).
class UniPoly {
  public:
    explicit UniPoly(const FieldDescriptor& f) : field_(f) {}
    UniPoly(const FieldDescriptor& f, std::vector<FieldElement> ascending);

    static UniPoly zero(const FieldDescriptor& f) { return UniPoly(f); }
    static UniPoly constant(FieldElement c);
    static UniPoly monomial(FieldElement c, size_t degree);
    /// Convenience builder from small integer coefficients (ascending).
    static UniPoly from_ints(const FieldDescriptor& f, std::initializer_list<long> ascending);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of T^i (zero beyond the degree).
    FieldElement coeff(size_t i) const;
    const FieldElement& leading() const;
    bool is_monic() const { return !c_.empty() && leading().is_one(); }
    const std::vector<FieldElement>& coefficients() const { return c_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const FieldElement& s);
    bool operator==(const UniPoly& rhs) const { return field_ == rhs.field_ && c_ == rhs.c_; }

    UniPoly monic() const;  // throws on zero
    FieldElement eval(const FieldElement& x) const;
    std::string to_string() const;
    static UniPoly parse(const FieldDescriptor& f, std::string_view text);

  private:
    void strip();
    FieldDescriptor field_;
    std::vector<FieldElement> c_;
};

UniPoly operator+(UniPoly lhs, const UniPoly& rhs);
UniPoly operator-(UniPoly lhs, const UniPoly& rhs);
UniPoly operator*(UniPoly lhs, const UniPoly& rhs);
UniPoly operator*(UniPoly lhs, const FieldElement& s);

/// Exact division with remainder: f = q*g + r, deg r < deg g. Throws on
/// zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(const UniPoly& f, const UniPoly& g);
UniPoly derivative(const UniPoly& f);
UniPoly pow(const UniPoly& f, unsigned e);
/// The product of the distinct irreducible factors, monic. Works in
/// characteristic 0 and over GF(p) (where p-th power parts are unwound).
UniPoly squarefree_part(const UniPoly& f);

/// Total order for canonical factor lists: degree first, then coefficients
/// compared from the leading one down.
int cmp(const UniPoly& a, const UniPoly& b);

struct FactorRecord {
    UniPoly factor;    // monic irreducible
    int multiplicity;  // >= 1
    bool operator==(const FactorRecord&) const = default;
};

/// Complete irreducible factorization over the element field. The product
/// of factor^multiplicity times the leading coefficient reproduces the
/// input exactly; factors are monic, pairwise distinct, and sorted
/// canonically. Constants factor into an empty list; the zero polynomial
/// is rejected. The seed drives the randomized equal-degree splitting over
/// GF(p); the result does not depend on it.
std::vector<FactorRecord> factor(const UniPoly& f, std::uint64_t seed = 0);

/// deg-2 polynomials only: true iff the discriminant is a non-square, i.e.
/// iff the polynomial is irreducible (characteristic != 2).
bool quadratic_irreducible(const UniPoly& g);

/// Dense bivariate polynomial in t and d; coeff(i, j) is the coefficient
/// of t^i d^j. Trailing zero rows/columns are stripped.
class BivarPoly {
  public:
    explicit BivarPoly(const FieldDescriptor& f) : field_(f) {}
    BivarPoly(const FieldDescriptor& f, std::vector<std::vector<FieldElement>> grid);

    static BivarPoly constant(FieldElement c);
    static BivarPoly var_t(const FieldDescriptor& f);
    static BivarPoly var_d(const FieldDescriptor& f);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const { return g_.empty(); }
    int degree_t() const { return static_cast<int>(g_.size()) - 1; }
    int degree_d() const;
    FieldElement coeff(size_t ti, size_t dj) const;
    const std::vector<std::vector<FieldElement>>& grid() const { return g_; }

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& rhs);
    BivarPoly& operator-=(const BivarPoly& rhs);
    BivarPoly& operator*=(const BivarPoly& rhs);
    bool operator==(const BivarPoly& rhs) const { return field_ == rhs.field_ && g_ == rhs.g_; }

    FieldElement eval(const FieldElement& t, const FieldElement& d) const;
    std::string to_string() const;

  private:
    void strip();
    FieldDescriptor field_;
    std::vector<std::vector<FieldElement>> g_;  // g_[i][j] : t^i d^j
};

BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs);
BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs);
BivarPoly operator*(BivarPoly lhs, const BivarPoly& rhs);

/// F(t, d) = det(A^2 - tA + dI) as an exact bivariate polynomial. For any
/// 2x2 matrix L with trace t0 and determinant d0, F(t0, d0) equals
/// det(p_L(A)). Degree in d is n; degree in t is n exactly when A is
/// invertible.
BivarPoly super_char_poly(const Mat& A);

}  // namespace sev

#endif
