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
 * @file matrix.hpp
 * @brief Dense exact matrices: arithmetic, reduced echelon form, kernels,
 *        determinants, the division-free characteristic polynomial, matrix
 *        polynomial evaluation, and 2x2 similarity classification.
 */

#ifndef SEV_MATRIX_HPP
#define SEV_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "sev/field.hpp"
#include "sev/poly.hpp"

namespace sev {

using Vec = std::vector<FieldElement>;

class Mat {
  public:
    Mat(const FieldDescriptor& f, size_t rows, size_t cols, std::vector<FieldElement> entries);

    static Mat zero(const FieldDescriptor& f, size_t rows, size_t cols);
    static Mat identity(const FieldDescriptor& f, size_t n);
    /// Convenience builder from integer literals.
    static Mat from_ints(const FieldDescriptor& f,
                         std::initializer_list<std::initializer_list<long>> rows);
    static Mat column(const FieldDescriptor& f, const Vec& v);

    const FieldDescriptor& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldElement& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    FieldElement& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const std::vector<FieldElement>& entries() const { return e_; }

    Mat operator-() const;
    Mat& operator+=(const Mat& rhs);
    Mat& operator-=(const Mat& rhs);
    Mat operator*(const Mat& rhs) const;
    Mat& operator*=(const FieldElement& s);
    bool operator==(const Mat& rhs) const;

    Mat transpose() const;
    Vec apply(const Vec& v) const;  // A * v
    Vec row(size_t i) const;
    Vec col(size_t j) const;

  private:
    FieldDescriptor field_;
    size_t rows_, cols_;
    std::vector<FieldElement> e_;  // row-major
};

Mat operator+(Mat lhs, const Mat& rhs);
Mat operator-(Mat lhs, const Mat& rhs);
Mat operator*(Mat lhs, const FieldElement& s);
Mat operator*(const FieldElement& s, Mat rhs);

/// Reduced row echelon form; pivots are the first nonzero entry of each row
/// in column order (exact arithmetic, so pivot choice is canonical).
struct Rref {
    Mat reduced;
    std::vector<size_t> pivot_cols;
    size_t rank() const { return pivot_cols.size(); }
};
Rref rref(const Mat& A);

size_t rank(const Mat& A);

/// Canonical kernel basis from the reduced echelon form, one vector per free
/// column in ascending column order. Empty iff A is injective.
std::vector<Vec> kernel_basis(const Mat& A);

/// Exact determinant by fraction-exact Gaussian elimination.
FieldElement det(const Mat& A);

/// Characteristic polynomial det(T*I - A), monic of degree n, computed by
/// the Samuelson-Berkowitz division-free algorithm.
UniPoly charpoly(const Mat& A);

/// f(A) by Horner evaluation.
Mat eval_poly(const UniPoly& f, const Mat& A);

enum class ClassTag { Scalar, Jordan, Split, Irreducible };
const char* tag_name(ClassTag t);

/// Invariant of a 2x2 matrix under conjugation: two 2x2 matrices over a
/// field of characteristic != 2 are similar iff their classes are equal.
/// The tag records whether T^2 - trace*T + det splits, and separates the
/// scalar from the Jordan case when the discriminant vanishes.
struct SimilarityClass {
    FieldElement trace;
    FieldElement det;
    ClassTag tag;
    bool operator==(const SimilarityClass&) const = default;
};
SimilarityClass similarity_class(const Mat& L);
int cmp(const SimilarityClass& a, const SimilarityClass& b);
struct SimilarityClassLess {
    bool operator()(const SimilarityClass& a, const SimilarityClass& b) const {
        return cmp(a, b) < 0;
    }
};

// Vector helpers.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const FieldElement& s, const Vec& a);
bool vec_is_zero(const Vec& v);
/// Matrix with the given vectors as columns.
Mat columns_matrix(const FieldDescriptor& f, const std::vector<Vec>& cols);
/// True iff x lies in the span of the given vectors.
bool in_span(const std::vector<Vec>& basis, const Vec& x);
/// Coordinates of x in the given basis, if x lies in its span.
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& x);

}  // namespace sev

#endif
