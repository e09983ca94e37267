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

#include "sev/matrix.hpp"

#include <stdexcept>

#include "sev/detail/berkowitz.hpp"

namespace sev {

namespace {

void require_same(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (!(a == b))
        throw std::invalid_argument("field mismatch: " + a.name() + " vs " + b.name());
}

void require_shape(const Mat& a, const Mat& b) {
    require_same(a.field(), b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("shape mismatch: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

void require_square(const Mat& a, const char* what) {
    if (a.rows() != a.cols())
        throw std::invalid_argument(std::string(what) + " expects a square matrix, got " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

}  // namespace

Mat::Mat(const FieldDescriptor& f, size_t rows, size_t cols, std::vector<FieldElement> entries)
    : field_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix entry count " + std::to_string(e_.size()) +
                                    " does not match " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
    for (const FieldElement& e : e_) require_same(field_, e.field());
}

Mat Mat::zero(const FieldDescriptor& f, size_t rows, size_t cols) {
    return Mat(f, rows, cols, std::vector<FieldElement>(rows * cols, FieldElement::zero(f)));
}

Mat Mat::identity(const FieldDescriptor& f, size_t n) {
    Mat m = zero(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
    return m;
}

Mat Mat::from_ints(const FieldDescriptor& f,
                   std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<FieldElement> e;
    size_t r = rows.size(), c = r == 0 ? 0 : rows.begin()->size();
    e.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        for (long v : row) e.push_back(FieldElement::from_int(f, v));
    }
    return Mat(f, r, c, std::move(e));
}

Mat Mat::column(const FieldDescriptor& f, const Vec& v) {
    return Mat(f, v.size(), 1, v);
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (FieldElement& e : r.e_) e = -e;
    return r;
}

Mat& Mat::operator+=(const Mat& rhs) {
    require_shape(*this, rhs);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
    require_shape(*this, rhs);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= rhs.e_[i];
    return *this;
}

Mat Mat::operator*(const Mat& rhs) const {
    require_same(field_, rhs.field_);
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("inner dimension mismatch: " + std::to_string(cols_) +
                                    " vs " + std::to_string(rhs.rows_));
    Mat out = zero(field_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

Mat& Mat::operator*=(const FieldElement& s) {
    require_same(field_, s.field());
    for (FieldElement& e : e_) e *= s;
    return *this;
}

bool Mat::operator==(const Mat& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

Mat Mat::transpose() const {
    Mat out = zero(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                    " does not match " + std::to_string(cols_) + " columns");
    Vec out(rows_, FieldElement::zero(field_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            require_same(field_, v[j].field());
            out[i] += at(i, j) * v[j];
        }
    return out;
}

Vec Mat::row(size_t i) const {
    Vec out;
    out.reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

Vec Mat::col(size_t j) const {
    Vec out;
    out.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
Mat operator*(Mat lhs, const FieldElement& s) { return lhs *= s; }
Mat operator*(const FieldElement& s, Mat rhs) { return rhs *= s; }

Rref rref(const Mat& A) {
    Mat m = A;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        FieldElement inv = m.at(r, c).inverse();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldElement factor = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return Rref{std::move(m), std::move(pivots)};
}

size_t rank(const Mat& A) { return rref(A).rank(); }

std::vector<Vec> kernel_basis(const Mat& A) {
    Rref e = rref(A);
    const FieldDescriptor& f = A.field();
    std::vector<bool> is_pivot(A.cols(), false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t c = 0; c < A.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(A.cols(), FieldElement::zero(f));
        v[c] = FieldElement::one(f);
        for (size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.reduced.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

FieldElement det(const Mat& A) {
    require_square(A, "det");
    const FieldDescriptor& f = A.field();
    size_t n = A.rows();
    Mat m = A;
    FieldElement result = FieldElement::one(f);
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m.at(sel, c).is_zero()) ++sel;
        if (sel == n) return FieldElement::zero(f);
        if (sel != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
            result = -result;
        }
        result *= m.at(c, c);
        FieldElement inv = m.at(c, c).inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            FieldElement factor = m.at(i, c) * inv;
            for (size_t j = c; j < n; ++j) m.at(i, j) -= factor * m.at(c, j);
        }
    }
    return result;
}

UniPoly charpoly(const Mat& A) {
    require_square(A, "charpoly");
    struct Ops {
        const FieldDescriptor& f;
        FieldElement zero() const { return FieldElement::zero(f); }
        FieldElement one() const { return FieldElement::one(f); }
        FieldElement add(const FieldElement& a, const FieldElement& b) const { return a + b; }
        FieldElement mul(const FieldElement& a, const FieldElement& b) const { return a * b; }
        FieldElement neg(const FieldElement& a) const { return -a; }
    };
    std::vector<FieldElement> coeffs =
        detail::berkowitz_charpoly<FieldElement>(A.entries(), A.rows(), Ops{A.field()});
    return UniPoly(A.field(), std::move(coeffs));
}

Mat eval_poly(const UniPoly& f, const Mat& A) {
    require_square(A, "eval_poly");
    require_same(f.field(), A.field());
    size_t n = A.rows();
    Mat acc = Mat::zero(A.field(), n, n);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * A;
        FieldElement c = f.coeff(static_cast<size_t>(i));
        for (size_t k = 0; k < n; ++k) acc.at(k, k) += c;
    }
    return acc;
}

const char* tag_name(ClassTag t) {
    switch (t) {
        case ClassTag::Scalar: return "scalar";
        case ClassTag::Jordan: return "jordan";
        case ClassTag::Split: return "split";
        case ClassTag::Irreducible: return "irreducible";
    }
    return "?";
}

SimilarityClass similarity_class(const Mat& L) {
    if (L.rows() != 2 || L.cols() != 2)
        throw std::invalid_argument("similarity_class expects a 2x2 matrix");
    const FieldDescriptor& f = L.field();
    FieldElement tr = L.at(0, 0) + L.at(1, 1);
    FieldElement dt = L.at(0, 0) * L.at(1, 1) - L.at(0, 1) * L.at(1, 0);
    FieldElement disc = tr * tr - FieldElement::from_int(f, 4) * dt;
    if (disc.is_zero()) {
        // Double eigenvalue tr/2; scalar iff L is that multiple of I.
        FieldElement lambda = tr / FieldElement::from_int(f, 2);
        bool scalar = L.at(0, 1).is_zero() && L.at(1, 0).is_zero() &&
                      L.at(0, 0) == lambda && L.at(1, 1) == lambda;
        return SimilarityClass{tr, dt, scalar ? ClassTag::Scalar : ClassTag::Jordan};
    }
    bool split = disc.sqrt_if_square().has_value();
    return SimilarityClass{tr, dt, split ? ClassTag::Split : ClassTag::Irreducible};
}

int cmp(const SimilarityClass& a, const SimilarityClass& b) {
    int c = cmp(a.trace, b.trace);
    if (c != 0) return c;
    c = cmp(a.det, b.det);
    if (c != 0) return c;
    int ta = static_cast<int>(a.tag), tb = static_cast<int>(b.tag);
    return ta < tb ? -1 : ta > tb ? 1 : 0;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

Vec vec_scale(const FieldElement& s, const Vec& a) {
    Vec out;
    out.reserve(a.size());
    for (const FieldElement& e : a) out.push_back(s * e);
    return out;
}

bool vec_is_zero(const Vec& v) {
    for (const FieldElement& e : v)
        if (!e.is_zero()) return false;
    return true;
}

Mat columns_matrix(const FieldDescriptor& f, const std::vector<Vec>& cols) {
    size_t n = cols.empty() ? 0 : cols[0].size();
    std::vector<FieldElement> e;
    e.reserve(n * cols.size());
    for (size_t i = 0; i < n; ++i)
        for (const Vec& c : cols) {
            if (c.size() != n) throw std::invalid_argument("ragged column list");
            e.push_back(c[i]);
        }
    return Mat(f, n, cols.size(), std::move(e));
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& x) {
    if (basis.empty()) return vec_is_zero(x) ? std::optional<Vec>(Vec{}) : std::nullopt;
    const FieldDescriptor& f = basis[0][0].field();
    // Solve [basis | x] by elimination; consistent iff no pivot in the last column.
    std::vector<Vec> cols = basis;
    cols.push_back(x);
    Rref e = rref(columns_matrix(f, cols));
    for (size_t c : e.pivot_cols)
        if (c == basis.size()) return std::nullopt;
    Vec coords(basis.size(), FieldElement::zero(f));
    for (size_t i = 0; i < e.pivot_cols.size(); ++i)
        coords[e.pivot_cols[i]] = e.reduced.at(i, basis.size());
    return coords;
}

bool in_span(const std::vector<Vec>& basis, const Vec& x) {
    return coordinates_in_span(basis, x).has_value();
}

}  // namespace sev
