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

#include "sev/supereig.hpp"

#include <stdexcept>

namespace sev {

namespace {

void require_same(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (!(a == b))
        throw std::invalid_argument("field mismatch: " + a.name() + " vs " + b.name());
}

Mat shifted(const Mat& A, const FieldElement& a) {  // A - a*I
    Mat m = A;
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, i) -= a;
    return m;
}

}  // namespace

SuperEigenvalue::SuperEigenvalue(FieldElement p, FieldElement q, FieldElement r,
                                 FieldElement s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
    require_same(p_.field(), q_.field());
    require_same(p_.field(), r_.field());
    require_same(p_.field(), s_.field());
}

SuperEigenvalue::SuperEigenvalue(const Mat& m)
    : SuperEigenvalue(m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("a super-eigenvalue is a 2x2 matrix");
}

SuperEigenvalue SuperEigenvalue::companion(const UniPoly& g) {
    if (g.degree() != 2 || !g.is_monic())
        throw std::invalid_argument("companion() expects a monic quadratic");
    const FieldDescriptor& f = g.field();
    return SuperEigenvalue(-g.coeff(1), FieldElement::one(f), -g.coeff(0),
                           FieldElement::zero(f));
}

Mat SuperEigenvalue::matrix() const {
    return Mat(field(), 2, 2, {p_, q_, r_, s_});
}

UniPoly SuperEigenvalue::charpoly() const {
    return UniPoly(field(), {det(), -trace(), FieldElement::one(field())});
}

bool SuperEigenvalue::operator==(const SuperEigenvalue& rhs) const {
    return p_ == rhs.p_ && q_ == rhs.q_ && r_ == rhs.r_ && s_ == rhs.s_;
}

std::optional<SuperEigenvalue> verify_invariant_subspace(const Mat& A, const Vec& u,
                                                         const Vec& v) {
    if (u.size() != A.cols() || v.size() != A.cols())
        throw std::invalid_argument("plane vectors must have length " +
                                    std::to_string(A.cols()));
    std::vector<Vec> basis{u, v};
    if (rank(columns_matrix(A.field(), basis)) != 2) return std::nullopt;
    auto cu = coordinates_in_span(basis, A.apply(u));
    if (!cu) return std::nullopt;
    auto cv = coordinates_in_span(basis, A.apply(v));
    if (!cv) return std::nullopt;
    return SuperEigenvalue((*cu)[0], (*cu)[1], (*cv)[0], (*cv)[1]);
}

FieldElement necessary_condition(const Mat& A, const SuperEigenvalue& L) {
    require_same(A.field(), L.field());
    if (A.rows() != A.cols())
        throw std::invalid_argument("necessary_condition expects a square matrix");
    return det(eval_poly(L.charpoly(), A));
}

bool is_proper_super_eigenvalue(const Mat& A, const SuperEigenvalue& L) {
    return necessary_condition(A, L).is_zero() && quadratic_irreducible(L.charpoly());
}

std::vector<std::pair<SuperEigenvalue, int>> proper_super_eigenvalues(const Mat& A,
                                                                      std::uint64_t seed) {
    std::vector<std::pair<SuperEigenvalue, int>> out;
    for (const FactorRecord& r : factor(charpoly(A), seed)) {
        if (r.factor.degree() != 2) continue;
        out.emplace_back(SuperEigenvalue::companion(r.factor), r.multiplicity);
    }
    return out;
}

SuperEigenvector proper_super_eigenvector(const Mat& A, const SuperEigenvalue& L) {
    if (!necessary_condition(A, L).is_zero())
        throw std::invalid_argument("not a super-eigenvalue: det(p_L(A)) != 0");
    if (!quadratic_irreducible(L.charpoly()))
        throw std::invalid_argument("improper super-eigenvalue: p_L(T) is reducible");
    // q r != 0 here, else p_L = (T - p)(T - s) would be reducible.
    std::vector<Vec> ker = kernel_basis(eval_poly(L.charpoly(), A));
    const Vec& u = ker.front();
    Vec v = shifted(A, L.p()).apply(u);
    FieldElement qinv = L.q().inverse();
    for (FieldElement& e : v) e *= qinv;
    return SuperEigenvector{u, std::move(v)};
}

bool is_super_eigenvalue(const Mat& A, const SuperEigenvalue& L) {
    require_same(A.field(), L.field());
    const FieldDescriptor& f = A.field();
    size_t n = A.rows();
    SimilarityClass cls = L.similarity();
    switch (cls.tag) {
        case ClassTag::Irreducible:
            return necessary_condition(A, L).is_zero();
        case ClassTag::Split: {
            // Eigenvalues (t ± w)/2 with w a square root of the discriminant.
            FieldElement four = FieldElement::from_int(f, 4);
            FieldElement w = *(cls.trace * cls.trace - four * cls.det).sqrt_if_square();
            FieldElement two = FieldElement::from_int(f, 2);
            FieldElement a = (cls.trace + w) / two;
            FieldElement c = (cls.trace - w) / two;
            return det(shifted(A, a)).is_zero() && det(shifted(A, c)).is_zero();
        }
        case ClassTag::Scalar: {
            FieldElement a = cls.trace / FieldElement::from_int(f, 2);
            return rank(shifted(A, a)) + 2 <= n;
        }
        case ClassTag::Jordan: {
            FieldElement a = cls.trace / FieldElement::from_int(f, 2);
            Mat s = shifted(A, a);
            return rank(s * s) < rank(s);
        }
    }
    return false;
}

std::vector<PrimaryComponent> primary_components(const Mat& A, std::uint64_t seed) {
    std::vector<PrimaryComponent> out;
    for (const FactorRecord& r : factor(charpoly(A), seed)) {
        if (r.factor.degree() != 2) continue;
        Mat power = eval_poly(pow(r.factor, static_cast<unsigned>(r.multiplicity)), A);
        out.push_back(PrimaryComponent{r.factor, r.multiplicity, kernel_basis(power)});
    }
    return out;
}

}  // namespace sev
