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

#include "sev/rmodule.hpp"

#include <stdexcept>

namespace sev {

namespace {

void require_even(const Mat& A, const char* what) {
    if (A.rows() != A.cols() || A.rows() % 2 != 0)
        throw std::invalid_argument(std::string(what) + " requires a square matrix of even size, got " +
                                    std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
}

void require_pair(const ModulePair& w) {
    if (w.u.size() != w.v.size())
        throw std::invalid_argument("module pair components differ in length");
}

bool regular_pair(const FieldDescriptor& f, const ModulePair& w) {
    return rank(columns_matrix(f, {w.u, w.v})) == 2;
}

}  // namespace

RMat::RMat(const FieldDescriptor& f, size_t k, std::vector<Mat> blocks)
    : field_(f), k_(k), blocks_(std::move(blocks)) {
    if (blocks_.size() != k_ * k_)
        throw std::invalid_argument("RMat needs k*k blocks");
    for (const Mat& b : blocks_) {
        if (!(b.field() == field_)) throw std::invalid_argument("RMat block field mismatch");
        if (b.rows() != 2 || b.cols() != 2)
            throw std::invalid_argument("RMat blocks must be 2x2");
    }
}

RMat RMat::operator*(const RMat& rhs) const {
    if (!(field_ == rhs.field_) || k_ != rhs.k_)
        throw std::invalid_argument("RMat product requires matching shape and field");
    std::vector<Mat> blocks;
    blocks.reserve(k_ * k_);
    for (size_t i = 0; i < k_; ++i)
        for (size_t j = 0; j < k_; ++j) {
            Mat acc = Mat::zero(field_, 2, 2);
            for (size_t l = 0; l < k_; ++l) acc += block(i, l) * rhs.block(l, j);
            blocks.push_back(std::move(acc));
        }
    return RMat(field_, k_, std::move(blocks));
}

ModulePair r_action(const Mat& L, const ModulePair& w) {
    if (L.rows() != 2 || L.cols() != 2)
        throw std::invalid_argument("r_action expects a 2x2 ring element");
    require_pair(w);
    Vec nu = vec_add(vec_scale(L.at(0, 0), w.u), vec_scale(L.at(0, 1), w.v));
    Vec nv = vec_add(vec_scale(L.at(1, 0), w.u), vec_scale(L.at(1, 1), w.v));
    return ModulePair{std::move(nu), std::move(nv)};
}

ModulePair r_action(const SuperEigenvalue& L, const ModulePair& w) {
    return r_action(L.matrix(), w);
}

ModulePair f_apply(const Mat& A, const ModulePair& w) {
    require_pair(w);
    return ModulePair{A.apply(w.u), A.apply(w.v)};
}

RMat tilde(const Mat& A) {
    require_even(A, "tilde");
    size_t k = A.rows() / 2;
    const FieldDescriptor& f = A.field();
    std::vector<Mat> blocks;
    blocks.reserve(k * k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            blocks.push_back(Mat(f, 2, 2,
                                 {A.at(i, j), A.at(k + i, j), A.at(i, k + j), A.at(k + i, k + j)}));
    return RMat(f, k, std::move(blocks));
}

Mat untilde(const RMat& M) {
    size_t k = M.k(), n = 2 * k;
    Mat A = Mat::zero(M.field(), n, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            const Mat& b = M.block(i, j);
            A.at(i, j) = b.at(0, 0);
            A.at(k + i, j) = b.at(0, 1);
            A.at(i, k + j) = b.at(1, 0);
            A.at(k + i, k + j) = b.at(1, 1);
        }
    return A;
}

Mat alpha(const RMat& M) {
    size_t k = M.k(), n = 2 * k;
    Mat B = Mat::zero(M.field(), n, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            const Mat& b = M.block(i, j);
            for (size_t a = 0; a < 2; ++a)
                for (size_t c = 0; c < 2; ++c) B.at(2 * i + a, 2 * j + c) = b.at(a, c);
        }
    return B;
}

RMat alpha_inv(const Mat& B) {
    require_even(B, "alpha_inv");
    size_t k = B.rows() / 2;
    const FieldDescriptor& f = B.field();
    std::vector<Mat> blocks;
    blocks.reserve(k * k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            blocks.push_back(Mat(f, 2, 2,
                                 {B.at(2 * i, 2 * j), B.at(2 * i, 2 * j + 1),
                                  B.at(2 * i + 1, 2 * j), B.at(2 * i + 1, 2 * j + 1)}));
    return RMat(f, k, std::move(blocks));
}

Mat hat(const Mat& A) { return alpha(tilde(A)); }

RModuleBasis r_basis(const FieldDescriptor& f, size_t n) {
    if (n % 2 != 0) throw std::invalid_argument("r_basis requires even n");
    size_t k = n / 2;
    RModuleBasis out{n, k, {}, {}};
    Vec zero(n, FieldElement::zero(f));
    auto unit = [&](size_t i) {
        Vec e = zero;
        e[i] = FieldElement::one(f);
        return e;
    };
    for (size_t i = 0; i < k; ++i) out.t.push_back(ModulePair{unit(i), unit(k + i)});
    for (size_t i = 0; i < n; ++i) out.x.push_back(ModulePair{unit(i), zero});
    for (size_t i = 0; i < n; ++i) out.x.push_back(ModulePair{zero, unit(i)});
    return out;
}

std::vector<Mat> r_coordinates(const ModulePair& w) {
    require_pair(w);
    size_t n = w.u.size();
    if (n % 2 != 0) throw std::invalid_argument("r_coordinates requires even length");
    size_t k = n / 2;
    const FieldDescriptor& f = w.u.front().field();
    std::vector<Mat> out;
    out.reserve(k);
    // u = sum p_i e_i + q_i e_{k+i}, v = sum r_i e_i + s_i e_{k+i}.
    for (size_t i = 0; i < k; ++i)
        out.push_back(Mat(f, 2, 2, {w.u[i], w.u[k + i], w.v[i], w.v[k + i]}));
    return out;
}

Mat x_matrix(const Mat& A) {
    require_even(A, "x_matrix");
    size_t n = A.rows();
    Mat B = Mat::zero(A.field(), 2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            B.at(i, j) = A.at(i, j);
            B.at(n + i, n + j) = A.at(i, j);
        }
    return B;
}

REigenSolution r_eigen_solve(const Mat& A, const SuperEigenvalue& L) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("r_eigen_solve expects a square matrix");
    const FieldDescriptor& f = A.field();
    size_t n = A.rows();
    // [[A - pI, -qI], [-rI, A - sI]] applied to [u; v].
    Mat M = Mat::zero(f, 2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            M.at(i, j) = A.at(i, j);
            M.at(n + i, n + j) = A.at(i, j);
        }
    for (size_t i = 0; i < n; ++i) {
        M.at(i, i) -= L.p();
        M.at(i, n + i) -= L.q();
        M.at(n + i, i) -= L.r();
        M.at(n + i, n + i) -= L.s();
    }
    REigenSolution out;
    std::vector<Vec> ker = kernel_basis(M);
    for (const Vec& w : ker) {
        Vec u(w.begin(), w.begin() + n);
        Vec v(w.begin() + n, w.end());
        out.basis.push_back(ModulePair{std::move(u), std::move(v)});
    }
    // Scan basis vectors and pairwise sums. The 2x2 minors of [u v] are
    // quadratic forms on the solution space; by polarization (char != 2)
    // they vanish identically iff they vanish on all these points.
    for (size_t i = 0; i < out.basis.size() && !out.regular; ++i) {
        if (regular_pair(f, out.basis[i])) {
            out.regular = true;
            out.witness = out.basis[i];
            break;
        }
        for (size_t j = i + 1; j < out.basis.size(); ++j) {
            ModulePair sum{vec_add(out.basis[i].u, out.basis[j].u),
                           vec_add(out.basis[i].v, out.basis[j].v)};
            if (regular_pair(f, sum)) {
                out.regular = true;
                out.witness = std::move(sum);
                break;
            }
        }
    }
    return out;
}

FieldElement det_test(const Mat& A, const SuperEigenvalue& L) {
    require_even(A, "det_test");
    Mat m = hat(A);
    for (size_t i = 0; i < m.rows(); i += 2) {
        m.at(i, i) -= L.p();
        m.at(i, i + 1) -= L.q();
        m.at(i + 1, i) -= L.r();
        m.at(i + 1, i + 1) -= L.s();
    }
    return det(m);
}

}  // namespace sev
