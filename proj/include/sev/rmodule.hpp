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
 * @file rmodule.hpp
 * @brief The module U = F^n (+) F^n over the non-commutative ring
 *        R = Mat_2(F), with the block action
 *        [[p,q],[r,s]] . [u; v] = [pu + qv; ru + sv].
 *
 * For even n = 2k, U is free of rank k over R with basis T_i = [e_i;
 * e_{k+i}], and every R-endomorphism is f_A([u; v]) = [Au; Av] for a
 * unique A. The matrix of f_A over the R-basis is the k x k block matrix
 * tilde(A); removing the inner brackets (the ring identification alpha)
 * yields hat(A) = alpha(tilde(A)).
 *
 * The eigenproblem f_A(w) = L.w over R is a 2n x 2n linear system; its
 * solutions with u, v independent ("regular") are exactly the
 * super-eigenvectors witnessing L.
 */

#ifndef SEV_RMODULE_HPP
#define SEV_RMODULE_HPP

#include <optional>
#include <vector>

#include "sev/matrix.hpp"
#include "sev/supereig.hpp"

namespace sev {

/// An element [u; v] of U = F^n (+) F^n.
struct ModulePair {
    Vec u, v;
    bool operator==(const ModulePair&) const = default;
};

/// A k x k matrix with entries in R = Mat_2(F).
class RMat {
  public:
    RMat(const FieldDescriptor& f, size_t k, std::vector<Mat> blocks);
    const FieldDescriptor& field() const { return field_; }
    size_t k() const { return k_; }
    const Mat& block(size_t i, size_t j) const { return blocks_[i * k_ + j]; }
    /// Block-matrix product over the non-commutative ring R.
    RMat operator*(const RMat& rhs) const;
    bool operator==(const RMat& rhs) const {
        return field_ == rhs.field_ && k_ == rhs.k_ && blocks_ == rhs.blocks_;
    }

  private:
    FieldDescriptor field_;
    size_t k_;
    std::vector<Mat> blocks_;  // row-major, each 2x2
};

/// L . [u; v] for a 2x2 matrix L.
ModulePair r_action(const Mat& L, const ModulePair& w);
ModulePair r_action(const SuperEigenvalue& L, const ModulePair& w);

/// f_A([u; v]) = [Au; Av]; commutes with r_action.
ModulePair f_apply(const Mat& A, const ModulePair& w);

/// Matrix of f_A over the R-basis: block(i, j) carries the entries
/// [[a_{i,j}, a_{k+i,j}], [a_{i,k+j}, a_{k+i,k+j}]] (1-based indices as in
/// the defining formula). Requires n even.
RMat tilde(const Mat& A);
Mat untilde(const RMat& M);

/// The bracket-removal ring identification Mat_k(R) -> Mat_n(F) and its
/// inverse; alpha is multiplicative.
Mat alpha(const RMat& M);
RMat alpha_inv(const Mat& B);

/// hat(A) = alpha(tilde(A)). Requires n even.
Mat hat(const Mat& A);

struct RModuleBasis {
    size_t n, k;
    std::vector<ModulePair> t;  // T_i = [e_i; e_{k+i}], 1 <= i <= k
    std::vector<ModulePair> x;  // E_1..E_n, F_1..F_n (the standard F-basis)
};
RModuleBasis r_basis(const FieldDescriptor& f, size_t n);

/// Coordinates of w in the R-basis: the 2x2 blocks M_i with
/// w = sum M_i . T_i. Requires n even.
std::vector<Mat> r_coordinates(const ModulePair& w);

/// Matrix of f_A as an F-linear map of U in the basis X: the 2n x 2n
/// block diagonal diag(A, A).
Mat x_matrix(const Mat& A);

struct REigenSolution {
    std::vector<ModulePair> basis;        ///< canonical kernel basis of the block system
    bool regular = false;                 ///< some solution has u, v independent
    std::optional<ModulePair> witness;    ///< a regular solution when one exists
};

/// All solutions of f_A(w) = L.w, i.e. the kernel of the 2n x 2n block
/// system [[A - pI, -qI], [-rI, A - sI]]. Regular solutions exist iff L is
/// a super-eigenvalue of A. Regularity is decided exactly by scanning the
/// basis vectors and their pairwise sums: in characteristic != 2 the 2x2
/// minors of [u v] are quadratic forms, so vanishing on those points forces
/// vanishing on the whole solution space.
REigenSolution r_eigen_solve(const Mat& A, const SuperEigenvalue& L);

/// det(hat(A) - diag(L, ..., L)); reported alongside the solver verdict in
/// claim-check reports. Requires n even. No equivalence with
/// super-eigenvalue status is asserted.
FieldElement det_test(const Mat& A, const SuperEigenvalue& L);

}  // namespace sev

#endif
