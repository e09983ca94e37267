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
 * @file supereig.hpp
 * @brief Super-eigenvalues and super-eigenvectors: a super-eigenvector of A
 *        is a 2-dimensional invariant subspace W = <u, v>, and the
 *        2x2 matrix L = [[p, q], [r, s]] with A u = p u + q v,
 *        A v = r u + s v is the corresponding super-eigenvalue, well
 *        defined up to similarity. W is proper when it contains no
 *        eigenvector of A; over fields of characteristic != 2 this holds
 *        exactly when det(p_L(A)) = 0 and p_L is irreducible, where
 *        p_L(T) = T^2 - tr(L) T + det(L).
 */

#ifndef SEV_SUPEREIG_HPP
#define SEV_SUPEREIG_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sev/matrix.hpp"
#include "sev/poly.hpp"

namespace sev {

class SuperEigenvalue {
  public:
    SuperEigenvalue(FieldElement p, FieldElement q, FieldElement r, FieldElement s);
    explicit SuperEigenvalue(const Mat& two_by_two);
    /// The companion representative [[-lambda, 1], [-mu, 0]] of the class
    /// attached to a monic quadratic T^2 + lambda T + mu.
    static SuperEigenvalue companion(const UniPoly& monic_quadratic);

    const FieldDescriptor& field() const { return p_.field(); }
    const FieldElement& p() const { return p_; }
    const FieldElement& q() const { return q_; }
    const FieldElement& r() const { return r_; }
    const FieldElement& s() const { return s_; }

    Mat matrix() const;
    FieldElement trace() const { return p_ + s_; }
    FieldElement det() const { return p_ * s_ - q_ * r_; }
    /// p_L(T) = (T - p)(T - s) - q r = T^2 - trace*T + det.
    UniPoly charpoly() const;
    SimilarityClass similarity() const { return similarity_class(matrix()); }

    bool operator==(const SuperEigenvalue& rhs) const;

  private:
    FieldElement p_, q_, r_, s_;
};

struct SuperEigenvector {
    Vec u, v;  // linearly independent; W = <u, v>
};

/// V_i = ker(p_i(A)^{alpha_i}) for an irreducible quadratic factor p_i of
/// the characteristic polynomial; carries every proper invariant plane
/// whose super-eigenvalue class belongs to p_i.
struct PrimaryComponent {
    UniPoly factor;
    int multiplicity;
    std::vector<Vec> basis;
};

/// If u, v are independent and span an A-invariant plane, returns the
/// unique super-eigenvalue L with A u = p u + q v, A v = r u + s v (the
/// matrix of A restricted to the plane in basis (u, v) is L transposed);
/// otherwise nullopt.
std::optional<SuperEigenvalue> verify_invariant_subspace(const Mat& A, const Vec& u,
                                                         const Vec& v);

/// det(p_L(A)) = det((A - pI)(A - sI) - qr I); zero whenever L is a
/// super-eigenvalue of A. The converse fails.
FieldElement necessary_condition(const Mat& A, const SuperEigenvalue& L);

/// The main theorem's test: det(p_L(A)) = 0 and p_L irreducible.
bool is_proper_super_eigenvalue(const Mat& A, const SuperEigenvalue& L);

/// One companion-form representative per irreducible quadratic factor of
/// charpoly(A), with the factor's multiplicity. Pairwise non-similar; at
/// most floor(n/2) entries.
std::vector<std::pair<SuperEigenvalue, int>> proper_super_eigenvalues(const Mat& A,
                                                                      std::uint64_t seed = 0);

/// The theorem-proof construction: u is the first canonical kernel vector
/// of p_L(A) and v = q^{-1}(A - pI)u. Requires a proper L (q != 0 is then
/// automatic). The relations A u = p u + q v, A v = r u + s v hold exactly
/// and the plane contains no eigenvector of A.
SuperEigenvector proper_super_eigenvector(const Mat& A, const SuperEigenvalue& L);

/// Super-eigenvalue decision including improper classes, by similarity
/// type: irreducible classes use the theorem test; a split class with
/// eigenvalues
/// a != c requires both to be eigenvalues of A; a scalar class aI requires
/// dim ker(A - aI) >= 2; a Jordan class at a requires
/// ker((A - aI)^2) strictly above ker(A - aI) != 0.
bool is_super_eigenvalue(const Mat& A, const SuperEigenvalue& L);

/// One component per irreducible quadratic factor of the characteristic
/// polynomial; the components intersect trivially pairwise.
std::vector<PrimaryComponent> primary_components(const Mat& A, std::uint64_t seed = 0);

}  // namespace sev

#endif
