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
 * @file oracle.hpp
 * @brief Brute-force ground truth over small prime fields: exhaustive
 *        enumeration of 2-dimensional subspaces (one reduced-echelon
 *        representative per plane), direct invariance and properness
 *        testing, and claim-check sweeps over every candidate 2x2 matrix.
 *
 * The per-plane and per-sample kernels are data parallel. Each entry point
 * has a serial reference implementation (the _serial variant) and an
 * OpenMP-sharded one; both produce identical results and the tests hold
 * them to that. tools/oracle_bench.cpp compares their throughput.
 */

#ifndef SEV_ORACLE_HPP
#define SEV_ORACLE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sev/rmodule.hpp"
#include "sev/supereig.hpp"

namespace sev {

/// Ceiling on p^n * (number of planes) for sweeps, and on p^n for bare
/// enumeration; roughly the basic-operation count of a sweep.
inline constexpr unsigned long long kDefaultOracleBudget = 10'000'000ULL;

/// Number of 2-dimensional subspaces of GF(p)^n:
/// (p^n - 1)(p^n - p) / ((p^2 - 1)(p^2 - p)).
mpz_class gaussian_binomial_2(size_t n, long p);

/// Canonical enumeration of the 2-dimensional subspaces of GF(p)^n. Each
/// plane appears exactly once as a rank-2 reduced-echelon pair (u, v) with
/// pivot columns j1 < j2; planes are ordered by pivot pair, then by the
/// free entries as a base-p odometer. Random access by index keeps the
/// enumeration splittable into shards.
class PlaneEnumeration {
  public:
    PlaneEnumeration(const FieldDescriptor& gf, size_t n,
                     unsigned long long budget = kDefaultOracleBudget);

    const FieldDescriptor& field() const { return field_; }
    size_t dimension() const { return n_; }
    unsigned long long count() const { return total_; }
    /// The canonical (u, v) basis of plane #idx.
    std::pair<Vec, Vec> plane_at(unsigned long long idx) const;

  private:
    struct Block {
        size_t j1, j2;
        unsigned long long offset, size;
    };
    FieldDescriptor field_;
    size_t n_;
    long p_;
    std::vector<Block> blocks_;
    unsigned long long total_;
};

struct InvariantPlane {
    Vec u, v;              // canonical reduced-echelon basis
    SuperEigenvalue lambda;
    bool proper;           // no line of the plane is an eigenvector of A
};

/// Exactly the A-invariant planes, in enumeration order, each with the
/// super-eigenvalue read off the canonical basis and the direct
/// no-eigenvector properness verdict.
std::vector<InvariantPlane> invariant_planes_bruteforce(
    const Mat& A, unsigned long long budget = kDefaultOracleBudget, int threads = 0);
std::vector<InvariantPlane> invariant_planes_bruteforce_serial(
    const Mat& A, unsigned long long budget = kDefaultOracleBudget);

/// Similarity classes over all invariant planes, split by properness and
/// sorted canonically (a class is proper iff all of its planes are).
struct BruteClasses {
    std::vector<SimilarityClass> proper;
    std::vector<SimilarityClass> improper;
};
BruteClasses super_eigenvalues_bruteforce(const Mat& A,
                                          unsigned long long budget = kDefaultOracleBudget,
                                          int threads = 0);

/// Uniform random matrix: residues over GF(p); small random rationals over
/// Q and Q(sqrt(d)).
Mat random_matrix(const FieldDescriptor& f, size_t rows, size_t cols, std::mt19937_64& rng);

struct ClaimWitness {
    Mat A;
    Mat lambda;
    std::string detail;
};

struct ClaimCounter {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<ClaimWitness> witnesses;  // capped
    std::uint64_t confirmations() const { return checked - violations; }
};

/// 2x2 agreement matrix for det(hat(A) - diag(L,...,L)) = 0 against
/// brute-force super-eigenvalue status; reported, never asserted.
struct DetTestCells {
    std::uint64_t zero_super = 0;
    std::uint64_t zero_not_super = 0;
    std::uint64_t nonzero_super = 0;
    std::uint64_t nonzero_not_super = 0;
};

struct ClaimReport {
    FieldDescriptor field = FieldDescriptor::rationals();
    size_t n = 0;
    size_t samples = 0;
    std::uint64_t seed = 0;

    // Proved statements; any violation is an implementation bug.
    ClaimCounter theorem;        ///< properness test == brute-force properness
    ClaimCounter necessity;      ///< super-eigenvalue => det(p_L(A)) = 0
    ClaimCounter regular_equiv;  ///< regular solution exists == brute-force status
    ClaimCounter classifier;     ///< is_super_eigenvalue == brute-force status
    ClaimCounter bound;          ///< #proper classes <= floor(n/2)

    bool det_test_applicable = false;  // n even
    DetTestCells det_cells;
    std::vector<ClaimWitness> det_disagreements;  // capped

    bool proved_violations() const {
        return theorem.violations || necessity.violations || regular_equiv.violations ||
               classifier.violations || bound.violations;
    }
};

inline constexpr size_t kMaxWitnesses = 16;

/// Sweeps `samples` seeded random matrices; for each, checks every one of
/// the p^4 candidate 2x2 matrices against the brute-force plane
/// enumeration. The seed fixes the sample set regardless of thread count.
ClaimReport claim_sweep(const FieldDescriptor& gf, size_t n, size_t samples,
                        std::uint64_t seed, unsigned long long budget = kDefaultOracleBudget,
                        int threads = 0);
ClaimReport claim_sweep_serial(const FieldDescriptor& gf, size_t n, size_t samples,
                               std::uint64_t seed,
                               unsigned long long budget = kDefaultOracleBudget);

}  // namespace sev

#endif
