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

#include "sev/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sev {

namespace {

void require_prime_field(const FieldDescriptor& f, const char* what) {
    if (f.kind() != FieldKind::PrimeField)
        throw std::invalid_argument(std::string(what) + " requires a prime field, got " + f.name());
}

mpz_class pow_z(long base, size_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

void check_budget(const mpz_class& cost, unsigned long long budget, const char* what) {
    if (cost > static_cast<unsigned long>(budget))
        throw std::invalid_argument(std::string(what) + ": cost " + cost.get_str() +
                                    " exceeds the budget " + std::to_string(budget));
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

// A w parallel to w (w != 0)?
bool is_eigen_line(const Vec& w, const Vec& aw) {
    size_t lead = w.size();
    for (size_t i = 0; i < w.size(); ++i)
        if (!w[i].is_zero()) { lead = i; break; }
    if (lead == w.size()) return false;
    FieldElement ratio = aw[lead] / w[lead];
    for (size_t i = 0; i < w.size(); ++i)
        if (aw[i] != ratio * w[i]) return false;
    return true;
}

// Per-plane kernel: invariance, the super-eigenvalue off the canonical
// basis, and the direct no-eigenvector properness verdict.
std::optional<InvariantPlane> inspect_plane(const Mat& A, const PlaneEnumeration& planes,
                                            unsigned long long idx) {
    auto [u, v] = planes.plane_at(idx);
    // Pivot columns of the canonical basis: coordinates in the plane can be
    // read off directly, membership is an exact recomputation.
    size_t j1 = 0, j2 = 0;
    for (size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) { j1 = i; break; }
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) { j2 = i; break; }
    Vec au = A.apply(u);
    FieldElement p = au[j1], q = au[j2];
    for (size_t i = 0; i < au.size(); ++i)
        if (au[i] != p * u[i] + q * v[i]) return std::nullopt;
    Vec av = A.apply(v);
    FieldElement r = av[j1], s = av[j2];
    for (size_t i = 0; i < av.size(); ++i)
        if (av[i] != r * u[i] + s * v[i]) return std::nullopt;

    // Proper iff no line of the plane is an eigenvector: the p+1 lines are
    // <v> and <u + c v> for c in GF(p).
    const FieldDescriptor& f = A.field();
    bool proper = !is_eigen_line(v, av);
    if (proper) {
        for (long c = 0; c < f.prime() && proper; ++c) {
            FieldElement ce = FieldElement::from_int(f, c);
            Vec w = vec_add(u, vec_scale(ce, v));
            Vec aw = vec_add(au, vec_scale(ce, av));
            if (is_eigen_line(w, aw)) proper = false;
        }
    }
    return InvariantPlane{std::move(u), std::move(v),
                          SuperEigenvalue(std::move(p), std::move(q), std::move(r), std::move(s)),
                          proper};
}

mpz_class sweep_cost(const FieldDescriptor& f, size_t n) {
    return pow_z(f.prime(), n) * gaussian_binomial_2(n, f.prime());
}

}  // namespace

mpz_class gaussian_binomial_2(size_t n, long p) {
    mpz_class pn = pow_z(p, n);
    mpz_class p2 = mpz_class(p) * p;
    return (pn - 1) * (pn - p) / ((p2 - 1) * (p2 - p));
}

PlaneEnumeration::PlaneEnumeration(const FieldDescriptor& gf, size_t n,
                                   unsigned long long budget)
    : field_(gf), n_(n), p_(gf.prime()), total_(0) {
    require_prime_field(gf, "PlaneEnumeration");
    if (n < 2) throw std::invalid_argument("PlaneEnumeration requires n >= 2");
    check_budget(pow_z(p_, n_), budget, "PlaneEnumeration");
    for (size_t j1 = 0; j1 + 1 < n_; ++j1)
        for (size_t j2 = j1 + 1; j2 < n_; ++j2) {
            size_t free_count = (j2 - j1 - 1) + 2 * (n_ - 1 - j2);
            mpz_class size = pow_z(p_, free_count);
            Block b{j1, j2, total_, size.get_ui()};
            blocks_.push_back(b);
            total_ += b.size;
        }
    mpz_class expect = gaussian_binomial_2(n_, p_);
    if (expect != static_cast<unsigned long>(total_))
        throw std::logic_error("plane enumeration does not match the Gaussian binomial");
}

std::pair<Vec, Vec> PlaneEnumeration::plane_at(unsigned long long idx) const {
    if (idx >= total_) throw std::out_of_range("plane index out of range");
    size_t bi = 0;
    while (bi + 1 < blocks_.size() && blocks_[bi + 1].offset <= idx) ++bi;
    const Block& b = blocks_[bi];
    unsigned long long rest = idx - b.offset;

    Vec u(n_, FieldElement::zero(field_));
    Vec v(n_, FieldElement::zero(field_));
    u[b.j1] = FieldElement::one(field_);
    v[b.j2] = FieldElement::one(field_);
    // Free positions: row u between and after the pivots (skipping j2),
    // then row v after its pivot; decoded most-significant first.
    std::vector<std::pair<int, size_t>> slots;  // (row, col); row 0 = u
    for (size_t c = b.j1 + 1; c < n_; ++c)
        if (c != b.j2) slots.emplace_back(0, c);
    for (size_t c = b.j2 + 1; c < n_; ++c) slots.emplace_back(1, c);
    unsigned long long q = rest;
    for (size_t k = slots.size(); k-- > 0;) {
        long digit = static_cast<long>(q % static_cast<unsigned long long>(p_));
        q /= static_cast<unsigned long long>(p_);
        auto [row, col] = slots[k];
        (row == 0 ? u : v)[col] = FieldElement::from_int(field_, digit);
    }
    return {std::move(u), std::move(v)};
}

std::vector<InvariantPlane> invariant_planes_bruteforce_serial(const Mat& A,
                                                               unsigned long long budget) {
    require_prime_field(A.field(), "invariant_planes_bruteforce");
    if (A.rows() != A.cols()) throw std::invalid_argument("expected a square matrix");
    check_budget(sweep_cost(A.field(), A.rows()), budget, "invariant_planes_bruteforce");
    PlaneEnumeration planes(A.field(), A.rows(), budget);
    std::vector<InvariantPlane> out;
    for (unsigned long long i = 0; i < planes.count(); ++i)
        if (auto ip = inspect_plane(A, planes, i)) out.push_back(std::move(*ip));
    return out;
}

std::vector<InvariantPlane> invariant_planes_bruteforce(const Mat& A,
                                                        unsigned long long budget,
                                                        int threads) {
    require_prime_field(A.field(), "invariant_planes_bruteforce");
    if (A.rows() != A.cols()) throw std::invalid_argument("expected a square matrix");
    check_budget(sweep_cost(A.field(), A.rows()), budget, "invariant_planes_bruteforce");
    PlaneEnumeration planes(A.field(), A.rows(), budget);
    long long total = static_cast<long long>(planes.count());
    std::vector<std::vector<InvariantPlane>> hits(static_cast<size_t>(total));
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
    for (long long i = 0; i < total; ++i) {
        if (auto ip = inspect_plane(A, planes, static_cast<unsigned long long>(i)))
            hits[static_cast<size_t>(i)].push_back(std::move(*ip));
    }
    std::vector<InvariantPlane> out;
    for (auto& h : hits)
        for (auto& ip : h) out.push_back(std::move(ip));
    return out;
}

BruteClasses super_eigenvalues_bruteforce(const Mat& A, unsigned long long budget,
                                          int threads) {
    BruteClasses out;
    std::set<SimilarityClass, SimilarityClassLess> proper, improper;
    for (const InvariantPlane& ip : invariant_planes_bruteforce(A, budget, threads))
        (ip.proper ? proper : improper).insert(ip.lambda.similarity());
    out.proper.assign(proper.begin(), proper.end());
    out.improper.assign(improper.begin(), improper.end());
    return out;
}

Mat random_matrix(const FieldDescriptor& f, size_t rows, size_t cols, std::mt19937_64& rng) {
    std::vector<FieldElement> e;
    e.reserve(rows * cols);
    for (size_t i = 0; i < rows * cols; ++i) {
        switch (f.kind()) {
            case FieldKind::PrimeField:
                e.push_back(FieldElement::from_int(
                    f, static_cast<long>(rng() % static_cast<unsigned long>(f.prime()))));
                break;
            case FieldKind::Rationals: {
                long num = static_cast<long>(rng() % 19) - 9;
                long den = static_cast<long>(rng() % 9) + 1;
                mpq_class q(num, den);
                q.canonicalize();
                e.push_back(FieldElement::from_rational(f, q));
                break;
            }
            case FieldKind::QuadraticExtension: {
                long a = static_cast<long>(rng() % 19) - 9;
                long b = static_cast<long>(rng() % 19) - 9;
                e.push_back(FieldElement::quadratic(f, a, b));
                break;
            }
        }
    }
    return Mat(f, rows, cols, std::move(e));
}

namespace {

void count_claim(ClaimCounter& c, bool ok, const Mat& A, const Mat& lambda,
                 const std::string& detail) {
    ++c.checked;
    if (!ok) {
        ++c.violations;
        if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back({A, lambda, detail});
    }
}

void merge_counter(ClaimCounter& into, const ClaimCounter& from) {
    into.checked += from.checked;
    into.violations += from.violations;
    for (const ClaimWitness& w : from.witnesses) {
        if (into.witnesses.size() >= kMaxWitnesses) break;
        into.witnesses.push_back(w);
    }
}

// Everything claim_sweep records about a single sampled matrix.
ClaimReport sweep_one(const FieldDescriptor& gf, size_t n, const Mat& A,
                      unsigned long long budget) {
    ClaimReport rep;
    rep.field = gf;
    rep.n = n;
    rep.det_test_applicable = n % 2 == 0;
    long p = gf.prime();

    std::vector<InvariantPlane> planes = invariant_planes_bruteforce_serial(A, budget);
    std::set<SimilarityClass, SimilarityClassLess> brute_all, brute_proper;
    for (const InvariantPlane& ip : planes) {
        brute_all.insert(ip.lambda.similarity());
        if (ip.proper) brute_proper.insert(ip.lambda.similarity());
    }

    auto alg = proper_super_eigenvalues(A);
    count_claim(rep.bound, alg.size() <= n / 2, A, Mat::zero(gf, 2, 2),
                "more proper classes than floor(n/2)");

    for (long pp = 0; pp < p; ++pp)
        for (long qq = 0; qq < p; ++qq)
            for (long rr = 0; rr < p; ++rr)
                for (long ss = 0; ss < p; ++ss) {
                    SuperEigenvalue L(FieldElement::from_int(gf, pp),
                                      FieldElement::from_int(gf, qq),
                                      FieldElement::from_int(gf, rr),
                                      FieldElement::from_int(gf, ss));
                    Mat lm = L.matrix();
                    SimilarityClass cls = L.similarity();
                    bool b_super = brute_all.count(cls) > 0;
                    bool b_proper = brute_proper.count(cls) > 0;

                    bool alg_proper = is_proper_super_eigenvalue(A, L);
                    count_claim(rep.theorem, alg_proper == b_proper, A, lm,
                                alg_proper ? "theorem accepts, no proper plane exists"
                                           : "proper plane exists, theorem rejects");

                    bool alg_super = is_super_eigenvalue(A, L);
                    count_claim(rep.classifier, alg_super == b_super, A, lm,
                                alg_super ? "classifier accepts, no invariant plane"
                                          : "invariant plane exists, classifier rejects");

                    FieldElement nc = necessary_condition(A, L);
                    count_claim(rep.necessity, !(alg_super && !nc.is_zero()), A, lm,
                                "super-eigenvalue with det(p_L(A)) != 0");

                    bool regular = r_eigen_solve(A, L).regular;
                    count_claim(rep.regular_equiv, regular == b_super, A, lm,
                                regular ? "regular solution, no invariant plane"
                                        : "invariant plane, no regular solution");

                    if (rep.det_test_applicable) {
                        bool dz = det_test(A, L).is_zero();
                        if (dz && b_super) ++rep.det_cells.zero_super;
                        if (dz && !b_super) ++rep.det_cells.zero_not_super;
                        if (!dz && b_super) ++rep.det_cells.nonzero_super;
                        if (!dz && !b_super) ++rep.det_cells.nonzero_not_super;
                        if (dz != b_super && rep.det_disagreements.size() < kMaxWitnesses)
                            rep.det_disagreements.push_back(
                                {A, lm, dz ? "det zero, not a super-eigenvalue"
                                           : "super-eigenvalue, det nonzero"});
                    }
                }
    return rep;
}

void merge_report(ClaimReport& into, const ClaimReport& from) {
    merge_counter(into.theorem, from.theorem);
    merge_counter(into.necessity, from.necessity);
    merge_counter(into.regular_equiv, from.regular_equiv);
    merge_counter(into.classifier, from.classifier);
    merge_counter(into.bound, from.bound);
    into.det_cells.zero_super += from.det_cells.zero_super;
    into.det_cells.zero_not_super += from.det_cells.zero_not_super;
    into.det_cells.nonzero_super += from.det_cells.nonzero_super;
    into.det_cells.nonzero_not_super += from.det_cells.nonzero_not_super;
    for (const ClaimWitness& w : from.det_disagreements) {
        if (into.det_disagreements.size() >= kMaxWitnesses) break;
        into.det_disagreements.push_back(w);
    }
}

std::vector<Mat> sweep_samples(const FieldDescriptor& gf, size_t n, size_t samples,
                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Mat> out;
    out.reserve(samples);
    for (size_t i = 0; i < samples; ++i) out.push_back(random_matrix(gf, n, n, rng));
    return out;
}

ClaimReport sweep_header(const FieldDescriptor& gf, size_t n, size_t samples,
                         std::uint64_t seed) {
    ClaimReport total;
    total.field = gf;
    total.n = n;
    total.samples = samples;
    total.seed = seed;
    total.det_test_applicable = n % 2 == 0;
    return total;
}

}  // namespace

ClaimReport claim_sweep_serial(const FieldDescriptor& gf, size_t n, size_t samples,
                               std::uint64_t seed, unsigned long long budget) {
    require_prime_field(gf, "claim_sweep");
    check_budget(sweep_cost(gf, n), budget, "claim_sweep");
    ClaimReport total = sweep_header(gf, n, samples, seed);
    for (const Mat& A : sweep_samples(gf, n, samples, seed))
        merge_report(total, sweep_one(gf, n, A, budget));
    return total;
}

ClaimReport claim_sweep(const FieldDescriptor& gf, size_t n, size_t samples,
                        std::uint64_t seed, unsigned long long budget, int threads) {
    require_prime_field(gf, "claim_sweep");
    check_budget(sweep_cost(gf, n), budget, "claim_sweep");
    ClaimReport total = sweep_header(gf, n, samples, seed);
    std::vector<Mat> mats = sweep_samples(gf, n, samples, seed);
    std::vector<ClaimReport> partial(mats.size(), total);
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
    for (long long i = 0; i < static_cast<long long>(mats.size()); ++i)
        partial[static_cast<size_t>(i)] = sweep_one(gf, n, mats[static_cast<size_t>(i)], budget);
    // Merge in sample order so the result is independent of the shard count.
    for (const ClaimReport& r : partial) merge_report(total, r);
    return total;
}

}  // namespace sev
