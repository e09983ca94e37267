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
 * Acceptance suite. Runs the ten integration criteria end to end, prints
 * one pass/fail line per criterion, and exits nonzero if any fail. All
 * comparisons are exact; the stated runtime ceilings are enforced.
 */

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sev/io.hpp"
#include "test_helpers.hpp"

using namespace sev;
using namespace sev::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string note;
};

struct Check {
    std::string failures;
    int count = 0;
    void require(bool ok, const std::string& what) {
        ++count;
        if (!ok) failures += "\n      FAILED: " + what;
    }
};

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor G3 = FieldDescriptor::prime_field(3);
const FieldDescriptor G5 = FieldDescriptor::prime_field(5);
const FieldDescriptor Q2 = FieldDescriptor::quadratic_extension(2);

// Reports saved by criterion 2 for reuse by criteria 4, 6 and 7.
std::vector<ClaimReport> g_sweeps;

Outcome criterion1() {
    Check c;
    Mat A = paper_matrix(Q2);

    c.require(charpoly(A) == t4_plus_1(Q2), "charpoly is T^4+1");

    BivarPoly F = super_char_poly(paper_matrix(Q2));
    BivarPoly t = BivarPoly::var_t(Q2), d = BivarPoly::var_d(Q2);
    BivarPoly one = BivarPoly::constant(FieldElement::one(Q2));
    BivarPoly expected = t * t * t * t -
                         BivarPoly::constant(FieldElement::from_int(Q2, 4)) * d * t * t +
                         (d * d + one) * (d * d + one);
    c.require(F == expected, "super-characteristic polynomial is t^4 - 4dt^2 + (d^2+1)^2");

    auto proper = proper_super_eigenvalues(A);
    c.require(proper.size() == 2, "exactly two proper classes");
    if (proper.size() == 2) {
        c.require(proper[0].first.trace() == FieldElement::quadratic(Q2, 0, 1) &&
                      proper[0].first.det().is_one(),
                  "first class is (sqrt(2), 1)");
        c.require(proper[1].first.trace() == FieldElement::quadratic(Q2, 0, -1) &&
                      proper[1].first.det().is_one(),
                  "second class is (-sqrt(2), 1)");

        SuperEigenvalue L = proper[0].first;
        SuperEigenvector w = proper_super_eigenvector(A, L);
        Vec pu{FieldElement::parse(Q2, "0"), FieldElement::parse(Q2, "1"),
               FieldElement::parse(Q2, "sqrt(2)"), FieldElement::parse(Q2, "1")};
        Vec pv{FieldElement::parse(Q2, "1"), FieldElement::parse(Q2, "0"),
               FieldElement::parse(Q2, "-1"), FieldElement::parse(Q2, "-sqrt(2)")};
        std::vector<Vec> ours{w.u, w.v}, paper{pu, pv};
        c.require(in_span(ours, pu) && in_span(ours, pv) && in_span(paper, w.u) &&
                      in_span(paper, w.v),
                  "constructed plane equals the displayed span (membership both ways)");
        c.require(A.apply(w.u) == vec_add(vec_scale(L.p(), w.u), vec_scale(L.q(), w.v)) &&
                      A.apply(w.v) == vec_add(vec_scale(L.r(), w.u), vec_scale(L.s(), w.v)),
                  "eigen-relations hold exactly");
    }
    return {c.failures.empty(), std::to_string(c.count) + " exact checks" + c.failures};
}

Outcome criterion2() {
    Check c;
    g_sweeps.clear();
    std::uint64_t checked = 0;
    for (size_t n : {2u, 3u, 4u}) {
        ClaimReport rep = claim_sweep(G3, n, 25, 1000 + n);
        c.require(rep.theorem.violations == 0,
                  "theorem biconditional over GF(3), n = " + std::to_string(n));
        c.require(rep.theorem.checked == 25 * 81, "all 81 candidates on 25 matrices");
        checked += rep.theorem.checked;
        g_sweeps.push_back(std::move(rep));
    }
    return {c.failures.empty(),
            std::to_string(checked) + " (A, Lambda) pairs, zero counterexamples" + c.failures};
}

Outcome criterion3() {
    Check c;
    std::mt19937_64 rng(303);
    size_t planes_checked = 0;
    auto run = [&](const FieldDescriptor& f, int samples, unsigned long long expect_planes) {
        PlaneEnumeration e(f, 4);
        c.require(e.count() == expect_planes, "plane count over " + f.name());
        c.require(gaussian_binomial_2(4, f.prime()) ==
                      static_cast<unsigned long>(e.count()),
                  "count matches the Gaussian binomial over " + f.name());
        for (int i = 0; i < samples; ++i) {
            Mat A = random_matrix(f, 4, 4, rng);
            BruteClasses brute = super_eigenvalues_bruteforce(A);
            std::vector<SimilarityClass> alg;
            for (const auto& [L, mult] : proper_super_eigenvalues(A))
                alg.push_back(L.similarity());
            std::sort(alg.begin(), alg.end(), SimilarityClassLess{});
            c.require(alg == brute.proper,
                      "proper classes from factorization equal brute force over " + f.name());
            planes_checked += e.count();
        }
    };
    run(G3, 25, 130);
    run(G5, 10, 806);
    return {c.failures.empty(),
            std::to_string(planes_checked) + " planes enumerated, zero mismatches" + c.failures};
}

Outcome criterion4() {
    Check c;
    // Criterion-2 sweeps carry the necessity counters.
    for (const ClaimReport& rep : g_sweeps) {
        c.require(rep.necessity.violations == 0,
                  "necessity in the GF(3) sweep, n = " + std::to_string(rep.n));
    }
    // Criterion-3 style check: every invariant plane's super-eigenvalue
    // satisfies det(p_L(A)) = 0, for fresh samples over both fields.
    std::mt19937_64 rng(404);
    for (const FieldDescriptor& f : {G3, G5}) {
        for (int i = 0; i < 5; ++i) {
            Mat A = random_matrix(f, 4, 4, rng);
            for (const InvariantPlane& ip : invariant_planes_bruteforce(A))
                c.require(necessary_condition(A, ip.lambda).is_zero(),
                          "det(p_L(A)) = 0 on an invariant plane over " + f.name());
        }
    }
    return {c.failures.empty(), std::to_string(c.count) + " necessity checks" + c.failures};
}

Outcome criterion5() {
    Check c;
    Mat D = Mat::from_ints(Q, {{1, 0}, {0, 2}});
    SuperEigenvalue L(Mat::from_ints(Q, {{1, 0}, {0, 5}}));
    c.require(necessary_condition(D, L).is_zero(), "necessary condition vanishes");
    c.require(!is_super_eigenvalue(D, L), "diag(1,5) is not a super-eigenvalue of diag(1,2)");
    return {c.failures.empty(), "converse failure reproduced" + c.failures};
}

Outcome criterion6() {
    Check c;
    // The claims command must generate the det-test agreement matrix and
    // show zero violations of the proved claims. Run it end to end.
    for (size_t n : {2u, 4u}) {
        std::string cmd = std::string(SUPEREIG_CLI_PATH) + " claims --field gf:3 -n " +
                          std::to_string(n) + " --samples 8 --seed 66";
        FILE* pipe = popen(cmd.c_str(), "r");
        c.require(pipe != nullptr, "claims command starts");
        if (!pipe) continue;
        std::string out;
        char buf[4096];
        size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        int status = WEXITSTATUS(pclose(pipe));
        c.require(status == 0, "claims command exits 0 (no proved-claim violations)");
        nlohmann::json rep = nlohmann::json::parse(out);
        c.require(rep.contains("det_test_agreement"),
                  "agreement matrix present for n = " + std::to_string(n));
        for (const char* claim : {"theorem_biconditional", "necessity",
                                  "regular_solution_equivalence", "count_bound"})
            c.require(rep["claims"][claim]["violations"] == 0,
                      std::string(claim) + " shows zero violations");
    }

    // The recorded candidate counterexample's two independent facts.
    Mat B = Mat::from_ints(Q, {{1, 1}, {-2, -1}});
    SuperEigenvalue rot(Mat::from_ints(Q, {{0, -1}, {1, 0}}));
    c.require(is_proper_super_eigenvalue(B, rot),
              "[[0,-1],[1,0]] is a proper super-eigenvalue of [[1,1],[-2,-1]]");
    c.require(det_test(B, rot) == FieldElement::from_int(Q, -1), "det_test equals -1");
    return {c.failures.empty(), std::to_string(c.count) + " report checks" + c.failures};
}

Outcome criterion7() {
    Check c;
    for (const ClaimReport& rep : g_sweeps)
        c.require(rep.bound.violations == 0, "bound in sweep n = " + std::to_string(rep.n));
    std::mt19937_64 rng(707);
    for (size_t n : {2u, 3u, 4u, 5u, 6u})
        for (int i = 0; i < 10; ++i)
            c.require(proper_super_eigenvalues(random_matrix(G3, n, n, rng)).size() <= n / 2,
                      "list length <= floor(n/2)");

    for (const FieldDescriptor& f : {Q2, G3}) {
        auto comps = primary_components(paper_matrix(f));
        c.require(comps.size() == 2, "two primary components over " + f.name());
        if (comps.size() == 2) {
            c.require(comps[0].basis.size() == 2 && comps[1].basis.size() == 2,
                      "each component is 2-dimensional over " + f.name());
            std::vector<Vec> all = comps[0].basis;
            all.insert(all.end(), comps[1].basis.begin(), comps[1].basis.end());
            c.require(rank(columns_matrix(f, all)) == 4,
                      "components intersect trivially and dimensions sum to 4 over " + f.name());
        }
    }
    return {c.failures.empty(), std::to_string(c.count) + " bound/decomposition checks" + c.failures};
}

Outcome criterion8() {
    Check c;
    std::mt19937_64 rng(808);
    size_t total = 0;
    for (const FieldDescriptor& f : {Q, G3, G5, Q2}) {
        for (int i = 0; i < 1000; ++i) {
            UniPoly p = random_poly(f, 8, rng);
            if (p.degree() < 1) continue;
            auto records = factor(p, 88);
            UniPoly prod = UniPoly::constant(p.leading());
            for (const FactorRecord& r : records)
                prod *= pow(r.factor, static_cast<unsigned>(r.multiplicity));
            if (!(prod == p)) {
                c.require(false, "refactoring mismatch over " + f.name() + " on " + p.to_string());
                break;
            }
            ++total;
        }
    }

    auto q = factor(t4_plus_1(Q));
    c.require(q.size() == 1 && q[0].factor == t4_plus_1(Q), "T^4+1 irreducible over Q");
    auto q2 = factor(t4_plus_1(Q2));
    c.require(q2.size() == 2 &&
                  q2[0].factor == UniPoly::parse(Q2, "T^2-sqrt(2)*T+1") &&
                  q2[1].factor == UniPoly::parse(Q2, "T^2+sqrt(2)*T+1"),
              "T^4+1 = (T^2-sqrt(2)T+1)(T^2+sqrt(2)T+1) over Q(sqrt(2))");
    auto g3 = factor(t4_plus_1(G3));
    c.require(g3.size() == 2 && g3[0].factor == UniPoly::parse(G3, "T^2+T+2") &&
                  g3[1].factor == UniPoly::parse(G3, "T^2+2*T+2"),
              "T^4+1 = (T^2+T+2)(T^2+2T+2) over GF(3)");
    auto g5 = factor(t4_plus_1(G5));
    c.require(g5.size() == 2 && g5[0].factor == UniPoly::parse(G5, "T^2+2") &&
                  g5[1].factor == UniPoly::parse(G5, "T^2+3"),
              "T^4+1 = (T^2+2)(T^2+3) over GF(5)");
    return {c.failures.empty(),
            std::to_string(total) + " random polynomials refactored exactly" + c.failures};
}

Outcome criterion9() {
    Check c;
    std::mt19937_64 rng(909);
    for (size_t n : {2u, 4u, 6u}) {
        for (int i = 0; i < 100; ++i) {
            Mat A = random_matrix(G3, n, n, rng);
            c.require(untilde(tilde(A)) == A, "untilde of tilde");
            c.require(alpha(alpha_inv(A)) == A, "alpha of alpha_inv");
            Mat B = random_matrix(G3, n, n, rng);
            c.require(alpha(alpha_inv(A) * alpha_inv(B)) == A * B, "alpha multiplicative");
            Mat X = x_matrix(A);
            bool diag_ok = X.rows() == 2 * n;
            for (size_t r = 0; r < n && diag_ok; ++r)
                for (size_t s = 0; s < n && diag_ok; ++s)
                    diag_ok = X.at(r, s) == A.at(r, s) && X.at(n + r, n + s) == A.at(r, s) &&
                              X.at(r, n + s).is_zero() && X.at(n + r, s).is_zero();
            c.require(diag_ok, "x_matrix is diag(A, A)");
            Mat L = random_matrix(G3, 2, 2, rng);
            Vec u, v;
            for (size_t k = 0; k < n; ++k) {
                u.push_back(random_element(G3, rng));
                v.push_back(random_element(G3, rng));
            }
            ModulePair w{u, v};
            c.require(f_apply(A, r_action(L, w)) == r_action(L, f_apply(A, w)),
                      "f_apply commutes with the R-action");
        }
    }
    return {c.failures.empty(), std::to_string(c.count) + " structure checks, all exact" + c.failures};
}

Outcome criterion10() {
    Check c;
    Mat A = paper_matrix(G5);
    auto list = proper_super_eigenvalues(A);
    c.require(list.size() == 2, "the cyclic-sign matrix has two proper classes over GF(5)");
    SuperEigenvalue L = list[0].first;
    SuperEigenvector w = proper_super_eigenvector(A, L);
    SimilarityClass cls = L.similarity();
    std::mt19937_64 rng(1010);
    int done = 0;
    while (done < 500) {
        FieldElement a = random_element(G5, rng), b = random_element(G5, rng);
        FieldElement cc = random_element(G5, rng), dd = random_element(G5, rng);
        if ((a * dd - b * cc).is_zero()) continue;
        Vec u2 = vec_add(vec_scale(a, w.u), vec_scale(b, w.v));
        Vec v2 = vec_add(vec_scale(cc, w.u), vec_scale(dd, w.v));
        auto L2 = verify_invariant_subspace(A, u2, v2);
        c.require(L2.has_value() && L2->similarity() == cls,
                  "recovered class differs under a basis change");
        ++done;
    }
    return {c.failures.empty(), "500 basis changes, zero exceptions" + c.failures};
}

struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "worked example end-to-end over Q(sqrt(2))", 1.0, criterion1},
        {2, "theorem biconditional, exhaustive candidates over GF(3)", 60.0, criterion2},
        {3, "oracle equivalence over GF(3) and GF(5)", 300.0, criterion3},
        {4, "necessity of det(p_L(A)) = 0", 300.0, criterion4},
        {5, "converse failure of the necessary condition", 60.0, criterion5},
        {6, "claim-check report and the det-test counterexample", 300.0, criterion6},
        {7, "count bound and primary decomposition", 300.0, criterion7},
        {8, "factorization self-check, 1000 polynomials per field", 120.0, criterion8},
        {9, "module structure round trips", 300.0, criterion9},
        {10, "similarity covariance under basis changes", 300.0, criterion10},
    };

    int failed = 0;
    for (const Criterion& cr : criteria) {
        auto t0 = Clock::now();
        Outcome out;
        try {
            out = cr.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_time = secs < cr.limit_seconds;
        bool pass = out.pass && in_time;
        std::printf("[%s] criterion %2d: %s (%.2fs%s) — %s\n", pass ? "PASS" : "FAIL",
                    cr.number, cr.title, secs,
                    in_time ? "" : (" > limit " + std::to_string(cr.limit_seconds) + "s").c_str(),
                    out.note.c_str());
        if (!pass) ++failed;
    }
    if (failed) {
        std::printf("%d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
