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
 * supereig -- batch front end for exact 2-dimensional invariant subspace
 * computations.
 *
 *   compute    charpoly, factors, proper super-eigenvalues with planes
 *   verify     plane (u, v) -> super-eigenvalue, if invariant
 *   test       candidate 2x2 -> proper / improper / none, with certificates
 *   superchar  F(t, d) = det(A^2 - tA + dI)
 *   tilde/hat/xmatrix   the Mat_2(F)-module views of A
 *   factor     univariate polynomial factorization
 *   oracle     brute-force plane enumeration for one matrix over GF(p)
 *   claims     claim-check sweep over random matrices and all 2x2 candidates
 *
 * Exit status: 0 on success, 1 when `claims` finds a proved-claim
 * violation, 2 on parse or validation errors.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "sev/io.hpp"

namespace {

using nlohmann::json;
using namespace sev;

FieldDescriptor parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return FieldDescriptor::rationals();
    if (s.rfind("gf:", 0) == 0) return FieldDescriptor::prime_field(std::stol(s.substr(3)));
    if (s.rfind("qsqrt:", 0) == 0)
        return FieldDescriptor::quadratic_extension(std::stol(s.substr(6)));
    throw std::invalid_argument("bad --field '" + s + "' (expected q | gf:<p> | qsqrt:<d>)");
}

json read_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return json::parse(in);
}

void emit(const json& j, const std::string& format, const std::string& text) {
    if (format == "text")
        std::cout << text;
    else
        std::cout << j.dump(2) << "\n";
}

struct CommonOpts {
    std::string field;
    std::string format = "json";
    std::uint64_t seed = 0;
    int threads = 0;
    unsigned long long budget = kDefaultOracleBudget;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_field = true) {
    if (with_field)
        cmd->add_option("--field", o.field, "field: q | gf:<p> | qsqrt:<d>")->required();
    cmd->add_option("--format", o.format, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--seed", o.seed, "seed for randomized algorithms");
}

int run_compute(const CommonOpts& o, const std::string& matrix_path) {
    FieldDescriptor f = parse_field(o.field);
    Mat A = mat_from_json(read_json(matrix_path), f);
    UniPoly cp = charpoly(A);
    auto factors = factor(cp, o.seed);
    json proper = json::array();
    std::string text = "charpoly: " + cp.to_string() + "\n";
    for (const auto& [L, mult] : proper_super_eigenvalues(A, o.seed)) {
        SuperEigenvector w = proper_super_eigenvector(A, L);
        json rec{{"class", to_json(L.similarity())},
                 {"companion", to_json(L)},
                 {"multiplicity", mult},
                 {"plane", plane_to_json(w.u, w.v)}};
        proper.push_back(std::move(rec));
        text += "proper class: trace " + L.trace().to_string() + ", det " +
                L.det().to_string() + ", multiplicity " + std::to_string(mult) + "\n";
    }
    json out{{"field", to_json(f)},
             {"charpoly", cp.to_string()},
             {"factors", to_json(factors)},
             {"proper_super_eigenvalues", std::move(proper)}};
    emit(out, o.format, text);
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& matrix_path,
               const std::string& plane_path) {
    FieldDescriptor f = parse_field(o.field);
    Mat A = mat_from_json(read_json(matrix_path), f);
    json pj = read_json(plane_path);
    Vec u = vec_from_json(pj.at("u"), f);
    Vec v = vec_from_json(pj.at("v"), f);
    auto L = verify_invariant_subspace(A, u, v);
    if (!L) {
        emit(json{{"invariant", false}}, o.format, "not an invariant plane\n");
        return 0;
    }
    json out{{"invariant", true},
             {"lambda", to_json(*L)},
             {"class", to_json(L->similarity())}};
    emit(out, o.format, render_text(L->matrix()));
    return 0;
}

int run_test(const CommonOpts& o, const std::string& matrix_path,
             const std::string& lambda_path) {
    FieldDescriptor f = parse_field(o.field);
    Mat A = mat_from_json(read_json(matrix_path), f);
    Mat lm = mat_from_json(read_json(lambda_path), f);
    SuperEigenvalue L(lm);
    FieldElement nc = necessary_condition(A, L);
    json out{{"lambda", to_json(L)},
             {"class", to_json(L.similarity())},
             {"necessary_condition", nc.to_string()}};
    std::string status;
    if (is_proper_super_eigenvalue(A, L)) {
        status = "proper";
        SuperEigenvector w = proper_super_eigenvector(A, L);
        out["plane"] = plane_to_json(w.u, w.v);
    } else if (is_super_eigenvalue(A, L)) {
        status = "improper";
    } else {
        status = "none";
    }
    out["status"] = status;
    emit(out, o.format, status + " (necessary condition " + nc.to_string() + ")\n");
    return 0;
}

int run_superchar(const CommonOpts& o, const std::string& matrix_path) {
    FieldDescriptor f = parse_field(o.field);
    Mat A = mat_from_json(read_json(matrix_path), f);
    BivarPoly F = super_char_poly(A);
    emit(to_json(F), o.format, F.to_string() + "\n");
    return 0;
}

int run_block_view(const CommonOpts& o, const std::string& matrix_path,
                   const std::string& which) {
    FieldDescriptor f = parse_field(o.field);
    Mat A = mat_from_json(read_json(matrix_path), f);
    if (which == "tilde") {
        RMat M = tilde(A);
        emit(to_json(M), o.format, render_text(alpha(M)));
        return 0;
    }
    Mat out = which == "hat" ? hat(A) : x_matrix(A);
    emit(to_json(out), o.format, render_text(out));
    return 0;
}

int run_factor(const CommonOpts& o, const std::string& poly_text) {
    FieldDescriptor f = parse_field(o.field);
    UniPoly p = UniPoly::parse(f, poly_text);
    auto factors = factor(p, o.seed);
    std::string text;
    for (const FactorRecord& r : factors)
        text += "(" + r.factor.to_string() + ")^" + std::to_string(r.multiplicity) + "\n";
    json out{{"field", to_json(f)},
             {"input", p.to_string()},
             {"leading", p.is_zero() ? "0" : p.leading().to_string()},
             {"factors", to_json(factors)}};
    emit(out, o.format, text);
    return 0;
}

int run_oracle(const CommonOpts& o, const std::string& matrix_path) {
    FieldDescriptor f = parse_field(o.field);
    Mat A = mat_from_json(read_json(matrix_path), f);
    auto planes = invariant_planes_bruteforce(A, o.budget, o.threads);
    BruteClasses classes;
    {
        std::set<SimilarityClass, SimilarityClassLess> pr, im;
        for (const InvariantPlane& ip : planes)
            (ip.proper ? pr : im).insert(ip.lambda.similarity());
        classes.proper.assign(pr.begin(), pr.end());
        classes.improper.assign(im.begin(), im.end());
    }
    PlaneEnumeration all(f, A.rows(), o.budget);
    json jplanes = json::array();
    for (const InvariantPlane& ip : planes)
        jplanes.push_back(json{{"plane", plane_to_json(ip.u, ip.v)},
                               {"lambda", to_json(ip.lambda)},
                               {"class", to_json(ip.lambda.similarity())},
                               {"proper", ip.proper}});
    json jproper = json::array(), jimproper = json::array();
    for (const SimilarityClass& c : classes.proper) jproper.push_back(to_json(c));
    for (const SimilarityClass& c : classes.improper) jimproper.push_back(to_json(c));
    json out{{"field", to_json(f)},
             {"n", A.rows()},
             {"plane_count", all.count()},
             {"gaussian_binomial", gaussian_binomial_2(A.rows(), f.prime()).get_str()},
             {"invariant_planes", std::move(jplanes)},
             {"classes", json{{"proper", std::move(jproper)}, {"improper", std::move(jimproper)}}}};
    std::string text = std::to_string(planes.size()) + " invariant planes out of " +
                       std::to_string(all.count()) + "\n";
    emit(out, o.format, text);
    return 0;
}

int run_claims(const CommonOpts& o, size_t n, size_t samples) {
    FieldDescriptor f = parse_field(o.field);
    ClaimReport rep = claim_sweep(f, n, samples, o.seed, o.budget, o.threads);
    std::string text =
        "theorem violations: " + std::to_string(rep.theorem.violations) +
        "\nnecessity violations: " + std::to_string(rep.necessity.violations) +
        "\nregular-solution violations: " + std::to_string(rep.regular_equiv.violations) +
        "\nclassifier violations: " + std::to_string(rep.classifier.violations) +
        "\nbound violations: " + std::to_string(rep.bound.violations) + "\n";
    emit(to_json(rep), o.format, text);
    return rep.proved_violations() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-dimensional invariant subspaces and super-eigenvalues"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string matrix_path, plane_path, lambda_path, poly_text;
    size_t n = 4, samples = 10;

    CLI::App* c_compute = app.add_subcommand("compute", "charpoly, factors, proper classes, planes");
    add_common(c_compute, o);
    c_compute->add_option("matrix", matrix_path, "matrix JSON file ('-' for stdin)")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "plane -> super-eigenvalue");
    add_common(c_verify, o);
    c_verify->add_option("matrix", matrix_path)->required();
    c_verify->add_option("--plane", plane_path, "JSON {\"u\":[...],\"v\":[...]}")->required();

    CLI::App* c_test = app.add_subcommand("test", "candidate -> proper/improper/none");
    add_common(c_test, o);
    c_test->add_option("matrix", matrix_path)->required();
    c_test->add_option("--lambda", lambda_path, "2x2 matrix JSON")->required();

    CLI::App* c_superchar = app.add_subcommand("superchar", "F(t,d) = det(A^2 - tA + dI)");
    add_common(c_superchar, o);
    c_superchar->add_option("matrix", matrix_path)->required();

    CLI::App* c_tilde = app.add_subcommand("tilde", "k x k block matrix over Mat_2(F)");
    add_common(c_tilde, o);
    c_tilde->add_option("matrix", matrix_path)->required();

    CLI::App* c_hat = app.add_subcommand("hat", "alpha(tilde(A))");
    add_common(c_hat, o);
    c_hat->add_option("matrix", matrix_path)->required();

    CLI::App* c_xmatrix = app.add_subcommand("xmatrix", "matrix of f_A in the standard F-basis");
    add_common(c_xmatrix, o);
    c_xmatrix->add_option("matrix", matrix_path)->required();

    CLI::App* c_factor = app.add_subcommand("factor", "irreducible factorization");
    add_common(c_factor, o);
    c_factor->add_option("--poly", poly_text, "polynomial, e.g. \"T^4+1\"")->required();

    CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force planes of one matrix");
    add_common(c_oracle, o);
    c_oracle->add_option("matrix", matrix_path)->required();
    c_oracle->add_option("--threads", o.threads, "0 = all cores");
    c_oracle->add_option("--budget", o.budget, "operation ceiling");

    CLI::App* c_claims = app.add_subcommand("claims", "claim-check sweep");
    add_common(c_claims, o);
    c_claims->add_option("-n,--dimension", n, "matrix size")->required();
    c_claims->add_option("--samples", samples, "number of random matrices");
    c_claims->add_option("--threads", o.threads, "0 = all cores");
    c_claims->add_option("--budget", o.budget, "operation ceiling");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_compute->parsed()) return run_compute(o, matrix_path);
        if (c_verify->parsed()) return run_verify(o, matrix_path, plane_path);
        if (c_test->parsed()) return run_test(o, matrix_path, lambda_path);
        if (c_superchar->parsed()) return run_superchar(o, matrix_path);
        if (c_tilde->parsed()) return run_block_view(o, matrix_path, "tilde");
        if (c_hat->parsed()) return run_block_view(o, matrix_path, "hat");
        if (c_xmatrix->parsed()) return run_block_view(o, matrix_path, "xmatrix");
        if (c_factor->parsed()) return run_factor(o, poly_text);
        if (c_oracle->parsed()) return run_oracle(o, matrix_path);
        if (c_claims->parsed()) return run_claims(o, n, samples);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
