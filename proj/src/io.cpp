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

#include "sev/io.hpp"

#include <stdexcept>

namespace sev {

using nlohmann::json;

json to_json(const FieldDescriptor& f) {
    switch (f.kind()) {
        case FieldKind::Rationals: return json{{"kind", "q"}};
        case FieldKind::PrimeField: return json{{"kind", "gf"}, {"p", f.prime()}};
        case FieldKind::QuadraticExtension:
            return json{{"kind", "qsqrt"}, {"d", f.radicand()}};
    }
    throw std::logic_error("bad field kind");
}

FieldDescriptor descriptor_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "q") return FieldDescriptor::rationals();
    if (kind == "gf") return FieldDescriptor::prime_field(j.at("p").get<long>());
    if (kind == "qsqrt") return FieldDescriptor::quadratic_extension(j.at("d").get<long>());
    throw std::invalid_argument("unknown field kind '" + kind + "'");
}

json to_json(const Mat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"field", to_json(m.field())}, {"rows", std::move(rows)}};
}

Mat mat_from_json(const json& j, const std::optional<FieldDescriptor>& expect) {
    const json* rows = nullptr;
    std::optional<FieldDescriptor> f = expect;
    if (j.is_array()) {
        rows = &j;
    } else {
        rows = &j.at("rows");
        if (j.contains("field")) {
            FieldDescriptor jf = descriptor_from_json(j.at("field"));
            if (f && !(*f == jf))
                throw std::invalid_argument("matrix field " + jf.name() +
                                            " does not match expected " + f->name());
            f = jf;
        }
    }
    if (!f) throw std::invalid_argument("matrix JSON carries no field descriptor");
    size_t r = rows->size();
    size_t c = r == 0 ? 0 : (*rows)[0].size();
    std::vector<FieldElement> e;
    e.reserve(r * c);
    for (const json& row : *rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
        for (const json& cell : row) {
            if (cell.is_number_integer())
                e.push_back(FieldElement::from_int(*f, cell.get<long>()));
            else
                e.push_back(FieldElement::parse(*f, cell.get<std::string>()));
        }
    }
    return Mat(*f, r, c, std::move(e));
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const FieldElement& e : v) out.push_back(e.to_string());
    return out;
}

Vec vec_from_json(const json& j, const FieldDescriptor& f) {
    Vec out;
    for (const json& cell : j) {
        if (cell.is_number_integer())
            out.push_back(FieldElement::from_int(f, cell.get<long>()));
        else
            out.push_back(FieldElement::parse(f, cell.get<std::string>()));
    }
    return out;
}

json to_json(const SimilarityClass& c) {
    return json{{"trace", c.trace.to_string()},
                {"det", c.det.to_string()},
                {"tag", tag_name(c.tag)}};
}

json to_json(const BivarPoly& p) {
    json coeffs = json::array();
    for (int i = 0; i <= std::max(p.degree_t(), 0); ++i) {
        json row = json::array();
        for (int j = 0; j <= std::max(p.degree_d(), 0); ++j)
            row.push_back(p.coeff(static_cast<size_t>(i), static_cast<size_t>(j)).to_string());
        coeffs.push_back(std::move(row));
    }
    return json{{"vars", json::array({"t", "d"})}, {"coeffs", std::move(coeffs)}};
}

json to_json(const std::vector<FactorRecord>& factors) {
    json out = json::array();
    for (const FactorRecord& r : factors)
        out.push_back(json{{"factor", r.factor.to_string()}, {"multiplicity", r.multiplicity}});
    return out;
}

json to_json(const RMat& m) {
    json blocks = json::array();
    for (size_t i = 0; i < m.k(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.k(); ++j) {
            const Mat& b = m.block(i, j);
            row.push_back(json::array({json::array({b.at(0, 0).to_string(), b.at(0, 1).to_string()}),
                                       json::array({b.at(1, 0).to_string(), b.at(1, 1).to_string()})}));
        }
        blocks.push_back(std::move(row));
    }
    return json{{"k", m.k()}, {"blocks", std::move(blocks)}};
}

json to_json(const SuperEigenvalue& L) {
    return json::array({json::array({L.p().to_string(), L.q().to_string()}),
                        json::array({L.r().to_string(), L.s().to_string()})});
}

json plane_to_json(const Vec& u, const Vec& v) {
    return json{{"u", vec_to_json(u)}, {"v", vec_to_json(v)}};
}

json to_json(const REigenSolution& sol) {
    json basis = json::array();
    for (const ModulePair& w : sol.basis) basis.push_back(plane_to_json(w.u, w.v));
    json out{{"basis", std::move(basis)},
             {"regular", sol.regular},
             {"irregular_only", !sol.regular && !sol.basis.empty()}};
    if (sol.witness) out["witness"] = plane_to_json(sol.witness->u, sol.witness->v);
    return out;
}

namespace {

json witness_to_json(const ClaimWitness& w) {
    return json{{"A", to_json(w.A)}, {"lambda", to_json(w.lambda)}, {"detail", w.detail}};
}

json counter_to_json(const ClaimCounter& c) {
    json witnesses = json::array();
    for (const ClaimWitness& w : c.witnesses) witnesses.push_back(witness_to_json(w));
    return json{{"checked", c.checked},
                {"confirmations", c.confirmations()},
                {"violations", c.violations},
                {"witnesses", std::move(witnesses)}};
}

}  // namespace

json to_json(const ClaimReport& rep) {
    json claims{{"theorem_biconditional", counter_to_json(rep.theorem)},
                {"necessity", counter_to_json(rep.necessity)},
                {"regular_solution_equivalence", counter_to_json(rep.regular_equiv)},
                {"improper_classifier", counter_to_json(rep.classifier)},
                {"count_bound", counter_to_json(rep.bound)}};
    json out{{"field", to_json(rep.field)},
             {"n", rep.n},
             {"samples", rep.samples},
             {"seed", rep.seed},
             {"claims", std::move(claims)},
             {"proved_violations", rep.proved_violations()}};
    if (rep.det_test_applicable) {
        json dis = json::array();
        for (const ClaimWitness& w : rep.det_disagreements) dis.push_back(witness_to_json(w));
        out["det_test_agreement"] = json{
            {"zero_and_super", rep.det_cells.zero_super},
            {"zero_not_super", rep.det_cells.zero_not_super},
            {"nonzero_and_super", rep.det_cells.nonzero_super},
            {"nonzero_not_super", rep.det_cells.nonzero_not_super},
            {"disagreements", std::move(dis)}};
    }
    return out;
}

std::string render_text(const Mat& m) {
    std::string out;
    for (size_t i = 0; i < m.rows(); ++i) {
        out += '[';
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m.at(i, j).to_string();
        }
        out += "]\n";
    }
    return out;
}

}  // namespace sev
