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
 * @file io.hpp
 * @brief JSON wire formats. Field descriptors are {"kind":"q"} |
 *        {"kind":"gf","p":3} | {"kind":"qsqrt","d":2}; matrices are
 *        {"field": <descriptor>, "rows": [[<element strings>]]}; all
 *        numeric payloads are exact element strings, never decimals.
 */

#ifndef SEV_IO_HPP
#define SEV_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sev/matrix.hpp"
#include "sev/oracle.hpp"
#include "sev/poly.hpp"
#include "sev/rmodule.hpp"
#include "sev/supereig.hpp"

namespace sev {

nlohmann::json to_json(const FieldDescriptor& f);
FieldDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Mat& m);
/// Accepts {"field":..., "rows":[[...]]} or a bare [[...]] row array (the
/// field then comes from `expect`). When both are present they must agree.
Mat mat_from_json(const nlohmann::json& j,
                  const std::optional<FieldDescriptor>& expect = std::nullopt);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j, const FieldDescriptor& f);

nlohmann::json to_json(const SimilarityClass& c);
nlohmann::json to_json(const BivarPoly& p);  // {"vars":["t","d"],"coeffs":[[...]]}
nlohmann::json to_json(const std::vector<FactorRecord>& factors);
nlohmann::json to_json(const RMat& m);  // {"k":...,"blocks":[[[..2x2..],...],...]}
nlohmann::json to_json(const SuperEigenvalue& L);
nlohmann::json plane_to_json(const Vec& u, const Vec& v);
nlohmann::json to_json(const REigenSolution& sol);
nlohmann::json to_json(const ClaimReport& rep);

/// Bracketed-row rendering for text output.
std::string render_text(const Mat& m);

}  // namespace sev

#endif
