// Copyright 2026 The qcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCOH_STATE_JSON_HPP
#define QCOH_STATE_JSON_HPP

#include <cmath>
#include <fstream>
#include <string>

#include <json.hpp>

#include "qcoh/errors.hpp"
#include "qcoh/matrix.hpp"
#include "qcoh/state.hpp"

namespace qcoh {

/// State file format: a JSON object with key "rho" holding a 4x4 array
/// of [re, im] pairs, row-major, basis order |00>,|01>,|10>,|11>.
/// Extra keys are ignored, so documents produced by the transform
/// command parse as state files too.

inline nlohmann::json matrix_to_json(const Mat4& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < 4; ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

inline Mat4 matrix_from_json(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 4) {
        throw parse_error(what + ": wrong shape, expected a 4x4 array of [re, im] pairs");
    }
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != 4) {
            throw parse_error(what + ": wrong shape, row " + std::to_string(i) +
                              " is not an array of 4 entries");
        }
        for (std::size_t k = 0; k < 4; ++k) {
            const auto& e = row[k];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw parse_error(what + ": entry [" + std::to_string(i) + "][" +
                                  std::to_string(k) + "] is not a [re, im] pair");
            }
            const double re = e[0].get<double>();
            const double im = e[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im)) {
                throw parse_error(what + ": non-finite entry at [" + std::to_string(i) + "][" +
                                  std::to_string(k) + "]");
            }
            m(i, k) = cplx(re, im);
        }
    }
    return m;
}

inline nlohmann::json state_to_json(const DensityMatrix& rho) {
    return nlohmann::json{{"rho", matrix_to_json(rho.matrix())}};
}

/// Parses and validates a state document; throws parse_error on shape
/// problems and the validate() errors on physical ones.
inline DensityMatrix state_from_json(const nlohmann::json& root) {
    if (!root.is_object() || !root.contains("rho")) {
        throw parse_error("state file: root must be a JSON object with a \"rho\" key");
    }
    return validate(matrix_from_json(root["rho"], "rho"));
}

inline DensityMatrix load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open state file: " + path);
    nlohmann::json root;
    try {
        in >> root;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("state file " + path + ": invalid JSON: " + e.what());
    }
    return state_from_json(root);
}

}  // namespace qcoh

#endif  // QCOH_STATE_JSON_HPP
