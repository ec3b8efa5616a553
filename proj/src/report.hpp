/*
 * report.hpp
 *
 * This source file is part of the kirbyband project.
 *
 * Copyright 2026 The kirbyband Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "moves.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace kb {

using json = nlohmann::ordered_json;

// {"coeffs": ["p/q", ...], "text": "...", "float": "a+bi"}
json cyclo_json(const CycloNumber& x);
json inertia_json(const InertiaTriple& t);
json matrix_json(const IntMatrix& m);

json eval_json(const Diagram& d, const CycloNumber& raw);
json invariant_json(const InvariantReport& r);

// Category facts; adds a "diagram" section when d is given.
json info_json(const CategoryParams& p, const Diagram* d);

// Axiom checks and the scalar / swim conditions. Sets `passed` to false if any
// check or condition fails.
json verify_json(const CategoryParams& p, int c, int g, bool& passed);

json move_json(const MoveSpec& m);
json fuzz_json(const FuzzResult& r, uint64_t seed, int steps, const InvarianceReport& inv);

json error_json(const std::string& kind, const std::string& message, const json& details = json::array());

} // namespace kb
