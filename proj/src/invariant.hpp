/*
 * invariant.hpp
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

#include "engine.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace kb {

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const noexcept { return errors_; }

private:
    std::vector<std::string> errors_;
};

struct Deltas {
    long long delta_B = 1;
    long long delta_C = 1;
    long long delta_pp = 1;
};

Deltas deltas(const CategoryParams& p);

struct InvariantReport {
    CycloNumber raw;
    InertiaTriple inertia;
    IntMatrix linking_matrix;
    int s = 0;
    int omega = 0;
    long long delta_B = 1;
    long long delta_C = 1;
    long long delta_pp = 1;
    std::optional<CycloNumber> k;
    std::optional<CycloNumber> kappa;
    std::optional<CycloNumber> value;
    std::optional<std::complex<double>> float_value;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;

    // Delta_B^b0 (Delta_C Delta'')^b+ k^s kappa^omega; nullopt if k or kappa is missing but needed.
    std::optional<CycloNumber> denominator() const;
    bool reconstruction_holds() const;
};

// Throws ValidationError on invalid diagrams; algebra-condition failures are
// reported in InvariantReport::errors with no value.
InvariantReport invariant(const Diagram& d, const EvalContext& ctx);
InvariantReport invariant(const Diagram& d);

} // namespace kb
