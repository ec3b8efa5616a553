/*
 * engine.hpp
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

#include "category.hpp"
#include "diagram.hpp"

#include <cstddef>
#include <optional>

namespace kb {

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public EvalError {
public:
    using EvalError::EvalError;
};

// Reads KB_STATE_BUDGET; falls back to 4000000 states.
size_t default_budget();

struct EvalContext {
    CategoryParams params;
    std::optional<FrobeniusData> frob;
    std::optional<ModuleData> mod;
    size_t budget = 4000000;

    // Builds the algebra data named by the header (throws CategoryError on bad c/g).
    static EvalContext from_header(const Header& h, size_t budget = default_budget());

    GradedObject object_for(const Wire& w) const;
    ObjectList objects_for(const std::vector<Wire>& ws) const;
};

GradedMap cell_map(const Cell& cell, const std::vector<Wire>& inputs, const EvalContext& ctx);

CycloNumber eval_closed(const Diagram& d, const EvalContext& ctx);
CycloNumber eval_closed(const Diagram& d);

// Open fragment with declared input boundary.
GradedMap eval_morphism(const std::vector<Row>& rows, const EvalContext& ctx, const std::vector<Wire>& input);

// Independent oracle for band-free diagrams: sum over simple-degree assignments.
CycloNumber statesum_eval(const Diagram& d, const EvalContext& ctx);

// Upper bound on the number of basis states at the widest level (degree-blind).
double estimated_state_count(const Diagram& d, const EvalContext& ctx);

} // namespace kb
