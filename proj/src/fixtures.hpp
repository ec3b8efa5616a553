/*
 * fixtures.hpp
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

#include "diagram.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kb {

class UnknownFixture : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Fixture {
    std::string name;
    std::string text;
    std::optional<CycloNumber> expected_raw;
    std::optional<CycloNumber> expected_value;
    // Where the expectations come from.
    std::string note;
    // The published number and our computation disagree; see note.
    bool disputed = false;

    Diagram diagram() const { return parse_diagram(text); }
};

const std::vector<std::string>& fixture_names();
Fixture fixture(const std::string& name);

} // namespace kb
