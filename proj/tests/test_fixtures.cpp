/*
 * test_fixtures.cpp
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

#include "fixtures.hpp"
#include "invariant.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace kb;

TEST_CASE("fixture catalogue") {
    const auto& names = fixture_names();
    CHECK(names.size() == 23);
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    CHECK(names.front() == "empty");
    for (const char* n : {"cp2", "cp2_bar", "s2xc", "torus", "spun_trefoil", "hopf_stab", "blank_stab", "nE_0", "nE_5",
                          "encircle_0", "encircle_5", "unknot_sf_3"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK_THROWS_AS(fixture("nE_6"), UnknownFixture);
    CHECK_THROWS_AS(fixture("encircle_9"), UnknownFixture);
    CHECK_THROWS_AS(fixture(""), UnknownFixture);
}

TEST_CASE("every fixture parses, validates and round-trips") {
    for (const auto& name : fixture_names()) {
        Fixture f = fixture(name);
        INFO(name);
        CHECK(f.name == name);
        CHECK_FALSE(f.note.empty());
        Diagram d = f.diagram();
        CHECK(validate(d).ok());
        CHECK(parse_diagram(serialize(d)) == d);
        CHECK(f.text.rfind("# ", 0) == 0);
    }
}

TEST_CASE("fixture expectations") {
    for (const auto& name : fixture_names()) {
        Fixture f = fixture(name);
        InvariantReport r = invariant(f.diagram());
        INFO(name);
        if (f.expected_raw)
            CHECK(r.raw == *f.expected_raw);
        if (!f.disputed && f.expected_value)
            CHECK(*r.value == *f.expected_value);
    }
}

TEST_CASE("disputed fixtures") {
    SUBCASE("spun trefoil") {
        Fixture f = fixture("spun_trefoil");
        CHECK(f.disputed);
        InvariantReport r = invariant(f.diagram());
        // Published value is 1; with the cup scalar computed as 1 we get 2.
        CHECK(*f.expected_value == CycloNumber::from_integer(6, 1));
        CHECK(r.raw == CycloNumber::from_integer(6, 2));
        CHECK(*r.value == CycloNumber::from_integer(6, 2));
        CHECK(r.s == 0);
        CHECK(r.omega == 1);
    }
    SUBCASE("cp2_bar") {
        Fixture f = fixture("cp2_bar");
        CHECK(f.disputed);
        InvariantReport r = invariant(f.diagram());
        CHECK(*r.value == *f.expected_value);
        CHECK(r.raw == fixture("cp2").expected_raw->conj());
    }
}

TEST_CASE("empty diagram") {
    InvariantReport r = invariant(fixture("empty").diagram());
    CHECK(r.raw == CycloNumber::from_integer(6, 1));
    CHECK(*r.value == CycloNumber::from_integer(6, 1));
}
