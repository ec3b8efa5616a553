/*
 * moves.hpp
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

#include "invariant.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kb {

class MoveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class MoveKind {
    r2_intro,
    r2_elim,
    r3,
    r1_curl_transfer,
    handle_slide,
    stabilize_blank,
    stabilize_hopf,
    destabilize,
    cap,
    cup,
    band_slide,
    band_swim,
    band_2handle_swim,
    surface_slide,
    // Swims a band through a dotted circle. Not a geometric move; only sound
    // when the band image is transparent in the full category.
    band_1handle_swim,
};

const std::vector<MoveKind>& all_move_kinds();
std::string move_kind_name(MoveKind k);
std::optional<MoveKind> parse_move_kind(const std::string& name);

// row: a level of the diagram (0 = above the first row) or the first row of a
// matched pattern. col: a wire position at that level.
//
// variant: r2_intro 0 = "/+ then /-", 1 = "/- then /+"; swims bit 0 puts the
// swimming strand left of the band (else right), bit 1 uses "/+" crossings.
// over: component id (first-appearance order of the trace) for slides.
struct MoveSpec {
    MoveKind kind = MoveKind::r2_intro;
    size_t row = 0;
    size_t col = 0;
    int over = -1;
    int variant = 0;
    bool inverse = false;

    friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

std::string to_string(const MoveSpec& m);

// Throws MoveError on pattern mismatch or forbidden slides. Slides return the
// elementary form of the diagram (one non-identity cell per row).
Diagram apply_move(const Diagram& d, const MoveSpec& m);

struct FuzzOptions {
    size_t max_width = 8;
    double max_states = 20000;
    bool include_quarantined = false;
    // Reject band slides that change the self/other band counts.
    bool preserve_band_classes = true;
};

struct FuzzStep {
    std::optional<MoveSpec> move;  // nullopt: skipped
    std::string note;
};

struct FuzzResult {
    Diagram start;  // elementary form of the input
    Diagram result;
    std::vector<FuzzStep> trace;
};

FuzzResult fuzz(const Diagram& d, uint64_t seed, int steps, const FuzzOptions& opts = {});

// All addresses worth trying for one move kind; most will not apply.
std::vector<MoveSpec> candidate_moves(const Diagram& d, MoveKind kind);

struct InvarianceReport {
    InvariantReport first;
    InvariantReport second;
    bool raw_equal = false;
    bool value_equal = false;
};

InvarianceReport check_invariance(const Diagram& a, const Diagram& b);

} // namespace kb
