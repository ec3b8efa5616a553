/*
 * diagram.hpp
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

#include "algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kb {

// h1: dotted circle (1-handle), h2: 2-handle curve, sf: surface unlink,
// bd: band core, probe: a strand carrying one simple object k_x.
enum class Role { h1, h2, sf, bd, probe };

struct Color {
    Role role = Role::h2;
    int degree = 0;  // probe only

    friend bool operator==(const Color&, const Color&) = default;
};

enum class Orientation { down, up };

struct Wire {
    Color color;
    Orientation orientation = Orientation::down;

    friend bool operator==(const Wire&, const Wire&) = default;
};

enum class CellKind {
    identity,
    crossing_pos,
    crossing_neg,
    cup,
    puc,
    cap,
    pac,
    dot,
    twist_pos,
    twist_neg,
    mu,
    comul,
    unit,
    counit,
    act,
    coact,
    dact,
    dcoact,
};

struct Cell {
    CellKind kind = CellKind::identity;
    std::optional<Color> created;  // cup / puc

    friend bool operator==(const Cell&, const Cell&) = default;
};

using Row = std::vector<Cell>;

struct Header {
    int N = 6;
    int t = 1;
    int H = 2;
    std::optional<int> c;
    std::optional<int> g;

    friend bool operator==(const Header&, const Header&) = default;
};

struct Diagram {
    Header header;
    std::vector<Row> rows;

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

int cell_inputs(CellKind k);
int cell_outputs(CellKind k);
bool is_identity_like(CellKind k);

std::string color_token(const Color& c);
std::optional<Color> parse_color(const std::string& token);
std::string cell_token(const Cell& c);
std::string role_name(Role r);

Cell make_cell(CellKind k);
Cell make_cup(CellKind k, Color c);

struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;
};

class DiagramParseError : public std::runtime_error {
public:
    explicit DiagramParseError(std::vector<ParseError> errors);
    const std::vector<ParseError>& errors() const noexcept { return errors_; }

private:
    std::vector<ParseError> errors_;
};

// Typing failure of a row sequence (arity, color, or orientation mismatch).
class DiagramTypeError : public std::runtime_error {
public:
    DiagramTypeError(size_t row, size_t cell, const std::string& message);
    size_t row;
    size_t cell;
};

Diagram parse_diagram(const std::string& text);
std::string serialize(const Diagram& d);

// Boundary wires at every level: level 0 is the input of row 0, level i+1 the
// output of row i. Throws DiagramTypeError.
std::vector<std::vector<Wire>> infer_levels(const std::vector<Row>& rows, const std::vector<Wire>& input);
std::vector<std::vector<Wire>> infer_levels(const Diagram& d);

// Output wires of one cell given its inputs (throws std::invalid_argument on mismatch).
std::vector<Wire> cell_output_wires(const Cell& cell, const std::vector<Wire>& inputs);

// Segment (level, position) -> component id, following strands through cells.
struct ComponentTrace {
    std::vector<std::vector<int>> segment_component;  // [level][position]
    std::vector<Role> component_role;
    std::vector<Color> component_color;
    size_t count() const { return component_role.size(); }
};

ComponentTrace trace_components(const Diagram& d);

struct BandInfo {
    int band_component = 0;
    std::vector<int> feet;  // sf component of each foot
    int cycles = 0;
};

struct LinkSummary {
    ComponentTrace trace;
    // All non-band components: framing on the diagonal, linking off it.
    std::vector<int> strand_components;
    IntMatrix full_matrix;
    // Kirby components (h1, h2) in first-appearance order.
    std::vector<int> kirby_components;
    std::vector<bool> dotted;
    IntMatrix linking_matrix;
    int surface_components = 0;
    std::vector<BandInfo> bands;
    int s = 0;
    int omega = 0;
    std::vector<std::string> warnings;

    int full_index(int component) const;
};

LinkSummary link_summary(const Diagram& d);

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

ValidationReport validate(const Diagram& d);

// Splits every row into rows carrying exactly one non-identity cell (all-identity
// rows are dropped). level_map, if given, maps each original level to its
// elementary level.
std::vector<Row> elementary_rows(const std::vector<Row>& rows, const std::vector<Wire>& input,
                                 std::vector<size_t>* level_map = nullptr);
Diagram elementary_form(const Diagram& d, std::vector<size_t>* level_map = nullptr);

// Closed diagrams stacked vertically (their disjoint union).
Diagram disjoint_union(const Diagram& a, const Diagram& b);
// Every crossing and twist reversed.
Diagram mirror(const Diagram& d);

} // namespace kb
