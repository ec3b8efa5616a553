/*
 * moves.cpp
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

#include "moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace kb {

namespace {

struct KindName {
    MoveKind kind;
    const char* name;
};

const KindName kKindNames[] = {
    {MoveKind::r2_intro, "r2_intro"},
    {MoveKind::r2_elim, "r2_elim"},
    {MoveKind::r3, "r3"},
    {MoveKind::r1_curl_transfer, "r1_curl_transfer"},
    {MoveKind::handle_slide, "handle_slide"},
    {MoveKind::stabilize_blank, "stabilize_blank"},
    {MoveKind::stabilize_hopf, "stabilize_hopf"},
    {MoveKind::destabilize, "destabilize"},
    {MoveKind::cap, "cap"},
    {MoveKind::cup, "cup"},
    {MoveKind::band_slide, "band_slide"},
    {MoveKind::band_swim, "band_swim"},
    {MoveKind::band_2handle_swim, "band_2handle_swim"},
    {MoveKind::surface_slide, "surface_slide"},
    {MoveKind::band_1handle_swim, "band_1handle_swim"},
};

[[noreturn]] void mismatch(const MoveSpec& m, const std::string& why) {
    throw MoveError(move_kind_name(m.kind) + " at " + std::to_string(m.row) + "," + std::to_string(m.col) + ": " +
                    why);
}

Cell id_cell() { return make_cell(CellKind::identity); }

// Row with `pos` identities, then `cells`, then identities up to `width` inputs.
Row place(size_t width, size_t pos, const std::vector<Cell>& cells) {
    size_t used = 0;
    for (const auto& c : cells)
        used += static_cast<size_t>(cell_inputs(c.kind));
    if (pos + used > width)
        throw MoveError("template does not fit: " + std::to_string(pos + used) + " strands needed, " +
                        std::to_string(width) + " present");
    Row r(pos, id_cell());
    r.insert(r.end(), cells.begin(), cells.end());
    r.insert(r.end(), width - pos - used, id_cell());
    return r;
}

Row place(size_t width, size_t pos, const Cell& c) { return place(width, pos, std::vector<Cell>{c}); }

// The non-identity cells of a row if they start exactly at input position pos,
// are contiguous, and number `count`.
std::optional<std::vector<Cell>> cells_at(const Row& row, size_t pos, size_t count) {
    size_t i = 0;
    size_t p = 0;
    while (i < row.size() && row[i].kind == CellKind::identity) {
        ++i;
        ++p;
    }
    if (p != pos || i + count > row.size())
        return std::nullopt;
    std::vector<Cell> out(row.begin() + static_cast<long>(i), row.begin() + static_cast<long>(i + count));
    for (const auto& c : out)
        if (c.kind == CellKind::identity)
            return std::nullopt;
    for (size_t j = i + count; j < row.size(); ++j)
        if (row[j].kind != CellKind::identity)
            return std::nullopt;
    return out;
}

bool single_at(const Row& row, size_t pos, CellKind kind) {
    auto c = cells_at(row, pos, 1);
    return c && (*c)[0].kind == kind;
}

bool is_crossing(CellKind k) { return k == CellKind::crossing_pos || k == CellKind::crossing_neg; }

CellKind opposite_crossing(CellKind k) {
    return k == CellKind::crossing_pos ? CellKind::crossing_neg : CellKind::crossing_pos;
}

// Braid exponent of a crossing cell: "/-" is the braiding, "/+" its inverse.
int braid_exp(CellKind k) { return k == CellKind::crossing_neg ? 1 : -1; }

CellKind crossing_of(int e) { return e > 0 ? CellKind::crossing_neg : CellKind::crossing_pos; }

std::optional<std::pair<size_t, Cell>> single_cell(const Row& row) {
    std::optional<std::pair<size_t, Cell>> found;
    size_t pos = 0;
    for (const auto& c : row) {
        if (c.kind != CellKind::identity) {
            if (found)
                return std::nullopt;
            found = std::make_pair(pos, c);
        }
        pos += static_cast<size_t>(cell_inputs(c.kind));
    }
    return found;
}

void require_rows(const Diagram& d, const MoveSpec& m, size_t count) {
    if (m.row + count > d.rows.size())
        mismatch(m, "pattern needs " + std::to_string(count) + " rows");
}

void require_level(const std::vector<std::vector<Wire>>& levels, const MoveSpec& m) {
    if (m.row >= levels.size())
        mismatch(m, "no such level");
}

void insert_rows(Diagram& d, size_t at, const std::vector<Row>& rows) {
    d.rows.insert(d.rows.begin() + static_cast<long>(at), rows.begin(), rows.end());
}

void erase_rows(Diagram& d, size_t at, size_t count) {
    d.rows.erase(d.rows.begin() + static_cast<long>(at), d.rows.begin() + static_cast<long>(at + count));
}

Diagram r2_intro(const Diagram& d, const MoveSpec& m) {
    auto levels = infer_levels(d);
    require_level(levels, m);
    size_t w = levels[m.row].size();
    if (m.col + 2 > w)
        mismatch(m, "needs two strands");
    CellKind first = m.variant == 0 ? CellKind::crossing_pos : CellKind::crossing_neg;
    Diagram out = d;
    insert_rows(out, m.row, {place(w, m.col, make_cell(first)), place(w, m.col, make_cell(opposite_crossing(first)))});
    return out;
}

Diagram r2_elim(const Diagram& d, const MoveSpec& m) {
    require_rows(d, m, 2);
    auto a = cells_at(d.rows[m.row], m.col, 1);
    auto b = cells_at(d.rows[m.row + 1], m.col, 1);
    if (!a || !b || !is_crossing((*a)[0].kind) || (*b)[0].kind != opposite_crossing((*a)[0].kind))
        mismatch(m, "no cancelling crossing pair");
    Diagram out = d;
    erase_rows(out, m.row, 2);
    return out;
}

bool r3_pattern_ok(int a, int b, int c) {
    if (a == b && b == c)
        return true;
    // sigma1 sigma2 sigma1^-1 = sigma2^-1 sigma1 sigma2 and its inverse / reversal.
    return (a == b && c == -a) || (b == c && a == -b);
}

Diagram r3(const Diagram& d, const MoveSpec& m) {
    require_rows(d, m, 3);
    size_t p = m.col;
    for (int shape = 0; shape < 2; ++shape) {
        size_t first = shape == 0 ? p : p + 1;
        size_t mid = shape == 0 ? p + 1 : p;
        auto x = cells_at(d.rows[m.row], first, 1);
        auto y = cells_at(d.rows[m.row + 1], mid, 1);
        auto z = cells_at(d.rows[m.row + 2], first, 1);
        if (!x || !y || !z || !is_crossing((*x)[0].kind) || !is_crossing((*y)[0].kind) ||
            !is_crossing((*z)[0].kind))
            continue;
        int a = braid_exp((*x)[0].kind), b = braid_exp((*y)[0].kind), c = braid_exp((*z)[0].kind);
        if (!r3_pattern_ok(a, b, c))
            mismatch(m, "crossing signs do not admit a third Reidemeister move");
        auto levels = infer_levels(d);
        size_t w = levels[m.row].size();
        Diagram out = d;
        out.rows[m.row] = place(w, mid, make_cell(crossing_of(c)));
        out.rows[m.row + 1] = place(w, first, make_cell(crossing_of(b)));
        out.rows[m.row + 2] = place(w, mid, make_cell(crossing_of(a)));
        return out;
    }
    mismatch(m, "no three-crossing braid pattern");
}

// Curl templates relative to the strand position p at the top level.
struct CurlTemplate {
    Orientation strand;
    bool left;
    CellKind open;
    size_t open_at;
    size_t cross_at;
    CellKind close;
    size_t close_at;
};

const CurlTemplate kCurls[] = {
    {Orientation::down, true, CellKind::cup, 0, 1, CellKind::pac, 0},
    {Orientation::down, false, CellKind::puc, 1, 0, CellKind::cap, 1},
    {Orientation::up, true, CellKind::puc, 0, 1, CellKind::cap, 0},
    {Orientation::up, false, CellKind::cup, 1, 0, CellKind::pac, 1},
};

Diagram r1_curl_transfer(const Diagram& d, const MoveSpec& m) {
    require_rows(d, m, 3);
    auto levels = infer_levels(d);
    if (m.col >= levels[m.row].size())
        mismatch(m, "no strand at that position");
    const Wire& s = levels[m.row][m.col];
    size_t p = m.col;
    for (const auto& t : kCurls) {
        if (t.strand != s.orientation)
            continue;
        auto o = cells_at(d.rows[m.row], p + t.open_at, 1);
        auto x = cells_at(d.rows[m.row + 1], p + t.cross_at, 1);
        auto c = cells_at(d.rows[m.row + 2], p + t.close_at, 1);
        if (!o || !x || !c)
            continue;
        if ((*o)[0].kind != t.open || !(*o)[0].created || *(*o)[0].created != s.color)
            continue;
        if (!is_crossing((*x)[0].kind) || (*c)[0].kind != t.close)
            continue;
        const CurlTemplate* other = nullptr;
        for (const auto& u : kCurls)
            if (u.strand == t.strand && u.left != t.left)
                other = &u;
        size_t w = levels[m.row].size();
        Diagram out = d;
        out.rows[m.row] = place(w, p + other->open_at, make_cup(other->open, s.color));
        out.rows[m.row + 1] = place(w + 2, p + other->cross_at, (*x)[0]);
        out.rows[m.row + 2] = place(w + 2, p + other->close_at, make_cell(other->close));
        return out;
    }
    mismatch(m, "no curl on the strand at that position");
}

std::vector<Row> blank_rows(size_t w, size_t col) {
    return {place(w, col, make_cup(CellKind::cup, Color{Role::h2, 0})), place(w + 2, col, make_cell(CellKind::pac))};
}

std::vector<Row> hopf_rows(size_t w, size_t col) {
    return {place(w, col, {make_cup(CellKind::cup, Color{Role::h1, 0}), make_cup(CellKind::cup, Color{Role::h2, 0})}),
            place(w + 4, col + 1, make_cell(CellKind::crossing_neg)),
            place(w + 4, col + 1, make_cell(CellKind::crossing_neg)),
            place(w + 4, col, {make_cell(CellKind::pac), make_cell(CellKind::pac)})};
}

Diagram stabilize(const Diagram& d, const MoveSpec& m, bool hopf) {
    auto levels = infer_levels(d);
    require_level(levels, m);
    size_t w = levels[m.row].size();
    if (m.col > w)
        mismatch(m, "position beyond the last strand");
    Diagram out = d;
    insert_rows(out, m.row, hopf ? hopf_rows(w, m.col) : blank_rows(w, m.col));
    return out;
}

bool rows_equal(const Diagram& d, size_t at, const std::vector<Row>& pattern) {
    if (at + pattern.size() > d.rows.size())
        return false;
    for (size_t i = 0; i < pattern.size(); ++i)
        if (d.rows[at + i] != pattern[i])
            return false;
    return true;
}

Diagram destabilize(const Diagram& d, const MoveSpec& m) {
    auto levels = infer_levels(d);
    require_level(levels, m);
    size_t w = levels[m.row].size();
    if (m.col <= w) {
        for (bool hopf : {true, false}) {
            auto pattern = hopf ? hopf_rows(w, m.col) : blank_rows(w, m.col);
            if (rows_equal(d, m.row, pattern)) {
                Diagram out = d;
                erase_rows(out, m.row, pattern.size());
                return out;
            }
        }
    }
    mismatch(m, "no isolated stabilization pattern");
}

bool is_sf(const Wire& w) { return w.color.role == Role::sf; }

Color sf_color() { return Color{Role::sf, 0}; }

std::vector<Row> cap_rows(size_t w, size_t col, Orientation o) {
    if (o == Orientation::down)
        return {place(w, col, make_cell(CellKind::coact)), place(w + 1, col, make_cell(CellKind::act))};
    return {place(w, col, make_cell(CellKind::dcoact)), place(w + 1, col, make_cell(CellKind::dact))};
}

Diagram cap_move(const Diagram& d, const MoveSpec& m) {
    auto levels = infer_levels(d);
    require_level(levels, m);
    const auto& lv = levels[m.row];
    if (m.col >= lv.size() || !is_sf(lv[m.col]))
        mismatch(m, "no surface strand at that position");
    size_t w = lv.size();
    auto pattern = cap_rows(w, m.col, lv[m.col].orientation);
    Diagram out = d;
    if (m.inverse) {
        if (!rows_equal(d, m.row, pattern))
            mismatch(m, "no capped band on that strand");
        erase_rows(out, m.row, pattern.size());
    } else {
        insert_rows(out, m.row, pattern);
    }
    return out;
}

std::vector<Row> cup_rows(size_t w, size_t col, Orientation o) {
    if (o == Orientation::down)
        return {place(w, col, make_cup(CellKind::puc, sf_color())), place(w + 2, col + 1, make_cell(CellKind::dcoact)),
                place(w + 3, col + 2, make_cell(CellKind::act)), place(w + 2, col, make_cell(CellKind::cap))};
    return {place(w, col + 1, make_cup(CellKind::puc, sf_color())), place(w + 2, col, make_cell(CellKind::dcoact)),
            place(w + 3, col + 1, make_cell(CellKind::act)), place(w + 2, col + 1, make_cell(CellKind::cap))};
}

Diagram cup_move(const Diagram& d, const MoveSpec& m) {
    auto levels = infer_levels(d);
    require_level(levels, m);
    const auto& lv = levels[m.row];
    if (m.col >= lv.size() || !is_sf(lv[m.col]))
        mismatch(m, "no surface strand at that position");
    size_t w = lv.size();
    auto pattern = cup_rows(w, m.col, lv[m.col].orientation);
    Diagram out = d;
    if (m.inverse) {
        if (!rows_equal(d, m.row, pattern))
            mismatch(m, "no cupped band on that strand");
        erase_rows(out, m.row, pattern.size());
    } else {
        insert_rows(out, m.row, pattern);
    }
    return out;
}

// Rows r, r+1 join an up surface strand at col to a down one at col+1 by a short band.
bool horizontal_band(const Diagram& d, size_t r, size_t col) {
    if (r + 2 > d.rows.size())
        return false;
    return (single_at(d.rows[r], col, CellKind::dcoact) && single_at(d.rows[r + 1], col + 1, CellKind::act)) ||
           (single_at(d.rows[r], col + 1, CellKind::coact) && single_at(d.rows[r + 1], col, CellKind::dact));
}

Diagram band_slide(const Diagram& d, const MoveSpec& m) {
    require_rows(d, m, 3);
    if (!horizontal_band(d, m.row + 1, m.col))
        mismatch(m, "no horizontal band below the foot");
    auto levels = infer_levels(d);
    size_t w = levels[m.row].size();
    Diagram out = d;
    if (single_at(d.rows[m.row], m.col + 1, CellKind::act))
        out.rows[m.row] = place(w, m.col, make_cell(CellKind::dact));
    else if (single_at(d.rows[m.row], m.col, CellKind::dact))
        out.rows[m.row] = place(w, m.col + 1, make_cell(CellKind::act));
    else
        mismatch(m, "no band foot above the horizontal band");
    return out;
}

Role swim_role(MoveKind k) {
    switch (k) {
    case MoveKind::band_swim:
        return Role::bd;
    case MoveKind::band_2handle_swim:
        return Role::h2;
    default:
        return Role::h1;
    }
}

std::vector<Row> swim_rows(size_t w, size_t col, int variant) {
    Cell x = make_cell((variant & 2) ? CellKind::crossing_pos : CellKind::crossing_neg);
    if (variant & 1)
        return {place(w, col - 1, x), place(w, col, x), place(w, col, x), place(w, col - 1, x)};
    return {place(w, col + 1, x), place(w, col, x), place(w, col, x), place(w, col + 1, x)};
}

Diagram swim(const Diagram& d, const MoveSpec& m) {
    if (!horizontal_band(d, m.row, m.col))
        mismatch(m, "no horizontal band at that address");
    auto levels = infer_levels(d);
    size_t lvl = m.row + 2;
    const auto& lv = levels[lvl];
    bool left = m.variant & 1;
    if (left ? m.col == 0 : m.col + 2 >= lv.size())
        mismatch(m, "no strand beside the band");
    const Wire& x = lv[left ? m.col - 1 : m.col + 2];
    if (x.color.role != swim_role(m.kind))
        mismatch(m, "strand beside the band has role " + role_name(x.color.role) + ", expected " +
                        role_name(swim_role(m.kind)));
    auto pattern = swim_rows(lv.size(), m.col, m.variant);
    Diagram out = d;
    if (m.inverse) {
        if (!rows_equal(d, lvl, pattern))
            mismatch(m, "no double crossing below the band");
        erase_rows(out, lvl, pattern.size());
    } else {
        insert_rows(out, lvl, pattern);
    }
    return out;
}

struct Seg {
    size_t level;
    size_t pos;
    bool operator<(const Seg& o) const { return level != o.level ? level < o.level : pos < o.pos; }
};

// Strand connections of one elementary row: (a, b, flips side).
void row_links(size_t i, const Row& row, std::vector<std::tuple<Seg, Seg, bool>>& out) {
    auto sc = single_cell(row);
    size_t width = 0;
    for (const auto& c : row)
        width += static_cast<size_t>(cell_inputs(c.kind));
    size_t p = sc ? sc->first : width;
    size_t nin = sc ? static_cast<size_t>(cell_inputs(sc->second.kind)) : 0;
    size_t nout = sc ? static_cast<size_t>(cell_outputs(sc->second.kind)) : 0;
    for (size_t j = 0; j < p; ++j)
        out.emplace_back(Seg{i, j}, Seg{i + 1, j}, false);
    for (size_t j = p + nin; j < width; ++j)
        out.emplace_back(Seg{i, j}, Seg{i + 1, j - nin + nout}, false);
    if (!sc)
        return;
    switch (sc->second.kind) {
    case CellKind::crossing_pos:
    case CellKind::crossing_neg:
        out.emplace_back(Seg{i, p}, Seg{i + 1, p + 1}, false);
        out.emplace_back(Seg{i, p + 1}, Seg{i + 1, p}, false);
        break;
    case CellKind::cup:
    case CellKind::puc:
        out.emplace_back(Seg{i + 1, p}, Seg{i + 1, p + 1}, true);
        break;
    case CellKind::cap:
    case CellKind::pac:
        out.emplace_back(Seg{i, p}, Seg{i, p + 1}, true);
        break;
    case CellKind::dot:
    case CellKind::twist_pos:
    case CellKind::twist_neg:
        out.emplace_back(Seg{i, p}, Seg{i + 1, p}, false);
        break;
    default:
        break;
    }
}

CellKind swap_cup(CellKind k) {
    switch (k) {
    case CellKind::cup:
        return CellKind::puc;
    case CellKind::puc:
        return CellKind::cup;
    case CellKind::cap:
        return CellKind::pac;
    case CellKind::pac:
        return CellKind::cap;
    default:
        return k;
    }
}

bool slide_allowed(Role a, Role b, bool surface, std::string& why) {
    if (surface) {
        if (a != Role::sf) {
            why = "surface_slide moves a surface strand";
            return false;
        }
        if (b != Role::h1) {
            why = "surface strands slide over dotted circles only";
            return false;
        }
        return true;
    }
    switch (a) {
    case Role::h1:
        if (b != Role::h1) {
            why = "dotted circles never slide over non-dotted components";
            return false;
        }
        return true;
    case Role::h2:
    case Role::bd:
        if (b != Role::h1 && b != Role::h2) {
            why = "target must be a dotted circle or a 2-handle curve";
            return false;
        }
        return true;
    case Role::sf:
        why = "use surface_slide for surface strands";
        return false;
    case Role::probe:
        why = "probe strands do not slide";
        return false;
    }
    return false;
}

// Slides component A (strand at m.col of level m.row) over component m.over:
// cable the target with a parallel copy colored like A, then band-sum A with
// the copy where the two meet.
Diagram slide(const Diagram& d0, const MoveSpec& m, bool surface) {
    std::vector<size_t> lmap;
    Diagram d = elementary_form(d0, &lmap);
    if (m.row >= lmap.size())
        mismatch(m, "no such level");
    size_t L = lmap[m.row];
    auto levels = infer_levels(d);
    ComponentTrace tr = trace_components(d);
    const auto& lv = levels[L];
    if (m.col >= lv.size())
        mismatch(m, "no strand at that position");
    int A = tr.segment_component[L][m.col];
    int B = m.over;
    if (B < 0 || static_cast<size_t>(B) >= tr.count())
        mismatch(m, "no component " + std::to_string(B));
    if (A == B)
        mismatch(m, "a component cannot slide over itself");
    std::string why;
    if (!slide_allowed(tr.component_role[static_cast<size_t>(A)], tr.component_role[static_cast<size_t>(B)], surface,
                       why))
        mismatch(m, why);
    size_t bpos;
    if (m.col + 1 < lv.size() && tr.segment_component[L][m.col + 1] == B)
        bpos = m.col + 1;
    else if (m.col > 0 && tr.segment_component[L][m.col - 1] == B)
        bpos = m.col - 1;
    else
        mismatch(m, "target component is not beside the sliding strand at this level");

    // Side of the copy on every segment of B: true = copy at the higher position.
    std::vector<std::tuple<Seg, Seg, bool>> links;
    for (size_t i = 0; i < d.rows.size(); ++i)
        row_links(i, d.rows[i], links);
    std::map<Seg, std::vector<std::pair<Seg, bool>>> adj;
    for (const auto& [a, b, flip] : links) {
        if (tr.segment_component[a.level][a.pos] != B)
            continue;
        adj[a].emplace_back(b, flip);
        adj[b].emplace_back(a, flip);
    }
    std::map<Seg, bool> right;
    std::deque<Seg> queue{Seg{L, bpos}};
    right[Seg{L, bpos}] = bpos < m.col;
    while (!queue.empty()) {
        Seg s = queue.front();
        queue.pop_front();
        for (const auto& [n, flip] : adj[s]) {
            bool want = right[s] != flip;
            auto it = right.find(n);
            if (it == right.end()) {
                right[n] = want;
                queue.push_back(n);
            } else if (it->second != want) {
                throw MoveError("inconsistent push-off side while cabling component " + std::to_string(B));
            }
        }
    }

    const Wire& wa = lv[m.col];
    const Wire& wb = lv[bpos];
    Color ca = tr.component_color[static_cast<size_t>(A)];
    bool band_copy = ca.role == Role::bd;
    Orientation copy_at_corridor = wa.orientation == Orientation::down ? Orientation::up : Orientation::down;
    bool reversed = !band_copy && copy_at_corridor != wb.orientation;
    Color cb = tr.component_color[static_cast<size_t>(B)];

    auto is_b = [&](size_t level, size_t pos) { return tr.segment_component[level][pos] == B; };
    auto new_pos = [&](size_t level, size_t pos) {
        size_t extra = 0;
        for (size_t j = 0; j < pos; ++j)
            if (is_b(level, j))
                ++extra;
        return pos + extra;
    };
    auto copy_kind = [&](CellKind k) { return reversed ? swap_cup(k) : k; };

    std::vector<std::pair<size_t, Cell>> out;  // elementary rows as (position, cell)
    auto band_sum = [&]() {
        size_t a = new_pos(L, m.col);
        size_t left = bpos > m.col ? a : a - 1;
        Orientation lo = left == a ? wa.orientation : copy_at_corridor;
        if (band_copy) {
            out.emplace_back(left, make_cell(CellKind::cap));
            out.emplace_back(left, make_cup(CellKind::cup, ca));
        } else if (lo == Orientation::down) {
            out.emplace_back(left, make_cell(CellKind::cap));
            out.emplace_back(left, make_cup(CellKind::puc, ca));
        } else {
            out.emplace_back(left, make_cell(CellKind::pac));
            out.emplace_back(left, make_cup(CellKind::cup, ca));
        }
    };

    for (size_t i = 0; i < d.rows.size(); ++i) {
        if (i == L)
            band_sum();
        auto sc = single_cell(d.rows[i]);
        if (!sc)
            continue;
        size_t p = sc->first;
        const Cell& cell = sc->second;
        size_t q = new_pos(i, p);
        CellKind k = cell.kind;
        switch (k) {
        case CellKind::cup:
        case CellKind::puc: {
            if (cell.created != cb || !is_b(i + 1, p)) {
                out.emplace_back(q, cell);
                break;
            }
            bool b_outer = right.at(Seg{i + 1, p});
            Cell bc = make_cup(k, cb);
            Cell cc = make_cup(copy_kind(k), ca);
            out.emplace_back(q, b_outer ? bc : cc);
            out.emplace_back(q + 1, b_outer ? cc : bc);
            break;
        }
        case CellKind::cap:
        case CellKind::pac: {
            if (!is_b(i, p)) {
                out.emplace_back(q, cell);
                break;
            }
            bool b_outer = right.at(Seg{i, p});
            Cell bc = make_cell(k);
            Cell cc = make_cell(copy_kind(k));
            out.emplace_back(q + 1, b_outer ? cc : bc);
            out.emplace_back(q, b_outer ? bc : cc);
            break;
        }
        case CellKind::crossing_pos:
        case CellKind::crossing_neg: {
            bool lb = is_b(i, p), rb = is_b(i, p + 1);
            if (lb && rb) {
                for (size_t off : {1, 0, 2, 1})
                    out.emplace_back(q + off, cell);
            } else if (lb) {
                out.emplace_back(q + 1, cell);
                out.emplace_back(q, cell);
            } else if (rb) {
                out.emplace_back(q, cell);
                out.emplace_back(q + 1, cell);
            } else {
                out.emplace_back(q, cell);
            }
            break;
        }
        case CellKind::twist_pos:
        case CellKind::twist_neg: {
            if (!is_b(i, p)) {
                out.emplace_back(q, cell);
                break;
            }
            Cell x = make_cell(k == CellKind::twist_pos ? CellKind::crossing_neg : CellKind::crossing_pos);
            if (k == CellKind::twist_pos) {
                out.emplace_back(q, cell);
                out.emplace_back(q + 1, cell);
                out.emplace_back(q, x);
                out.emplace_back(q, x);
            } else {
                out.emplace_back(q, x);
                out.emplace_back(q, x);
                out.emplace_back(q, cell);
                out.emplace_back(q + 1, cell);
            }
            break;
        }
        case CellKind::dot:
            out.emplace_back(is_b(i, p) && !right.at(Seg{i, p}) ? q + 1 : q, cell);
            break;
        default:
            for (size_t j = p; j < p + static_cast<size_t>(cell_inputs(k)); ++j)
                if (is_b(i, j))
                    throw MoveError("unexpected " + cell_token(cell) + " on the target component");
            out.emplace_back(q, cell);
            break;
        }
    }
    if (L == d.rows.size())
        band_sum();

    Diagram res;
    res.header = d.header;
    size_t width = 0;
    for (const auto& [pos, cell] : out) {
        res.rows.push_back(place(width, pos, cell));
        width = width - static_cast<size_t>(cell_inputs(cell.kind)) + static_cast<size_t>(cell_outputs(cell.kind));
    }
    return res;
}

std::vector<size_t> sf_positions(const std::vector<Wire>& lv) {
    std::vector<size_t> out;
    for (size_t j = 0; j < lv.size(); ++j)
        if (is_sf(lv[j]))
            out.push_back(j);
    return out;
}

} // namespace

const std::vector<MoveKind>& all_move_kinds() {
    static const std::vector<MoveKind> kinds = [] {
        std::vector<MoveKind> v;
        for (const auto& kn : kKindNames)
            v.push_back(kn.kind);
        return v;
    }();
    return kinds;
}

std::string move_kind_name(MoveKind k) {
    for (const auto& kn : kKindNames)
        if (kn.kind == k)
            return kn.name;
    return "?";
}

std::optional<MoveKind> parse_move_kind(const std::string& name) {
    for (const auto& kn : kKindNames)
        if (name == kn.name)
            return kn.kind;
    return std::nullopt;
}

std::string to_string(const MoveSpec& m) {
    std::ostringstream out;
    out << move_kind_name(m.kind) << " at " << m.row << "," << m.col;
    if (m.over >= 0)
        out << " over " << m.over;
    if (m.variant)
        out << " variant " << m.variant;
    if (m.inverse)
        out << " inverse";
    return out.str();
}

Diagram apply_move(const Diagram& d, const MoveSpec& m) {
    Diagram out;
    try {
        switch (m.kind) {
        case MoveKind::r2_intro:
            out = r2_intro(d, m);
            break;
        case MoveKind::r2_elim:
            out = r2_elim(d, m);
            break;
        case MoveKind::r3:
            out = r3(d, m);
            break;
        case MoveKind::r1_curl_transfer:
            out = r1_curl_transfer(d, m);
            break;
        case MoveKind::handle_slide:
            out = slide(d, m, false);
            break;
        case MoveKind::surface_slide:
            out = slide(d, m, true);
            break;
        case MoveKind::stabilize_blank:
            out = m.inverse ? destabilize(d, m) : stabilize(d, m, false);
            break;
        case MoveKind::stabilize_hopf:
            out = m.inverse ? destabilize(d, m) : stabilize(d, m, true);
            break;
        case MoveKind::destabilize:
            out = destabilize(d, m);
            break;
        case MoveKind::cap:
            out = cap_move(d, m);
            break;
        case MoveKind::cup:
            out = cup_move(d, m);
            break;
        case MoveKind::band_slide:
            out = band_slide(d, m);
            break;
        case MoveKind::band_swim:
        case MoveKind::band_2handle_swim:
        case MoveKind::band_1handle_swim:
            out = swim(d, m);
            break;
        }
    } catch (const DiagramTypeError& e) {
        throw MoveError(std::string("diagram is not well typed: ") + e.what());
    }
    try {
        infer_levels(out);
    } catch (const DiagramTypeError& e) {
        throw MoveError(move_kind_name(m.kind) + " produced an ill-typed diagram: " + e.what());
    }
    return out;
}

std::vector<MoveSpec> candidate_moves(const Diagram& d, MoveKind kind) {
    std::vector<MoveSpec> out;
    std::vector<std::vector<Wire>> levels;
    try {
        levels = infer_levels(d);
    } catch (const DiagramTypeError&) {
        return out;
    }
    auto add = [&](size_t row, size_t col, int variant = 0, bool inverse = false, int over = -1) {
        MoveSpec m;
        m.kind = kind;
        m.row = row;
        m.col = col;
        m.variant = variant;
        m.inverse = inverse;
        m.over = over;
        out.push_back(m);
    };
    size_t nrows = d.rows.size();
    switch (kind) {
    case MoveKind::r2_intro:
        for (size_t L = 0; L <= nrows; ++L)
            for (size_t p = 0; p + 1 < levels[L].size(); ++p)
                for (int v : {0, 1})
                    add(L, p, v);
        break;
    case MoveKind::r2_elim:
    case MoveKind::r3:
        for (size_t r = 0; r < nrows; ++r) {
            auto sc = single_cell(d.rows[r]);
            if (!sc || !is_crossing(sc->second.kind))
                continue;
            add(r, sc->first);
            if (kind == MoveKind::r3 && sc->first > 0)
                add(r, sc->first - 1);
        }
        break;
    case MoveKind::r1_curl_transfer:
        for (size_t r = 0; r < nrows; ++r) {
            auto sc = single_cell(d.rows[r]);
            if (!sc || (sc->second.kind != CellKind::cup && sc->second.kind != CellKind::puc))
                continue;
            add(r, sc->first);
            if (sc->first > 0)
                add(r, sc->first - 1);
        }
        break;
    case MoveKind::stabilize_blank:
    case MoveKind::stabilize_hopf:
        for (size_t L = 0; L <= nrows; ++L)
            for (size_t p = 0; p <= levels[L].size(); ++p)
                add(L, p);
        break;
    case MoveKind::destabilize:
        for (size_t r = 0; r < nrows; ++r) {
            size_t pos = 0;
            for (const auto& c : d.rows[r]) {
                if (c.kind == CellKind::cup && c.created && c.created->role != Role::sf)
                    add(r, pos);
                if (c.kind != CellKind::identity)
                    break;
                ++pos;
            }
        }
        break;
    case MoveKind::cap:
    case MoveKind::cup:
        for (size_t L = 0; L <= nrows; ++L)
            for (size_t p : sf_positions(levels[L])) {
                add(L, p);
                add(L, p, 0, true);
            }
        break;
    case MoveKind::band_slide:
        for (size_t r = 0; r + 2 < nrows; ++r)
            for (size_t p = 0; p + 1 < levels[r + 1].size(); ++p)
                if (horizontal_band(d, r + 1, p))
                    add(r, p);
        break;
    case MoveKind::band_swim:
    case MoveKind::band_2handle_swim:
    case MoveKind::band_1handle_swim:
        for (size_t r = 0; r + 1 < nrows; ++r)
            for (size_t p = 0; p + 1 < levels[r].size(); ++p)
                if (horizontal_band(d, r, p))
                    for (int v = 0; v < 4; ++v)
                        for (bool inv : {false, true})
                            add(r, p, v, inv);
        break;
    case MoveKind::handle_slide:
    case MoveKind::surface_slide: {
        ComponentTrace tr = trace_components(d);
        for (size_t L = 0; L <= nrows; ++L)
            for (size_t p = 0; p + 1 < levels[L].size(); ++p) {
                int a = tr.segment_component[L][p], b = tr.segment_component[L][p + 1];
                if (a == b)
                    continue;
                add(L, p, 0, false, b);
                add(L, p + 1, 0, false, a);
            }
        break;
    }
    }
    return out;
}

namespace {

std::pair<int, int> band_classes(const Diagram& d) {
    LinkSummary ls = link_summary(d);
    return {ls.s, ls.omega};
}

} // namespace

FuzzResult fuzz(const Diagram& d, uint64_t seed, int steps, const FuzzOptions& opts) {
    FuzzResult res;
    res.start = elementary_form(d);
    res.result = res.start;
    std::mt19937_64 rng(seed);
    auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };
    EvalContext ctx = EvalContext::from_header(d.header);

    for (int step = 0; step < steps; ++step) {
        std::vector<MoveKind> kinds;
        for (MoveKind k : all_move_kinds())
            if (k != MoveKind::band_1handle_swim || opts.include_quarantined)
                kinds.push_back(k);
        FuzzStep fs;
        while (!kinds.empty() && !fs.move) {
            size_t ki = pick(kinds.size());
            MoveKind kind = kinds[ki];
            kinds.erase(kinds.begin() + static_cast<long>(ki));
            auto cands = candidate_moves(res.result, kind);
            while (!cands.empty()) {
                size_t ci = pick(cands.size());
                MoveSpec m = cands[ci];
                cands.erase(cands.begin() + static_cast<long>(ci));
                Diagram next;
                try {
                    next = apply_move(res.result, m);
                } catch (const MoveError&) {
                    continue;
                }
                auto levels = infer_levels(next);
                size_t width = 0;
                for (const auto& lv : levels)
                    width = std::max(width, lv.size());
                if (width > opts.max_width || estimated_state_count(next, ctx) > opts.max_states)
                    continue;
                if (!validate(next).ok())
                    continue;
                if (kind == MoveKind::band_slide && opts.preserve_band_classes &&
                    band_classes(next) != band_classes(res.result))
                    continue;
                fs.move = m;
                res.result = std::move(next);
                break;
            }
        }
        if (!fs.move)
            fs.note = "no applicable move within the size limits";
        res.trace.push_back(std::move(fs));
    }
    return res;
}

InvarianceReport check_invariance(const Diagram& a, const Diagram& b) {
    InvarianceReport rep;
    rep.first = invariant(a);
    rep.second = invariant(b);
    rep.raw_equal = rep.first.raw == rep.second.raw;
    rep.value_equal = rep.first.value && rep.second.value && *rep.first.value == *rep.second.value;
    return rep;
}

} // namespace kb
