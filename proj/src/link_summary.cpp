/*
 * link_summary.cpp
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

#include "diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kb {

namespace {

class UnionFind {
public:
    explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    size_t find(size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns false if a and b were already joined.
    bool unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<size_t> parent_;
};

struct Foot {
    size_t band_segment;
    size_t surface_segment;
};

struct Traced {
    ComponentTrace trace;
    std::vector<Foot> feet;
    std::vector<size_t> cycle_segments;
    std::vector<size_t> level_offset;
    std::vector<std::vector<Wire>> levels;
};

Traced trace_all(const Diagram& d) {
    Traced out;
    out.levels = infer_levels(d);
    size_t total = 0;
    for (const auto& lv : out.levels) {
        out.level_offset.push_back(total);
        total += lv.size();
    }
    UnionFind uf(total);
    auto seg = [&](size_t level, size_t pos) { return out.level_offset[level] + pos; };
    auto join = [&](size_t a, size_t b) {
        if (!uf.unite(a, b))
            out.cycle_segments.push_back(a);
    };

    for (size_t r = 0; r < d.rows.size(); ++r) {
        size_t ip = 0, op = 0;
        for (const Cell& c : d.rows[r]) {
            size_t a = static_cast<size_t>(cell_inputs(c.kind));
            size_t b = static_cast<size_t>(cell_outputs(c.kind));
            auto in = [&](size_t k) { return seg(r, ip + k); };
            auto outs = [&](size_t k) { return seg(r + 1, op + k); };
            switch (c.kind) {
            case CellKind::identity:
            case CellKind::dot:
            case CellKind::twist_pos:
            case CellKind::twist_neg:
                join(in(0), outs(0));
                break;
            case CellKind::crossing_pos:
            case CellKind::crossing_neg:
                join(in(0), outs(1));
                join(in(1), outs(0));
                break;
            case CellKind::cup:
            case CellKind::puc:
                join(outs(0), outs(1));
                break;
            case CellKind::cap:
            case CellKind::pac:
                join(in(0), in(1));
                break;
            case CellKind::mu:
                join(in(0), outs(0));
                join(in(1), outs(0));
                break;
            case CellKind::comul:
                join(in(0), outs(0));
                join(in(0), outs(1));
                break;
            case CellKind::unit:
            case CellKind::counit:
                break;
            case CellKind::act:
                join(in(1), outs(0));
                out.feet.push_back({in(0), in(1)});
                break;
            case CellKind::coact:
                join(in(0), outs(1));
                out.feet.push_back({outs(0), in(0)});
                break;
            case CellKind::dact:
                join(in(0), outs(0));
                out.feet.push_back({in(1), in(0)});
                break;
            case CellKind::dcoact:
                join(in(0), outs(0));
                out.feet.push_back({outs(1), in(0)});
                break;
            }
            ip += a;
            op += b;
        }
    }

    std::map<size_t, int> root_to_component;
    ComponentTrace& tr = out.trace;
    tr.segment_component.resize(out.levels.size());
    for (size_t l = 0; l < out.levels.size(); ++l) {
        for (size_t p = 0; p < out.levels[l].size(); ++p) {
            size_t root = uf.find(seg(l, p));
            auto it = root_to_component.find(root);
            int id;
            if (it == root_to_component.end()) {
                id = static_cast<int>(tr.component_role.size());
                root_to_component.emplace(root, id);
                tr.component_role.push_back(out.levels[l][p].color.role);
                tr.component_color.push_back(out.levels[l][p].color);
            } else {
                id = it->second;
            }
            tr.segment_component[l].push_back(id);
        }
    }
    // Map segment ids to components for feet and cycles.
    std::vector<int> seg_comp(total);
    for (size_t l = 0; l < out.levels.size(); ++l)
        for (size_t p = 0; p < out.levels[l].size(); ++p)
            seg_comp[seg(l, p)] = tr.segment_component[l][p];
    for (auto& f : out.feet) {
        f.band_segment = static_cast<size_t>(seg_comp[f.band_segment]);
        f.surface_segment = static_cast<size_t>(seg_comp[f.surface_segment]);
    }
    for (auto& s : out.cycle_segments)
        s = static_cast<size_t>(seg_comp[s]);
    return out;
}

int epsilon(const Wire& w) {
    return w.orientation == Orientation::down ? 1 : -1;
}

} // namespace

ComponentTrace trace_components(const Diagram& d) {
    return trace_all(d).trace;
}

int LinkSummary::full_index(int component) const {
    auto it = std::find(strand_components.begin(), strand_components.end(), component);
    if (it == strand_components.end())
        return -1;
    return static_cast<int>(it - strand_components.begin());
}

LinkSummary link_summary(const Diagram& d) {
    Traced t = trace_all(d);
    LinkSummary ls;
    ls.trace = t.trace;
    const ComponentTrace& tr = ls.trace;

    for (size_t c = 0; c < tr.count(); ++c) {
        Role r = tr.component_role[c];
        if (r != Role::bd)
            ls.strand_components.push_back(static_cast<int>(c));
        if (r == Role::h1 || r == Role::h2)
            ls.kirby_components.push_back(static_cast<int>(c));
        if (r == Role::sf)
            ++ls.surface_components;
    }
    size_t n = ls.strand_components.size();
    std::vector<int> index_of(tr.count(), -1);
    for (size_t i = 0; i < n; ++i)
        index_of[static_cast<size_t>(ls.strand_components[i])] = static_cast<int>(i);

    IntMatrix raw(n, std::vector<long long>(n, 0));
    for (size_t r = 0; r < d.rows.size(); ++r) {
        size_t ip = 0;
        for (const Cell& c : d.rows[r]) {
            size_t a = static_cast<size_t>(cell_inputs(c.kind));
            if (c.kind == CellKind::crossing_pos || c.kind == CellKind::crossing_neg) {
                int ca = tr.segment_component[r][ip];
                int cb = tr.segment_component[r][ip + 1];
                int ia = index_of[static_cast<size_t>(ca)];
                int ib = index_of[static_cast<size_t>(cb)];
                if (ia >= 0 && ib >= 0) {
                    // The calibrated convention: "/-" carries sign eps_l*eps_r, "/+" the opposite.
                    int sign = epsilon(t.levels[r][ip]) * epsilon(t.levels[r][ip + 1]);
                    if (c.kind == CellKind::crossing_pos)
                        sign = -sign;
                    if (ia == ib) {
                        raw[static_cast<size_t>(ia)][static_cast<size_t>(ia)] += sign;
                    } else {
                        raw[static_cast<size_t>(ia)][static_cast<size_t>(ib)] += sign;
                        raw[static_cast<size_t>(ib)][static_cast<size_t>(ia)] += sign;
                    }
                }
            } else if (c.kind == CellKind::twist_pos || c.kind == CellKind::twist_neg) {
                int ia = index_of[static_cast<size_t>(tr.segment_component[r][ip])];
                if (ia >= 0)
                    raw[static_cast<size_t>(ia)][static_cast<size_t>(ia)] += c.kind == CellKind::twist_pos ? 1 : -1;
            }
            ip += a;
        }
    }
    ls.full_matrix = raw;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (raw[i][j] % 2 != 0 && i < j)
                ls.warnings.push_back("odd crossing count between components " +
                                      std::to_string(ls.strand_components[i]) + " and " +
                                      std::to_string(ls.strand_components[j]));
            ls.full_matrix[i][j] = raw[i][j] / 2;
        }

    size_t k = ls.kirby_components.size();
    ls.linking_matrix.assign(k, std::vector<long long>(k, 0));
    for (size_t i = 0; i < k; ++i) {
        size_t fi = static_cast<size_t>(index_of[static_cast<size_t>(ls.kirby_components[i])]);
        ls.dotted.push_back(tr.component_role[static_cast<size_t>(ls.kirby_components[i])] == Role::h1);
        for (size_t j = 0; j < k; ++j) {
            size_t fj = static_cast<size_t>(index_of[static_cast<size_t>(ls.kirby_components[j])]);
            ls.linking_matrix[i][j] = ls.full_matrix[fi][fj];
        }
    }

    std::map<int, BandInfo> bands;
    for (size_t c = 0; c < tr.count(); ++c)
        if (tr.component_role[c] == Role::bd)
            bands[static_cast<int>(c)].band_component = static_cast<int>(c);
    for (const auto& f : t.feet)
        bands[static_cast<int>(f.band_segment)].feet.push_back(static_cast<int>(f.surface_segment));
    for (size_t s : t.cycle_segments)
        if (tr.component_role[s] == Role::bd)
            ++bands[static_cast<int>(s)].cycles;
    for (auto& [id, b] : bands) {
        std::set<int> distinct(b.feet.begin(), b.feet.end());
        int f = static_cast<int>(b.feet.size());
        int kk = static_cast<int>(distinct.size());
        if (f >= 2) {
            ls.s += f - kk;
            ls.omega += kk - 1;
        }
        if (f != 2 || b.cycles > 0)
            ls.warnings.push_back("band component " + std::to_string(id) + " has " + std::to_string(f) +
                                  " feet and " + std::to_string(b.cycles) +
                                  " cycles; counted as a spanning tree of single bands");
        ls.bands.push_back(b);
    }
    return ls;
}

ValidationReport validate(const Diagram& d) {
    ValidationReport rep;
    const Header& h = d.header;
    if (h.N < 1 || h.N > 255)
        rep.errors.push_back("N must lie in 1..255");
    if (h.H < 1)
        rep.errors.push_back("H generator must be positive");
    if (!rep.ok())
        return rep;

    std::vector<std::vector<Wire>> levels;
    try {
        levels = infer_levels(d);
    } catch (const DiagramTypeError& e) {
        rep.errors.push_back(e.what());
        return rep;
    }
    if (!levels.back().empty()) {
        rep.errors.push_back("open boundary: diagram is not closed");
        return rep;
    }

    bool needs_algebra = false;
    for (const auto& lv : levels)
        for (const auto& w : lv)
            if (w.color.role == Role::sf || w.color.role == Role::bd)
                needs_algebra = true;
    for (const auto& row : d.rows)
        for (const auto& c : row)
            if (c.kind == CellKind::unit || c.kind == CellKind::counit)
                needs_algebra = true;
    auto reduce = [&](int x) { return ((x % h.N) + h.N) % h.N; };
    auto in_h = [&](int x) {
        int v = 0;
        do {
            if (v == reduce(x))
                return true;
            v = reduce(v + h.H);
        } while (v != 0);
        return false;
    };
    if (h.c) {
        if (reduce(*h.c) == 0)
            rep.errors.push_back("frobenius c must be nonzero mod N");
        else if (!in_h(*h.c))
            rep.errors.push_back("frobenius c must lie in H");
    }
    if (h.g && in_h(*h.g))
        rep.errors.push_back("module must lie outside the subcategory (g is in H)");
    if (needs_algebra && (!h.c || !h.g))
        rep.errors.push_back("surface or band strands require 'frobenius c=' and 'module g=' header lines");

    LinkSummary ls = link_summary(d);
    const auto& roles = ls.trace.component_role;
    size_t n = ls.strand_components.size();
    for (size_t i = 0; i < n; ++i) {
        Role ri = roles[static_cast<size_t>(ls.strand_components[i])];
        if (ri == Role::h1 && ls.full_matrix[i][i] != 0)
            rep.errors.push_back("dotted component has nonzero framing (component " +
                                 std::to_string(ls.strand_components[i]) + ", framing " +
                                 std::to_string(ls.full_matrix[i][i]) + ")");
        for (size_t j = i + 1; j < n; ++j) {
            Role rj = roles[static_cast<size_t>(ls.strand_components[j])];
            long long lk = ls.full_matrix[i][j];
            if (lk == 0)
                continue;
            if (ri == Role::h1 && rj == Role::h1)
                rep.errors.push_back("dotted components " + std::to_string(ls.strand_components[i]) + " and " +
                                     std::to_string(ls.strand_components[j]) + " have nonzero linking");
            if ((ri == Role::h1 && rj == Role::sf) || (ri == Role::sf && rj == Role::h1))
                rep.warnings.push_back("surface component links a dotted component (components " +
                                       std::to_string(ls.strand_components[i]) + ", " +
                                       std::to_string(ls.strand_components[j]) +
                                       ", linking " + std::to_string(lk) + ")");
        }
    }
    rep.warnings.insert(rep.warnings.end(), ls.warnings.begin(), ls.warnings.end());
    return rep;
}

} // namespace kb
