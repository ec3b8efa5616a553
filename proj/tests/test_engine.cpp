/*
 * test_engine.cpp
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

#include "engine.hpp"
#include "fixtures.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace kb;

namespace {

bool band_free(const Diagram& d) {
    for (const auto& row : d.rows)
        for (const auto& c : row) {
            if (c.kind >= CellKind::mu)
                return false;
            if (c.created && c.created->role == Role::bd)
                return false;
        }
    return true;
}

Diagram with_dot(const Diagram& d, size_t level, size_t pos) {
    auto levels = infer_levels(d);
    Row r(levels[level].size(), make_cell(CellKind::identity));
    r[pos] = make_cell(CellKind::dot);
    Diagram out = d;
    out.rows.insert(out.rows.begin() + static_cast<long>(level), r);
    return out;
}

Row row_of(std::initializer_list<Cell> cells) { return Row(cells); }

const Cell I = make_cell(CellKind::identity);

EvalContext ctx6() {
    Header h;
    h.c = 2;
    h.g = 1;
    return EvalContext::from_header(h);
}

// Two 2-handles with framings a, b and linking l, built from twists and crossings.
Diagram two_component(int a, int b, int l) {
    Color h2{Role::h2, 0};
    Diagram d;
    d.rows.push_back(row_of({make_cup(CellKind::cup, h2), make_cup(CellKind::cup, h2)}));
    for (int i = 0; i < std::abs(a); ++i)
        d.rows.push_back(row_of({make_cell(a > 0 ? CellKind::twist_pos : CellKind::twist_neg), I, I, I}));
    for (int i = 0; i < std::abs(b); ++i)
        d.rows.push_back(row_of({I, I, I, make_cell(b > 0 ? CellKind::twist_pos : CellKind::twist_neg)}));
    for (int i = 0; i < 2 * l; ++i)
        d.rows.push_back(row_of({I, make_cell(CellKind::crossing_neg), I}));
    d.rows.push_back(row_of({make_cell(CellKind::pac), make_cell(CellKind::pac)}));
    return d;
}

} // namespace

TEST_CASE("state-sum oracle agrees on band-free fixtures") {
    int checked = 0;
    for (const auto& name : fixture_names()) {
        Diagram d = fixture(name).diagram();
        if (!band_free(d))
            continue;
        EvalContext ctx = EvalContext::from_header(d.header);
        INFO(name);
        CHECK(eval_closed(d, ctx) == statesum_eval(d, ctx));
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("state-sum oracle agrees on random band-free diagrams") {
    std::mt19937_64 rng(31337);
    EvalContext ctx = ctx6();
    for (int i = 0; i < 150; ++i) {
        Diagram d = kbtest::random_band_free(rng, {3, 12, true, true, true, true});
        d.header.c = 2;
        d.header.g = 1;
        CHECK(eval_closed(d, ctx) == statesum_eval(d, ctx));
    }
}

TEST_CASE("state-sum refuses banded diagrams") {
    Diagram d = fixture("torus").diagram();
    CHECK_THROWS_AS(statesum_eval(d, EvalContext::from_header(d.header)), EvalError);
}

TEST_CASE("Gauss-sum oracle on twisted and linked 2-handles") {
    EvalContext ctx = ctx6();
    std::vector<int> h{0, 2, 4};
    for (int a = -3; a <= 3; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int l = 0; l <= 2; ++l) {
                Diagram d = two_component(a, b, l);
                std::complex<double> want = kbtest::quadratic_sum({{a, l}, {l, b}}, {h, h}, 6, 1);
                INFO(a << " " << b << " " << l);
                CHECK(kbtest::close(eval_closed(d, ctx).to_complex(), want, 1e-8));
            }
}

TEST_CASE("encirclement projects onto the transparent part") {
    for (int n : {4, 5, 6, 8, 12}) {
        for (int t : {1, 2, 3}) {
            if (t >= n)
                continue;
            for (int x = 0; x < n; ++x) {
                std::string text = "category N=" + std::to_string(n) + " t=" + std::to_string(t) +
                                   " H=1\ndiagram\ncup:h1 cup:k" + std::to_string(x) +
                                   "\n| /- |\n| /- |\npac pac\nend\n";
                Diagram d = parse_diagram(text);
                bool transparent = (2LL * t * x) % n == 0;
                INFO(n << " " << t << " " << x);
                CHECK(eval_closed(d) == CycloNumber::from_integer(n, transparent ? n : 0));
            }
        }
    }
}

TEST_CASE("disjoint union is multiplicative") {
    std::mt19937_64 rng(8);
    EvalContext ctx = ctx6();
    const auto& names = fixture_names();
    for (int i = 0; i < 30; ++i) {
        Diagram a = fixture(names[rng() % names.size()]).diagram();
        Diagram b = kbtest::random_band_free(rng);
        b.header = a.header;
        b.header.c = 2;
        b.header.g = 1;
        a.header = b.header;
        CHECK(eval_closed(disjoint_union(a, b), ctx) == eval_closed(a, ctx) * eval_closed(b, ctx));
    }
}

TEST_CASE("basepoint insertion anywhere changes nothing") {
    for (const auto& name : fixture_names()) {
        Diagram d = fixture(name).diagram();
        EvalContext ctx = EvalContext::from_header(d.header);
        CycloNumber base = eval_closed(d, ctx);
        auto levels = infer_levels(d);
        for (size_t l = 0; l < levels.size(); ++l)
            for (size_t p = 0; p < levels[l].size(); ++p) {
                INFO(name << " level " << l << " pos " << p);
                CHECK(eval_closed(with_dot(d, l, p), ctx) == base);
            }
    }
}

TEST_CASE("mirror image evaluates to the conjugate") {
    std::mt19937_64 rng(77);
    EvalContext ctx = ctx6();
    for (int i = 0; i < 60; ++i) {
        Diagram d = kbtest::random_band_free(rng);
        CHECK(eval_closed(mirror(d), ctx) == eval_closed(d, ctx).conj());
    }
    for (const auto& name : fixture_names()) {
        Diagram d = fixture(name).diagram();
        EvalContext c = EvalContext::from_header(d.header);
        CHECK(eval_closed(mirror(d), c) == eval_closed(d, c).conj());
    }
}

TEST_CASE("local fragment identities") {
    EvalContext ctx = ctx6();
    std::vector<Wire> wires{
        {Color{Role::h2, 0}, Orientation::down}, {Color{Role::h2, 0}, Orientation::up},
        {Color{Role::h1, 0}, Orientation::down}, {Color{Role::probe, 1}, Orientation::up},
        {Color{Role::sf, 0}, Orientation::down}, {Color{Role::sf, 0}, Orientation::up},
    };
    Cell pos = make_cell(CellKind::crossing_pos), neg = make_cell(CellKind::crossing_neg);

    SUBCASE("R2 both ways") {
        for (const auto& a : wires)
            for (const auto& b : wires) {
                GradedMap id = GradedMap::identity(6, ctx.objects_for({a, b}));
                CHECK(eval_morphism({row_of({pos}), row_of({neg})}, ctx, {a, b}) == id);
                CHECK(eval_morphism({row_of({neg}), row_of({pos})}, ctx, {a, b}) == id);
            }
    }
    SUBCASE("R3") {
        for (size_t i = 0; i < wires.size(); i += 2)
            for (size_t j = 1; j < wires.size(); j += 2)
                for (const Cell& c : {pos, neg}) {
                    std::vector<Wire> in{wires[i], wires[j], wires[(i + j) % wires.size()]};
                    GradedMap lhs = eval_morphism(
                        {row_of({c, I}), row_of({I, c}), row_of({c, I})}, ctx, in);
                    GradedMap rhs = eval_morphism(
                        {row_of({I, c}), row_of({c, I}), row_of({I, c})}, ctx, in);
                    CHECK(lhs == rhs);
                }
    }
    SUBCASE("curl equals a twist") {
        for (const Color& col : {Color{Role::h2, 0}, Color{Role::probe, 1}, Color{Role::probe, 2},
                                 Color{Role::h1, 0}}) {
            Wire w{col, Orientation::down};
            GradedMap curl = eval_morphism({row_of({I, make_cup(CellKind::cup, col)}), row_of({neg, I}),
                                            row_of({make_cell(CellKind::pac), I})},
                                           ctx, {w});
            CHECK(curl == eval_morphism({row_of({make_cell(CellKind::twist_neg)})}, ctx, {w}));
            GradedMap curl2 = eval_morphism({row_of({I, make_cup(CellKind::cup, col)}), row_of({pos, I}),
                                             row_of({make_cell(CellKind::pac), I})},
                                            ctx, {w});
            CHECK(curl2 == eval_morphism({row_of({make_cell(CellKind::twist_pos)})}, ctx, {w}));
        }
    }
    SUBCASE("twists cancel and commute with dots") {
        for (const auto& w : wires) {
            GradedMap id = GradedMap::identity(6, ctx.objects_for({w}));
            CHECK(eval_morphism({row_of({make_cell(CellKind::twist_pos)}), row_of({make_cell(CellKind::twist_neg)})},
                                ctx, {w}) == id);
            CHECK(eval_morphism({row_of({make_cell(CellKind::dot)})}, ctx, {w}) == id);
        }
    }
    SUBCASE("band splitting and merging") {
        Wire sf{Color{Role::sf, 0}, Orientation::down};
        GradedMap id = GradedMap::identity(6, ctx.objects_for({sf}));
        GradedMap cap = eval_morphism({row_of({make_cell(CellKind::coact)}), row_of({make_cell(CellKind::act)})}, ctx,
                                      {sf});
        CHECK(cap == id.scaled(CycloNumber::from_integer(6, 2)));
        Wire bd{Color{Role::bd, 0}, Orientation::down};
        GradedMap idb = GradedMap::identity(6, ctx.objects_for({bd}));
        CHECK(eval_morphism({row_of({make_cell(CellKind::unit), I}), row_of({make_cell(CellKind::mu)})}, ctx, {bd}) ==
              idb);
        CHECK(eval_morphism({row_of({make_cell(CellKind::comul)}), row_of({make_cell(CellKind::counit), I})}, ctx,
                            {bd}) == idb);
    }
    SUBCASE("double braiding of a band with a dotted strand") {
        // F has degrees 2 and 4, which are not transparent.
        Wire bd{Color{Role::bd, 0}, Orientation::down};
        Wire h1{Color{Role::h1, 0}, Orientation::down};
        GradedMap dbl = eval_morphism({row_of({pos}), row_of({pos})}, ctx, {bd, h1});
        CHECK_FALSE(dbl == GradedMap::identity(6, ctx.objects_for({bd, h1})));
    }
}

TEST_CASE("budget enforcement") {
    Diagram d = fixture("unknot_sf_3").diagram();
    EvalContext ctx = EvalContext::from_header(d.header, 2);
    CHECK_THROWS_AS(eval_closed(d, ctx), BudgetExceeded);
    CHECK(estimated_state_count(d, ctx) > 2);
    CHECK(estimated_state_count(d, EvalContext::from_header(d.header)) <
          static_cast<double>(default_budget()));
}

TEST_CASE("context construction") {
    Header h;
    h.c = 1;
    h.g = 1;
    CHECK_THROWS_AS(EvalContext::from_header(h), CategoryError);
    Header ok;
    EvalContext ctx = EvalContext::from_header(ok);
    CHECK_FALSE(ctx.frob.has_value());
    CHECK(ctx.object_for(Wire{Color{Role::h2, 0}, Orientation::down}).dim() == 3);
    CHECK(ctx.object_for(Wire{Color{Role::h1, 0}, Orientation::down}).dim() == 6);
    CHECK(ctx.object_for(Wire{Color{Role::probe, 4}, Orientation::up}).degree(0) == 2);
}
