/*
 * acceptance.cpp
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

// One PASS/FAIL line per acceptance criterion. Expected values are computed
// here from first principles, not read from the fixture table.

#include "fixtures.hpp"
#include "moves.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace kb;

namespace {

constexpr int N = 6;

CycloNumber num(long long v) { return CycloNumber::from_integer(N, v); }
CycloNumber z(long long k) { return CycloNumber::zeta_pow(N, k); }

// Collects the first few failure reasons of a criterion.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 4)
            failures.push_back(what);
        if (!ok)
            ++failed;
    }
    int failed = 0;
};

Diagram fx(const std::string& name) { return fixture(name).diagram(); }

std::string show(const CycloNumber& x) { return x.to_string(); }

void c1(Check& c) {
    InvariantReport r = invariant(fx("cp2"));
    CycloNumber want = num(1) + num(2) * z(2);
    c.expect(r.raw == want, "raw " + show(r.raw) + " != 1+2z^2");
    c.expect(kbtest::close(r.raw.to_complex(), {0, std::sqrt(3.0)}, 1e-9), "float is not sqrt(3) i");
    c.expect(r.value && *r.value == r.raw, "normalized value differs from raw");
}

void c2(Check& c) {
    CycloNumber a = invariant(fx("cp2")).raw, b = invariant(fx("cp2_bar")).raw;
    c.expect(b == a.conj(), "cp2_bar raw " + show(b) + " is not the conjugate of " + show(a));
}

void c3(Check& c) {
    CycloNumber g = num(1) + num(2) * z(2);
    for (int n = 0; n <= 5; ++n) {
        CycloNumber raw = invariant(fx("nE_" + std::to_string(n))).raw;
        CycloNumber want = n % 3 == 0 ? num(2) * g : g + num(2) - z(1);
        std::complex<double> fl = n % 3 == 0 ? std::complex<double>(0, 2 * std::sqrt(3.0))
                                             : std::complex<double>(1.5, std::sqrt(3.0) / 2);
        c.expect(raw == want, "nE_" + std::to_string(n) + " raw " + show(raw));
        c.expect(kbtest::close(raw.to_complex(), fl, 1e-9), "nE_" + std::to_string(n) + " float mismatch");
    }
}

void c4(Check& c) {
    InvariantReport r = invariant(fx("s2xc"));
    c.expect(r.raw == num(3), "raw " + show(r.raw));
    c.expect(r.value && *r.value == num(1), "value is not 1");
    c.expect(r.inertia.b_zero == 1, "b0 != 1");
    c.expect(r.delta_B == 3, "Delta_B != 3");
}

void c5(Check& c) {
    InvariantReport e = invariant(fx("empty"));
    c.expect(e.value && *e.value == num(1), "empty != 1");
    for (int n = 1; n <= 3; ++n) {
        InvariantReport r = invariant(fx("unknot_sf_" + std::to_string(n)));
        c.expect(r.raw == num(1 << n) && r.value && *r.value == num(1 << n),
                 "unlink of " + std::to_string(n) + " gives " + show(r.raw));
    }
    InvariantReport t = invariant(fx("torus"));
    c.expect(t.raw == num(2), "torus raw " + show(t.raw));
    c.expect(t.value && *t.value == CycloNumber::from_rational(N, Rational(1, 2)), "torus value is not 1/2");
    InvariantReport s = invariant(fx("spun_trefoil"));
    c.expect(s.value && *s.value == num(1),
             "spun trefoil value " + (s.value ? show(*s.value) : std::string("none")) + " (raw " + show(s.raw) +
                 ", s=" + std::to_string(s.s) + ", omega=" + std::to_string(s.omega) + ")");
}

void c6(Check& c) {
    CategoryParams p{N, 1, 2};
    FrobeniusData fd = frobenius_data(p, 2);
    ModuleData md = module_data(p, fd, 1);
    for (const auto& [name, ok] : verify_frobenius(p, fd).checks)
        c.expect(ok, "frobenius axiom " + name);
    for (const auto& [name, ok] : verify_module(p, fd, md).checks)
        c.expect(ok, "module axiom " + name);
    CycloNumber k = cap_scalar(p, fd, md), kappa = cup_scalar(p, fd, md);
    c.expect(k == num(2), "k = " + show(k));
    c.expect(kappa == num(2), "kappa = " + show(kappa));
    SwimReport sw = swim_check(p, fd, md);
    bool in_zero = true;
    for (int d : sw.image_degrees)
        in_zero = in_zero && d == 0;
    c.expect(in_zero, "swim image has nonzero degrees");
    c.expect(sw.b_transparent, "swim image is not B-transparent");
}

void c7(Check& c) {
    for (int x = 0; x < N; ++x) {
        bool transparent = true;
        for (int y = 0; y < N; ++y)
            transparent = transparent && (2 * x * y) % N == 0;
        CycloNumber raw = invariant(fx("encircle_" + std::to_string(x))).raw;
        c.expect(raw == num(transparent ? N : 0), "encircle_" + std::to_string(x) + " gives " + show(raw));
    }
}

void c8(Check& c) {
    InvariantReport h = invariant(fx("hopf_stab"));
    Deltas dl = deltas(CategoryParams{N, 1, 2});
    c.expect(h.raw == num(dl.delta_C * dl.delta_pp) && h.raw == num(6), "dotted Hopf evaluates to " + show(h.raw));
    for (const auto& name : fixture_names()) {
        CycloNumber v = *invariant(fx(name)).value;
        for (const char* stab : {"blank_stab", "hopf_stab"}) {
            InvariantReport u = invariant(disjoint_union(fx(name), fx(stab)));
            c.expect(u.value && *u.value == v, name + " with " + stab);
        }
    }
}

void c9(Check& c) {
    int runs = 0;
    for (const char* name : {"cp2", "torus", "s2xc"}) {
        Diagram d = fx(name);
        for (uint64_t seed = 0; seed < 50; ++seed) {
            FuzzResult r = fuzz(d, seed, 10);
            InvarianceReport inv = check_invariance(d, r.result);
            c.expect(inv.value_equal, std::string(name) + " seed " + std::to_string(seed));
            ++runs;
        }
    }
    c.expect(runs == 150, "run count");
}

void c10(Check& c) {
    int count = 0;
    for (const auto& name : fixture_names()) {
        Diagram d = fx(name);
        EvalContext ctx = EvalContext::from_header(d.header);
        try {
            c.expect(eval_closed(d, ctx) == statesum_eval(d, ctx), "fixture " + name);
            ++count;
        } catch (const EvalError&) {
            // banded fixture
        }
    }
    c.expect(count >= 18, "too few band-free fixtures");
    std::mt19937_64 rng(20260101);
    Header h;
    h.c = 2;
    h.g = 1;
    EvalContext ctx = EvalContext::from_header(h);
    for (int i = 0; i < 100; ++i) {
        Diagram d = kbtest::random_band_free(rng, {3, 12, true, true, true, true});
        d.header = h;
        c.expect(eval_closed(d, ctx) == statesum_eval(d, ctx), "random diagram " + std::to_string(i));
    }
}

void c11(Check& c) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        size_t n = 1 + rng() % 6;
        auto m = kbtest::random_symmetric(rng, n, -5, 5);
        auto s = kbtest::eigen_signs(m);
        auto t = inertia(m);
        c.expect(t.b_plus == s.plus && t.b_minus == s.minus && t.b_zero == s.zero,
                 "matrix " + std::to_string(i));
    }
    c.expect(inertia({{-1}}) == InertiaTriple{0, 1, 0}, "[[-1]]");
}

void c12(Check& c) {
    for (const auto& name : fixture_names()) {
        Diagram d = fx(name);
        c.expect(parse_diagram(serialize(d)) == d, "round trip " + name);
        EvalContext ctx = EvalContext::from_header(d.header);
        CycloNumber base = eval_closed(d, ctx);
        auto levels = infer_levels(d);
        for (size_t l = 0; l < levels.size(); ++l)
            for (size_t p = 0; p < levels[l].size(); ++p) {
                Row r(levels[l].size(), make_cell(CellKind::identity));
                r[p] = make_cell(CellKind::dot);
                Diagram e = d;
                e.rows.insert(e.rows.begin() + static_cast<long>(l), r);
                c.expect(eval_closed(e, ctx) == base, "dot in " + name);
            }
    }
    CategoryParams p{N, 1, 2};
    FrobeniusData fd = frobenius_data(p, 2);
    ModuleData md = module_data(p, fd, 1);
    struct Case {
        std::string name;
        GradedObject x, xd;
        PairingMaps pm;
    };
    GradedObject C = kirby_object(p, Scope::full), B = kirby_object(p, Scope::sub);
    std::vector<Case> cases{{"B_C", C, dual_object(p, C), pairing_maps(p, C)},
                            {"B_B", B, dual_object(p, B), pairing_maps(p, B)},
                            {"F", fd.F, fd.F, frobenius_pairings(p, fd)},
                            {"M", md.M, md.Mdual, pairing_maps(p, md.M)}};
    for (const auto& k : cases) {
        GradedMap idx = GradedMap::identity(N, {k.x}), idd = GradedMap::identity(N, {k.xd});
        c.expect(compose(tensor(idx, k.pm.ev), tensor(k.pm.coev, idx)) == idx, k.name + " ev/coev on X");
        c.expect(compose(tensor(k.pm.ev, idd), tensor(idd, k.pm.coev)) == idd, k.name + " ev/coev on X*");
        c.expect(compose(tensor(k.pm.ev_left, idx), tensor(idx, k.pm.coev_left)) == idx, k.name + " left on X");
        c.expect(compose(tensor(idd, k.pm.ev_left), tensor(k.pm.coev_left, idd)) == idd, k.name + " left on X*");
    }
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> all{
        {1, "CP2 anchor", c1},
        {2, "mirror CP2 is the conjugate", c2},
        {3, "nE family", c3},
        {4, "S2 x C anchor", c4},
        {5, "surface anchors (empty, unlinks, torus, spun trefoil)", c5},
        {6, "algebra data: axioms, k = kappa = 2, swim image", c6},
        {7, "encirclement", c7},
        {8, "stabilization consistency", c8},
        {9, "move invariance fuzz (50 seeds x 10 moves on cp2, torus, s2xc)", c9},
        {10, "state-sum oracle equivalence", c10},
        {11, "inertia against eigen signs", c11},
        {12, "round trip, basepoint dots, zig-zags", c12},
    };
    int failed = 0;
    for (const auto& cr : all) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(secs < 5.0, "took longer than 5 s");
        std::ostringstream line;
        line << (c.failed ? "FAIL" : "PASS") << " criterion " << cr.id << ": " << cr.title;
        line << " [" << std::fixed;
        line.precision(2);
        line << secs << " s]";
        for (const auto& f : c.failures)
            line << "\n    " << f;
        std::printf("%s\n", line.str().c_str());
        failed += c.failed ? 1 : 0;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
