/*
 * report.cpp
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

#include "report.hpp"

namespace kb {

namespace {

template <class T>
json opt_cyclo(const std::optional<T>& x) {
    return x ? cyclo_json(*x) : json(nullptr);
}

json int_set(const std::set<int>& s) {
    json out = json::array();
    for (int x : s)
        out.push_back(x);
    return out;
}

json check_json(const CheckReport& r) {
    json out = json::object();
    for (const auto& [name, ok] : r.checks)
        out[name] = ok;
    return out;
}

} // namespace

json cyclo_json(const CycloNumber& x) {
    json coeffs = json::array();
    for (const auto& c : x.coefficients())
        coeffs.push_back(c.get_str());
    return json{{"coeffs", coeffs}, {"text", x.to_string()}, {"float", x.float_string()}};
}

json inertia_json(const InertiaTriple& t) {
    return json{{"b_plus", t.b_plus}, {"b_minus", t.b_minus}, {"b_zero", t.b_zero}};
}

json matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (const auto& row : m)
        out.push_back(row);
    return out;
}

json eval_json(const Diagram& d, const CycloNumber& raw) {
    json coeffs = json::array();
    for (const auto& c : raw.coefficients())
        coeffs.push_back(c.get_str());
    return json{{"N", d.header.N}, {"raw", raw.to_string()}, {"raw_coeffs", coeffs}, {"float", raw.float_string()}};
}

json invariant_json(const InvariantReport& r) {
    json out;
    out["raw"] = cyclo_json(r.raw);
    out["inertia"] = inertia_json(r.inertia);
    out["linking_matrix"] = matrix_json(r.linking_matrix);
    out["s"] = r.s;
    out["omega"] = r.omega;
    out["delta_B"] = r.delta_B;
    out["delta_C"] = r.delta_C;
    out["delta_pp"] = r.delta_pp;
    out["k"] = opt_cyclo(r.k);
    out["kappa"] = opt_cyclo(r.kappa);
    auto den = r.denominator();
    out["denominator"] = opt_cyclo(den);
    out["value"] = opt_cyclo(r.value);
    out["float_value"] = r.float_value ? json(format_complex(*r.float_value)) : json(nullptr);
    out["warnings"] = r.warnings;
    out["errors"] = r.errors;
    return out;
}

json info_json(const CategoryParams& p, const Diagram* d) {
    json out;
    out["N"] = p.N;
    out["t"] = p.t;
    out["H"] = p.d;
    out["subgroup"] = p.subgroup();
    out["transparent_full"] = int_set(transparent_degrees(p, Scope::full));
    out["transparent_sub"] = int_set(transparent_degrees(p, Scope::sub));
    Deltas dl = deltas(p);
    out["delta_B"] = dl.delta_B;
    out["delta_C"] = dl.delta_C;
    out["delta_pp"] = dl.delta_pp;
    if (d) {
        json dj;
        ValidationReport vr = validate(*d);
        dj["rows"] = d->rows.size();
        dj["valid"] = vr.ok();
        dj["errors"] = vr.errors;
        dj["warnings"] = vr.warnings;
        if (vr.ok()) {
            LinkSummary ls = link_summary(*d);
            json comps = json::array();
            for (size_t i = 0; i < ls.trace.count(); ++i)
                comps.push_back(json{{"id", i}, {"color", color_token(ls.trace.component_color[i])}});
            dj["components"] = comps;
            dj["strand_components"] = ls.strand_components;
            dj["full_matrix"] = matrix_json(ls.full_matrix);
            dj["kirby_components"] = ls.kirby_components;
            dj["linking_matrix"] = matrix_json(ls.linking_matrix);
            dj["inertia"] = inertia_json(inertia(ls.linking_matrix));
            dj["surface_components"] = ls.surface_components;
            json bands = json::array();
            for (const auto& b : ls.bands)
                bands.push_back(json{{"component", b.band_component}, {"feet", b.feet}, {"cycles", b.cycles}});
            dj["bands"] = bands;
            dj["s"] = ls.s;
            dj["omega"] = ls.omega;
        }
        out["diagram"] = dj;
    }
    return out;
}

json verify_json(const CategoryParams& p, int c, int g, bool& passed) {
    json out;
    out["N"] = p.N;
    out["t"] = p.t;
    out["H"] = p.d;
    out["c"] = c;
    out["g"] = g;
    passed = true;
    json errors = json::array();
    FrobeniusData frob = frobenius_data(p, c);
    ModuleData mod = module_data(p, frob, g);
    CheckReport fr = verify_frobenius(p, frob);
    CheckReport mr = verify_module(p, frob, mod);
    out["frobenius"] = check_json(fr);
    out["module"] = check_json(mr);
    out["symmetry"] = check_json(frobenius_symmetry(p, frob));
    passed = fr.all() && mr.all();
    try {
        out["k"] = cyclo_json(cap_scalar(p, frob, mod));
    } catch (const CategoryError& e) {
        out["k"] = nullptr;
        errors.push_back(e.what());
        passed = false;
    }
    try {
        out["kappa"] = cyclo_json(cup_scalar(p, frob, mod));
    } catch (const CategoryError& e) {
        out["kappa"] = nullptr;
        errors.push_back(e.what());
        passed = false;
    }
    SwimReport sw = swim_check(p, frob, mod);
    out["swim"] = json{{"image_degrees", int_set(sw.image_degrees)},
                       {"b_transparent", sw.b_transparent},
                       {"fully_transparent", sw.fully_transparent}};
    if (!sw.b_transparent) {
        errors.push_back("swim condition fails");
        passed = false;
    }
    out["errors"] = errors;
    out["passed"] = passed;
    return out;
}

json move_json(const MoveSpec& m) {
    return json{{"kind", move_kind_name(m.kind)}, {"row", m.row},         {"col", m.col},
                {"over", m.over},                 {"variant", m.variant}, {"inverse", m.inverse}};
}

json fuzz_json(const FuzzResult& r, uint64_t seed, int steps, const InvarianceReport& inv) {
    json trace = json::array();
    for (const auto& st : r.trace) {
        json s;
        s["move"] = st.move ? move_json(*st.move) : json(nullptr);
        if (!st.note.empty())
            s["note"] = st.note;
        trace.push_back(s);
    }
    json out;
    out["seed"] = seed;
    out["steps"] = steps;
    out["trace"] = trace;
    out["start"] = serialize(r.start);
    out["result"] = serialize(r.result);
    out["raw_equal"] = inv.raw_equal;
    out["value_equal"] = inv.value_equal;
    out["before"] = invariant_json(inv.first);
    out["after"] = invariant_json(inv.second);
    return out;
}

json error_json(const std::string& kind, const std::string& message, const json& details) {
    return json{{"error", json{{"kind", kind}, {"message", message}, {"details", details}}}};
}

} // namespace kb
