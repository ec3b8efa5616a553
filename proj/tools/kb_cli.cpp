/*
 * kb_cli.cpp
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

#include "kirbyband.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string input;
    bool as_json = false;
    std::optional<int> N, t, H, c, g;
    size_t budget = 0;
    std::string move;
    std::string at = "0,0";
    int over = -1;
    int variant = 0;
    bool inverse = false;
    uint64_t seed = 0;
    int steps = 10;
    std::string fixture_name;
};

// Owns a C-API string.
struct Owned {
    char* p = nullptr;
    ~Owned() { kb_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Handle {
    kb_diagram* d = nullptr;
    ~Handle() { kb_diagram_free(d); }
};

class DomainFailure : public std::exception {};

class UsageFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void fail(const Options& o, kb_status st) {
    if (o.as_json) {
        std::string doc = kb_last_error_json();
        std::cout << (doc.empty() ? json{{"error", {{"kind", "internal"}, {"message", kb_status_string(st)}}}}.dump(2)
                                  : json::parse(doc).dump(2))
                  << "\n";
    } else {
        std::cerr << "error: " << kb_status_string(st) << ": " << kb_last_error() << "\n";
    }
    throw DomainFailure();
}

void check(const Options& o, kb_status st) {
    if (st != KB_OK)
        fail(o, st);
}

kb_params params_of(const Options& o) {
    kb_params p{};
    auto take = [&](const std::optional<int>& v, unsigned bit, int& slot) {
        if (v) {
            p.set |= bit;
            slot = *v;
        }
    };
    take(o.N, KB_PARAM_N, p.N);
    take(o.t, KB_PARAM_T, p.t);
    take(o.H, KB_PARAM_H, p.H);
    take(o.c, KB_PARAM_C, p.c);
    take(o.g, KB_PARAM_G, p.g);
    return p;
}

std::optional<std::string> fixture_of(const std::string& input) {
    const std::string prefix = "fixtures:";
    if (input.compare(0, prefix.size(), prefix) == 0)
        return input.substr(prefix.size());
    return std::nullopt;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw UsageFailure("cannot read '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

void load(const Options& o, Handle& h) {
    if (auto name = fixture_of(o.input))
        check(o, kb_fixture_load(name->c_str(), &h.d));
    else
        check(o, kb_diagram_parse(read_input(o.input).c_str(), &h.d));
    kb_params p = params_of(o);
    if (p.set)
        check(o, kb_diagram_set_params(h.d, &p));
}

// Fixture expectations ride along with reports on fixture inputs.
std::optional<json> fixture_info(const Options& o) {
    auto name = fixture_of(o.input);
    if (!name)
        return std::nullopt;
    Owned s;
    if (kb_fixture_info_json(name->c_str(), &s.p) != KB_OK)
        return std::nullopt;
    return json::parse(s.str());
}

std::string cyclo_text(const json& v) {
    if (v.is_null())
        return "none";
    return v["text"].get<std::string>() + "  (~ " + v["float"].get<std::string>() + ")";
}

void print_fixture_note(const json& f) {
    if (f["disputed"].get<bool>())
        std::cout << "fixture note (disputed): " << f["note"].get<std::string>() << "\n";
}

int cmd_eval(const Options& o) {
    Handle h;
    load(o, h);
    Owned s;
    check(o, kb_evaluate_json(h.d, o.budget, &s.p));
    json r = json::parse(s.str());
    auto fx = fixture_info(o);
    if (fx)
        r["fixture"] = *fx;
    if (o.as_json) {
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    std::cout << "raw: " << r["raw"].get<std::string>() << "\n";
    std::cout << "float (approx): " << r["float"].get<std::string>() << "\n";
    if (fx)
        print_fixture_note(*fx);
    return 0;
}

void print_invariant(const json& r) {
    const json& in = r["inertia"];
    std::cout << "raw: " << cyclo_text(r["raw"]) << "\n";
    std::cout << "inertia (b+, b-, b0): (" << in["b_plus"] << ", " << in["b_minus"] << ", " << in["b_zero"] << ")\n";
    std::cout << "linking matrix: " << r["linking_matrix"].dump() << "\n";
    std::cout << "self bands s: " << r["s"] << ", other bands omega: " << r["omega"] << "\n";
    std::cout << "Delta_B: " << r["delta_B"] << ", Delta_C: " << r["delta_C"] << ", Delta'': " << r["delta_pp"]
              << "\n";
    std::cout << "k: " << cyclo_text(r["k"]) << "\n";
    std::cout << "kappa: " << cyclo_text(r["kappa"]) << "\n";
    std::cout << "denominator: " << cyclo_text(r["denominator"]) << "\n";
    std::cout << "value: " << cyclo_text(r["value"]) << "\n";
    for (const auto& w : r["warnings"])
        std::cout << "warning: " << w.get<std::string>() << "\n";
    for (const auto& e : r["errors"])
        std::cout << "error: " << e.get<std::string>() << "\n";
}

int cmd_invariant(const Options& o) {
    Handle h;
    load(o, h);
    Owned s;
    kb_status st = kb_invariant_json(h.d, o.budget, &s.p);
    if (st == KB_ERR_ALGEBRA && !o.as_json) {
        json e = json::parse(kb_last_error_json());
        if (e["error"].contains("report"))
            print_invariant(e["error"]["report"]);
    }
    check(o, st);
    json r = json::parse(s.str());
    auto fx = fixture_info(o);
    if (fx)
        r["fixture"] = *fx;
    if (o.as_json) {
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    print_invariant(r);
    if (fx)
        print_fixture_note(*fx);
    return 0;
}

int cmd_info(const Options& o) {
    Handle h;
    if (!o.input.empty())
        load(o, h);
    kb_params p = params_of(o);
    Owned s;
    check(o, kb_info_json(h.d, &p, &s.p));
    json r = json::parse(s.str());
    if (o.as_json) {
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    std::cout << "N=" << r["N"] << " t=" << r["t"] << " H=" << r["H"] << "\n";
    std::cout << "subgroup: " << r["subgroup"].dump() << "\n";
    std::cout << "transparent (full): " << r["transparent_full"].dump() << "\n";
    std::cout << "transparent (subgroup): " << r["transparent_sub"].dump() << "\n";
    std::cout << "Delta_B: " << r["delta_B"] << ", Delta_C: " << r["delta_C"] << ", Delta'': " << r["delta_pp"]
              << "\n";
    if (r.contains("diagram")) {
        const json& d = r["diagram"];
        std::cout << "rows: " << d["rows"] << ", valid: " << (d["valid"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& e : d["errors"])
            std::cout << "error: " << e.get<std::string>() << "\n";
        for (const auto& w : d["warnings"])
            std::cout << "warning: " << w.get<std::string>() << "\n";
        if (d.contains("components")) {
            for (const auto& c : d["components"])
                std::cout << "component " << c["id"] << ": " << c["color"].get<std::string>() << "\n";
            std::cout << "linking matrix: " << d["linking_matrix"].dump() << "\n";
            std::cout << "s: " << d["s"] << ", omega: " << d["omega"] << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options& o) {
    Handle h;
    if (!o.input.empty())
        load(o, h);
    kb_params p = params_of(o);
    Owned s;
    kb_status st = kb_verify_json(h.d, &p, &s.p);
    if (!s.p)
        check(o, st);
    json r = json::parse(s.str());
    if (o.as_json) {
        std::cout << r.dump(2) << "\n";
    } else {
        for (const char* group : {"frobenius", "module"})
            for (const auto& [name, ok] : r[group].items())
                std::cout << (ok.get<bool>() ? "PASS " : "FAIL ") << group << "." << name << "\n";
        std::cout << "k: " << cyclo_text(r["k"]) << "\n";
        std::cout << "kappa: " << cyclo_text(r["kappa"]) << "\n";
        std::cout << "swim image degrees: " << r["swim"]["image_degrees"].dump()
                  << ", B-transparent: " << (r["swim"]["b_transparent"].get<bool>() ? "yes" : "no")
                  << ", fully transparent: " << (r["swim"]["fully_transparent"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& e : r["errors"])
            std::cout << "error: " << e.get<std::string>() << "\n";
    }
    return st == KB_OK ? 0 : kExitDomain;
}

std::pair<size_t, size_t> parse_at(const std::string& at) {
    auto comma = at.find(',');
    if (comma == std::string::npos)
        throw UsageFailure("--at expects <row>,<col>");
    try {
        long r = std::stol(at.substr(0, comma));
        long c = std::stol(at.substr(comma + 1));
        if (r < 0 || c < 0)
            throw UsageFailure("--at expects nonnegative indices");
        return {static_cast<size_t>(r), static_cast<size_t>(c)};
    } catch (const std::logic_error&) {
        throw UsageFailure("--at expects <row>,<col>");
    }
}

int cmd_move(const Options& o) {
    if (o.move.empty())
        throw UsageFailure("move needs --move <kind>");
    auto [row, col] = parse_at(o.at);
    Handle h;
    load(o, h);
    kb_move m{o.move.c_str(), row, col, o.over, o.variant, o.inverse ? 1 : 0};
    Handle out;
    kb_status st = kb_apply_move(h.d, &m, &out.d);
    if (st == KB_ERR_ARGUMENT)
        throw UsageFailure(kb_last_error());
    check(o, st);
    Owned text;
    check(o, kb_diagram_serialize(out.d, &text.p));
    if (o.as_json) {
        json r{{"move",
                {{"kind", o.move}, {"row", row}, {"col", col}, {"over", o.over}, {"variant", o.variant},
                 {"inverse", o.inverse}}},
               {"diagram", text.str()}};
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << text.str();
    }
    return 0;
}

int cmd_fuzz(const Options& o) {
    Handle h;
    load(o, h);
    Owned s;
    check(o, kb_fuzz_json(h.d, o.seed, o.steps, &s.p));
    json r = json::parse(s.str());
    if (o.as_json) {
        std::cout << r.dump(2) << "\n";
    } else {
        int i = 0;
        for (const auto& st : r["trace"]) {
            std::cout << "step " << i++ << ": ";
            if (st["move"].is_null()) {
                std::cout << "skipped (" << st.value("note", std::string()) << ")\n";
                continue;
            }
            const json& m = st["move"];
            std::cout << m["kind"].get<std::string>() << " at " << m["row"] << "," << m["col"];
            if (m["over"].get<int>() >= 0)
                std::cout << " over " << m["over"];
            if (m["variant"].get<int>())
                std::cout << " variant " << m["variant"];
            if (m["inverse"].get<bool>())
                std::cout << " inverse";
            std::cout << "\n";
        }
        std::cout << "value before: " << cyclo_text(r["before"]["value"]) << "\n";
        std::cout << "value after: " << cyclo_text(r["after"]["value"]) << "\n";
        std::cout << "invariant preserved: " << (r["value_equal"].get<bool>() ? "yes" : "no") << "\n";
    }
    return r["value_equal"].get<bool>() ? 0 : kExitDomain;
}

int cmd_fixtures_list(const Options& o) {
    Owned s;
    check(o, kb_fixture_names_json(&s.p));
    json names = json::parse(s.str());
    if (o.as_json) {
        std::cout << names.dump(2) << "\n";
        return 0;
    }
    for (const auto& n : names)
        std::cout << n.get<std::string>() << "\n";
    return 0;
}

int cmd_fixtures_emit(const Options& o) {
    Owned s;
    check(o, kb_fixture_text(o.fixture_name.c_str(), &s.p));
    if (o.as_json)
        std::cout << json{{"name", o.fixture_name}, {"text", s.str()}}.dump(2) << "\n";
    else
        std::cout << s.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kirbyband: invariants of surfaces in 4-dimensional handlebodies from banded Kirby diagrams"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool input_required) {
        auto* in = sub->add_option("input", o.input, "diagram file, '-' for stdin, or fixtures:<name>");
        if (input_required)
            in->required();
        sub->add_flag("--json", o.as_json, "machine-readable output");
        sub->add_option("--N", o.N, "cyclic group order");
        sub->add_option("--t", o.t, "bicharacter exponent");
        sub->add_option("--H", o.H, "generator of the subgroup H");
        sub->add_option("--c", o.c, "frobenius parameter");
        sub->add_option("--g", o.g, "module degree");
        sub->add_option("--budget", o.budget, "maximum live basis states (default: KB_STATE_BUDGET or 4000000)");
    };

    auto* eval = app.add_subcommand("eval", "evaluate a closed diagram");
    add_common(eval, true);
    auto* inv = app.add_subcommand("invariant", "normalized invariant with all factors");
    add_common(inv, true);
    auto* info = app.add_subcommand("info", "category facts and diagram summary");
    add_common(info, false);
    auto* verify = app.add_subcommand("verify", "check the algebra data and the scalar conditions");
    add_common(verify, false);
    auto* move = app.add_subcommand("move", "apply one move and print the new diagram");
    add_common(move, true);
    move->add_option("--move", o.move, "move kind")->required();
    move->add_option("--at", o.at, "<row>,<col>");
    move->add_option("--over", o.over, "target component id for slides");
    move->add_option("--variant", o.variant, "template variant");
    move->add_flag("--inverse", o.inverse, "remove the pattern instead of inserting it");
    auto* fz = app.add_subcommand("fuzz", "apply random moves and compare invariants");
    add_common(fz, true);
    fz->add_option("--seed", o.seed, "random seed");
    fz->add_option("--steps", o.steps, "number of moves")->check(CLI::NonNegativeNumber);
    auto* fixtures = app.add_subcommand("fixtures", "builtin diagrams");
    fixtures->require_subcommand(1);
    auto* list = fixtures->add_subcommand("list", "list fixture names");
    list->add_flag("--json", o.as_json, "machine-readable output");
    auto* emit = fixtures->add_subcommand("emit", "print a fixture's diagram text");
    emit->add_option("name", o.fixture_name, "fixture name")->required();
    emit->add_flag("--json", o.as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (eval->parsed())
            return cmd_eval(o);
        if (inv->parsed())
            return cmd_invariant(o);
        if (info->parsed())
            return cmd_info(o);
        if (verify->parsed())
            return cmd_verify(o);
        if (move->parsed())
            return cmd_move(o);
        if (fz->parsed())
            return cmd_fuzz(o);
        if (list->parsed())
            return cmd_fixtures_list(o);
        if (emit->parsed())
            return cmd_fixtures_emit(o);
    } catch (const DomainFailure&) {
        return kExitDomain;
    } catch (const UsageFailure& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
