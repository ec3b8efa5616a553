/*
 * capi.cpp
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

#include "fixtures.hpp"
#include "report.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>

struct kb_diagram {
    kb::Diagram d;
};

namespace {

using kb::json;

thread_local std::string g_last_error;
thread_local std::string g_last_error_json;

void set_error(const char* kind, const std::string& message, const json& details = json::array()) {
    g_last_error = message;
    g_last_error_json = kb::error_json(kind, message, details).dump();
}

void clear_error() {
    g_last_error.clear();
    g_last_error_json.clear();
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

// Thrown from inside the API to report a status with a prepared error document.
struct StatusError {
    kb_status status;
};

template <class F>
kb_status guarded(F&& f) {
    clear_error();
    try {
        f();
        return KB_OK;
    } catch (const StatusError& e) {
        return e.status;
    } catch (const kb::DiagramParseError& e) {
        json details = json::array();
        for (const auto& pe : e.errors())
            details.push_back(json{{"line", pe.line}, {"column", pe.column}, {"message", pe.message}});
        set_error("parse", e.what(), details);
        return KB_ERR_PARSE;
    } catch (const kb::DiagramTypeError& e) {
        set_error("validation", e.what(), json::array({json{{"row", e.row}, {"cell", e.cell}}}));
        return KB_ERR_VALIDATION;
    } catch (const kb::ValidationError& e) {
        set_error("validation", e.what(), e.errors());
        return KB_ERR_VALIDATION;
    } catch (const kb::BudgetExceeded& e) {
        set_error("budget", e.what());
        return KB_ERR_BUDGET;
    } catch (const kb::EvalError& e) {
        set_error("validation", e.what());
        return KB_ERR_VALIDATION;
    } catch (const kb::CategoryError& e) {
        set_error("algebra", e.what());
        return KB_ERR_ALGEBRA;
    } catch (const kb::MoveError& e) {
        set_error("move", e.what());
        return KB_ERR_MOVE;
    } catch (const kb::UnknownFixture& e) {
        set_error("unknown_fixture", e.what());
        return KB_ERR_UNKNOWN_FIXTURE;
    } catch (const std::exception& e) {
        set_error("internal", e.what());
        return KB_ERR_INTERNAL;
    } catch (...) {
        set_error("internal", "unknown failure");
        return KB_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) {
        set_error("argument", what);
        throw StatusError{KB_ERR_ARGUMENT};
    }
}

void apply_params(kb::Header& h, const kb_params* p) {
    if (!p)
        return;
    if (p->set & KB_PARAM_N)
        h.N = p->N;
    if (p->set & KB_PARAM_T)
        h.t = p->t;
    if (p->set & KB_PARAM_H)
        h.H = p->H;
    if (p->set & KB_PARAM_C)
        h.c = p->c;
    if (p->set & KB_PARAM_G)
        h.g = p->g;
}

kb::CategoryParams params_of(const kb::Header& h) {
    kb::CategoryParams p{h.N, h.t, h.H};
    p.check();
    return p;
}

size_t pick_budget(size_t budget) { return budget ? budget : kb::default_budget(); }

void validated(const kb::Diagram& d) {
    kb::ValidationReport vr = kb::validate(d);
    if (!vr.ok())
        throw kb::ValidationError(vr.errors);
}

} // namespace

extern "C" {

KB_API const char* kb_status_string(kb_status status) {
    switch (status) {
    case KB_OK:
        return "ok";
    case KB_ERR_PARSE:
        return "parse error";
    case KB_ERR_VALIDATION:
        return "invalid diagram";
    case KB_ERR_ALGEBRA:
        return "algebra data unusable";
    case KB_ERR_MOVE:
        return "move does not apply";
    case KB_ERR_BUDGET:
        return "state budget exceeded";
    case KB_ERR_ARGUMENT:
        return "invalid argument";
    case KB_ERR_UNKNOWN_FIXTURE:
        return "unknown fixture";
    case KB_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

KB_API const char* kb_last_error(void) { return g_last_error.c_str(); }

KB_API const char* kb_last_error_json(void) { return g_last_error_json.c_str(); }

KB_API kb_status kb_diagram_parse(const char* text, kb_diagram** out) {
    return guarded([&] {
        require(text && out, "text and out must not be null");
        *out = nullptr;
        auto d = std::make_unique<kb_diagram>();
        d->d = kb::parse_diagram(text);
        *out = d.release();
    });
}

KB_API kb_status kb_fixture_load(const char* name, kb_diagram** out) {
    return guarded([&] {
        require(name && out, "name and out must not be null");
        *out = nullptr;
        auto d = std::make_unique<kb_diagram>();
        d->d = kb::fixture(name).diagram();
        *out = d.release();
    });
}

KB_API void kb_diagram_free(kb_diagram* d) { delete d; }

KB_API kb_status kb_diagram_set_params(kb_diagram* d, const kb_params* params) {
    return guarded([&] {
        require(d && params, "diagram and params must not be null");
        kb::Header h = d->d.header;
        apply_params(h, params);
        kb::EvalContext::from_header(h);
        d->d.header = h;
    });
}

KB_API kb_status kb_diagram_serialize(const kb_diagram* d, char** out) {
    return guarded([&] {
        require(d && out, "diagram and out must not be null");
        *out = dup_string(kb::serialize(d->d));
    });
}

KB_API void kb_string_free(char* s) { std::free(s); }

KB_API kb_status kb_evaluate_json(const kb_diagram* d, size_t budget, char** out) {
    return guarded([&] {
        require(d && out, "diagram and out must not be null");
        *out = nullptr;
        validated(d->d);
        auto ctx = kb::EvalContext::from_header(d->d.header, pick_budget(budget));
        *out = dup_string(kb::eval_json(d->d, kb::eval_closed(d->d, ctx)).dump());
    });
}

KB_API kb_status kb_invariant_json(const kb_diagram* d, size_t budget, char** out) {
    return guarded([&] {
        require(d && out, "diagram and out must not be null");
        *out = nullptr;
        validated(d->d);
        auto ctx = kb::EvalContext::from_header(d->d.header, pick_budget(budget));
        kb::InvariantReport r = kb::invariant(d->d, ctx);
        json rj = kb::invariant_json(r);
        if (!r.errors.empty()) {
            std::string msg = r.errors.front();
            g_last_error = msg;
            json e = kb::error_json("algebra", msg, r.errors);
            e["error"]["report"] = rj;
            g_last_error_json = e.dump();
            throw StatusError{KB_ERR_ALGEBRA};
        }
        *out = dup_string(rj.dump());
    });
}

KB_API kb_status kb_info_json(const kb_diagram* d, const kb_params* params, char** out) {
    return guarded([&] {
        require(out, "out must not be null");
        *out = nullptr;
        kb::Header h = d ? d->d.header : kb::Header{};
        apply_params(h, params);
        kb::CategoryParams p = params_of(h);
        if (d) {
            kb::Diagram copy = d->d;
            copy.header = h;
            *out = dup_string(kb::info_json(p, &copy).dump());
        } else {
            *out = dup_string(kb::info_json(p, nullptr).dump());
        }
    });
}

KB_API kb_status kb_verify_json(const kb_diagram* d, const kb_params* params, char** out) {
    return guarded([&] {
        require(out, "out must not be null");
        *out = nullptr;
        kb::Header h = d ? d->d.header : kb::Header{};
        apply_params(h, params);
        require(h.c.has_value() && h.g.has_value(), "verify needs the frobenius parameter c and module degree g");
        kb::CategoryParams p = params_of(h);
        bool passed = false;
        json r = kb::verify_json(p, *h.c, *h.g, passed);
        *out = dup_string(r.dump());
        if (!passed) {
            set_error("algebra", "algebra data fails verification", r["errors"]);
            throw StatusError{KB_ERR_ALGEBRA};
        }
    });
}

KB_API kb_status kb_apply_move(const kb_diagram* d, const kb_move* move, kb_diagram** out) {
    return guarded([&] {
        require(d && move && out && move->kind, "diagram, move, move kind and out must not be null");
        *out = nullptr;
        auto kind = kb::parse_move_kind(move->kind);
        require(kind.has_value(), "unknown move kind");
        kb::MoveSpec m;
        m.kind = *kind;
        m.row = move->row;
        m.col = move->col;
        m.over = move->over;
        m.variant = move->variant;
        m.inverse = move->inverse != 0;
        auto res = std::make_unique<kb_diagram>();
        res->d = kb::apply_move(d->d, m);
        *out = res.release();
    });
}

KB_API kb_status kb_fuzz_json(const kb_diagram* d, uint64_t seed, int steps, char** out) {
    return guarded([&] {
        require(d && out, "diagram and out must not be null");
        require(steps >= 0, "steps must be nonnegative");
        *out = nullptr;
        validated(d->d);
        kb::FuzzResult r = kb::fuzz(d->d, seed, steps);
        kb::InvarianceReport inv = kb::check_invariance(d->d, r.result);
        *out = dup_string(kb::fuzz_json(r, seed, steps, inv).dump());
    });
}

KB_API kb_status kb_fixture_names_json(char** out) {
    return guarded([&] {
        require(out, "out must not be null");
        *out = dup_string(json(kb::fixture_names()).dump());
    });
}

KB_API kb_status kb_fixture_text(const char* name, char** out) {
    return guarded([&] {
        require(name && out, "name and out must not be null");
        *out = nullptr;
        *out = dup_string(kb::fixture(name).text);
    });
}

KB_API kb_status kb_fixture_info_json(const char* name, char** out) {
    return guarded([&] {
        require(name && out, "name and out must not be null");
        *out = nullptr;
        kb::Fixture f = kb::fixture(name);
        json j;
        j["name"] = f.name;
        j["expected_raw"] = f.expected_raw ? kb::cyclo_json(*f.expected_raw) : json(nullptr);
        j["expected_value"] = f.expected_value ? kb::cyclo_json(*f.expected_value) : json(nullptr);
        j["note"] = f.note;
        j["disputed"] = f.disputed;
        *out = dup_string(j.dump());
    });
}

} // extern "C"
