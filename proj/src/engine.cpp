/*
 * engine.cpp
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

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <map>
#include <unordered_map>

namespace kb {

size_t default_budget() {
    const char* env = std::getenv("KB_STATE_BUDGET");
    if (env && *env) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<size_t>(v);
    }
    return 4000000;
}

EvalContext EvalContext::from_header(const Header& h, size_t budget) {
    EvalContext ctx;
    ctx.params = CategoryParams{h.N, h.t, h.H};
    ctx.params.check();
    ctx.budget = budget;
    if (h.c) {
        ctx.frob = frobenius_data(ctx.params, *h.c);
        if (h.g)
            ctx.mod = module_data(ctx.params, *ctx.frob, *h.g);
    }
    return ctx;
}

GradedObject EvalContext::object_for(const Wire& w) const {
    GradedObject base;
    switch (w.color.role) {
    case Role::h1:
        base = kirby_object(params, Scope::full);
        break;
    case Role::h2:
        base = kirby_object(params, Scope::sub);
        break;
    case Role::probe:
        base = simple_object(params, w.color.degree);
        break;
    case Role::sf:
        if (!mod)
            throw EvalError("surface strands need module data (header 'frobenius c=' and 'module g=')");
        return w.orientation == Orientation::down ? mod->M : mod->Mdual;
    case Role::bd:
        if (!frob)
            throw EvalError("band strands need Frobenius data (header 'frobenius c=')");
        return frob->F;
    }
    return w.orientation == Orientation::down ? base : dual_object(params, base);
}

ObjectList EvalContext::objects_for(const std::vector<Wire>& ws) const {
    ObjectList out;
    for (const auto& w : ws)
        out.push_back(object_for(w));
    return out;
}

GradedMap cell_map(const Cell& cell, const std::vector<Wire>& inputs, const EvalContext& ctx) {
    const CategoryParams& p = ctx.params;
    auto need_frob = [&]() -> const FrobeniusData& {
        if (!ctx.frob)
            throw EvalError("band cells need Frobenius data (header 'frobenius c=')");
        return *ctx.frob;
    };
    auto need_mod = [&]() -> const ModuleData& {
        if (!ctx.mod)
            throw EvalError("surface cells need module data (header 'module g=')");
        return *ctx.mod;
    };
    // Pairings of the down-oriented object of a color.
    auto pairings = [&](const Color& c) {
        if (c.role == Role::bd)
            return frobenius_pairings(p, need_frob());
        return pairing_maps(p, ctx.object_for(Wire{c, Orientation::down}));
    };
    switch (cell.kind) {
    case CellKind::identity:
        return GradedMap::identity(p.N, {ctx.object_for(inputs[0])});
    case CellKind::dot:
        return dimension_insertion(p, ctx.object_for(inputs[0]));
    case CellKind::twist_pos:
        return twist(p, ctx.object_for(inputs[0]), +1);
    case CellKind::twist_neg:
        return twist(p, ctx.object_for(inputs[0]), -1);
    case CellKind::crossing_neg:
        return braiding(p, ctx.object_for(inputs[0]), ctx.object_for(inputs[1]), +1);
    case CellKind::crossing_pos:
        return braiding(p, ctx.object_for(inputs[0]), ctx.object_for(inputs[1]), -1);
    case CellKind::cup:
        return pairings(*cell.created).coev_left;
    case CellKind::puc:
        return pairings(*cell.created).coev;
    case CellKind::cap:
        return pairings(inputs[0].color).ev_left;
    case CellKind::pac:
        return pairings(inputs[0].color).ev;
    case CellKind::mu:
        return need_frob().mu;
    case CellKind::comul:
        return need_frob().comul;
    case CellKind::unit:
        return need_frob().unit;
    case CellKind::counit:
        return need_frob().counit;
    case CellKind::act:
        return need_mod().action;
    case CellKind::coact:
        return need_mod().coaction;
    case CellKind::dact:
        return need_mod().dual_action;
    case CellKind::dcoact:
        return need_mod().dual_coaction;
    }
    throw EvalError("unknown cell");
}

namespace {

// Z[zeta_N] arithmetic on coefficient vectors reduced mod Phi_N, with
// overflow detection.
class IntRing {
public:
    explicit IntRing(int N) : N_(N), phi_(euler_phi(N)), cyc_(cyclotomic_polynomial(N)) {
        tmp_.resize(static_cast<size_t>(2 * phi_));
    }

    int phi() const { return phi_; }

    // acc += a * b
    void mul_add(const int64_t* a, const int64_t* b, int64_t* acc) {
        std::fill(tmp_.begin(), tmp_.end(), 0);
        for (int i = 0; i < phi_; ++i) {
            if (a[i] == 0)
                continue;
            for (int j = 0; j < phi_; ++j) {
                if (b[j] == 0)
                    continue;
                int64_t prod;
                if (__builtin_mul_overflow(a[i], b[j], &prod) ||
                    __builtin_add_overflow(tmp_[static_cast<size_t>(i + j)], prod, &tmp_[static_cast<size_t>(i + j)]))
                    overflow();
            }
        }
        for (int i = 2 * phi_ - 2; i >= phi_; --i) {
            int64_t f = tmp_[static_cast<size_t>(i)];
            if (f == 0)
                continue;
            for (int j = 0; j < phi_; ++j) {
                if (cyc_[static_cast<size_t>(j)] == 0)
                    continue;
                int64_t prod;
                size_t at = static_cast<size_t>(i - phi_ + j);
                if (__builtin_mul_overflow(f, static_cast<int64_t>(cyc_[static_cast<size_t>(j)]), &prod) ||
                    __builtin_sub_overflow(tmp_[at], prod, &tmp_[at]))
                    overflow();
            }
        }
        for (int i = 0; i < phi_; ++i)
            if (__builtin_add_overflow(acc[i], tmp_[static_cast<size_t>(i)], &acc[i]))
                overflow();
    }

    void add(const int64_t* a, int64_t* acc) {
        for (int i = 0; i < phi_; ++i)
            if (__builtin_add_overflow(acc[i], a[i], &acc[i]))
                overflow();
    }

    std::vector<int64_t> from_cyclo(const CycloNumber& x) const {
        std::vector<int64_t> out(static_cast<size_t>(phi_));
        const auto& cs = x.coefficients();
        for (int i = 0; i < phi_; ++i) {
            const Rational& q = cs[static_cast<size_t>(i)];
            if (q.get_den() != 1 || !q.get_num().fits_slong_p())
                throw EvalError("cell map coefficient is not a machine integer");
            out[static_cast<size_t>(i)] = q.get_num().get_si();
        }
        return out;
    }

    CycloNumber to_cyclo(const int64_t* a) const {
        std::vector<Rational> poly(static_cast<size_t>(phi_));
        for (int i = 0; i < phi_; ++i)
            poly[static_cast<size_t>(i)] = Rational(static_cast<long>(a[i]));
        return CycloNumber::from_polynomial(N_, std::move(poly));
    }

private:
    [[noreturn]] static void overflow() { throw EvalError("integer overflow during exact evaluation"); }

    int N_;
    int phi_;
    std::vector<long long> cyc_;
    std::vector<int64_t> tmp_;
};

struct LocalTerm {
    std::string out_digits;
    std::vector<int64_t> coeff;
    bool is_one;
};

struct LocalMap {
    std::vector<size_t> in_dims;
    std::vector<std::vector<LocalTerm>> table;  // by mixed-radix input index
    size_t arity_in = 0;
};

LocalMap to_local(const GradedMap& m, IntRing& ring) {
    LocalMap lm;
    for (const auto& o : m.domain())
        lm.in_dims.push_back(o.dim());
    lm.arity_in = lm.in_dims.size();
    size_t total = 1;
    for (size_t d : lm.in_dims)
        total *= d;
    lm.table.resize(total);
    for (const auto& [key, v] : m.entries()) {
        size_t idx = 0;
        for (size_t i = 0; i < key.first.size(); ++i)
            idx = idx * lm.in_dims[i] + static_cast<size_t>(key.first[i]);
        LocalTerm t;
        for (int o : key.second)
            t.out_digits.push_back(static_cast<char>(o));
        t.coeff = ring.from_cyclo(v);
        t.is_one = t.coeff[0] == 1;
        for (size_t i = 1; i < t.coeff.size() && t.is_one; ++i)
            t.is_one = t.coeff[i] == 0;
        lm.table[idx].push_back(std::move(t));
    }
    return lm;
}

class SparseState {
public:
    explicit SparseState(int phi) : phi_(phi) {}

    size_t size() const { return keys_.size(); }
    const std::string& key(size_t i) const { return keys_[i]; }
    const int64_t* value(size_t i) const { return &values_[i * static_cast<size_t>(phi_)]; }

    int64_t* slot(const std::string& k) {
        auto [it, inserted] = index_.emplace(k, keys_.size());
        if (inserted) {
            keys_.push_back(k);
            values_.resize(values_.size() + static_cast<size_t>(phi_), 0);
        }
        return &values_[it->second * static_cast<size_t>(phi_)];
    }

    SparseState pruned() const {
        SparseState out(phi_);
        for (size_t i = 0; i < keys_.size(); ++i) {
            const int64_t* v = value(i);
            bool zero = true;
            for (int j = 0; j < phi_ && zero; ++j)
                zero = v[j] == 0;
            if (zero)
                continue;
            int64_t* s = out.slot(keys_[i]);
            std::copy(v, v + phi_, s);
        }
        return out;
    }

private:
    int phi_;
    std::unordered_map<std::string, size_t> index_;
    std::vector<std::string> keys_;
    std::vector<int64_t> values_;
};

SparseState apply_cell(const SparseState& st, size_t pos, const LocalMap& lm, IntRing& ring, size_t budget) {
    SparseState next(ring.phi());
    std::string nk;
    for (size_t i = 0; i < st.size(); ++i) {
        const std::string& k = st.key(i);
        size_t idx = 0;
        for (size_t a = 0; a < lm.arity_in; ++a)
            idx = idx * lm.in_dims[a] + static_cast<unsigned char>(k[pos + a]);
        const auto& terms = lm.table[idx];
        for (const auto& t : terms) {
            nk.assign(k, 0, pos);
            nk += t.out_digits;
            nk.append(k, pos + lm.arity_in, std::string::npos);
            int64_t* slot = next.slot(nk);
            if (t.is_one)
                ring.add(st.value(i), slot);
            else
                ring.mul_add(st.value(i), t.coeff.data(), slot);
            if (next.size() > budget)
                throw BudgetExceeded("state budget exceeded (" + std::to_string(budget) +
                                     " states); raise --budget or KB_STATE_BUDGET");
        }
    }
    return next.pruned();
}

void check_dims(const ObjectList& objs) {
    for (const auto& o : objs)
        if (o.dim() > 255)
            throw EvalError("strand dimension above 255 is outside the supported scale");
}

// Runs rows over a state whose keys are digit strings for the given input level.
SparseState run_rows(SparseState st, const std::vector<Row>& rows, const std::vector<std::vector<Wire>>& levels,
                     const EvalContext& ctx, IntRing& ring) {
    std::map<std::string, LocalMap> cache;
    for (size_t r = 0; r < rows.size(); ++r) {
        const auto& in_level = levels[r];
        size_t pos = 0;     // position in the current mixed layout
        size_t in_pos = 0;  // position in the row's input level
        for (const Cell& c : rows[r]) {
            size_t a = static_cast<size_t>(cell_inputs(c.kind));
            size_t b = static_cast<size_t>(cell_outputs(c.kind));
            if (c.kind == CellKind::identity) {
                pos += 1;
                in_pos += 1;
                continue;
            }
            std::vector<Wire> ins(in_level.begin() + static_cast<long>(in_pos),
                                  in_level.begin() + static_cast<long>(in_pos + a));
            std::string cache_key = cell_token(c);
            for (const auto& w : ins)
                cache_key += "|" + color_token(w.color) + (w.orientation == Orientation::down ? "d" : "u");
            auto it = cache.find(cache_key);
            if (it == cache.end()) {
                GradedMap m = cell_map(c, ins, ctx);
                check_dims(m.codomain());
                it = cache.emplace(cache_key, to_local(m, ring)).first;
            }
            st = apply_cell(st, pos, it->second, ring, ctx.budget);
            pos += b;
            in_pos += a;
        }
    }
    return st;
}

} // namespace

CycloNumber eval_closed(const Diagram& d, const EvalContext& ctx) {
    auto levels = infer_levels(d);
    if (!levels.back().empty())
        throw EvalError("diagram is not closed");
    for (const auto& lv : levels)
        check_dims(ctx.objects_for(lv));
    IntRing ring(ctx.params.N);
    SparseState st(ring.phi());
    st.slot("")[0] = 1;
    st = run_rows(std::move(st), d.rows, levels, ctx, ring);
    if (st.size() == 0)
        return CycloNumber(ctx.params.N);
    return ring.to_cyclo(st.value(0));
}

CycloNumber eval_closed(const Diagram& d) {
    return eval_closed(d, EvalContext::from_header(d.header));
}

GradedMap eval_morphism(const std::vector<Row>& rows, const EvalContext& ctx, const std::vector<Wire>& input) {
    auto levels = infer_levels(rows, input);
    ObjectList dom = ctx.objects_for(input);
    ObjectList cod = ctx.objects_for(levels.back());
    check_dims(dom);
    GradedMap out(ctx.params.N, dom, cod);
    IntRing ring(ctx.params.N);
    for (const auto& idx : all_indices(dom)) {
        SparseState st(ring.phi());
        std::string k;
        for (int i : idx)
            k.push_back(static_cast<char>(i));
        st.slot(k)[0] = 1;
        st = run_rows(std::move(st), rows, levels, ctx, ring);
        for (size_t i = 0; i < st.size(); ++i) {
            MultiIndex o;
            for (char ch : st.key(i))
                o.push_back(static_cast<unsigned char>(ch));
            out.add(idx, o, ring.to_cyclo(st.value(i)));
        }
    }
    return out;
}

CycloNumber statesum_eval(const Diagram& d, const EvalContext& ctx) {
    for (const auto& row : d.rows)
        for (const auto& c : row)
            switch (c.kind) {
            case CellKind::mu:
            case CellKind::comul:
            case CellKind::unit:
            case CellKind::counit:
            case CellKind::act:
            case CellKind::coact:
            case CellKind::dact:
            case CellKind::dcoact:
                throw EvalError("state-sum path requires band-free diagram");
            case CellKind::cup:
            case CellKind::puc:
                if (c.created->role == Role::bd)
                    throw EvalError("state-sum path requires band-free diagram");
                break;
            default:
                break;
            }
    LinkSummary ls = link_summary(d);
    const CategoryParams& p = ctx.params;
    size_t n = ls.strand_components.size();
    std::vector<std::vector<int>> choices(n);
    for (size_t i = 0; i < n; ++i) {
        const Color& col = ls.trace.component_color[static_cast<size_t>(ls.strand_components[i])];
        GradedObject obj = ctx.object_for(Wire{col, Orientation::down});
        for (const auto& b : obj.basis)
            choices[i].push_back(b.degree);
    }
    double total = 1;
    for (const auto& c : choices)
        total *= static_cast<double>(c.size());
    if (total > static_cast<double>(ctx.budget) * 16)
        throw BudgetExceeded("state-sum assignment count exceeds budget");

    std::vector<long long> counts(static_cast<size_t>(p.N), 0);
    std::vector<size_t> at(n, 0);
    while (true) {
        long long e = 0;
        for (size_t i = 0; i < n; ++i) {
            long long gi = choices[i][at[i]];
            e += ls.full_matrix[i][i] * gi * gi;
            for (size_t j = i + 1; j < n; ++j)
                e += 2 * ls.full_matrix[i][j] * gi * choices[j][at[j]];
            e %= p.N;
        }
        e = p.reduce(e * p.t);
        ++counts[static_cast<size_t>(e)];
        size_t k = 0;
        while (k < n && ++at[k] == choices[k].size()) {
            at[k] = 0;
            ++k;
        }
        if (k == n)
            break;
    }
    CycloNumber result(p.N);
    for (int k = 0; k < p.N; ++k)
        if (counts[static_cast<size_t>(k)] != 0)
            result += CycloNumber::from_integer(p.N, counts[static_cast<size_t>(k)]) * p.zeta(k);
    return result;
}

double estimated_state_count(const Diagram& d, const EvalContext& ctx) {
    auto levels = infer_levels(d);
    double worst = 1;
    for (const auto& lv : levels) {
        double prod = 1;
        for (const auto& w : lv)
            prod *= static_cast<double>(ctx.object_for(w).dim());
        worst = std::max(worst, prod / ctx.params.N);
    }
    return worst;
}

} // namespace kb
