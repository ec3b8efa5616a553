/*
 * category.cpp
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

#include "category.hpp"

#include <algorithm>

namespace kb {

int CategoryParams::reduce(long long x) const {
    long long r = x % N;
    return static_cast<int>(r < 0 ? r + N : r);
}

std::vector<int> CategoryParams::subgroup() const {
    std::vector<int> h;
    int x = 0;
    do {
        h.push_back(x);
        x = reduce(static_cast<long long>(x) + d);
    } while (x != 0);
    std::sort(h.begin(), h.end());
    return h;
}

bool CategoryParams::in_subgroup(int x) const {
    auto h = subgroup();
    return std::binary_search(h.begin(), h.end(), reduce(x));
}

void CategoryParams::check() const {
    if (N < 1)
        throw CategoryError("N must be positive");
    if (N > 255)
        throw CategoryError("N above 255 is outside the supported desk scale");
    if (d < 1)
        throw CategoryError("H generator must be positive");
}

GradedObject simple_object(const CategoryParams& p, int degree) {
    int x = p.reduce(degree);
    return GradedObject{{BasisElement{x, "k" + std::to_string(x)}}};
}

GradedObject dual_object(const CategoryParams& p, const GradedObject& x) {
    GradedObject out;
    for (const auto& b : x.basis) {
        std::string label = b.label;
        if (!label.empty() && label.back() == '*')
            label.pop_back();
        else
            label.push_back('*');
        out.basis.push_back(BasisElement{p.reduce(-static_cast<long long>(b.degree)), label});
    }
    return out;
}

ObjectList dual_objects(const CategoryParams& p, const ObjectList& xs) {
    ObjectList out;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
        out.push_back(dual_object(p, *it));
    return out;
}

GradedObject kirby_object(const CategoryParams& p, Scope scope) {
    GradedObject out;
    if (scope == Scope::full) {
        for (int x = 0; x < p.N; ++x)
            out.basis.push_back(BasisElement{x, "k" + std::to_string(x)});
    } else {
        for (int x : p.subgroup())
            out.basis.push_back(BasisElement{x, "k" + std::to_string(x)});
    }
    return out;
}

int total_degree(const ObjectList& objs, const MultiIndex& idx, int modulus) {
    long long s = 0;
    for (size_t i = 0; i < objs.size(); ++i)
        s += objs[i].degree(static_cast<size_t>(idx[i]));
    long long r = s % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
}

std::vector<MultiIndex> all_indices(const ObjectList& objs) {
    std::vector<MultiIndex> out{MultiIndex{}};
    for (const auto& o : objs) {
        std::vector<MultiIndex> next;
        for (const auto& prefix : out)
            for (size_t i = 0; i < o.dim(); ++i) {
                MultiIndex m = prefix;
                m.push_back(static_cast<int>(i));
                next.push_back(std::move(m));
            }
        out = std::move(next);
    }
    return out;
}

GradedMap::GradedMap(int modulus, ObjectList domain, ObjectList codomain)
    : modulus_(modulus), domain_(std::move(domain)), codomain_(std::move(codomain)) {}

GradedMap GradedMap::identity(int modulus, const ObjectList& objects) {
    GradedMap m(modulus, objects, objects);
    CycloNumber one = CycloNumber::from_integer(modulus, 1);
    for (const auto& idx : all_indices(objects))
        m.entries_.emplace(Key{idx, idx}, one);
    return m;
}

void GradedMap::add(const MultiIndex& in, const MultiIndex& out, const CycloNumber& value) {
    if (in.size() != domain_.size() || out.size() != codomain_.size())
        throw CategoryError("graded map entry has the wrong number of tensor factors");
    for (size_t i = 0; i < in.size(); ++i)
        if (in[i] < 0 || static_cast<size_t>(in[i]) >= domain_[i].dim())
            throw CategoryError("graded map entry index out of range");
    for (size_t i = 0; i < out.size(); ++i)
        if (out[i] < 0 || static_cast<size_t>(out[i]) >= codomain_[i].dim())
            throw CategoryError("graded map entry index out of range");
    if (value.is_zero())
        return;
    if (total_degree(domain_, in, modulus_) != total_degree(codomain_, out, modulus_))
        throw CategoryError("graded map entry does not preserve degree");
    Key key{in, out};
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(std::move(key), value);
        return;
    }
    it->second += value;
    if (it->second.is_zero())
        entries_.erase(it);
}

CycloNumber GradedMap::entry(const MultiIndex& in, const MultiIndex& out) const {
    auto it = entries_.find(Key{in, out});
    if (it == entries_.end())
        return CycloNumber(modulus_);
    return it->second;
}

GradedMap GradedMap::scaled(const CycloNumber& s) const {
    GradedMap r(modulus_, domain_, codomain_);
    for (const auto& [k, v] : entries_)
        r.add(k.first, k.second, v * s);
    return r;
}

GradedMap GradedMap::operator-(const GradedMap& rhs) const {
    if (domain_ != rhs.domain_ || codomain_ != rhs.codomain_)
        throw CategoryError("difference of maps with different types");
    GradedMap r = *this;
    for (const auto& [k, v] : rhs.entries_)
        r.add(k.first, k.second, -v);
    return r;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.modulus_ == b.modulus_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.entries_ == b.entries_;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (f.codomain() != g.domain())
        throw CategoryError("composition of maps with mismatched boundary");
    std::map<MultiIndex, std::vector<std::pair<MultiIndex, CycloNumber>>> by_input;
    for (const auto& [k, v] : g.entries())
        by_input[k.first].emplace_back(k.second, v);
    GradedMap r(f.modulus(), f.domain(), g.codomain());
    for (const auto& [k, v] : f.entries()) {
        auto it = by_input.find(k.second);
        if (it == by_input.end())
            continue;
        for (const auto& [out, w] : it->second)
            r.add(k.first, out, w * v);
    }
    return r;
}

GradedMap tensor(const GradedMap& f, const GradedMap& g) {
    ObjectList dom = f.domain();
    dom.insert(dom.end(), g.domain().begin(), g.domain().end());
    ObjectList cod = f.codomain();
    cod.insert(cod.end(), g.codomain().begin(), g.codomain().end());
    GradedMap r(f.modulus(), dom, cod);
    for (const auto& [kf, vf] : f.entries())
        for (const auto& [kg, vg] : g.entries()) {
            MultiIndex in = kf.first;
            in.insert(in.end(), kg.first.begin(), kg.first.end());
            MultiIndex out = kf.second;
            out.insert(out.end(), kg.second.begin(), kg.second.end());
            r.add(in, out, vf * vg);
        }
    return r;
}

GradedMap tensor(std::initializer_list<GradedMap> maps) {
    if (maps.size() == 0)
        throw CategoryError("empty tensor product needs a modulus");
    auto it = maps.begin();
    GradedMap acc = *it;
    for (++it; it != maps.end(); ++it)
        acc = tensor(acc, *it);
    return acc;
}

GradedMap braiding(const CategoryParams& p, const ObjectList& x, const ObjectList& y, int sign) {
    ObjectList dom = x;
    dom.insert(dom.end(), y.begin(), y.end());
    ObjectList cod = y;
    cod.insert(cod.end(), x.begin(), x.end());
    GradedMap r(p.N, dom, cod);
    for (const auto& i : all_indices(x)) {
        long long dx = total_degree(x, i, p.N);
        for (const auto& j : all_indices(y)) {
            long long dy = total_degree(y, j, p.N);
            MultiIndex in = i;
            in.insert(in.end(), j.begin(), j.end());
            MultiIndex out = j;
            out.insert(out.end(), i.begin(), i.end());
            r.add(in, out, p.zeta(sign * static_cast<long long>(p.t) * dx * dy));
        }
    }
    return r;
}

GradedMap braiding(const CategoryParams& p, const GradedObject& x, const GradedObject& y, int sign) {
    return braiding(p, ObjectList{x}, ObjectList{y}, sign);
}

GradedMap twist(const CategoryParams& p, const ObjectList& x, int sign) {
    GradedMap r(p.N, x, x);
    for (const auto& i : all_indices(x)) {
        long long dx = total_degree(x, i, p.N);
        r.add(i, i, p.zeta(sign * static_cast<long long>(p.t) * dx * dx));
    }
    return r;
}

GradedMap twist(const CategoryParams& p, const GradedObject& x, int sign) {
    return twist(p, ObjectList{x}, sign);
}

GradedMap dimension_insertion(const CategoryParams& p, const GradedObject& x) {
    // Every simple object of Vec_{Z/N} has quantum dimension 1.
    return GradedMap::identity(p.N, ObjectList{x});
}

PairingMaps pairing_maps_from(const CategoryParams& p, const GradedObject& x, const GradedObject& xdual,
                              GradedMap ev, GradedMap coev) {
    GradedMap id_x = GradedMap::identity(p.N, {x});
    GradedMap id_xd = GradedMap::identity(p.N, {xdual});
    GradedMap sigma = braiding(p, x, xdual, +1);
    GradedMap ev_left = compose(ev, compose(sigma, tensor(twist(p, x, +1), id_xd)));
    GradedMap coev_left = compose(tensor(id_xd, twist(p, x, +1)), compose(sigma, coev));
    return PairingMaps{std::move(ev), std::move(coev), std::move(ev_left), std::move(coev_left)};
}

PairingMaps pairing_maps(const CategoryParams& p, const GradedObject& x) {
    GradedObject xd = dual_object(p, x);
    CycloNumber one = CycloNumber::from_integer(p.N, 1);
    GradedMap ev(p.N, {xd, x}, {});
    GradedMap coev(p.N, {}, {x, xd});
    for (size_t i = 0; i < x.dim(); ++i) {
        int k = static_cast<int>(i);
        ev.add({k, k}, {}, one);
        coev.add({}, {k, k}, one);
    }
    return pairing_maps_from(p, x, xd, std::move(ev), std::move(coev));
}

namespace {

// Matrix units E_ij of M(2) live at basis index 2i + j.
int unit_index(int i, int j) { return 2 * i + j; }

GradedMap plain_swap(const CategoryParams& p, const GradedObject& x, const GradedObject& y) {
    CategoryParams trivial = p;
    trivial.t = 0;
    return braiding(trivial, x, y, +1);
}

// ev for a tensor product given per-factor ev maps: (A1..An)* (x) (A1..An) -> 1.
GradedMap nested_ev(const std::vector<const PairingMaps*>& factors, const std::vector<GradedObject>& objs,
                    const std::vector<GradedObject>& duals, int N) {
    // duals are listed in reverse order of objs.
    size_t n = objs.size();
    if (n == 0)
        return GradedMap::identity(N, {});
    // innermost pair: duals[n-1] (= A1*) is adjacent to objs[0] (= A1).
    GradedMap acc = factors[0]->ev;
    for (size_t k = 1; k < n; ++k) {
        // A_{k+1}* (x) [inner] (x) A_{k+1}
        ObjectList left_ids{duals[n - 1 - k]};
        GradedMap wrapped = tensor({GradedMap::identity(N, left_ids), acc, GradedMap::identity(N, {objs[k]})});
        acc = compose(factors[k]->ev, wrapped);
    }
    return acc;
}

GradedMap nested_coev(const std::vector<const PairingMaps*>& factors, const std::vector<GradedObject>& objs,
                      const std::vector<GradedObject>& duals, int N) {
    size_t n = objs.size();
    if (n == 0)
        return GradedMap::identity(N, {});
    GradedMap acc = factors[n - 1]->coev;
    for (size_t k = n - 1; k-- > 0;) {
        GradedMap wrapped =
            tensor({GradedMap::identity(N, {objs[k]}), acc, GradedMap::identity(N, {duals[n - 1 - k]})});
        acc = compose(wrapped, factors[k]->coev);
    }
    return acc;
}

struct DualityFactor {
    GradedObject obj;
    GradedObject dual;
    PairingMaps pairing;
};

// Full mate f*: B* -> A* of f: A -> B with respect to the supplied dualities.
GradedMap full_mate(const CategoryParams& p, const GradedMap& f, const std::vector<DualityFactor>& a,
                    const std::vector<DualityFactor>& b) {
    std::vector<const PairingMaps*> pa, pb;
    std::vector<GradedObject> oa, ob, da, db;
    for (const auto& x : a) {
        pa.push_back(&x.pairing);
        oa.push_back(x.obj);
    }
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        da.push_back(it->dual);
    for (const auto& x : b) {
        pb.push_back(&x.pairing);
        ob.push_back(x.obj);
    }
    for (auto it = b.rbegin(); it != b.rend(); ++it)
        db.push_back(it->dual);
    GradedMap coev_a = nested_coev(pa, oa, da, p.N);
    GradedMap ev_b = nested_ev(pb, ob, db, p.N);
    GradedMap id_bd = GradedMap::identity(p.N, db);
    GradedMap id_ad = GradedMap::identity(p.N, da);
    GradedMap step1 = tensor(id_bd, coev_a);
    GradedMap step2 = tensor({id_bd, f, id_ad});
    GradedMap step3 = tensor(ev_b, id_ad);
    return compose(step3, compose(step2, step1));
}

} // namespace

PairingMaps frobenius_pairings(const CategoryParams& p, const FrobeniusData& frob) {
    GradedMap ev = compose(frob.counit, frob.mu);
    GradedMap coev = compose(frob.comul, frob.unit);
    return pairing_maps_from(p, frob.F, frob.F, std::move(ev), std::move(coev));
}

FrobeniusData frobenius_data(const CategoryParams& p, int c) {
    int cc = p.reduce(c);
    if (cc == 0)
        throw CategoryError("frobenius parameter c must be nonzero mod N");
    if (!p.in_subgroup(cc))
        throw CategoryError("frobenius parameter c must lie in H");
    FrobeniusData fd{cc,
                     GradedObject{{{0, "E11"}, {cc, "E12"}, {p.reduce(-cc), "E21"}, {0, "E22"}}},
                     GradedMap(p.N, {}, {}),
                     GradedMap(p.N, {}, {}),
                     GradedMap(p.N, {}, {}),
                     GradedMap(p.N, {}, {})};
    const GradedObject& F = fd.F;
    CycloNumber one = CycloNumber::from_integer(p.N, 1);
    fd.mu = GradedMap(p.N, {F, F}, {F});
    fd.unit = GradedMap(p.N, {}, {F});
    fd.comul = GradedMap(p.N, {F}, {F, F});
    fd.counit = GradedMap(p.N, {F}, {});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                fd.mu.add({unit_index(i, j), unit_index(j, l)}, {unit_index(i, l)}, one);
    for (int i = 0; i < 2; ++i) {
        fd.unit.add({}, {unit_index(i, i)}, one);
        fd.counit.add({unit_index(i, i)}, {}, one);
    }
    // Comultiplication dual to the trace pairing: E_il -> sum_j E_ij (x) E_jl.
    for (int i = 0; i < 2; ++i)
        for (int l = 0; l < 2; ++l)
            for (int j = 0; j < 2; ++j)
                fd.comul.add({unit_index(i, l)}, {unit_index(i, j), unit_index(j, l)}, one);
    return fd;
}

ModuleData module_from_action(const CategoryParams& p, const FrobeniusData& frob, int g, GradedObject M,
                              GradedMap action) {
    const GradedObject& F = frob.F;
    GradedObject Md = dual_object(p, M);
    GradedMap id_M = GradedMap::identity(p.N, {M});
    GradedMap id_Md = GradedMap::identity(p.N, {Md});
    GradedMap id_F = GradedMap::identity(p.N, {F});
    GradedMap copairing = compose(frob.comul, frob.unit);

    GradedMap coaction = compose(tensor(id_F, action), tensor(copairing, id_M));

    PairingMaps pm = pairing_maps(p, M);
    // Right action on M*: rotate only the M strand of the action.
    GradedMap dact = compose(tensor(pm.ev, id_Md),
                             compose(tensor({id_Md, action, id_Md}), tensor({id_Md, id_F, pm.coev})));
    // Right coaction on M*: rotate only the M strand of the coaction.
    GradedMap dcoa = compose(tensor({id_Md, id_F, pm.ev_left}),
                             compose(tensor({id_Md, coaction, id_Md}), tensor(pm.coev_left, id_Md)));

    return ModuleData{g, std::move(M), std::move(Md), std::move(action), std::move(coaction), std::move(dact),
                      std::move(dcoa)};
}

ModuleData module_data(const CategoryParams& p, const FrobeniusData& frob, int g) {
    int gg = p.reduce(g);
    if (p.in_subgroup(gg))
        throw CategoryError("module must lie outside the subcategory (g is in H)");
    GradedObject M{{{p.reduce(static_cast<long long>(frob.c) + gg), "v1"}, {gg, "v2"}}};
    GradedMap action(p.N, {frob.F, M}, {M});
    CycloNumber one = CycloNumber::from_integer(p.N, 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            action.add({unit_index(i, j), j}, {i}, one);
    return module_from_action(p, frob, gg, std::move(M), std::move(action));
}

bool CheckReport::all() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool CheckReport::get(const std::string& name) const {
    for (const auto& [n, ok] : checks)
        if (n == name)
            return ok;
    throw std::out_of_range("no check named " + name);
}

namespace {

// Map comparisons inside the checkers report mismatched types as failures.
bool equal_maps(const GradedMap& a, const GradedMap& b) {
    return a == b;
}

template <typename F>
bool safe_check(F&& f) {
    try {
        return f();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

CheckReport verify_frobenius(const CategoryParams& p, const FrobeniusData& fd) {
    CheckReport r;
    GradedMap id = GradedMap::identity(p.N, {fd.F});
    r.add("associativity", safe_check([&] {
              return equal_maps(compose(fd.mu, tensor(fd.mu, id)), compose(fd.mu, tensor(id, fd.mu)));
          }));
    r.add("unit_left", safe_check([&] { return equal_maps(compose(fd.mu, tensor(fd.unit, id)), id); }));
    r.add("unit_right", safe_check([&] { return equal_maps(compose(fd.mu, tensor(id, fd.unit)), id); }));
    r.add("coassociativity", safe_check([&] {
              return equal_maps(compose(tensor(fd.comul, id), fd.comul), compose(tensor(id, fd.comul), fd.comul));
          }));
    r.add("counit_left", safe_check([&] { return equal_maps(compose(tensor(fd.counit, id), fd.comul), id); }));
    r.add("counit_right", safe_check([&] { return equal_maps(compose(tensor(id, fd.counit), fd.comul), id); }));
    r.add("frobenius_left", safe_check([&] {
              return equal_maps(compose(tensor(id, fd.mu), tensor(fd.comul, id)), compose(fd.comul, fd.mu));
          }));
    r.add("frobenius_right", safe_check([&] {
              return equal_maps(compose(tensor(fd.mu, id), tensor(id, fd.comul)), compose(fd.comul, fd.mu));
          }));
    return r;
}

CheckReport frobenius_symmetry(const CategoryParams& p, const FrobeniusData& fd) {
    CheckReport r;
    GradedMap trace_form = compose(fd.counit, fd.mu);
    r.add("symmetric_plain_swap",
          safe_check([&] { return equal_maps(trace_form, compose(trace_form, plain_swap(p, fd.F, fd.F))); }));
    r.add("symmetric_braided",
          safe_check([&] { return equal_maps(trace_form, compose(trace_form, braiding(p, fd.F, fd.F, +1))); }));
    return r;
}

CheckReport verify_module(const CategoryParams& p, const FrobeniusData& fd, const ModuleData& md) {
    CheckReport r;
    GradedMap id_F = GradedMap::identity(p.N, {fd.F});
    GradedMap id_M = GradedMap::identity(p.N, {md.M});
    GradedMap id_Md = GradedMap::identity(p.N, {md.Mdual});
    GradedMap copairing = compose(fd.comul, fd.unit);

    r.add("action_associativity", safe_check([&] {
              return equal_maps(compose(md.action, tensor(fd.mu, id_M)),
                                compose(md.action, tensor(id_F, md.action)));
          }));
    r.add("action_unit", safe_check([&] { return equal_maps(compose(md.action, tensor(fd.unit, id_M)), id_M); }));
    r.add("coaction_from_copairing", safe_check([&] {
              return equal_maps(md.coaction, compose(tensor(id_F, md.action), tensor(copairing, id_M)));
          }));
    r.add("comul_then_action_equals_action_then_coaction", safe_check([&] {
              return equal_maps(compose(tensor(id_F, md.action), tensor(fd.comul, id_M)),
                                compose(md.coaction, md.action));
          }));
    r.add("coaction_then_mu_equals_action_then_coaction", safe_check([&] {
              return equal_maps(compose(tensor(fd.mu, id_M), tensor(id_F, md.coaction)),
                                compose(md.coaction, md.action));
          }));
    r.add("dual_action_associativity", safe_check([&] {
              return equal_maps(compose(md.dual_action, tensor(md.dual_action, id_F)),
                                compose(md.dual_action, tensor(id_Md, fd.mu)));
          }));
    r.add("dual_action_unit",
          safe_check([&] { return equal_maps(compose(md.dual_action, tensor(id_Md, fd.unit)), id_Md); }));
    r.add("dual_coaction_from_copairing", safe_check([&] {
              return equal_maps(md.dual_coaction, compose(tensor(md.dual_action, id_F), tensor(id_Md, copairing)));
          }));

    PairingMaps pf = frobenius_pairings(p, fd);
    PairingMaps pm = pairing_maps(p, md.M);
    DualityFactor fF{fd.F, fd.F, pf};
    DualityFactor fM{md.M, md.Mdual, pm};
    r.add("dual_coaction_is_mate_of_action", safe_check([&] {
              return equal_maps(md.dual_coaction, full_mate(p, md.action, {fF, fM}, {fM}));
          }));
    r.add("dual_action_is_mate_of_coaction", safe_check([&] {
              return equal_maps(md.dual_action, full_mate(p, md.coaction, {fM}, {fF, fM}));
          }));
    return r;
}

std::set<int> transparent_degrees(const CategoryParams& p, Scope ambient) {
    std::vector<int> scope;
    if (ambient == Scope::full) {
        for (int y = 0; y < p.N; ++y)
            scope.push_back(y);
    } else {
        scope = p.subgroup();
    }
    std::set<int> out;
    for (int x = 0; x < p.N; ++x) {
        bool ok = true;
        for (int y : scope)
            if (p.reduce(2LL * p.t * x * y) != 0) {
                ok = false;
                break;
            }
        if (ok)
            out.insert(x);
    }
    return out;
}

std::optional<CycloNumber> scalar_multiple_of_identity(const GradedMap& m) {
    if (m.domain() != m.codomain())
        return std::nullopt;
    std::optional<CycloNumber> s;
    for (const auto& idx : all_indices(m.domain())) {
        CycloNumber v = m.entry(idx, idx);
        if (!s)
            s = v;
        else if (*s != v)
            return std::nullopt;
    }
    if (!s)
        return std::nullopt;
    GradedMap diff = m - GradedMap::identity(m.modulus(), m.domain()).scaled(*s);
    if (!diff.is_zero())
        return std::nullopt;
    return s;
}

CycloNumber cap_scalar(const CategoryParams&, const FrobeniusData&, const ModuleData& md) {
    auto s = scalar_multiple_of_identity(compose(md.action, md.coaction));
    if (!s)
        throw CategoryError("cap condition fails; data unusable");
    return *s;
}

GradedMap cup_composite(const CategoryParams& p, const FrobeniusData&, const ModuleData& md) {
    // New unknot beside a down strand of M, joined to it by one band:
    //   puc:sf |  /  | dcoa |  /  | | act  /  cap |
    PairingMaps pm = pairing_maps(p, md.M);
    GradedMap id_M = GradedMap::identity(p.N, {md.M});
    GradedMap id_Md = GradedMap::identity(p.N, {md.Mdual});
    GradedMap step1 = tensor(pm.coev, id_M);
    GradedMap step2 = tensor({id_M, md.dual_coaction, id_M});
    GradedMap step3 = tensor({id_M, id_Md, md.action});
    GradedMap step4 = tensor(pm.ev_left, id_M);
    return compose(step4, compose(step3, compose(step2, step1)));
}

CycloNumber cup_scalar(const CategoryParams& p, const FrobeniusData& fd, const ModuleData& md) {
    auto s = scalar_multiple_of_identity(cup_composite(p, fd, md));
    if (!s)
        throw CategoryError("cup condition fails; data unusable");
    return *s;
}

SwimReport swim_image_check(const CategoryParams& p, const GradedMap& m) {
    SwimReport r;
    for (const auto& [k, v] : m.entries())
        r.image_degrees.insert(total_degree(m.codomain(), k.second, p.N));
    std::set<int> tb = transparent_degrees(p, Scope::sub);
    std::set<int> tc = transparent_degrees(p, Scope::full);
    r.b_transparent = std::includes(tb.begin(), tb.end(), r.image_degrees.begin(), r.image_degrees.end());
    r.fully_transparent = std::includes(tc.begin(), tc.end(), r.image_degrees.begin(), r.image_degrees.end());
    return r;
}

GradedMap swim_map(const CategoryParams& p, const FrobeniusData& fd, const ModuleData& md) {
    GradedMap copairing = compose(fd.comul, fd.unit);
    GradedMap id_M = GradedMap::identity(p.N, {md.M});
    GradedMap id_Md = GradedMap::identity(p.N, {md.Mdual});
    return compose(tensor(md.dual_action, md.action), tensor({id_Md, copairing, id_M}));
}

SwimReport swim_check(const CategoryParams& p, const FrobeniusData& fd, const ModuleData& md) {
    return swim_image_check(p, swim_map(p, fd, md));
}

} // namespace kb
