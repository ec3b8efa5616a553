/*
 * invariant.cpp
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

#include "invariant.hpp"

#include <sstream>

namespace kb {

ValidationError::ValidationError(std::vector<std::string> errors)
    : std::runtime_error([&] {
          std::ostringstream out;
          out << "invalid diagram";
          for (const auto& e : errors)
              out << "; " << e;
          return out.str();
      }()),
      errors_(std::move(errors)) {}

Deltas deltas(const CategoryParams& p) {
    Deltas d;
    auto h = p.subgroup();
    d.delta_B = static_cast<long long>(h.size());
    d.delta_C = p.N;
    auto tc = transparent_degrees(p, Scope::full);
    d.delta_pp = 0;
    for (int x : h)
        if (tc.count(x))
            ++d.delta_pp;
    return d;
}

std::optional<CycloNumber> InvariantReport::denominator() const {
    int N = raw.modulus();
    CycloNumber den = CycloNumber::from_integer(N, 1);
    den *= CycloNumber::from_integer(N, delta_B).pow(inertia.b_zero);
    den *= CycloNumber::from_integer(N, delta_C * delta_pp).pow(inertia.b_plus);
    if (s > 0) {
        if (!k)
            return std::nullopt;
        den *= k->pow(s);
    }
    if (omega > 0) {
        if (!kappa)
            return std::nullopt;
        den *= kappa->pow(omega);
    }
    return den;
}

bool InvariantReport::reconstruction_holds() const {
    if (!value)
        return false;
    auto den = denominator();
    return den && *value * *den == raw;
}

InvariantReport invariant(const Diagram& d, const EvalContext& ctx) {
    ValidationReport vr = validate(d);
    if (!vr.ok())
        throw ValidationError(vr.errors);

    InvariantReport rep;
    rep.warnings = vr.warnings;
    LinkSummary ls = link_summary(d);
    rep.linking_matrix = ls.linking_matrix;
    rep.inertia = inertia(ls.linking_matrix);
    rep.s = ls.s;
    rep.omega = ls.omega;
    Deltas dl = deltas(ctx.params);
    rep.delta_B = dl.delta_B;
    rep.delta_C = dl.delta_C;
    rep.delta_pp = dl.delta_pp;

    bool has_surface = ls.surface_components > 0 || !ls.bands.empty();
    if (ctx.frob && ctx.mod) {
        try {
            rep.k = cap_scalar(ctx.params, *ctx.frob, *ctx.mod);
        } catch (const CategoryError& e) {
            rep.errors.push_back(e.what());
        }
        try {
            rep.kappa = cup_scalar(ctx.params, *ctx.frob, *ctx.mod);
        } catch (const CategoryError& e) {
            rep.errors.push_back(e.what());
        }
        if (has_surface) {
            SwimReport sw = swim_check(ctx.params, *ctx.frob, *ctx.mod);
            if (!sw.b_transparent)
                rep.errors.push_back("swim condition fails: image of the band-swim map is not B-transparent");
        }
        if (rep.k && rep.kappa && *rep.k != *rep.kappa && !ls.bands.empty())
            rep.warnings.push_back("cap scalar k = " + rep.k->to_string() + " differs from cup scalar kappa = " +
                                   rep.kappa->to_string() +
                                   "; band slides that move a foot between distinct unlink components change s and "
                                   "omega without changing the raw evaluation");
    }
    if (!has_surface)
        rep.errors.erase(rep.errors.begin(), rep.errors.end());

    rep.raw = eval_closed(d, ctx);
    if (!rep.errors.empty())
        return rep;
    auto den = rep.denominator();
    if (!den) {
        rep.errors.push_back("normalization needs k and kappa but algebra data is missing");
        return rep;
    }
    if (den->is_zero()) {
        rep.errors.push_back("normalization denominator is zero");
        return rep;
    }
    rep.value = rep.raw / *den;
    rep.float_value = rep.value->to_complex();
    return rep;
}

InvariantReport invariant(const Diagram& d) {
    ValidationReport vr = validate(d);
    if (!vr.ok())
        throw ValidationError(vr.errors);
    return invariant(d, EvalContext::from_header(d.header));
}

} // namespace kb
