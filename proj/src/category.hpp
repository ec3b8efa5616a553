/*
 * category.hpp
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

#pragma once

#include "algebra.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kb {

class CategoryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vec_{Z/N} with bicharacter beta(a,b) = zeta^(t*a*b); H is generated by d mod N.
struct CategoryParams {
    int N = 6;
    int t = 1;
    int d = 2;

    int reduce(long long x) const;
    std::vector<int> subgroup() const;
    bool in_subgroup(int x) const;
    CycloNumber zeta(long long k) const { return CycloNumber::zeta_pow(N, k); }
    void check() const;
};

struct BasisElement {
    int degree;
    std::string label;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

struct GradedObject {
    std::vector<BasisElement> basis;

    size_t dim() const { return basis.size(); }
    int degree(size_t i) const { return basis[i].degree; }

    friend bool operator==(const GradedObject&, const GradedObject&) = default;
};

using ObjectList = std::vector<GradedObject>;
using MultiIndex = std::vector<int>;

GradedObject simple_object(const CategoryParams& p, int degree);
GradedObject dual_object(const CategoryParams& p, const GradedObject& x);
ObjectList dual_objects(const CategoryParams& p, const ObjectList& xs);

enum class Scope { full, sub };

GradedObject kirby_object(const CategoryParams& p, Scope scope);

// Sparse grading-preserving map between tensor products of graded objects.
class GradedMap {
public:
    using Key = std::pair<MultiIndex, MultiIndex>;

    GradedMap(int modulus, ObjectList domain, ObjectList codomain);

    static GradedMap identity(int modulus, const ObjectList& objects);

    int modulus() const { return modulus_; }
    const ObjectList& domain() const { return domain_; }
    const ObjectList& codomain() const { return codomain_; }
    const std::map<Key, CycloNumber>& entries() const { return entries_; }

    // Accumulates; throws if the entry would connect different total degrees.
    void add(const MultiIndex& in, const MultiIndex& out, const CycloNumber& value);
    CycloNumber entry(const MultiIndex& in, const MultiIndex& out) const;

    GradedMap scaled(const CycloNumber& s) const;
    GradedMap operator-(const GradedMap& rhs) const;
    bool is_zero() const { return entries_.empty(); }

    friend bool operator==(const GradedMap& a, const GradedMap& b);
    friend bool operator!=(const GradedMap& a, const GradedMap& b) { return !(a == b); }

private:
    int modulus_;
    ObjectList domain_;
    ObjectList codomain_;
    std::map<Key, CycloNumber> entries_;
};

int total_degree(const ObjectList& objs, const MultiIndex& idx, int modulus);
std::vector<MultiIndex> all_indices(const ObjectList& objs);

// g after f.
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap tensor(const GradedMap& f, const GradedMap& g);
GradedMap tensor(std::initializer_list<GradedMap> maps);

// Braiding X (x) Y -> Y (x) X: sign +1 is sigma_{X,Y}, sign -1 is sigma_{Y,X}^-1.
GradedMap braiding(const CategoryParams& p, const ObjectList& x, const ObjectList& y, int sign);
GradedMap braiding(const CategoryParams& p, const GradedObject& x, const GradedObject& y, int sign);
GradedMap twist(const CategoryParams& p, const ObjectList& x, int sign);
GradedMap twist(const CategoryParams& p, const GradedObject& x, int sign);

// Basepoint insertion: multiplies each simple summand by its quantum dimension.
GradedMap dimension_insertion(const CategoryParams& p, const GradedObject& x);

struct PairingMaps {
    GradedMap ev;         // X* (x) X -> 1
    GradedMap coev;       // 1 -> X (x) X*
    GradedMap ev_left;    // X (x) X* -> 1
    GradedMap coev_left;  // 1 -> X* (x) X
};

// Delta pairings with (k_x)* = k_{-x}; the left pairings are built from them
// with braiding and twist.
PairingMaps pairing_maps(const CategoryParams& p, const GradedObject& x);
// Same construction for an object with an explicitly supplied dual and pairings.
PairingMaps pairing_maps_from(const CategoryParams& p, const GradedObject& x, const GradedObject& xdual,
                              GradedMap ev, GradedMap coev);

struct FrobeniusData {
    int c = 0;
    GradedObject F;
    GradedMap mu;      // F F -> F
    GradedMap unit;    // 1 -> F
    GradedMap comul;   // F -> F F
    GradedMap counit;  // F -> 1
};

struct ModuleData {
    int g = 0;
    GradedObject M;
    GradedObject Mdual;
    GradedMap action;         // F M -> M
    GradedMap coaction;       // M -> F M
    GradedMap dual_action;    // M* F -> M*
    GradedMap dual_coaction;  // M* -> M* F
};

FrobeniusData frobenius_data(const CategoryParams& p, int c);
ModuleData module_data(const CategoryParams& p, const FrobeniusData& frob, int g);
// Builds module data around a given action; everything else is derived.
ModuleData module_from_action(const CategoryParams& p, const FrobeniusData& frob, int g, GradedObject M,
                              GradedMap action);

// Self-duality of F through the trace pairing.
PairingMaps frobenius_pairings(const CategoryParams& p, const FrobeniusData& frob);

struct CheckReport {
    std::vector<std::pair<std::string, bool>> checks;

    void add(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
    bool all() const;
    bool get(const std::string& name) const;
};

CheckReport verify_frobenius(const CategoryParams& p, const FrobeniusData& frob);
// Symmetry of the trace form under the plain swap and under the braiding.
// Informational: neither convention gates evaluation.
CheckReport frobenius_symmetry(const CategoryParams& p, const FrobeniusData& frob);
CheckReport verify_module(const CategoryParams& p, const FrobeniusData& frob, const ModuleData& mod);

std::set<int> transparent_degrees(const CategoryParams& p, Scope ambient);

// Returns the scalar s with map == s * identity, or nullopt.
std::optional<CycloNumber> scalar_multiple_of_identity(const GradedMap& m);

CycloNumber cap_scalar(const CategoryParams& p, const FrobeniusData& frob, const ModuleData& mod);
CycloNumber cup_scalar(const CategoryParams& p, const FrobeniusData& frob, const ModuleData& mod);
// The cup-move composite on M before the scalar test.
GradedMap cup_composite(const CategoryParams& p, const FrobeniusData& frob, const ModuleData& mod);

struct SwimReport {
    std::set<int> image_degrees;
    bool b_transparent = false;
    bool fully_transparent = false;
};

SwimReport swim_image_check(const CategoryParams& p, const GradedMap& m);
GradedMap swim_map(const CategoryParams& p, const FrobeniusData& frob, const ModuleData& mod);
SwimReport swim_check(const CategoryParams& p, const FrobeniusData& frob, const ModuleData& mod);

} // namespace kb
