/*
 * support.hpp
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

// Test-side oracles and generators. Nothing here calls into the code under
// test except to build inputs.

#pragma once

#include "diagram.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

namespace kbtest {

inline std::complex<double> zeta_c(int n, long long k) {
    double a = 2.0 * M_PI * static_cast<double>(k % n) / n;
    return {std::cos(a), std::sin(a)};
}

// Value of sum_k coeffs[k] z^k at z = exp(2 pi i j / n).
inline std::complex<double> eval_at(const std::vector<double>& coeffs, int n, int j) {
    std::complex<double> s = 0;
    for (size_t k = 0; k < coeffs.size(); ++k)
        s += coeffs[k] * zeta_c(n, static_cast<long long>(k) * j);
    return s;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

// Gauss-sum oracle: sum over g in choices of zeta^(t * g^T A g).
inline std::complex<double> quadratic_sum(const std::vector<std::vector<long long>>& A,
                                          const std::vector<std::vector<int>>& choices, int n, int t) {
    std::complex<double> total = 0;
    std::vector<size_t> at(choices.size(), 0);
    while (true) {
        long long e = 0;
        for (size_t i = 0; i < choices.size(); ++i)
            for (size_t j = 0; j < choices.size(); ++j)
                e += A[i][j] * choices[i][at[i]] * choices[j][at[j]];
        e = ((e * t) % n + n) % n;
        total += zeta_c(n, e);
        size_t k = 0;
        while (k < choices.size() && ++at[k] == choices[k].size()) {
            at[k] = 0;
            ++k;
        }
        if (k == choices.size())
            break;
    }
    return total;
}

struct Signs {
    int plus = 0, minus = 0, zero = 0;
};

// Floating eigen-sign oracle for symmetric integer matrices.
inline Signs eigen_signs(const std::vector<std::vector<long long>>& m) {
    Signs s;
    size_t n = m.size();
    if (n == 0)
        return s;
    Eigen::MatrixXd a(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a(static_cast<long>(i), static_cast<long>(j)) = static_cast<double>(m[i][j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    for (long i = 0; i < static_cast<long>(n); ++i) {
        double v = es.eigenvalues()(i);
        if (v > 1e-7)
            ++s.plus;
        else if (v < -1e-7)
            ++s.minus;
        else
            ++s.zero;
    }
    return s;
}

inline std::vector<std::vector<long long>> random_symmetric(std::mt19937_64& rng, size_t n, int lo, int hi) {
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    std::uniform_int_distribution<int> d(lo, hi);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            m[i][j] = m[j][i] = d(rng);
    return m;
}

// Random closed band-free diagram: cups of random colors, random crossings,
// twists and dots, then every strand is walked next to a dual partner and capped.
struct RandomDiagramOptions {
    int max_components = 3;
    int crossings = 8;
    bool allow_h1 = false;
    bool allow_sf = true;
    bool allow_probe = true;
    bool allow_twists = true;
};

inline kb::Diagram random_band_free(std::mt19937_64& rng, const RandomDiagramOptions& opt = {}) {
    using namespace kb;
    auto roll = [&](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };
    std::vector<Color> palette{Color{Role::h2, 0}};
    if (opt.allow_h1)
        palette.push_back(Color{Role::h1, 0});
    if (opt.allow_sf)
        palette.push_back(Color{Role::sf, 0});
    if (opt.allow_probe)
        palette.push_back(Color{Role::probe, roll(6)});

    Diagram d;
    d.header.c = 2;
    d.header.g = 1;
    std::vector<Wire> wires;
    auto push_row = [&](size_t pos, const Cell& c) {
        Row r(pos, make_cell(CellKind::identity));
        r.push_back(c);
        r.insert(r.end(), wires.size() - pos - static_cast<size_t>(cell_inputs(c.kind)),
                 make_cell(CellKind::identity));
        std::vector<Wire> in(wires.begin() + static_cast<long>(pos),
                             wires.begin() + static_cast<long>(pos) + cell_inputs(c.kind));
        auto out = cell_output_wires(c, in);
        wires.erase(wires.begin() + static_cast<long>(pos),
                    wires.begin() + static_cast<long>(pos) + cell_inputs(c.kind));
        wires.insert(wires.begin() + static_cast<long>(pos), out.begin(), out.end());
        d.rows.push_back(std::move(r));
    };
    auto cross = [&](size_t pos) {
        push_row(pos, make_cell(roll(2) ? CellKind::crossing_pos : CellKind::crossing_neg));
    };

    int comps = 1 + roll(opt.max_components);
    for (int i = 0; i < comps; ++i) {
        Color c = palette[static_cast<size_t>(roll(static_cast<int>(palette.size())))];
        push_row(static_cast<size_t>(roll(static_cast<int>(wires.size()) + 1)),
                 make_cup(roll(2) ? CellKind::cup : CellKind::puc, c));
    }
    for (int i = 0; i < opt.crossings && wires.size() >= 2; ++i) {
        int what = roll(10);
        size_t p = static_cast<size_t>(roll(static_cast<int>(wires.size()) - 1));
        if (what == 0 && opt.allow_twists)
            push_row(p, make_cell(roll(2) ? CellKind::twist_pos : CellKind::twist_neg));
        else if (what == 1)
            push_row(p, make_cell(CellKind::dot));
        else
            cross(p);
    }
    while (!wires.empty()) {
        // Partner of wire 0: same color, opposite orientation.
        size_t j = 1;
        while (!(wires[j].color == wires[0].color && wires[j].orientation != wires[0].orientation))
            ++j;
        while (j > 1) {
            cross(j - 1);
            --j;
        }
        push_row(0, make_cell(wires[0].orientation == Orientation::down ? CellKind::cap : CellKind::pac));
    }
    return d;
}

} // namespace kbtest
