/*
 * algebra.cpp
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

#include "algebra.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

namespace kb {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Long division a = q*b + r over Q. b must be nonzero after trimming.
std::pair<Poly, Poly> divmod(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (b.empty())
        throw AlgebraError("polynomial division by zero");
    if (a.size() < b.size())
        return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0)
            continue;
        Rational f = a[i] / lead;
        size_t shift = i - (b.size() - 1);
        q[shift] = f;
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= f * b[j];
    }
    trim(q);
    trim(a);
    return {q, a};
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

long long mod_floor(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

int euler_phi(int n) {
    if (n < 1)
        throw AlgebraError("euler_phi requires n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
    if (n < 1)
        throw AlgebraError("cyclotomic polynomial requires N >= 1");
    static std::map<int, std::vector<long long>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d; all divisors are
    // monic with integer coefficients so the division stays in Z.
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        const std::vector<long long>& den = cyclotomic_polynomial(d);
        size_t dn = den.size() - 1;
        std::vector<long long> q(num.size() - dn, 0);
        for (size_t i = num.size(); i-- > dn;) {
            long long f = num[i];
            if (f == 0)
                continue;
            q[i - dn] = f;
            for (size_t j = 0; j <= dn; ++j)
                num[i - dn + j] -= f * den[j];
        }
        num = std::move(q);
    }
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, inserted] = cache.emplace(n, std::move(num));
    return it->second;
}

CycloNumber::CycloNumber() : modulus_(1), coeffs_(1) {}

CycloNumber::CycloNumber(int modulus) : modulus_(modulus) {
    if (modulus < 1)
        throw AlgebraError("cyclotomic modulus must be positive");
    coeffs_.assign(static_cast<size_t>(euler_phi(modulus)), Rational(0));
}

CycloNumber CycloNumber::from_integer(int modulus, long long value) {
    return from_rational(modulus, Rational(static_cast<long>(value)));
}

CycloNumber CycloNumber::from_rational(int modulus, const Rational& value) {
    CycloNumber r(modulus);
    r.coeffs_[0] = value;
    r.coeffs_[0].canonicalize();
    return r;
}

CycloNumber CycloNumber::from_polynomial(int modulus, std::vector<Rational> poly) {
    CycloNumber r(modulus);
    const std::vector<long long>& phi = cyclotomic_polynomial(modulus);
    size_t deg = phi.size() - 1;
    for (size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0)
            continue;
        Rational f = poly[i];
        poly[i] = 0;
        for (size_t j = 0; j < deg; ++j)
            if (phi[j] != 0)
                poly[i - deg + j] -= f * Rational(static_cast<long>(phi[j]));
    }
    for (size_t i = 0; i < deg && i < poly.size(); ++i) {
        r.coeffs_[i] = poly[i];
        r.coeffs_[i].canonicalize();
    }
    return r;
}

CycloNumber CycloNumber::zeta_pow(int modulus, long long k) {
    if (modulus < 1)
        throw AlgebraError("cyclotomic modulus must be positive");
    long long e = mod_floor(k, modulus);
    std::vector<Rational> poly(static_cast<size_t>(e) + 1);
    poly[static_cast<size_t>(e)] = 1;
    return from_polynomial(modulus, std::move(poly));
}

bool CycloNumber::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

std::optional<Rational> CycloNumber::as_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return std::nullopt;
    return coeffs_[0];
}

void CycloNumber::check_same_modulus(const CycloNumber& other) const {
    if (modulus_ != other.modulus_)
        throw AlgebraError("mixed cyclotomic moduli: " + std::to_string(modulus_) + " and " +
                           std::to_string(other.modulus_));
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
    check_same_modulus(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
    check_same_modulus(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) {
    check_same_modulus(rhs);
    *this = from_polynomial(modulus_, poly_mul(coeffs_, rhs.coeffs_));
    return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& rhs) {
    check_same_modulus(rhs);
    return *this *= rhs.inv();
}

bool operator==(const CycloNumber& lhs, const CycloNumber& rhs) {
    lhs.check_same_modulus(rhs);
    return lhs.coeffs_ == rhs.coeffs_;
}

CycloNumber CycloNumber::conj() const {
    std::vector<Rational> poly(static_cast<size_t>(modulus_));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        poly[static_cast<size_t>(mod_floor(-static_cast<long long>(i), modulus_))] += coeffs_[i];
    return from_polynomial(modulus_, std::move(poly));
}

CycloNumber CycloNumber::inv() const {
    if (is_zero())
        throw AlgebraError("inverse of zero in Q(zeta_" + std::to_string(modulus_) + ")");
    const std::vector<long long>& phi = cyclotomic_polynomial(modulus_);
    Poly r0;
    for (long long c : phi)
        r0.emplace_back(static_cast<long>(c));
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0, s1{Rational(1)};
    // Invariant: r_i == s_i * a (mod Phi).
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // Phi_N is irreducible, so the gcd is a nonzero constant.
    if (r0.size() != 1)
        throw AlgebraError("internal: non-constant gcd with cyclotomic polynomial");
    for (auto& c : s0)
        c /= r0[0];
    return from_polynomial(modulus_, std::move(s0));
}

CycloNumber CycloNumber::pow(long long e) const {
    if (e < 0)
        return inv().pow(-e);
    CycloNumber result = from_integer(modulus_, 1);
    CycloNumber base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::complex<double> CycloNumber::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / modulus_;
        z += coeffs_[i].get_d() * std::polar(1.0, angle);
    }
    return z;
}

std::string CycloNumber::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str() << "*";
        out << "z";
        if (i > 1)
            out << "^" << i;
    }
    if (first)
        return "0";
    return out.str();
}

std::string format_complex(std::complex<double> z) {
    double re = std::abs(z.real()) < 5e-10 ? 0.0 : z.real();
    double im = std::abs(z.imag()) < 5e-10 ? 0.0 : z.imag();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.9f%+.9fi", re, im);
    return buf;
}

std::string CycloNumber::float_string() const {
    return format_complex(to_complex());
}

InertiaTriple inertia(const IntMatrix& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw AlgebraError("inertia requires a square matrix");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i])
                throw AlgebraError("inertia requires a symmetric matrix");

    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a[i][j] = Rational(static_cast<long>(m[i][j]));

    InertiaTriple out;
    size_t k = 0;
    while (k < n) {
        size_t p = k;
        for (size_t i = k + 1; i < n; ++i)
            if (abs(a[i][i]) > abs(a[p][p]))
                p = i;
        if (a[p][p] == 0) {
            size_t bi = n, bj = n;
            for (size_t i = k; i < n && bi == n; ++i)
                for (size_t j = k; j < n; ++j)
                    if (i != j && a[i][j] != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi == n) {
                out.b_zero += static_cast<int>(n - k);
                break;
            }
            // Congruence by the elementary matrix adding j into i; new a_ii = 2 a_ij.
            for (size_t c = 0; c < n; ++c)
                a[bi][c] += a[bj][c];
            for (size_t r = 0; r < n; ++r)
                a[r][bi] += a[r][bj];
            continue;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            for (auto& row : a)
                std::swap(row[p], row[k]);
        }
        for (size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0)
                continue;
            Rational f = a[r][k] / a[k][k];
            for (size_t c = k; c < n; ++c)
                a[r][c] -= f * a[k][c];
            for (size_t c = k; c < n; ++c)
                a[c][r] = a[r][c];
        }
        if (a[k][k] > 0)
            ++out.b_plus;
        else
            ++out.b_minus;
        ++k;
    }
    return out;
}

} // namespace kb
