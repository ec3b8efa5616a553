/*
 * algebra.hpp
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

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kb {

using Rational = mpq_class;

// Raised for arithmetic misuse: zero inversion, mixed moduli, non-symmetric input.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
// Cached; the returned reference stays valid for the life of the process.
const std::vector<long long>& cyclotomic_polynomial(int n);

// Exact element of Q(zeta_N), stored in the power basis 1, z, ..., z^(phi(N)-1)
// reduced modulo Phi_N. The representation is canonical.
class CycloNumber {
public:
    CycloNumber();
    explicit CycloNumber(int modulus);

    static CycloNumber from_integer(int modulus, long long value);
    static CycloNumber from_rational(int modulus, const Rational& value);
    // Accepts a polynomial in z of any degree and reduces it.
    static CycloNumber from_polynomial(int modulus, std::vector<Rational> poly);
    static CycloNumber zeta_pow(int modulus, long long k);

    int modulus() const noexcept { return modulus_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    std::optional<Rational> as_rational() const;

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& rhs);
    CycloNumber& operator-=(const CycloNumber& rhs);
    CycloNumber& operator*=(const CycloNumber& rhs);
    CycloNumber& operator/=(const CycloNumber& rhs);

    friend CycloNumber operator+(CycloNumber lhs, const CycloNumber& rhs) { return lhs += rhs; }
    friend CycloNumber operator-(CycloNumber lhs, const CycloNumber& rhs) { return lhs -= rhs; }
    friend CycloNumber operator*(CycloNumber lhs, const CycloNumber& rhs) { return lhs *= rhs; }
    friend CycloNumber operator/(CycloNumber lhs, const CycloNumber& rhs) { return lhs /= rhs; }
    friend bool operator==(const CycloNumber& lhs, const CycloNumber& rhs);
    friend bool operator!=(const CycloNumber& lhs, const CycloNumber& rhs) { return !(lhs == rhs); }

    // Galois action z -> z^-1, i.e. complex conjugation.
    CycloNumber conj() const;
    CycloNumber inv() const;
    CycloNumber pow(long long e) const;

    // Display only; never used to decide equality.
    std::complex<double> to_complex() const;
    std::string to_string() const;
    std::string float_string() const;

private:
    void check_same_modulus(const CycloNumber& other) const;

    int modulus_;
    std::vector<Rational> coeffs_;
};

std::string format_complex(std::complex<double> z);

struct InertiaTriple {
    int b_plus = 0;
    int b_minus = 0;
    int b_zero = 0;

    friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

using IntMatrix = std::vector<std::vector<long long>>;

// Sylvester inertia via exact rational congruence diagonalization.
InertiaTriple inertia(const IntMatrix& m);

} // namespace kb
