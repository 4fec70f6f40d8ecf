// Copyright 2026 The hyperlu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERLU_DENSE_H
#define HYPERLU_DENSE_H

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperlu/rational.h"
#include "hyperlu/sign_state.h"

namespace hyperlu {

/// Dense reference engine used to cross-check the combinatorial formulas.
/// Exact values are Gaussian-integer numerators sharing one rational scale;
/// anything touched by an irrational gate drops to complex doubles.

struct GaussInt {
    int64_t re = 0;
    int64_t im = 0;

    bool operator==(const GaussInt &other) const = default;
};

GaussInt checked_add(GaussInt a, GaussInt b);
GaussInt checked_mul(GaussInt a, GaussInt b);
inline GaussInt conj(GaussInt a) {
    return {a.re, -a.im};
}

enum class Regime { Exact, Float };

constexpr int kMaxDenseStateQubits = 20;
constexpr int kMaxDenseDensityQubits = 12;

/// 2x2 matrix [[u00, u01], [u10, u11]] in row-major order.
struct Gate1q {
    Regime regime = Regime::Exact;
    std::array<GaussInt, 4> num{};
    int64_t den = 1;
    std::array<std::complex<double>, 4> values{};

    /// num / den; rejected with NotUnitary unless exactly unitary.
    static Gate1q exact(std::array<GaussInt, 4> num, int64_t den = 1);
    /// Rejected with NotUnitary unless unitary within 1e-12.
    static Gate1q numeric(std::array<std::complex<double>, 4> values);

    static Gate1q identity();
    static Gate1q pauli_x();
    static Gate1q pauli_y();
    static Gate1q pauli_z();

    std::complex<double> value(int k) const;
};

class DenseState {
   public:
    /// sqrt(2^n)^{-1} * signs, exact.
    static DenseState from_signs(const SignState &signs);
    static DenseState from_amplitudes(int num_qubits, std::vector<std::complex<double>> amplitudes);

    int num_qubits() const {
        return n_;
    }
    uint64_t size() const {
        return uint64_t{1} << n_;
    }
    Regime regime() const {
        return regime_;
    }

    /// Exact regime: amplitude k = numerators()[k] * scale() / sqrt(2)^sqrt2_exponent().
    std::span<const GaussInt> numerators() const {
        return num_;
    }
    const Rational &scale() const {
        return scale_;
    }
    int sqrt2_exponent() const {
        return sqrt2_exponent_;
    }

    std::complex<double> amplitude(uint64_t index) const;
    std::vector<std::complex<double>> amplitudes() const;

    /// Exact equality (both exact) or max entry deviation <= tol otherwise.
    bool equals(const DenseState &other, double tol = 1e-12) const;

    /// The same state times a scalar: multiply exact numerators by a Gaussian integer.
    DenseState times(GaussInt factor) const;

   private:
    friend DenseState dense_apply_1q(const DenseState &, int, const Gate1q &);
    DenseState() = default;

    int n_ = 0;
    Regime regime_ = Regime::Exact;
    std::vector<GaussInt> num_;
    Rational scale_{1};
    int sqrt2_exponent_ = 0;
    std::vector<std::complex<double>> values_;
};

/// Applies U to qubit `vertex` (1-based). Stays exact when both inputs are exact.
DenseState dense_apply_1q(const DenseState &state, int vertex, const Gate1q &gate);

class DenseDensity {
   public:
    static DenseDensity from_state(const DenseState &state);
    static DenseDensity from_values(int num_qubits, std::vector<std::complex<double>> values);

    /// sum_k weights[k] * terms[k]; exact when every term is exact.
    static DenseDensity weighted_sum(std::span<const Rational> weights, std::span<const DenseDensity> terms);

    int num_qubits() const {
        return n_;
    }
    uint64_t dim() const {
        return uint64_t{1} << n_;
    }
    Regime regime() const {
        return regime_;
    }

    ComplexRational exact_entry(uint64_t row, uint64_t col) const;
    std::complex<double> entry(uint64_t row, uint64_t col) const;

    /// Exact trace in the exact regime; float otherwise (imaginary part dropped).
    ComplexRational exact_trace() const;
    std::complex<double> trace() const;

    DenseDensity to_float() const;

    /// Exact entrywise equality when both are exact; otherwise max deviation <= tol.
    bool equals(const DenseDensity &other, double tol = 1e-12) const;

   private:
    friend DenseDensity dense_partial_trace(const DenseDensity &, std::span<const int>);
    DenseDensity() = default;

    int n_ = 0;
    Regime regime_ = Regime::Exact;
    std::vector<GaussInt> num_;
    Rational scale_{1};
    std::vector<std::complex<double>> values_;
};

DenseDensity dense_density(const SignState &state);
DenseDensity dense_density(const DenseState &state);

/// Traces out the listed qubits (1-based); survivors keep their relative order.
/// Tracing every qubit gives the 1x1 matrix [trace].
DenseDensity dense_partial_trace(const DenseDensity &density, std::span<const int> vertices);

}  // namespace hyperlu

#endif
