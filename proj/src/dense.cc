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

#include "hyperlu/dense.h"

#include <cmath>
#include <numeric>

#include "hyperlu/error.h"

namespace hyperlu {

namespace {

int64_t add64(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorCode::Overflow, "exact dense numerator overflow");
    }
    return out;
}

int64_t mul64(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorCode::Overflow, "exact dense numerator overflow");
    }
    return out;
}

std::complex<double> to_complex(GaussInt g) {
    return {static_cast<double>(g.re), static_cast<double>(g.im)};
}

Rational pow2(int exponent) {
    Rational q(1);
    if (exponent >= 0) {
        mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), exponent);
    } else {
        mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), -exponent);
    }
    q.canonicalize();
    return q;
}

// True iff a[k] * ratio == b[k] for every k.
bool scaled_equal(std::span<const GaussInt> a, std::span<const GaussInt> b, const Rational &ratio) {
    if (a.size() != b.size()) {
        return false;
    }
    const BigInt &p = ratio.get_num();
    const BigInt &q = ratio.get_den();
    if (p.fits_slong_p() && q.fits_slong_p()) {
        __int128 p128 = p.get_si();
        __int128 q128 = q.get_si();
        for (size_t k = 0; k < a.size(); k++) {
            if (a[k].re * p128 != b[k].re * q128 || a[k].im * p128 != b[k].im * q128) {
                return false;
            }
        }
        return true;
    }
    for (size_t k = 0; k < a.size(); k++) {
        if (BigInt(static_cast<long>(a[k].re)) * p != BigInt(static_cast<long>(b[k].re)) * q ||
            BigInt(static_cast<long>(a[k].im)) * p != BigInt(static_cast<long>(b[k].im)) * q) {
            return false;
        }
    }
    return true;
}

bool all_zero(std::span<const GaussInt> a) {
    for (const auto &g : a) {
        if (g.re != 0 || g.im != 0) {
            return false;
        }
    }
    return true;
}

double to_double(const Rational &q) {
    return q.get_d();
}

double sqrt2_power(int exponent) {
    return std::pow(2.0, -0.5 * exponent);
}

bool max_deviation_within(
    const std::vector<std::complex<double>> &a, const std::vector<std::complex<double>> &b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (size_t k = 0; k < a.size(); k++) {
        if (std::abs(a[k] - b[k]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

GaussInt checked_add(GaussInt a, GaussInt b) {
    return {add64(a.re, b.re), add64(a.im, b.im)};
}

GaussInt checked_mul(GaussInt a, GaussInt b) {
    return {add64(mul64(a.re, b.re), -mul64(a.im, b.im)), add64(mul64(a.re, b.im), mul64(a.im, b.re))};
}

Gate1q Gate1q::exact(std::array<GaussInt, 4> num, int64_t den) {
    if (den <= 0) {
        throw Error(ErrorCode::NotUnitary, "gate denominator must be positive");
    }
    // U U^dagger == den^2 I.
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            GaussInt acc{};
            for (int k = 0; k < 2; k++) {
                acc = checked_add(acc, checked_mul(num[2 * i + k], conj(num[2 * j + k])));
            }
            GaussInt expected{i == j ? mul64(den, den) : 0, 0};
            if (!(acc == expected)) {
                throw Error(ErrorCode::NotUnitary, "gate is not exactly unitary");
            }
        }
    }
    Gate1q g;
    g.regime = Regime::Exact;
    g.num = num;
    g.den = den;
    for (int k = 0; k < 4; k++) {
        g.values[k] = to_complex(num[k]) / static_cast<double>(den);
    }
    return g;
}

Gate1q Gate1q::numeric(std::array<std::complex<double>, 4> values) {
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            std::complex<double> acc = 0;
            for (int k = 0; k < 2; k++) {
                acc += values[2 * i + k] * std::conj(values[2 * j + k]);
            }
            if (std::abs(acc - (i == j ? 1.0 : 0.0)) > 1e-12) {
                throw Error(ErrorCode::NotUnitary, "gate is not unitary within 1e-12");
            }
        }
    }
    Gate1q g;
    g.regime = Regime::Float;
    g.values = values;
    return g;
}

Gate1q Gate1q::identity() {
    return exact({GaussInt{1, 0}, GaussInt{0, 0}, GaussInt{0, 0}, GaussInt{1, 0}});
}

Gate1q Gate1q::pauli_x() {
    return exact({GaussInt{0, 0}, GaussInt{1, 0}, GaussInt{1, 0}, GaussInt{0, 0}});
}

Gate1q Gate1q::pauli_y() {
    return exact({GaussInt{0, 0}, GaussInt{0, -1}, GaussInt{0, 1}, GaussInt{0, 0}});
}

Gate1q Gate1q::pauli_z() {
    return exact({GaussInt{1, 0}, GaussInt{0, 0}, GaussInt{0, 0}, GaussInt{-1, 0}});
}

std::complex<double> Gate1q::value(int k) const {
    return values[k];
}

DenseState DenseState::from_signs(const SignState &signs) {
    if (signs.num_qubits() > kMaxDenseStateQubits) {
        throw Error(ErrorCode::TooLarge, "dense states support at most " + std::to_string(kMaxDenseStateQubits) + " qubits");
    }
    DenseState s;
    s.n_ = signs.num_qubits();
    s.regime_ = Regime::Exact;
    s.num_.resize(signs.size());
    for (uint64_t k = 0; k < signs.size(); k++) {
        s.num_[k] = {signs.sign(k), 0};
    }
    s.scale_ = 1;
    s.sqrt2_exponent_ = s.n_;
    return s;
}

DenseState DenseState::from_amplitudes(int num_qubits, std::vector<std::complex<double>> amplitudes) {
    if (num_qubits < 0 || num_qubits > kMaxDenseStateQubits) {
        throw Error(ErrorCode::TooLarge, "dense states support at most " + std::to_string(kMaxDenseStateQubits) + " qubits");
    }
    if (amplitudes.size() != (uint64_t{1} << num_qubits)) {
        throw Error(ErrorCode::DimensionMismatch, "amplitude count is not 2^n");
    }
    DenseState s;
    s.n_ = num_qubits;
    s.regime_ = Regime::Float;
    s.values_ = std::move(amplitudes);
    return s;
}

std::complex<double> DenseState::amplitude(uint64_t index) const {
    if (regime_ == Regime::Float) {
        return values_[index];
    }
    return to_complex(num_[index]) * (to_double(scale_) * sqrt2_power(sqrt2_exponent_));
}

std::vector<std::complex<double>> DenseState::amplitudes() const {
    if (regime_ == Regime::Float) {
        return values_;
    }
    std::vector<std::complex<double>> out(size());
    for (uint64_t k = 0; k < size(); k++) {
        out[k] = amplitude(k);
    }
    return out;
}

bool DenseState::equals(const DenseState &other, double tol) const {
    if (n_ != other.n_) {
        return false;
    }
    if (regime_ == Regime::Exact && other.regime_ == Regime::Exact) {
        int diff = other.sqrt2_exponent_ - sqrt2_exponent_;
        if (diff % 2 != 0) {
            // The ratio of scales is irrational; only zero vectors can agree.
            return all_zero(num_) && all_zero(other.num_);
        }
        if (sgn(other.scale_) == 0) {
            return sgn(scale_) == 0 || all_zero(num_);
        }
        Rational ratio = scale_ / other.scale_ * pow2(diff / 2);
        return scaled_equal(num_, other.num_, ratio);
    }
    return max_deviation_within(amplitudes(), other.amplitudes(), tol);
}

DenseState DenseState::times(GaussInt factor) const {
    DenseState out = *this;
    if (regime_ == Regime::Float) {
        for (auto &v : out.values_) {
            v *= to_complex(factor);
        }
    } else {
        for (auto &g : out.num_) {
            g = checked_mul(g, factor);
        }
    }
    return out;
}

DenseState dense_apply_1q(const DenseState &state, int vertex, const Gate1q &gate) {
    int n = state.n_;
    if (vertex < 1 || vertex > n) {
        throw Error(ErrorCode::VertexOutOfRange, "qubit " + std::to_string(vertex) + " outside 1.." + std::to_string(n));
    }
    uint64_t bit = uint64_t{1} << (n - vertex);
    DenseState out;
    out.n_ = n;
    if (state.regime_ == Regime::Exact && gate.regime == Regime::Exact) {
        out.regime_ = Regime::Exact;
        out.num_.resize(state.size());
        out.scale_ = state.scale_ / gate.den;
        out.sqrt2_exponent_ = state.sqrt2_exponent_;
        for (uint64_t i0 = 0; i0 < state.size(); i0++) {
            if (i0 & bit) {
                continue;
            }
            uint64_t i1 = i0 | bit;
            GaussInt a0 = state.num_[i0];
            GaussInt a1 = state.num_[i1];
            out.num_[i0] = checked_add(checked_mul(gate.num[0], a0), checked_mul(gate.num[1], a1));
            out.num_[i1] = checked_add(checked_mul(gate.num[2], a0), checked_mul(gate.num[3], a1));
        }
        return out;
    }
    std::vector<std::complex<double>> in = state.amplitudes();
    out.regime_ = Regime::Float;
    out.values_.resize(state.size());
    for (uint64_t i0 = 0; i0 < state.size(); i0++) {
        if (i0 & bit) {
            continue;
        }
        uint64_t i1 = i0 | bit;
        out.values_[i0] = gate.values[0] * in[i0] + gate.values[1] * in[i1];
        out.values_[i1] = gate.values[2] * in[i0] + gate.values[3] * in[i1];
    }
    return out;
}

DenseDensity DenseDensity::from_state(const DenseState &state) {
    int n = state.num_qubits();
    if (n > kMaxDenseDensityQubits) {
        throw Error(
            ErrorCode::TooLarge, "dense density matrices support at most " + std::to_string(kMaxDenseDensityQubits) + " qubits");
    }
    DenseDensity rho;
    rho.n_ = n;
    uint64_t dim = state.size();
    if (state.regime() == Regime::Exact) {
        rho.regime_ = Regime::Exact;
        auto num = state.numerators();
        rho.num_.resize(dim * dim);
        for (uint64_t i = 0; i < dim; i++) {
            for (uint64_t j = 0; j < dim; j++) {
                rho.num_[i * dim + j] = checked_mul(num[i], conj(num[j]));
            }
        }
        rho.scale_ = state.scale() * state.scale() * pow2(-state.sqrt2_exponent());
        return rho;
    }
    rho.regime_ = Regime::Float;
    auto amps = state.amplitudes();
    rho.values_.resize(dim * dim);
    for (uint64_t i = 0; i < dim; i++) {
        for (uint64_t j = 0; j < dim; j++) {
            rho.values_[i * dim + j] = amps[i] * std::conj(amps[j]);
        }
    }
    return rho;
}

DenseDensity DenseDensity::from_values(int num_qubits, std::vector<std::complex<double>> values) {
    if (num_qubits < 0 || num_qubits > kMaxDenseDensityQubits) {
        throw Error(ErrorCode::TooLarge, "dense density matrices support at most " + std::to_string(kMaxDenseDensityQubits) + " qubits");
    }
    uint64_t dim = uint64_t{1} << num_qubits;
    if (values.size() != dim * dim) {
        throw Error(ErrorCode::DimensionMismatch, "entry count is not 4^n");
    }
    DenseDensity rho;
    rho.n_ = num_qubits;
    rho.regime_ = Regime::Float;
    rho.values_ = std::move(values);
    return rho;
}

DenseDensity DenseDensity::weighted_sum(std::span<const Rational> weights, std::span<const DenseDensity> terms) {
    if (weights.size() != terms.size() || terms.empty()) {
        throw Error(ErrorCode::LengthMismatch, "weights and terms must be nonempty and of equal length");
    }
    int n = terms[0].n_;
    bool exact = true;
    for (const auto &t : terms) {
        if (t.n_ != n) {
            throw Error(ErrorCode::DimensionMismatch, "terms have different qubit counts");
        }
        exact = exact && t.regime_ == Regime::Exact;
    }
    DenseDensity out;
    out.n_ = n;
    uint64_t entries = out.dim() * out.dim();
    if (exact) {
        std::vector<Rational> factors;
        BigInt common(1);
        for (size_t k = 0; k < terms.size(); k++) {
            factors.push_back(weights[k] * terms[k].scale_);
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), factors.back().get_den_mpz_t());
        }
        out.regime_ = Regime::Exact;
        out.num_.assign(entries, GaussInt{});
        for (size_t k = 0; k < terms.size(); k++) {
            BigInt f = factors[k].get_num() * (common / factors[k].get_den());
            if (!f.fits_slong_p()) {
                throw Error(ErrorCode::Overflow, "exact dense weight overflow");
            }
            GaussInt g{f.get_si(), 0};
            for (uint64_t e = 0; e < entries; e++) {
                out.num_[e] = checked_add(out.num_[e], checked_mul(g, terms[k].num_[e]));
            }
        }
        out.scale_ = Rational(BigInt(1), common);
        return out;
    }
    out.regime_ = Regime::Float;
    out.values_.assign(entries, 0.0);
    for (size_t k = 0; k < terms.size(); k++) {
        double w = weights[k].get_d();
        for (uint64_t e = 0; e < entries; e++) {
            out.values_[e] += w * terms[k].entry(e / out.dim(), e % out.dim());
        }
    }
    return out;
}

ComplexRational DenseDensity::exact_entry(uint64_t row, uint64_t col) const {
    if (regime_ != Regime::Exact) {
        throw Error(ErrorCode::ArgOutOfRange, "density is in the float regime");
    }
    const GaussInt &g = num_[row * dim() + col];
    return {Rational(BigInt(static_cast<long>(g.re))) * scale_, Rational(BigInt(static_cast<long>(g.im))) * scale_};
}

std::complex<double> DenseDensity::entry(uint64_t row, uint64_t col) const {
    if (regime_ == Regime::Float) {
        return values_[row * dim() + col];
    }
    return to_complex(num_[row * dim() + col]) * to_double(scale_);
}

ComplexRational DenseDensity::exact_trace() const {
    ComplexRational acc;
    for (uint64_t k = 0; k < dim(); k++) {
        auto e = exact_entry(k, k);
        acc.re += e.re;
        acc.im += e.im;
    }
    return acc;
}

std::complex<double> DenseDensity::trace() const {
    std::complex<double> acc = 0;
    for (uint64_t k = 0; k < dim(); k++) {
        acc += entry(k, k);
    }
    return acc;
}

DenseDensity DenseDensity::to_float() const {
    DenseDensity out;
    out.n_ = n_;
    out.regime_ = Regime::Float;
    out.values_.resize(dim() * dim());
    for (uint64_t e = 0; e < out.values_.size(); e++) {
        out.values_[e] = entry(e / dim(), e % dim());
    }
    return out;
}

bool DenseDensity::equals(const DenseDensity &other, double tol) const {
    if (n_ != other.n_) {
        return false;
    }
    if (regime_ == Regime::Exact && other.regime_ == Regime::Exact) {
        if (sgn(other.scale_) == 0 || sgn(scale_) == 0) {
            return (sgn(scale_) == 0 || all_zero(num_)) && (sgn(other.scale_) == 0 || all_zero(other.num_));
        }
        return scaled_equal(num_, other.num_, scale_ / other.scale_);
    }
    return max_deviation_within(to_float().values_, other.to_float().values_, tol);
}

DenseDensity dense_density(const SignState &state) {
    return DenseDensity::from_state(DenseState::from_signs(state));
}

DenseDensity dense_density(const DenseState &state) {
    return DenseDensity::from_state(state);
}

DenseDensity dense_partial_trace(const DenseDensity &density, std::span<const int> vertices) {
    int n = density.n_;
    uint64_t traced_mask = 0;
    for (int v : vertices) {
        if (v < 1 || v > n) {
            throw Error(ErrorCode::VertexOutOfRange, "qubit " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        uint64_t bit = uint64_t{1} << (n - v);
        if (traced_mask & bit) {
            throw Error(ErrorCode::BadParams, "qubit " + std::to_string(v) + " listed twice");
        }
        traced_mask |= bit;
    }
    int traced = std::popcount(traced_mask);
    int kept = n - traced;
    // Scatter tables from compact indices to full indices.
    auto scatter = [n](uint64_t mask) {
        std::vector<uint64_t> table;
        int count = std::popcount(mask);
        table.resize(uint64_t{1} << count);
        for (uint64_t compact = 0; compact < table.size(); compact++) {
            uint64_t full = 0;
            int pos = 0;
            for (int b = 0; b < n; b++) {
                if (mask & (uint64_t{1} << b)) {
                    if (compact & (uint64_t{1} << pos)) {
                        full |= uint64_t{1} << b;
                    }
                    pos++;
                }
            }
            table[compact] = full;
        }
        return table;
    };
    uint64_t full_mask = (uint64_t{1} << n) - 1;
    std::vector<uint64_t> kept_table = scatter(full_mask & ~traced_mask);
    std::vector<uint64_t> traced_table = scatter(traced_mask);
    DenseDensity out;
    out.n_ = kept;
    out.regime_ = density.regime_;
    uint64_t dim_in = density.dim();
    uint64_t dim_out = uint64_t{1} << kept;
    if (density.regime_ == Regime::Exact) {
        out.scale_ = density.scale_;
        out.num_.assign(dim_out * dim_out, GaussInt{});
        for (uint64_t i = 0; i < dim_out; i++) {
            for (uint64_t j = 0; j < dim_out; j++) {
                GaussInt acc{};
                for (uint64_t t : traced_table) {
                    acc = checked_add(acc, density.num_[(kept_table[i] | t) * dim_in + (kept_table[j] | t)]);
                }
                out.num_[i * dim_out + j] = acc;
            }
        }
    } else {
        out.values_.assign(dim_out * dim_out, 0.0);
        for (uint64_t i = 0; i < dim_out; i++) {
            for (uint64_t j = 0; j < dim_out; j++) {
                std::complex<double> acc = 0;
                for (uint64_t t : traced_table) {
                    acc += density.values_[(kept_table[i] | t) * dim_in + (kept_table[j] | t)];
                }
                out.values_[i * dim_out + j] = acc;
            }
        }
    }
    return out;
}

}  // namespace hyperlu
