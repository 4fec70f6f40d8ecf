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

#ifndef HYPERLU_ALGEBRA_H
#define HYPERLU_ALGEBRA_H

#include <span>
#include <string>
#include <vector>

#include "hyperlu/hypergraph.h"
#include "hyperlu/rational.h"

namespace hyperlu {

/// theta + sum_a (r_a X_a + s_a Y_a + t_a Z_a), the hermitian form of a local
/// unitary algebra element (the factor i is dropped).
struct AlgebraElement {
    Rational theta;
    std::vector<Rational> r;
    std::vector<Rational> s;
    std::vector<Rational> t;

    explicit AlgebraElement(int num_qubits) : r(num_qubits), s(num_qubits), t(num_qubits) {
    }

    int num_qubits() const {
        return static_cast<int>(r.size());
    }

    /// Flat layout [theta, r_1..r_n, s_1..s_n, t_1..t_n] used by the solver.
    static AlgebraElement from_coefficients(std::span<const Rational> flat);
    std::vector<Rational> coefficients() const;

    bool is_zero() const;

    /// e.g. "X1 - X2 + 2 Z3"; "0" for the zero element.
    std::string to_string() const;

    bool operator==(const AlgebraElement &other) const = default;
};

/// Number of qubits with (r_a, s_a, t_a) != 0.
int weight(const AlgebraElement &element);

/// Diagonal of Phi_M = theta + sum_a (r_a P_a - i s_a Z_a P_a + t_a Z_a) in the
/// computational basis. M annihilates |psi_G> iff every entry is zero.
std::vector<ComplexRational> phi_m_diagonal(const Hypergraph &graph, const AlgebraElement &element);

}  // namespace hyperlu

#endif
