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

#ifndef HYPERLU_STABILIZER_H
#define HYPERLU_STABILIZER_H

#include <optional>
#include <string>
#include <vector>

#include "hyperlu/algebra.h"
#include "hyperlu/hypergraph.h"

namespace hyperlu {

constexpr int kMaxStabilizerQubits = 16;

struct StabilizerBasis {
    int num_qubits = 0;
    int dimension = 0;
    std::vector<AlgebraElement> basis;
    /// Same elements in the flat layout [theta, r_1..r_n, s_1..s_n, t_1..t_n],
    /// as coprime integers with positive leading entry, in reduced echelon order.
    std::vector<std::vector<BigInt>> integer_basis;
    /// Every basis element has s = t = 0.
    bool x_form = true;
    /// Number of distinct equations that went into the elimination.
    size_t equations_used = 0;
};

/// Solves theta + sum_a (r_a P_a + t_a Z_a) = 0 and sum_a s_a Z_a P_a = 0 on
/// every basis string. Throws TooLarge above kMaxStabilizerQubits.
StabilizerBasis stabilizer_algebra(const Hypergraph &graph);

/// True iff M annihilates |psi_G>. For n <= 10 the answer is also recomputed
/// with dense Pauli application and both must agree.
bool verify_element(const Hypergraph &graph, const AlgebraElement &element);

/// Spans of two integer bases (same column count) coincide.
bool same_span(const std::vector<std::vector<BigInt>> &a, const std::vector<std::vector<BigInt>> &b, int num_columns);

struct StructuralReport {
    /// Present when every edge has at least 3 vertices: whether all basis
    /// elements have the real X-only form.
    std::optional<bool> x_form_prediction;
    /// Vertices owning a reduced set that no other vertex shares.
    std::vector<int> unshared_vertices;
    /// Present for m-uniform G with m >= 3: whether r_b = 0 for all unshared b.
    std::optional<bool> unshared_zero_prediction;

    /// Essential-graph test: at least 3 essential vertices, essential
    /// hyperedges form a connected simple graph, every shared reduced set has
    /// at most two essential owners, all edges of size >= 3.
    bool triviality_hypotheses = false;
    /// Present when the hypotheses hold: along every path u-v-w of the essential
    /// graph there are shared sets S (for uv) and T (for vw) such that the
    /// essential vertices with P = -1 at |1_S>, |1_T>, |1_{S u T}> are exactly
    /// {u,v}, {v,w}, {u,w}.
    std::optional<bool> two_minus_pattern;
    /// Hypotheses hold but the dimension is not 0.
    bool triviality_discrepancy = false;

    std::vector<std::string> notes;
};

StructuralReport structural_report(const Hypergraph &graph, const StabilizerBasis &basis);

}  // namespace hyperlu

#endif
