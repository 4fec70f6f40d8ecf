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

#include "hyperlu/sign_state.h"

#include <algorithm>
#include <bit>

#include "hyperlu/error.h"

namespace hyperlu {

namespace {

constexpr uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

SignState::SignState(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxSignQubits) {
        throw Error(ErrorCode::TooLarge, "sign vectors support at most " + std::to_string(kMaxSignQubits) + " qubits");
    }
    bits_.assign(((uint64_t{1} << num_qubits) + 63) / 64, 0);
}

SignState SignState::from_signs(std::span<const int> signs) {
    int n = 0;
    while ((uint64_t{1} << n) < signs.size()) {
        n++;
    }
    if ((uint64_t{1} << n) != signs.size()) {
        throw Error(ErrorCode::LengthMismatch, "sign vector length is not a power of two");
    }
    SignState state(n);
    for (uint64_t k = 0; k < signs.size(); k++) {
        if (signs[k] == -1) {
            state.flip(k);
        } else if (signs[k] != 1) {
            throw Error(ErrorCode::ArgOutOfRange, "sign vector entries must be +1 or -1");
        }
    }
    return state;
}

std::vector<int> SignState::to_signs() const {
    std::vector<int> out(size());
    for (uint64_t k = 0; k < size(); k++) {
        out[k] = sign(k);
    }
    return out;
}

void apply_ce_inplace(SignState &state, VertexSet edge) {
    int n = state.num_qubits();
    if (edge == 0) {
        throw Error(ErrorCode::EmptyHyperedge, "controlled-Z needs a nonempty hyperedge");
    }
    uint64_t universe = (uint64_t{1} << n) - 1;
    if ((edge & ~universe) != 0) {
        throw Error(ErrorCode::VertexOutOfRange, "hyperedge mentions a qubit above " + std::to_string(n));
    }
    // Enumerate supersets of the edge as edge | (subsets of its complement).
    uint64_t free = universe & ~uint64_t{edge};
    uint64_t sub = free;
    while (true) {
        state.flip(edge | sub);
        if (sub == 0) {
            break;
        }
        sub = (sub - 1) & free;
    }
}

SignState apply_ce(SignState state, VertexSet edge) {
    apply_ce_inplace(state, edge);
    return state;
}

SignState build_state(const Hypergraph &graph) {
    SignState state(graph.num_vertices());
    for (VertexSet e : graph.edges()) {
        apply_ce_inplace(state, e);
    }
    return state;
}

void subset_xor_transform(SignState &state) {
    int n = state.num_qubits();
    auto words = state.mutable_words();
    // Bit positions inside a word.
    for (int d = 0; d < std::min(n, 6); d++) {
        int shift = 1 << d;
        for (auto &w : words) {
            w ^= (w & kLowHalf[d]) << shift;
        }
    }
    if (n < 6) {
        words[0] &= (uint64_t{1} << (uint64_t{1} << n)) - 1;
    }
    // Bit positions that select whole words.
    for (int d = 6; d < n; d++) {
        uint64_t stride = uint64_t{1} << (d - 6);
        for (uint64_t k = 0; k < words.size(); k++) {
            if (k & stride) {
                words[k] ^= words[k ^ stride];
            }
        }
    }
}

Hypergraph signs_to_hypergraph(const SignState &state) {
    if (state.is_minus(0)) {
        throw Error(ErrorCode::NotAHypergraphState, "entry at the all-zeros string is -1 (global phase)");
    }
    SignState indicator = state;
    subset_xor_transform(indicator);
    std::vector<VertexSet> edges;
    auto words = indicator.words();
    for (uint64_t k = 0; k < words.size(); k++) {
        for (uint64_t w = words[k]; w != 0; w &= w - 1) {
            edges.push_back(static_cast<VertexSet>(k * 64 + std::countr_zero(w)));
        }
    }
    return Hypergraph::from_masks(state.num_qubits(), edges);
}

PhasedHypergraph x_image(const Hypergraph &graph, int vertex) {
    graph.check_vertex(vertex);
    int n = graph.num_vertices();
    VertexSet bit = vertex_bit(n, vertex);
    std::vector<VertexSet> edges = graph.edges();
    bool global_minus = false;
    for (VertexSet e : graph.edges()) {
        if (!(e & bit)) {
            continue;
        }
        VertexSet reduced = e & ~bit;
        if (reduced == 0) {
            global_minus = !global_minus;
        } else {
            edges.push_back(reduced);
        }
    }
    return {Hypergraph::from_masks(n, edges), global_minus};
}

int p_sign(const Hypergraph &graph, int vertex, uint64_t index) {
    graph.check_vertex(vertex);
    VertexSet bit = vertex_bit(graph.num_vertices(), vertex);
    int sign = 1;
    for (VertexSet e : graph.edges()) {
        if ((e & bit) && is_subset(e & ~bit, static_cast<VertexSet>(index))) {
            sign = -sign;
        }
    }
    return sign;
}

SignState p_diagonal(const Hypergraph &graph, int vertex) {
    graph.check_vertex(vertex);
    VertexSet bit = vertex_bit(graph.num_vertices(), vertex);
    SignState diag(graph.num_vertices());
    bool global_minus = false;
    for (VertexSet e : graph.edges()) {
        if (!(e & bit)) {
            continue;
        }
        VertexSet reduced = e & ~bit;
        if (reduced == 0) {
            global_minus = !global_minus;
        } else {
            apply_ce_inplace(diag, reduced);
        }
    }
    if (global_minus) {
        for (auto &w : diag.mutable_words()) {
            w = ~w;
        }
        if (diag.num_qubits() < 6) {
            diag.mutable_words()[0] &= (uint64_t{1} << diag.size()) - 1;
        }
    }
    return diag;
}

}  // namespace hyperlu
