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

#ifndef HYPERLU_SIGN_STATE_H
#define HYPERLU_SIGN_STATE_H

#include <cstdint>
#include <span>
#include <vector>

#include "hyperlu/hypergraph.h"

namespace hyperlu {

/// The unnormalized hypergraph state sqrt(2^n)|psi>: one +-1 per basis string,
/// indexed with qubit 1 as the most significant bit. Signs are packed one bit
/// per entry (bit set means -1).
class SignState {
   public:
    /// All-plus vector, i.e. |+>^n.
    explicit SignState(int num_qubits);

    static SignState from_signs(std::span<const int> signs);

    int num_qubits() const {
        return n_;
    }
    uint64_t size() const {
        return uint64_t{1} << n_;
    }
    bool is_minus(uint64_t index) const {
        return (bits_[index >> 6] >> (index & 63)) & 1;
    }
    int sign(uint64_t index) const {
        return is_minus(index) ? -1 : 1;
    }
    void flip(uint64_t index) {
        bits_[index >> 6] ^= uint64_t{1} << (index & 63);
    }

    /// Packed storage; unused high bits of the last word stay zero.
    std::span<const uint64_t> words() const {
        return bits_;
    }
    std::span<uint64_t> mutable_words() {
        return bits_;
    }

    std::vector<int> to_signs() const;

    bool operator==(const SignState &other) const = default;

   private:
    int n_;
    std::vector<uint64_t> bits_;
};

/// Largest qubit count for which sign vectors are materialized.
constexpr int kMaxSignQubits = 24;

/// Sign at S is (-1)^{#edges contained in S}.
SignState build_state(const Hypergraph &graph);

/// Generalized controlled-Z: flips every entry whose support contains `edge`.
void apply_ce_inplace(SignState &state, VertexSet edge);
SignState apply_ce(SignState state, VertexSet edge);

/// In-place GF(2) subset-sum (zeta) transform over the packed bits:
/// bit(S) <- XOR over T subset of S of bit(T). It is its own inverse.
void subset_xor_transform(SignState &state);

/// The hypergraph whose state is `state`. Throws NotAHypergraphState if the
/// all-zeros entry is -1.
Hypergraph signs_to_hypergraph(const SignState &state);

/// (-1)^{i_a}: +1 when qubit `vertex` is 0 in basis string `index`.
inline int z_sign(int num_qubits, int vertex, uint64_t index) {
    return ((index >> (num_qubits - vertex)) & 1) ? -1 : 1;
}

/// Hypergraph G' with X_a |psi_G> = +-|psi_G'>: G' = G Δ {e \ {a} : a ∈ e}.
PhasedHypergraph x_image(const Hypergraph &graph, int vertex);

/// Diagonal entry of P_a = prod_{e ∋ a} C_{e \ a} at basis string `index`.
int p_sign(const Hypergraph &graph, int vertex, uint64_t index);

/// The whole diagonal of P_a as a sign vector (bit set means -1).
SignState p_diagonal(const Hypergraph &graph, int vertex);

}  // namespace hyperlu

#endif
