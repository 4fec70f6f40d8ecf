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

#ifndef HYPERLU_PTRACE_H
#define HYPERLU_PTRACE_H

#include <vector>

#include "hyperlu/dense.h"
#include "hyperlu/hypergraph.h"
#include "hyperlu/rational.h"

namespace hyperlu {

struct MixtureComponent {
    Rational weight;
    Hypergraph graph;
    /// Global -1 picked up by shrinking a singleton edge. Invisible in the density.
    bool global_minus = false;
};

/// Convex combination of hypergraph-state density matrices.
class HypergraphMixture {
   public:
    /// Merges components with equal hypergraphs (weights add, phase flags are
    /// OR'd) and sorts them. Throws SizeMismatch on mixed vertex counts and
    /// BadParams unless weights are positive and sum to exactly 1.
    HypergraphMixture(int num_qubits, std::vector<MixtureComponent> components);

    int num_qubits() const {
        return n_;
    }
    const std::vector<MixtureComponent> &components() const {
        return components_;
    }

    /// Compares weights and hypergraphs; phase flags are ignored.
    bool operator==(const HypergraphMixture &other) const;

   private:
    int n_;
    std::vector<MixtureComponent> components_;
};

/// 1/2 rho_{D_a G} + 1/2 rho_{S_a G}. Throws VertexOutOfRange / TooFewQubits.
HypergraphMixture trace_one(const Hypergraph &graph, int vertex);

/// The 2^|U| terms 2^-|U| D_T S_{U-T} before merging, T running over subsets of U
/// in increasing mask order (vertex sets encoded as usual).
std::vector<MixtureComponent> trace_set_expansion(const Hypergraph &graph, VertexSet traced);

/// Merged form of trace_set_expansion. Throws ArgOutOfRange for empty U,
/// VertexOutOfRange, CannotTraceAll.
HypergraphMixture trace_set(const Hypergraph &graph, VertexSet traced);
HypergraphMixture trace_set(const Hypergraph &graph, const std::vector<int> &traced);

/// Single-qubit traces applied one at a time in the given order (original labels).
HypergraphMixture trace_iterated(const Hypergraph &graph, const std::vector<int> &order);

constexpr int kMaxMixtureDensityQubits = 12;

/// sum_i w_i rho_{G_i}, exact. Throws TooLarge above kMaxMixtureDensityQubits.
DenseDensity mixture_density(const HypergraphMixture &mixture);

enum class PairRelation { SamePairing, SwappedPairing, NotEqual };
const char *pair_relation_name(PairRelation r);

/// How rho_H + rho_K compares with rho_H' + rho_K'. For n <= 10 a NotEqual
/// verdict is confirmed against dense densities (OracleMismatch if they agree).
/// Throws SizeMismatch.
PairRelation mixture_pair_relation(const Hypergraph &h, const Hypergraph &k, const Hypergraph &h2, const Hypergraph &k2);

struct ReconstructionCandidate {
    Hypergraph graph;
    /// Built from |0>psi_A - |1>psi_B rather than +.
    bool minus_branch = false;
    /// A = K, B = H rather than A = H, B = K.
    bool swapped = false;
};

/// All hypergraphs G' on n+1 vertices whose qubit-1 trace is (rho_H + rho_K)/2,
/// each verified. Throws SizeMismatch, TooLarge when n+1 exceeds the vertex cap,
/// OracleMismatch if a candidate breaks the {1}-edge sign rule.
std::vector<ReconstructionCandidate> reconstruct_candidates(const Hypergraph &h, const Hypergraph &k);

}  // namespace hyperlu

#endif
