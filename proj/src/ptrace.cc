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

#include "hyperlu/ptrace.h"

#include <algorithm>
#include <bit>

#include "hyperlu/error.h"
#include "hyperlu/sign_state.h"

namespace hyperlu {

namespace {

constexpr int kDensePairCheckQubits = 10;

// Removes the traced vertices in descending label order so the labels still
// to be removed are unaffected.
PhasedHypergraph apply_split(const Hypergraph &graph, VertexSet traced, VertexSet deleted) {
    int n = graph.num_vertices();
    PhasedHypergraph cur{graph, false};
    for (int v = n; v >= 1; v--) {
        VertexSet bit = vertex_bit(n, v);
        if (!(traced & bit)) {
            continue;
        }
        if (deleted & bit) {
            cur.graph = delete_vertex(cur.graph, v);
        } else {
            PhasedHypergraph next = shrink_vertex(cur.graph, v);
            cur.graph = std::move(next.graph);
            cur.global_minus ^= next.global_minus;
        }
    }
    return cur;
}

VertexSet labels_to_mask(int n, const std::vector<int> &labels) {
    VertexSet mask = 0;
    for (int v : labels) {
        if (v < 1 || v > n) {
            throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        mask |= vertex_bit(n, v);
    }
    return mask;
}

void check_traced(const Hypergraph &graph, VertexSet traced) {
    int n = graph.num_vertices();
    if (traced == 0) {
        throw Error(ErrorCode::ArgOutOfRange, "traced set is empty");
    }
    if (traced & ~all_vertices(n)) {
        throw Error(ErrorCode::VertexOutOfRange, "traced set has vertices outside 1.." + std::to_string(n));
    }
    if (traced == all_vertices(n)) {
        throw Error(ErrorCode::CannotTraceAll, "cannot trace out every qubit");
    }
}

}  // namespace

HypergraphMixture::HypergraphMixture(int num_qubits, std::vector<MixtureComponent> components) : n_(num_qubits) {
    Rational total = 0;
    for (const auto &c : components) {
        if (c.graph.num_vertices() != n_) {
            throw Error(ErrorCode::SizeMismatch, "mixture components have different vertex counts");
        }
        if (sgn(c.weight) <= 0) {
            throw Error(ErrorCode::BadParams, "mixture weights must be positive");
        }
        total += c.weight;
    }
    if (total != 1) {
        throw Error(ErrorCode::BadParams, "mixture weights sum to " + total.get_str() + ", not 1");
    }
    std::sort(components.begin(), components.end(), [](const MixtureComponent &a, const MixtureComponent &b) {
        return a.graph < b.graph;
    });
    for (auto &c : components) {
        if (!components_.empty() && components_.back().graph == c.graph) {
            components_.back().weight += c.weight;
            components_.back().global_minus = components_.back().global_minus || c.global_minus;
        } else {
            components_.push_back(std::move(c));
        }
    }
}

bool HypergraphMixture::operator==(const HypergraphMixture &other) const {
    if (n_ != other.n_ || components_.size() != other.components_.size()) {
        return false;
    }
    for (size_t k = 0; k < components_.size(); k++) {
        if (components_[k].weight != other.components_[k].weight || !(components_[k].graph == other.components_[k].graph)) {
            return false;
        }
    }
    return true;
}

HypergraphMixture trace_one(const Hypergraph &graph, int vertex) {
    graph.check_vertex(vertex);
    if (graph.num_vertices() < 2) {
        throw Error(ErrorCode::TooFewQubits, "cannot trace the only qubit");
    }
    PhasedHypergraph shrunk = shrink_vertex(graph, vertex);
    Rational half(1, 2);
    return HypergraphMixture(
        graph.num_vertices() - 1,
        {{half, delete_vertex(graph, vertex), false}, {half, std::move(shrunk.graph), shrunk.global_minus}});
}

std::vector<MixtureComponent> trace_set_expansion(const Hypergraph &graph, VertexSet traced) {
    check_traced(graph, traced);
    Rational weight(1, BigInt(1) << std::popcount(traced));
    std::vector<MixtureComponent> out;
    // Enumerate subsets T of traced in increasing order.
    VertexSet t = 0;
    while (true) {
        PhasedHypergraph g = apply_split(graph, traced, t);
        out.push_back({weight, std::move(g.graph), g.global_minus});
        if (t == traced) {
            break;
        }
        t = (t - traced) & traced;
    }
    return out;
}

HypergraphMixture trace_set(const Hypergraph &graph, VertexSet traced) {
    auto terms = trace_set_expansion(graph, traced);
    return HypergraphMixture(graph.num_vertices() - std::popcount(traced), std::move(terms));
}

HypergraphMixture trace_set(const Hypergraph &graph, const std::vector<int> &traced) {
    return trace_set(graph, labels_to_mask(graph.num_vertices(), traced));
}

HypergraphMixture trace_iterated(const Hypergraph &graph, const std::vector<int> &order) {
    int n = graph.num_vertices();
    VertexSet mask = labels_to_mask(n, order);
    if (std::popcount(mask) != static_cast<int>(order.size())) {
        throw Error(ErrorCode::BadParams, "trace order repeats a vertex");
    }
    check_traced(graph, mask);
    std::vector<MixtureComponent> current{{Rational(1), graph, false}};
    std::vector<int> removed;
    for (int v : order) {
        int label = v;
        for (int r : removed) {
            if (r < v) {
                label--;
            }
        }
        std::vector<MixtureComponent> next;
        for (const auto &c : current) {
            HypergraphMixture pieces = trace_one(c.graph, label);
            for (const auto &piece : pieces.components()) {
                next.push_back({c.weight * piece.weight, piece.graph, c.global_minus != piece.global_minus});
            }
        }
        int remaining = next.front().graph.num_vertices();
        current = HypergraphMixture(remaining, std::move(next)).components();
        removed.push_back(v);
    }
    return HypergraphMixture(n - static_cast<int>(order.size()), std::move(current));
}

DenseDensity mixture_density(const HypergraphMixture &mixture) {
    if (mixture.num_qubits() > kMaxMixtureDensityQubits) {
        throw Error(
            ErrorCode::TooLarge, "mixture densities support at most " + std::to_string(kMaxMixtureDensityQubits) + " qubits");
    }
    std::vector<Rational> weights;
    std::vector<DenseDensity> terms;
    for (const auto &c : mixture.components()) {
        weights.push_back(c.weight);
        terms.push_back(dense_density(build_state(c.graph)));
    }
    return DenseDensity::weighted_sum(weights, terms);
}

const char *pair_relation_name(PairRelation r) {
    switch (r) {
        case PairRelation::SamePairing:
            return "same";
        case PairRelation::SwappedPairing:
            return "swapped";
        default:
            return "not-equal";
    }
}

PairRelation mixture_pair_relation(const Hypergraph &h, const Hypergraph &k, const Hypergraph &h2, const Hypergraph &k2) {
    int n = h.num_vertices();
    if (k.num_vertices() != n || h2.num_vertices() != n || k2.num_vertices() != n) {
        throw Error(ErrorCode::SizeMismatch, "hypergraphs have different vertex counts");
    }
    if (h == h2 && k == k2) {
        return PairRelation::SamePairing;
    }
    if (h == k2 && k == h2) {
        return PairRelation::SwappedPairing;
    }
    if (n <= kDensePairCheckQubits) {
        std::vector<Rational> ones{Rational(1), Rational(1)};
        std::vector<DenseDensity> left{dense_density(build_state(h)), dense_density(build_state(k))};
        std::vector<DenseDensity> right{dense_density(build_state(h2)), dense_density(build_state(k2))};
        if (DenseDensity::weighted_sum(ones, left).equals(DenseDensity::weighted_sum(ones, right))) {
            throw Error(ErrorCode::OracleMismatch, "distinct pairs produced equal dense mixtures");
        }
    }
    return PairRelation::NotEqual;
}

std::vector<ReconstructionCandidate> reconstruct_candidates(const Hypergraph &h, const Hypergraph &k) {
    int n = h.num_vertices();
    if (k.num_vertices() != n) {
        throw Error(ErrorCode::SizeMismatch, "hypergraphs have different vertex counts");
    }
    if (n + 1 > kMaxVertices) {
        throw Error(ErrorCode::TooLarge, "reconstruction would need more than " + std::to_string(kMaxVertices) + " vertices");
    }
    SignState sh = build_state(h);
    SignState sk = build_state(k);
    uint64_t half = sh.size();
    std::vector<ReconstructionCandidate> out;
    for (bool swapped : {false, true}) {
        const SignState &a = swapped ? sk : sh;
        const SignState &b = swapped ? sh : sk;
        for (bool minus : {false, true}) {
            SignState joined(n + 1);
            for (uint64_t i = 0; i < half; i++) {
                if (a.is_minus(i)) {
                    joined.flip(i);
                }
                if (b.is_minus(i) != minus) {
                    joined.flip(half + i);
                }
            }
            Hypergraph g = signs_to_hypergraph(joined);
            bool has_singleton = g.has_edge(vertex_bit(n + 1, 1));
            if (has_singleton != minus) {
                throw Error(ErrorCode::OracleMismatch, "singleton edge {1} does not match the sign branch");
            }
            bool seen = std::any_of(out.begin(), out.end(), [&](const ReconstructionCandidate &c) { return c.graph == g; });
            if (seen) {
                continue;
            }
            Hypergraph d = delete_vertex(g, 1);
            Hypergraph s = shrink_vertex(g, 1).graph;
            if (mixture_pair_relation(d, s, h, k) == PairRelation::NotEqual) {
                continue;
            }
            out.push_back({std::move(g), minus, swapped});
        }
    }
    return out;
}

}  // namespace hyperlu
