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

#include "hyperlu/hypergraph.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hyperlu/error.h"

namespace hyperlu {

namespace {

void check_num_vertices(int num_vertices) {
    if (num_vertices < 1 || num_vertices > kMaxVertices) {
        throw Error(
            ErrorCode::ArgOutOfRange,
            "vertex count " + std::to_string(num_vertices) + " outside 1.." + std::to_string(kMaxVertices));
    }
}

// Bron-Kerbosch with pivoting over bitmask adjacency.
void maximal_cliques(
    VertexSet r, VertexSet p, VertexSet x, const std::vector<VertexSet> &adjacency, std::vector<VertexSet> &out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    VertexSet px = p | x;
    int pivot = -1;
    int best = -1;
    for (VertexSet rest = px; rest != 0; rest &= rest - 1) {
        int bit = std::countr_zero(rest);
        int count = std::popcount(p & adjacency[bit]);
        if (count > best) {
            best = count;
            pivot = bit;
        }
    }
    VertexSet candidates = p & ~adjacency[pivot];
    for (; candidates != 0; candidates &= candidates - 1) {
        int bit = std::countr_zero(candidates);
        VertexSet v = VertexSet{1} << bit;
        maximal_cliques(r | v, p & adjacency[bit], x & adjacency[bit], adjacency, out);
        p &= ~v;
        x |= v;
    }
}

}  // namespace

VertexSet remove_vertex(VertexSet set, int num_vertices, int vertex) {
    int pos = num_vertices - vertex;
    VertexSet low = set & ((VertexSet{1} << pos) - 1);
    VertexSet high = set >> (pos + 1);
    return (high << pos) | low;
}

VertexSet insert_vertex(VertexSet set, int num_vertices, int vertex) {
    int pos = num_vertices - vertex;
    VertexSet low = set & ((VertexSet{1} << pos) - 1);
    VertexSet high = set >> pos;
    return (high << (pos + 1)) | low;
}

std::vector<int> vertex_labels(VertexSet set, int num_vertices) {
    std::vector<int> labels;
    for (int k = 1; k <= num_vertices; k++) {
        if (set & vertex_bit(num_vertices, k)) {
            labels.push_back(k);
        }
    }
    return labels;
}

bool edge_order(VertexSet a, VertexSet b) {
    int sa = std::popcount(a);
    int sb = std::popcount(b);
    if (sa != sb) {
        return sa < sb;
    }
    // Vertex 1 is the high bit, so for equal sizes lexicographic label order
    // is descending numeric order.
    return a > b;
}

Hypergraph::Hypergraph(int num_vertices) : n_(num_vertices) {
    check_num_vertices(num_vertices);
}

Hypergraph Hypergraph::from_masks(int num_vertices, std::span<const VertexSet> edges) {
    Hypergraph result(num_vertices);
    VertexSet universe = all_vertices(num_vertices);
    std::vector<VertexSet> sorted(edges.begin(), edges.end());
    for (VertexSet e : sorted) {
        if (e == 0) {
            throw Error(ErrorCode::EmptyHyperedge, "hyperedge has no vertices");
        }
        if ((e & ~universe) != 0) {
            throw Error(ErrorCode::VertexOutOfRange, "hyperedge mentions a vertex above " + std::to_string(num_vertices));
        }
    }
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size();) {
        size_t j = k;
        while (j < sorted.size() && sorted[j] == sorted[k]) {
            j++;
        }
        if ((j - k) % 2 == 1) {
            result.edges_.push_back(sorted[k]);
        }
        k = j;
    }
    std::sort(result.edges_.begin(), result.edges_.end(), edge_order);
    return result;
}

bool Hypergraph::has_edge(VertexSet edge) const {
    return std::find(edges_.begin(), edges_.end(), edge) != edges_.end();
}

std::vector<VertexSet> Hypergraph::edges_containing(int vertex) const {
    check_vertex(vertex);
    VertexSet bit = vertex_bit(n_, vertex);
    std::vector<VertexSet> out;
    for (VertexSet e : edges_) {
        if (e & bit) {
            out.push_back(e);
        }
    }
    return out;
}

void Hypergraph::check_vertex(int vertex) const {
    if (vertex < 1 || vertex > n_) {
        throw Error(
            ErrorCode::VertexOutOfRange,
            "vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(n_));
    }
}

std::string Hypergraph::to_string() const {
    if (edges_.empty()) {
        return "{}";
    }
    std::ostringstream out;
    bool first_edge = true;
    for (VertexSet e : edges_) {
        if (!first_edge) {
            out << ' ';
        }
        first_edge = false;
        out << '{';
        bool first = true;
        for (int v : vertex_labels(e, n_)) {
            if (!first) {
                out << ',';
            }
            first = false;
            out << v;
        }
        out << '}';
    }
    return out.str();
}

std::strong_ordering Hypergraph::operator<=>(const Hypergraph &other) const {
    if (auto c = n_ <=> other.n_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(
        edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

Hypergraph parse_hypergraph(int num_vertices, const std::vector<std::vector<int>> &raw_edges) {
    check_num_vertices(num_vertices);
    std::vector<VertexSet> masks;
    masks.reserve(raw_edges.size());
    for (const auto &raw : raw_edges) {
        if (raw.empty()) {
            throw Error(ErrorCode::EmptyHyperedge, "hyperedge has no vertices");
        }
        VertexSet mask = 0;
        for (int v : raw) {
            if (v < 1 || v > num_vertices) {
                throw Error(
                    ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(num_vertices));
            }
            mask |= vertex_bit(num_vertices, v);
        }
        masks.push_back(mask);
    }
    return Hypergraph::from_masks(num_vertices, masks);
}

std::optional<int> uniformity(const Hypergraph &graph) {
    if (graph.edges().empty()) {
        return std::nullopt;
    }
    int m = std::popcount(graph.edges().front());
    for (VertexSet e : graph.edges()) {
        if (std::popcount(e) != m) {
            return std::nullopt;
        }
    }
    return m;
}

std::optional<int> min_edge_size(const Hypergraph &graph) {
    if (graph.edges().empty()) {
        return std::nullopt;
    }
    // Canonical order sorts by size first.
    return std::popcount(graph.edges().front());
}

std::vector<VertexSet> reduced_sets(const Hypergraph &graph, int vertex) {
    graph.check_vertex(vertex);
    VertexSet bit = vertex_bit(graph.num_vertices(), vertex);
    std::vector<VertexSet> out;
    for (VertexSet e : graph.edges()) {
        if (e & bit) {
            out.push_back(e & ~bit);
        }
    }
    std::sort(out.begin(), out.end(), edge_order);
    return out;
}

ReducedSetMap shared_reduced_map(const Hypergraph &graph) {
    ReducedSetMap map;
    for (VertexSet e : graph.edges()) {
        for (VertexSet rest = e; rest != 0; rest &= rest - 1) {
            VertexSet bit = rest & (~rest + 1);
            map[e & ~bit] |= bit;
        }
    }
    return map;
}

VertexSet essential_vertices(const Hypergraph &graph) {
    ReducedSetMap map = shared_reduced_map(graph);
    VertexSet has_any = 0;
    VertexSet has_unshared = 0;
    for (const auto &[reduced, owners] : map) {
        has_any |= owners;
        if (std::popcount(owners) < 2) {
            has_unshared |= owners;
        }
    }
    return has_any & ~has_unshared;
}

Hypergraph essential_hypergraph(const Hypergraph &graph) {
    int n = graph.num_vertices();
    for (VertexSet e : graph.edges()) {
        if (std::popcount(e) < 3) {
            throw Error(ErrorCode::EdgeTooSmall, "essential hypergraph needs every hyperedge to have >= 3 vertices");
        }
    }
    VertexSet essential = essential_vertices(graph);
    std::vector<VertexSet> adjacency(n, 0);
    for (const auto &[reduced, owners] : shared_reduced_map(graph)) {
        VertexSet members = owners & essential;
        for (VertexSet rest = members; rest != 0; rest &= rest - 1) {
            int bit = std::countr_zero(rest);
            adjacency[bit] |= members & ~(VertexSet{1} << bit);
        }
    }
    std::vector<VertexSet> cliques;
    if (essential != 0) {
        maximal_cliques(0, essential, 0, adjacency, cliques);
    }
    return Hypergraph::from_masks(n, cliques);
}

std::optional<std::vector<int>> complete_sizes(const Hypergraph &graph) {
    int n = graph.num_vertices();
    std::vector<uint64_t> counts(n + 1, 0);
    for (VertexSet e : graph.edges()) {
        counts[std::popcount(e)]++;
    }
    std::vector<int> sizes;
    uint64_t binom = 1;  // C(n, m) built incrementally
    for (int m = 1; m <= n; m++) {
        binom = binom * (n - m + 1) / m;
        if (counts[m] == 0) {
            continue;
        }
        if (counts[m] != binom) {
            return std::nullopt;
        }
        sizes.push_back(m);
    }
    return sizes;
}

Hypergraph make_complete(int num_vertices, const std::vector<int> &sizes) {
    check_num_vertices(num_vertices);
    std::vector<int> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size(); k++) {
        if (sorted[k] < 1 || sorted[k] > num_vertices) {
            throw Error(
                ErrorCode::SizeOutOfRange,
                "edge size " + std::to_string(sorted[k]) + " outside 1.." + std::to_string(num_vertices));
        }
        if (k > 0 && sorted[k] == sorted[k - 1]) {
            throw Error(ErrorCode::SizeOutOfRange, "edge size " + std::to_string(sorted[k]) + " listed twice");
        }
    }
    std::vector<VertexSet> edges;
    uint64_t limit = uint64_t{1} << num_vertices;
    for (int m : sorted) {
        // Gosper's hack: successive m-subsets in increasing numeric order.
        uint64_t s = (uint64_t{1} << m) - 1;
        while (s < limit) {
            edges.push_back(static_cast<VertexSet>(s));
            uint64_t c = s & (~s + 1);
            uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return Hypergraph::from_masks(num_vertices, edges);
}

Hypergraph delete_vertex(const Hypergraph &graph, int vertex) {
    graph.check_vertex(vertex);
    int n = graph.num_vertices();
    if (n < 2) {
        throw Error(ErrorCode::TooFewQubits, "cannot remove the only vertex");
    }
    VertexSet bit = vertex_bit(n, vertex);
    std::vector<VertexSet> kept;
    for (VertexSet e : graph.edges()) {
        if (!(e & bit)) {
            kept.push_back(remove_vertex(e, n, vertex));
        }
    }
    return Hypergraph::from_masks(n - 1, kept);
}

PhasedHypergraph shrink_vertex(const Hypergraph &graph, int vertex) {
    graph.check_vertex(vertex);
    int n = graph.num_vertices();
    if (n < 2) {
        throw Error(ErrorCode::TooFewQubits, "cannot remove the only vertex");
    }
    VertexSet bit = vertex_bit(n, vertex);
    std::vector<VertexSet> edges;
    bool global_minus = false;
    for (VertexSet e : graph.edges()) {
        VertexSet reduced = e & ~bit;
        if (reduced == 0) {
            global_minus = !global_minus;
            continue;
        }
        // from_masks cancels pairs, which realizes the symmetric difference.
        edges.push_back(remove_vertex(reduced, n, vertex));
    }
    return {Hypergraph::from_masks(n - 1, edges), global_minus};
}

Hypergraph permute_vertices(const Hypergraph &graph, std::span<const int> perm) {
    int n = graph.num_vertices();
    if (static_cast<int>(perm.size()) != n) {
        throw Error(ErrorCode::LengthMismatch, "permutation length differs from vertex count");
    }
    VertexSet seen = 0;
    for (int image : perm) {
        if (image < 1 || image > n || (seen & vertex_bit(n, image))) {
            throw Error(ErrorCode::BadParams, "not a permutation of 1..n");
        }
        seen |= vertex_bit(n, image);
    }
    std::vector<VertexSet> edges;
    for (VertexSet e : graph.edges()) {
        VertexSet image = 0;
        for (int v : vertex_labels(e, n)) {
            image |= vertex_bit(n, perm[v - 1]);
        }
        edges.push_back(image);
    }
    return Hypergraph::from_masks(n, edges);
}

}  // namespace hyperlu
