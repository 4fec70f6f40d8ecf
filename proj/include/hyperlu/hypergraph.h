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

#ifndef HYPERLU_HYPERGRAPH_H
#define HYPERLU_HYPERGRAPH_H

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperlu {

/// A set of vertices packed into a word. Vertex k (1-based) of an n-vertex
/// hypergraph lives at bit (n - k), so vertex 1 is the most significant bit
/// and a vertex set doubles as the basis index |1_S> with i_1 leftmost.
using VertexSet = uint32_t;

constexpr int kMaxVertices = 24;

inline VertexSet vertex_bit(int num_vertices, int vertex) {
    return VertexSet{1} << (num_vertices - vertex);
}

inline VertexSet all_vertices(int num_vertices) {
    return num_vertices >= 32 ? ~VertexSet{0} : (VertexSet{1} << num_vertices) - 1;
}

inline bool is_subset(VertexSet a, VertexSet b) {
    return (a & b) == a;
}

/// Removes vertex `vertex` from a set over `num_vertices` vertices, shifting
/// higher-numbered vertices down by one label.
VertexSet remove_vertex(VertexSet set, int num_vertices, int vertex);

/// Inverse of remove_vertex: opens a slot for a new vertex at label `vertex`
/// (initially absent) in a set over `num_vertices - 1` vertices.
VertexSet insert_vertex(VertexSet set, int num_vertices, int vertex);

/// Ascending 1-based labels of the members of `set`.
std::vector<int> vertex_labels(VertexSet set, int num_vertices);

/// Canonical edge order: by size, then lexicographically on ascending labels.
bool edge_order(VertexSet a, VertexSet b);

class Hypergraph {
   public:
    /// Edgeless hypergraph on `num_vertices` vertices.
    explicit Hypergraph(int num_vertices);

    /// Builds from packed edges. Edges listed an even number of times cancel.
    static Hypergraph from_masks(int num_vertices, std::span<const VertexSet> edges);

    int num_vertices() const {
        return n_;
    }
    const std::vector<VertexSet> &edges() const {
        return edges_;
    }
    size_t num_edges() const {
        return edges_.size();
    }
    bool has_edge(VertexSet edge) const;

    /// Edges of the form {vertex} ∪ ... containing `vertex`.
    std::vector<VertexSet> edges_containing(int vertex) const;

    /// Throws VertexOutOfRange unless 1 <= vertex <= n.
    void check_vertex(int vertex) const;

    /// "{1,2} {2,3,4}" style listing; "{}" when edgeless.
    std::string to_string() const;

    bool operator==(const Hypergraph &other) const = default;
    std::strong_ordering operator<=>(const Hypergraph &other) const;

   private:
    int n_;
    std::vector<VertexSet> edges_;
};

/// A hypergraph with an attached global sign. Edge toggles that produce the
/// empty edge (a global -1 phase) flip `global_minus` instead.
struct PhasedHypergraph {
    Hypergraph graph;
    bool global_minus = false;

    bool operator==(const PhasedHypergraph &other) const = default;
};

/// Canonicalizes a raw edge list (1-based labels). Duplicate edges cancel in
/// pairs, since each generalized controlled-Z gate squares to the identity.
Hypergraph parse_hypergraph(int num_vertices, const std::vector<std::vector<int>> &raw_edges);

/// m if every edge has exactly m vertices; empty if sizes differ or there are no edges.
std::optional<int> uniformity(const Hypergraph &graph);

/// Smallest edge size, or empty when there are no edges.
std::optional<int> min_edge_size(const Hypergraph &graph);

/// { e \ {a} : a ∈ e }, in canonical edge order.
std::vector<VertexSet> reduced_sets(const Hypergraph &graph, int vertex);

/// Map from each reduced set to the vertices it is a reduced set for.
using ReducedSetMap = std::map<VertexSet, VertexSet>;
ReducedSetMap shared_reduced_map(const Hypergraph &graph);

/// Vertices having at least one reduced set, all of which are shared.
VertexSet essential_vertices(const Hypergraph &graph);

/// Essential hypergraph over the original labels (non-essential vertices left
/// isolated). Edges are the maximal cliques of the pairwise-sharing relation
/// on the essential vertices. Requires every edge to have >= 3 vertices.
/// Clique enumeration is exponential in the worst case.
Hypergraph essential_hypergraph(const Hypergraph &graph);

/// The sizes {m_1..m_r} when the edges are exactly all subsets of those sizes.
std::optional<std::vector<int>> complete_sizes(const Hypergraph &graph);

/// All subsets of each listed size.
Hypergraph make_complete(int num_vertices, const std::vector<int> &sizes);

/// D_a: drops vertex a and every edge containing it. Remaining labels shift down.
Hypergraph delete_vertex(const Hypergraph &graph, int vertex);

/// S_a: drops vertex a, keeping {e : a ∉ e} Δ {e \ {a} : a ∈ e}. The singleton
/// edge {a}, if present, shrinks to the empty set and is reported as a global sign.
PhasedHypergraph shrink_vertex(const Hypergraph &graph, int vertex);

/// Relabels vertices: new label of old vertex v is perm[v - 1].
Hypergraph permute_vertices(const Hypergraph &graph, std::span<const int> perm);

}  // namespace hyperlu

#endif
