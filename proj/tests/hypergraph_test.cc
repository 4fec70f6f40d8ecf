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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hyperlu/error.h"
#include "hyperlu/families.h"
#include "oracles.h"

using namespace hyperlu;

namespace {

VertexSet set_of(int n, std::initializer_list<int> labels) {
    VertexSet s = 0;
    for (int v : labels) {
        s |= vertex_bit(n, v);
    }
    return s;
}

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::Overflow;
}

}  // namespace

TEST(hypergraph, parse_and_canonical_order) {
    Hypergraph g = parse_hypergraph(4, {{2, 3, 4}, {1, 2}});
    ASSERT_EQ(g.num_edges(), 2u);
    EXPECT_EQ(g.edges()[0], set_of(4, {1, 2}));
    EXPECT_EQ(g.edges()[1], set_of(4, {2, 3, 4}));
    EXPECT_EQ(g.to_string(), "{1,2} {2,3,4}");
    EXPECT_EQ(vertex_labels(set_of(4, {1, 4}), 4), (std::vector<int>{1, 4}));
}

TEST(hypergraph, repeated_edges_cancel) {
    EXPECT_TRUE(parse_hypergraph(3, {{1, 2}, {1, 2}}).edges().empty());
    EXPECT_EQ(parse_hypergraph(3, {{1, 2}, {2, 1}, {1, 2}}).num_edges(), 1u);
}

TEST(hypergraph, parse_errors) {
    EXPECT_EQ(code_of([] { parse_hypergraph(2, {{}}); }), ErrorCode::EmptyHyperedge);
    EXPECT_EQ(code_of([] { parse_hypergraph(2, {{3}}); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code_of([] { parse_hypergraph(2, {{0}}); }), ErrorCode::VertexOutOfRange);
}

TEST(hypergraph, canonicalization_idempotent) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; trial++) {
        Hypergraph g = oracle::random_hypergraph(rng, 6, 8);
        std::vector<std::vector<int>> raw;
        for (VertexSet e : g.edges()) {
            raw.push_back(vertex_labels(e, 6));
        }
        EXPECT_EQ(parse_hypergraph(6, raw), g);
    }
}

TEST(hypergraph, uniformity) {
    EXPECT_EQ(uniformity(make_complete(4, {3})), 3);
    EXPECT_FALSE(uniformity(parse_hypergraph(4, {{1, 2}, {2, 3, 4}})));
    EXPECT_FALSE(uniformity(Hypergraph(3)));
}

TEST(hypergraph, reduced_sets) {
    Hypergraph fig1 = parse_hypergraph(4, {{1, 2}, {2, 3, 4}});
    EXPECT_EQ(reduced_sets(fig1, 1), (std::vector<VertexSet>{set_of(4, {2})}));
    EXPECT_TRUE(reduced_sets(parse_hypergraph(4, {{1, 2}}), 3).empty());
    EXPECT_EQ(code_of([&] { reduced_sets(fig1, 5); }), ErrorCode::VertexOutOfRange);

    // Vertex a of the 8-qubit polygon member is label 5 and sees {2,3,4}, {1,3,4}.
    Hypergraph poly = polygon_family(2);
    auto sets = reduced_sets(poly, 5);
    std::sort(sets.begin(), sets.end());
    std::vector<VertexSet> expected{set_of(8, {1, 3, 4}), set_of(8, {2, 3, 4})};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(sets, expected);
}

TEST(hypergraph, shared_reduced_map) {
    // e = {3,4}; a = 1, b = 2.
    Hypergraph g = parse_hypergraph(4, {{1, 3, 4}, {2, 3, 4}});
    auto map = shared_reduced_map(g);
    EXPECT_EQ(map.at(set_of(4, {3, 4})), set_of(4, {1, 2}));
    EXPECT_EQ(map.at(set_of(4, {1, 4})), set_of(4, {3}));
    EXPECT_EQ(map.at(set_of(4, {2, 3})), set_of(4, {4}));
    EXPECT_EQ(map.size(), 5u);
    EXPECT_TRUE(shared_reduced_map(Hypergraph(3)).empty());
    for (int n = 3; n <= 6; n++) {
        for (int m = 3; m <= n; m++) {
            for (const auto &[reduced, owners] : shared_reduced_map(make_complete(n, {m}))) {
                if (m < n) {
                    EXPECT_EQ(std::popcount(owners), 1 + (n - m)) << n << " " << m;
                }
            }
        }
    }
}

TEST(hypergraph, complete_essential_structure) {
    // A reduced set R of the m-complete graph belongs to every vertex outside R,
    // so it is unshared only when m = n.
    EXPECT_EQ(essential_vertices(make_complete(4, {4})), 0u);
    Hypergraph hat = essential_hypergraph(make_complete(4, {3}));
    ASSERT_EQ(hat.num_edges(), 1u);
    EXPECT_EQ(hat.edges()[0], set_of(4, {1, 2, 3, 4}));
}

TEST(hypergraph, essential_star) {
    Hypergraph g = parse_hypergraph(5, {{1, 4, 5}, {2, 4, 5}, {3, 4, 5}});
    EXPECT_EQ(essential_vertices(g), set_of(5, {1, 2, 3}));
    Hypergraph hat = essential_hypergraph(g);
    EXPECT_EQ(hat.num_vertices(), 5);
    ASSERT_EQ(hat.num_edges(), 1u);
    EXPECT_EQ(hat.edges()[0], set_of(5, {1, 2, 3}));
}

TEST(hypergraph, essential_polygon_is_cycle) {
    for (int r = 2; r <= 4; r++) {
        Hypergraph hat = essential_hypergraph(polygon_family(r));
        int n = 4 * r;
        EXPECT_EQ(uniformity(hat), 2);
        EXPECT_EQ(static_cast<int>(hat.num_edges()), 2 * r);
        VertexSet outer = 0;
        for (int v = 2 * r + 1; v <= n; v++) {
            outer |= vertex_bit(n, v);
        }
        EXPECT_EQ(essential_vertices(polygon_family(r)), outer);
        // Every essential vertex has degree two and the graph is one cycle.
        for (int v = 2 * r + 1; v <= n; v++) {
            EXPECT_EQ(hat.edges_containing(v).size(), 2u);
        }
        VertexSet seen = vertex_bit(n, 2 * r + 1);
        bool grew = true;
        while (grew) {
            grew = false;
            for (VertexSet e : hat.edges()) {
                if ((e & seen) && (e & ~seen)) {
                    seen |= e;
                    grew = true;
                }
            }
        }
        EXPECT_EQ(seen, outer);
    }
}

TEST(hypergraph, essential_requires_large_edges) {
    EXPECT_EQ(code_of([] { essential_hypergraph(parse_hypergraph(3, {{1, 2}})); }), ErrorCode::EdgeTooSmall);
}

TEST(hypergraph, essential_edges_are_maximal_cliques) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; trial++) {
        int n = 5 + trial % 4;
        Hypergraph g = oracle::random_hypergraph(rng, n, 4 + trial % 6, 3, std::min(n, 4));
        Hypergraph hat = essential_hypergraph(g);
        VertexSet vhat = essential_vertices(g);
        auto shares = [&](int a, int b) {
            auto ra = reduced_sets(g, a);
            for (VertexSet r : reduced_sets(g, b)) {
                if (std::find(ra.begin(), ra.end(), r) != ra.end()) {
                    return true;
                }
            }
            return false;
        };
        for (VertexSet e : hat.edges()) {
            EXPECT_EQ(e & ~vhat, 0u);
            auto members = vertex_labels(e, n);
            for (int a : members) {
                for (int b : members) {
                    if (a != b) {
                        EXPECT_TRUE(shares(a, b));
                    }
                }
            }
            for (int c : vertex_labels(vhat & ~e, n)) {
                bool all = std::all_of(members.begin(), members.end(), [&](int a) { return shares(a, c); });
                EXPECT_FALSE(all) << "edge extends by " << c;
            }
        }
    }
}

TEST(hypergraph, complete_sizes_round_trip) {
    EXPECT_EQ(complete_sizes(make_complete(4, {3})), (std::vector<int>{3}));
    EXPECT_EQ(make_complete(4, {3}).num_edges(), 4u);
    EXPECT_EQ(make_complete(5, {2}).num_edges(), 10u);
    EXPECT_TRUE(make_complete(5, {}).edges().empty());
    EXPECT_FALSE(complete_sizes(parse_hypergraph(4, {{1, 2}, {2, 3, 4}})));
    EXPECT_EQ(complete_sizes(parse_hypergraph(3, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}})), (std::vector<int>{1, 2}));
    for (int n = 1; n <= 7; n++) {
        for (uint32_t mask = 0; mask < (1u << n); mask++) {
            std::vector<int> sizes;
            for (int s = 1; s <= n; s++) {
                if (mask >> (s - 1) & 1) {
                    sizes.push_back(s);
                }
            }
            EXPECT_EQ(complete_sizes(make_complete(n, sizes)), sizes);
        }
    }
    EXPECT_EQ(code_of([] { make_complete(3, {4}); }), ErrorCode::SizeOutOfRange);
}

TEST(hypergraph, delete_and_shrink) {
    Hypergraph fig1 = parse_hypergraph(4, {{1, 2}, {2, 3, 4}});
    EXPECT_EQ(delete_vertex(fig1, 1), parse_hypergraph(3, {{1, 2, 3}}));
    PhasedHypergraph s = shrink_vertex(fig1, 1);
    EXPECT_EQ(s.graph, parse_hypergraph(3, {{1}, {1, 2, 3}}));
    EXPECT_FALSE(s.global_minus);

    Hypergraph lone = parse_hypergraph(3, {{2, 3}});
    EXPECT_EQ(delete_vertex(lone, 1), shrink_vertex(lone, 1).graph);

    PhasedHypergraph flagged = shrink_vertex(parse_hypergraph(2, {{1}, {1, 2}}), 1);
    EXPECT_TRUE(flagged.global_minus);
    EXPECT_EQ(flagged.graph, parse_hypergraph(1, {{1}}));
}

TEST(hypergraph, delete_shrink_commute) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 80; trial++) {
        int n = 3 + trial % 6;
        Hypergraph g = oracle::random_hypergraph(rng, n, 2 + trial % 9);
        std::uniform_int_distribution<int> pick(1, n);
        int i = pick(rng), j = pick(rng);
        if (i == j) {
            continue;
        }
        // After removing i, j moves down by one if it was above i.
        auto after = [](int removed, int v) { return v > removed ? v - 1 : v; };
        auto D = [](const Hypergraph &h, int v) { return delete_vertex(h, v); };
        auto S = [](const Hypergraph &h, int v) { return shrink_vertex(h, v).graph; };
        EXPECT_EQ(D(D(g, i), after(i, j)), D(D(g, j), after(j, i)));
        EXPECT_EQ(D(S(g, j), after(j, i)), S(D(g, i), after(i, j)));
        EXPECT_EQ(S(S(g, i), after(i, j)), S(S(g, j), after(j, i)));
    }
}

TEST(hypergraph, permute_vertices) {
    Hypergraph fig1 = parse_hypergraph(4, {{1, 2}, {2, 3, 4}});
    std::vector<int> perm{4, 3, 2, 1};
    EXPECT_EQ(permute_vertices(fig1, perm), parse_hypergraph(4, {{3, 4}, {1, 2, 3}}));
}
