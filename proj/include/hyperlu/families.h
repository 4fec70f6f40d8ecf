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

#ifndef HYPERLU_FAMILIES_H
#define HYPERLU_FAMILIES_H

#include <vector>

#include "hyperlu/algebra.h"
#include "hyperlu/hypergraph.h"

namespace hyperlu {

constexpr int kMaxRelationQubits = 20;

/// coefficient * prod_{e in edges} C_e, edges as m-bit vertex sets.
struct RelationTerm {
    Rational coefficient;
    std::vector<VertexSet> edges;

    bool operator==(const RelationTerm &other) const = default;
};

/// A linear combination of products of controlled-Z gates on m qubits.
class GateRelation {
   public:
    /// Edges inside a term cancel mod 2 and are sorted. Throws InvalidRelation
    /// on a zero coefficient or two terms with the same edge set, and
    /// EmptyHyperedge / VertexOutOfRange on bad edges.
    GateRelation(int m, std::vector<RelationTerm> terms);

    int num_qubits() const {
        return m_;
    }
    const std::vector<RelationTerm> &terms() const {
        return terms_;
    }

   private:
    int m_;
    std::vector<RelationTerm> terms_;
};

/// Brute force over all 2^m basis strings. Throws TooLarge above kMaxRelationQubits.
bool relation_holds(const GateRelation &relation);

/// sum_j (C_{S-{2j-1}} C_{S-{2j}} - C_{S-{2j}} C_{S-{2j+1}}), S = {1..2r}, indices mod 2r.
GateRelation polygon_relation(int r);

struct RelationFamily {
    Hypergraph graph;
    AlgebraElement element;
    /// Label of the auxiliary vertex attached to each term, in term order.
    std::vector<int> aux_labels;
};

/// One auxiliary vertex per term, joined to every edge of that term; the
/// element is sum_S c_S X_{v_S}. Throws InvalidRelation unless every
/// coefficient is +-1 and RelationDoesNotHold if the relation fails.
RelationFamily build_from_relation(const GateRelation &relation);

/// 4r vertices: 1..2r then a_1, b_1, ..., a_r, b_r. Throws BadParams unless 2 <= r <= 6.
Hypergraph polygon_family(int r);

/// sum_j (X_{a_j} - X_{b_j}) on polygon_family(r).
AlgebraElement polygon_element(int r);

/// Vertices 1..k each joined to the common set {k+1, ..., k+m-1}.
/// Throws BadParams unless k >= 2, m >= 3 and k + m - 1 <= 24.
Hypergraph star_family(int k, int m);

}  // namespace hyperlu

#endif
