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

#include "hyperlu/families.h"

#include <algorithm>

#include "hyperlu/error.h"
#include "hyperlu/sign_state.h"

namespace hyperlu {

GateRelation::GateRelation(int m, std::vector<RelationTerm> terms) : m_(m) {
    if (m < 1 || m > kMaxVertices) {
        throw Error(ErrorCode::ArgOutOfRange, "relation qubit count must be in 1.." + std::to_string(kMaxVertices));
    }
    for (auto &term : terms) {
        if (sgn(term.coefficient) == 0) {
            throw Error(ErrorCode::InvalidRelation, "relation term with zero coefficient");
        }
        term.edges = Hypergraph::from_masks(m, term.edges).edges();
    }
    for (size_t i = 0; i < terms.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (terms[i].edges == terms[j].edges) {
                throw Error(ErrorCode::InvalidRelation, "two relation terms have the same gate product");
            }
        }
    }
    terms_ = std::move(terms);
}

bool relation_holds(const GateRelation &relation) {
    int m = relation.num_qubits();
    if (m > kMaxRelationQubits) {
        throw Error(ErrorCode::TooLarge, "relation check supports at most " + std::to_string(kMaxRelationQubits) + " qubits");
    }
    BigInt common = 1;
    for (const auto &term : relation.terms()) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), term.coefficient.get_den_mpz_t());
    }
    std::vector<BigInt> weights;
    std::vector<SignState> states;
    for (const auto &term : relation.terms()) {
        weights.push_back(term.coefficient.get_num() * (common / term.coefficient.get_den()));
        states.push_back(build_state(Hypergraph::from_masks(m, term.edges)));
    }
    uint64_t size = uint64_t{1} << m;
    BigInt acc;
    for (uint64_t index = 0; index < size; index++) {
        acc = 0;
        for (size_t k = 0; k < states.size(); k++) {
            if (states[k].is_minus(index)) {
                acc -= weights[k];
            } else {
                acc += weights[k];
            }
        }
        if (sgn(acc) != 0) {
            return false;
        }
    }
    return true;
}

GateRelation polygon_relation(int r) {
    if (r < 2 || 2 * r > kMaxRelationQubits) {
        throw Error(ErrorCode::BadParams, "polygon relation needs 2 <= r <= " + std::to_string(kMaxRelationQubits / 2));
    }
    int m = 2 * r;
    VertexSet all = all_vertices(m);
    auto without = [&](int v) { return all & ~vertex_bit(m, v); };
    auto next = [&](int v) { return v % m + 1; };
    std::vector<RelationTerm> terms;
    for (int j = 1; j <= r; j++) {
        terms.push_back({Rational(1), {without(2 * j - 1), without(2 * j)}});
        terms.push_back({Rational(-1), {without(2 * j), without(next(2 * j))}});
    }
    return GateRelation(m, std::move(terms));
}

RelationFamily build_from_relation(const GateRelation &relation) {
    int m = relation.num_qubits();
    int count = static_cast<int>(relation.terms().size());
    int n = m + count;
    for (const auto &term : relation.terms()) {
        if (term.coefficient != 1 && term.coefficient != -1) {
            throw Error(ErrorCode::InvalidRelation, "construction needs every coefficient to be +1 or -1");
        }
    }
    if (n > kMaxVertices) {
        throw Error(ErrorCode::TooLarge, "construction would need " + std::to_string(n) + " vertices");
    }
    if (!relation_holds(relation)) {
        throw Error(ErrorCode::RelationDoesNotHold, "the linear relation does not hold");
    }
    std::vector<VertexSet> edges;
    AlgebraElement element(n);
    std::vector<int> aux;
    for (int k = 0; k < count; k++) {
        const auto &term = relation.terms()[k];
        int label = m + 1 + k;
        aux.push_back(label);
        for (VertexSet e : term.edges) {
            edges.push_back((e << (n - m)) | vertex_bit(n, label));
        }
        element.r[label - 1] = term.coefficient;
    }
    return {Hypergraph::from_masks(n, edges), std::move(element), std::move(aux)};
}

Hypergraph polygon_family(int r) {
    if (r < 2 || 4 * r > kMaxVertices) {
        throw Error(ErrorCode::BadParams, "polygon family needs 2 <= r <= " + std::to_string(kMaxVertices / 4));
    }
    return build_from_relation(polygon_relation(r)).graph;
}

AlgebraElement polygon_element(int r) {
    if (r < 2 || 4 * r > kMaxVertices) {
        throw Error(ErrorCode::BadParams, "polygon family needs 2 <= r <= " + std::to_string(kMaxVertices / 4));
    }
    AlgebraElement element(4 * r);
    for (int j = 1; j <= r; j++) {
        element.r[2 * r + 2 * j - 2] = 1;
        element.r[2 * r + 2 * j - 1] = -1;
    }
    return element;
}

Hypergraph star_family(int k, int m) {
    if (k < 2 || m < 3 || k + m - 1 > kMaxVertices) {
        throw Error(ErrorCode::BadParams, "star family needs k >= 2, m >= 3 and k + m - 1 <= " + std::to_string(kMaxVertices));
    }
    int n = k + m - 1;
    VertexSet common = 0;
    for (int v = k + 1; v <= n; v++) {
        common |= vertex_bit(n, v);
    }
    std::vector<VertexSet> edges;
    for (int v = 1; v <= k; v++) {
        edges.push_back(common | vertex_bit(n, v));
    }
    return Hypergraph::from_masks(n, edges);
}

}  // namespace hyperlu
