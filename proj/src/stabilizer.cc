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

#include "hyperlu/stabilizer.h"

#include <bit>

#include "hyperlu/dense.h"
#include "hyperlu/error.h"
#include "hyperlu/linalg.h"
#include "hyperlu/sign_state.h"

namespace hyperlu {

namespace {

constexpr int kDenseCheckQubits = 10;

bool annihilates_dense(const Hypergraph &graph, const AlgebraElement &element) {
    int n = graph.num_vertices();
    DenseState psi = DenseState::from_signs(build_state(graph));
    std::vector<ComplexRational> acc(psi.size());
    auto accumulate = [&](const Rational &coef, const DenseState &term) {
        if (sgn(coef) == 0) {
            return;
        }
        Rational factor = coef * term.scale() / psi.scale();
        auto num = term.numerators();
        for (size_t k = 0; k < acc.size(); k++) {
            acc[k].re += factor * static_cast<long>(num[k].re);
            acc[k].im += factor * static_cast<long>(num[k].im);
        }
    };
    accumulate(element.theta, psi);
    const Gate1q x = Gate1q::pauli_x();
    const Gate1q y = Gate1q::pauli_y();
    const Gate1q z = Gate1q::pauli_z();
    for (int a = 1; a <= n; a++) {
        if (sgn(element.r[a - 1]) != 0) {
            accumulate(element.r[a - 1], dense_apply_1q(psi, a, x));
        }
        if (sgn(element.s[a - 1]) != 0) {
            accumulate(element.s[a - 1], dense_apply_1q(psi, a, y));
        }
        if (sgn(element.t[a - 1]) != 0) {
            accumulate(element.t[a - 1], dense_apply_1q(psi, a, z));
        }
    }
    for (const auto &c : acc) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace

StabilizerBasis stabilizer_algebra(const Hypergraph &graph) {
    int n = graph.num_vertices();
    if (n > kMaxStabilizerQubits) {
        throw Error(
            ErrorCode::TooLarge,
            "stabilizer solver supports at most " + std::to_string(kMaxStabilizerQubits) + " qubits, got " +
                std::to_string(n));
    }
    std::vector<SignState> p;
    p.reserve(n);
    for (int a = 1; a <= n; a++) {
        p.push_back(p_diagonal(graph, a));
    }

    // Block A: columns [theta, r_1..r_n, t_1..t_n]. Block B: columns [s_1..s_n].
    IntegerRref block_a(2 * n + 1);
    IntegerRref block_b(n);
    std::vector<int64_t> row_a(2 * n + 1);
    std::vector<int64_t> row_b(n);
    uint64_t size = uint64_t{1} << n;
    std::vector<bool> seen_b(size, false);
    size_t used = 0;
    for (uint64_t index = 0; index < size; index++) {
        row_a[0] = 1;
        uint64_t key = 0;
        for (int a = 1; a <= n; a++) {
            int pa = p[a - 1].sign(index);
            int za = z_sign(n, a, index);
            row_a[a] = pa;
            row_a[n + a] = za;
            row_b[a - 1] = za * pa;
            if (za * pa < 0) {
                key |= uint64_t{1} << (a - 1);
            }
        }
        if (block_a.rank() < 2 * n + 1) {
            block_a.add_row(row_a);
            used++;
        }
        // Rows of block B agree up to sign when their minus patterns are complementary.
        if (key & 1) {
            key ^= size - 1;
        }
        if (!seen_b[key] && block_b.rank() < n) {
            seen_b[key] = true;
            block_b.add_row(row_b);
            used++;
        }
    }

    std::vector<std::vector<BigInt>> full;
    for (const auto &v : block_a.nullspace()) {
        std::vector<BigInt> w(3 * n + 1, 0);
        w[0] = v[0];
        for (int a = 1; a <= n; a++) {
            w[a] = v[a];
            w[2 * n + a] = v[n + a];
        }
        full.push_back(std::move(w));
    }
    for (const auto &v : block_b.nullspace()) {
        std::vector<BigInt> w(3 * n + 1, 0);
        for (int a = 1; a <= n; a++) {
            w[n + a] = v[a - 1];
        }
        full.push_back(std::move(w));
    }

    StabilizerBasis out;
    out.num_qubits = n;
    out.integer_basis = canonical_span_basis(full, 3 * n + 1);
    out.dimension = static_cast<int>(out.integer_basis.size());
    out.equations_used = used;
    for (const auto &v : out.integer_basis) {
        std::vector<Rational> flat(v.begin(), v.end());
        AlgebraElement element = AlgebraElement::from_coefficients(flat);
        for (int a = 0; a < n; a++) {
            if (sgn(element.s[a]) != 0 || sgn(element.t[a]) != 0) {
                out.x_form = false;
            }
        }
        out.basis.push_back(std::move(element));
    }
    return out;
}

bool verify_element(const Hypergraph &graph, const AlgebraElement &element) {
    bool diagonal_zero = true;
    for (const auto &entry : phi_m_diagonal(graph, element)) {
        if (!entry.is_zero()) {
            diagonal_zero = false;
            break;
        }
    }
    if (graph.num_vertices() <= kDenseCheckQubits) {
        return diagonal_zero && annihilates_dense(graph, element);
    }
    return diagonal_zero;
}

bool same_span(const std::vector<std::vector<BigInt>> &a, const std::vector<std::vector<BigInt>> &b, int num_columns) {
    return canonical_span_basis(a, num_columns) == canonical_span_basis(b, num_columns);
}

StructuralReport structural_report(const Hypergraph &graph, const StabilizerBasis &basis) {
    int n = graph.num_vertices();
    StructuralReport report;
    auto min_size = min_edge_size(graph);
    bool all_big = !min_size || *min_size >= 3;

    if (min_size && *min_size >= 3) {
        report.x_form_prediction = basis.x_form;
        if (!basis.x_form) {
            report.notes.push_back("some basis element has a Y or Z component although every edge has >= 3 vertices");
        }
    }

    ReducedSetMap shared = shared_reduced_map(graph);
    VertexSet unshared = 0;
    for (const auto &[reduced, owners] : shared) {
        if (std::popcount(owners) == 1) {
            unshared |= owners;
        }
    }
    report.unshared_vertices = vertex_labels(unshared, n);
    auto m = uniformity(graph);
    if (m && *m >= 3) {
        bool ok = true;
        for (const auto &element : basis.basis) {
            for (int b : report.unshared_vertices) {
                if (sgn(element.r[b - 1]) != 0) {
                    ok = false;
                }
            }
        }
        report.unshared_zero_prediction = ok;
        if (!ok) {
            report.notes.push_back("an unshared vertex carries a nonzero X coefficient");
        }
    }

    if (!all_big || graph.edges().empty()) {
        return report;
    }
    VertexSet essential = essential_vertices(graph);
    Hypergraph hat = essential_hypergraph(graph);
    bool hypotheses = std::popcount(essential) >= 3;
    for (VertexSet e : hat.edges()) {
        hypotheses = hypotheses && std::popcount(e) == 2;
    }
    for (const auto &[reduced, owners] : shared) {
        if (std::popcount(owners) >= 2 && std::popcount(owners & essential) > 2) {
            hypotheses = false;
        }
    }
    if (hypotheses) {
        // Connectivity over the essential vertices.
        VertexSet start = VertexSet{1} << std::countr_zero(essential);
        VertexSet reached = start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (VertexSet e : hat.edges()) {
                if ((e & reached) && (e & ~reached)) {
                    reached |= e;
                    grew = true;
                }
            }
        }
        hypotheses = reached == essential;
    }
    report.triviality_hypotheses = hypotheses;
    if (!hypotheses) {
        return report;
    }

    auto minus_set = [&](VertexSet index) {
        VertexSet out = 0;
        for (VertexSet rest = essential; rest != 0; rest &= rest - 1) {
            VertexSet bit = rest & (~rest + 1);
            int label = n - std::countr_zero(bit);
            if (p_sign(graph, label, index) < 0) {
                out |= bit;
            }
        }
        return out;
    };
    auto shared_sets = [&](VertexSet pair) {
        std::vector<VertexSet> out;
        for (const auto &[reduced, owners] : shared) {
            if (is_subset(pair, owners)) {
                out.push_back(reduced);
            }
        }
        return out;
    };
    bool pattern = true;
    for (VertexSet uv : hat.edges()) {
        for (VertexSet vw : hat.edges()) {
            VertexSet mid = uv & vw;
            if (uv == vw || std::popcount(mid) != 1) {
                continue;
            }
            VertexSet uw = (uv | vw) & ~mid;
            // Each path is visited in both directions; keep one.
            if ((uv & ~mid) < (vw & ~mid)) {
                continue;
            }
            bool found = false;
            for (VertexSet s : shared_sets(uv)) {
                for (VertexSet t : shared_sets(vw)) {
                    if (minus_set(s) == uv && minus_set(t) == vw && minus_set(s | t) == uw) {
                        found = true;
                    }
                }
            }
            if (!found) {
                pattern = false;
                report.notes.push_back(
                    "path " + std::to_string(n - std::countr_zero(uw & uv)) + "-" + std::to_string(n - std::countr_zero(mid)) +
                    "-" + std::to_string(n - std::countr_zero(uw & vw)) +
                    " has no S, T with exactly two X sign flips on each of |1_S>, |1_T>, |1_(S u T)>");
            }
        }
    }
    report.two_minus_pattern = pattern;
    report.triviality_discrepancy = basis.dimension != 0;
    if (report.triviality_discrepancy) {
        report.notes.push_back(
            "essential graph hypotheses hold yet the stabilizer dimension is " + std::to_string(basis.dimension) +
            (pattern ? " although the sign pattern holds" : "; the sign pattern used to force triviality fails"));
    }
    return report;
}

}  // namespace hyperlu
