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

#include "hyperlu/algebra.h"

#include <sstream>

#include "hyperlu/error.h"
#include "hyperlu/sign_state.h"

namespace hyperlu {

AlgebraElement AlgebraElement::from_coefficients(std::span<const Rational> flat) {
    if (flat.empty() || (flat.size() - 1) % 3 != 0) {
        throw Error(ErrorCode::LengthMismatch, "coefficient vector must have length 3n+1");
    }
    int n = static_cast<int>((flat.size() - 1) / 3);
    AlgebraElement m(n);
    m.theta = flat[0];
    for (int a = 0; a < n; a++) {
        m.r[a] = flat[1 + a];
        m.s[a] = flat[1 + n + a];
        m.t[a] = flat[1 + 2 * n + a];
    }
    return m;
}

std::vector<Rational> AlgebraElement::coefficients() const {
    int n = num_qubits();
    std::vector<Rational> flat(3 * n + 1);
    flat[0] = theta;
    for (int a = 0; a < n; a++) {
        flat[1 + a] = r[a];
        flat[1 + n + a] = s[a];
        flat[1 + 2 * n + a] = t[a];
    }
    return flat;
}

bool AlgebraElement::is_zero() const {
    for (const auto &c : coefficients()) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

std::string AlgebraElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto term = [&](const Rational &c, const std::string &name) {
        if (sgn(c) == 0) {
            return;
        }
        Rational mag = abs(c);
        if (first) {
            out << (sgn(c) < 0 ? "-" : "");
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || name.empty()) {
            out << mag.get_str();
            if (!name.empty()) {
                out << ' ';
            }
        }
        out << name;
    };
    term(theta, "");
    for (int a = 0; a < num_qubits(); a++) {
        std::string label = std::to_string(a + 1);
        term(r[a], "X" + label);
        term(s[a], "Y" + label);
        term(t[a], "Z" + label);
    }
    return first ? "0" : out.str();
}

int weight(const AlgebraElement &element) {
    int w = 0;
    for (int a = 0; a < element.num_qubits(); a++) {
        if (sgn(element.r[a]) != 0 || sgn(element.s[a]) != 0 || sgn(element.t[a]) != 0) {
            w++;
        }
    }
    return w;
}

std::vector<ComplexRational> phi_m_diagonal(const Hypergraph &graph, const AlgebraElement &element) {
    int n = graph.num_vertices();
    if (element.num_qubits() != n) {
        throw Error(ErrorCode::LengthMismatch, "algebra element and hypergraph have different qubit counts");
    }
    uint64_t size = uint64_t{1} << n;
    std::vector<ComplexRational> diag(size);
    for (auto &d : diag) {
        d.re = element.theta;
    }
    for (int a = 1; a <= n; a++) {
        const Rational &r = element.r[a - 1];
        const Rational &s = element.s[a - 1];
        const Rational &t = element.t[a - 1];
        if (sgn(r) == 0 && sgn(s) == 0 && sgn(t) == 0) {
            continue;
        }
        SignState p = p_diagonal(graph, a);
        for (uint64_t index = 0; index < size; index++) {
            int ps = p.sign(index);
            int zs = z_sign(n, a, index);
            auto &d = diag[index];
            if (ps > 0) {
                d.re += r;
            } else {
                d.re -= r;
            }
            if (zs > 0) {
                d.re += t;
            } else {
                d.re -= t;
            }
            // -i s Z P contributes -s*z*p to the imaginary part.
            if (zs * ps > 0) {
                d.im -= s;
            } else {
                d.im += s;
            }
        }
    }
    return diag;
}

}  // namespace hyperlu
