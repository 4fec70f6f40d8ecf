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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "formats.h"
#include "hyperlu/error.h"
#include "hyperlu/families.h"
#include "hyperlu/ptrace.h"
#include "hyperlu/sign_state.h"
#include "hyperlu/stabilizer.h"
#include "hyperlu/symmetric.h"

namespace hyperlu::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxPrintedSignQubits = 16;

struct Output {
    Json result = Json::object();
    std::string text;
    std::string digest;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

Json integer_json(const BigInt &v) {
    if (v.fits_slong_p()) {
        return Json(static_cast<int64_t>(v.get_si()));
    }
    return Json(v.get_str());
}

Json rational_json(const Rational &q) {
    return Json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

Json edges_json(const Hypergraph &g) {
    Json out = Json::array();
    for (VertexSet e : g.edges()) {
        out.push_back(vertex_labels(e, g.num_vertices()));
    }
    return out;
}

Json hypergraph_json(const Hypergraph &g) {
    return Json{{"n", g.num_vertices()}, {"edges", edges_json(g)}};
}

std::string bits(uint64_t index, int n) {
    std::string s(n, '0');
    for (int k = 0; k < n; k++) {
        if (index >> (n - 1 - k) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

std::string join(const std::vector<int> &v, const char *sep) {
    std::ostringstream out;
    for (size_t k = 0; k < v.size(); k++) {
        out << (k ? sep : "") << v[k];
    }
    return out.str();
}

std::string pattern_string(const std::vector<int> &pattern) {
    std::string s;
    for (int p : pattern) {
        s += p < 0 ? '-' : '+';
    }
    return s;
}

std::string fixed(double v, int digits = 12) {
    std::ostringstream out;
    out << std::setprecision(digits) << std::fixed << v;
    std::string s = out.str();
    if (s == "-0." + std::string(digits, '0')) {
        s.erase(0, 1);
    }
    return s;
}

Json vec_json(const Vec3 &v) {
    return Json::array({v[0], v[1], v[2]});
}

struct Input {
    std::string text;
    Hypergraph graph;
};

Input load_hypergraph(const std::string &path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::runtime_error &e) {
        throw UsageError(e.what());
    }
    try {
        return {text, parse_hypergraph_text(text)};
    } catch (const ParseError &e) {
        throw ParseError(e.line(), e.column(), path + ": " + e.what());
    }
}

std::vector<int> parse_label_list(const std::string &arg) {
    std::vector<int> out;
    std::stringstream in(arg);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) {
                throw std::invalid_argument(piece);
            }
            out.push_back(v);
        } catch (const std::logic_error &) {
            throw UsageError("bad integer list '" + arg + "'");
        }
    }
    if (out.empty()) {
        throw UsageError("empty integer list");
    }
    return out;
}

// ---- commands ----

Output cmd_build(const std::string &path) {
    Input in = load_hypergraph(path);
    Output o;
    o.digest = fnv1a_hex(in.text);
    const Hypergraph &g = in.graph;
    int n = g.num_vertices();
    SignState state = build_state(g);
    o.result["hypergraph"] = hypergraph_json(g);
    std::ostringstream text;
    text << "hypergraph: " << g.to_string() << " (n=" << n << ")\n";
    if (n <= kMaxPrintedSignQubits) {
        std::string signs;
        Json minus = Json::array();
        std::string minus_text;
        for (uint64_t k = 0; k < state.size(); k++) {
            signs += state.is_minus(k) ? '-' : '+';
            if (state.is_minus(k)) {
                minus.push_back(bits(k, n));
                minus_text += " " + bits(k, n);
            }
        }
        o.result["signs"] = signs;
        o.result["minus_indices"] = minus;
        text << "signs: " << signs << "\n";
        text << "minus at:" << (minus_text.empty() ? " none" : minus_text) << "\n";
        o.text = text.str();
        return o;
    }
    try {
        auto d = dicke_coeffs(state);
        o.result["weight_signs"] = pattern_string(*d.signs);
        text << "signs by weight: " << pattern_string(*d.signs) << "\n";
    } catch (const Error &e) {
        if (e.code() != ErrorCode::NotSymmetric) {
            throw;
        }
        throw Error(
            ErrorCode::TooLarge, "sign vector printing is limited to " + std::to_string(kMaxPrintedSignQubits) +
                                     " qubits and the state is not symmetric");
    }
    o.text = text.str();
    return o;
}

Json report_json(const StructuralReport &r) {
    Json out;
    out["x_form_prediction"] = r.x_form_prediction ? Json(*r.x_form_prediction) : Json(nullptr);
    out["unshared_vertices"] = r.unshared_vertices;
    out["unshared_zero_prediction"] = r.unshared_zero_prediction ? Json(*r.unshared_zero_prediction) : Json(nullptr);
    out["triviality_hypotheses"] = r.triviality_hypotheses;
    out["two_minus_pattern"] = r.two_minus_pattern ? Json(*r.two_minus_pattern) : Json(nullptr);
    out["triviality_discrepancy"] = r.triviality_discrepancy;
    out["notes"] = r.notes;
    return out;
}

std::string tri(const std::optional<bool> &v) {
    return v ? (*v ? "holds" : "FAILS") : "not applicable";
}

Output cmd_stabilizer(const std::string &path) {
    Input in = load_hypergraph(path);
    Output o;
    o.digest = fnv1a_hex(in.text);
    const Hypergraph &g = in.graph;
    int n = g.num_vertices();
    StabilizerBasis b = stabilizer_algebra(g);
    StructuralReport r = structural_report(g, b);
    std::ostringstream text;
    text << "dimension: " << b.dimension << "\n";
    Json basis = Json::array();
    for (int k = 0; k < b.dimension; k++) {
        const auto &v = b.integer_basis[k];
        Json entry;
        entry["element"] = b.basis[k].to_string();
        entry["theta"] = integer_json(v[0]);
        Json rr = Json::array(), ss = Json::array(), tt = Json::array();
        for (int a = 1; a <= n; a++) {
            rr.push_back(integer_json(v[a]));
            ss.push_back(integer_json(v[n + a]));
            tt.push_back(integer_json(v[2 * n + a]));
        }
        entry["r"] = rr;
        entry["s"] = ss;
        entry["t"] = tt;
        entry["weight"] = weight(b.basis[k]);
        basis.push_back(entry);
        text << "  " << (k + 1) << ": " << b.basis[k].to_string() << "  (weight " << weight(b.basis[k]) << ")\n";
    }
    o.result["dimension"] = b.dimension;
    o.result["basis"] = basis;
    o.result["report"] = report_json(r);
    text << "every element is theta + sum r X (edges >= 3): " << tri(r.x_form_prediction) << "\n";
    text << "unshared vertices: " << (r.unshared_vertices.empty() ? "none" : join(r.unshared_vertices, ",")) << "\n";
    text << "r_b = 0 on unshared vertices (uniform, m >= 3): " << tri(r.unshared_zero_prediction) << "\n";
    text << "essential-graph triviality hypotheses: " << (r.triviality_hypotheses ? "hold" : "do not hold") << "\n";
    if (r.triviality_hypotheses) {
        text << "two-minus sign pattern: " << tri(r.two_minus_pattern) << "\n";
        text << "discrepancy (hypotheses hold, dimension != 0): " << (r.triviality_discrepancy ? "YES" : "no") << "\n";
    }
    for (const auto &note : r.notes) {
        text << "note: " << note << "\n";
    }
    o.text = text.str();
    return o;
}

Output cmd_essential(const std::string &path) {
    Input in = load_hypergraph(path);
    Output o;
    o.digest = fnv1a_hex(in.text);
    Hypergraph hat = essential_hypergraph(in.graph);
    auto vertices = vertex_labels(essential_vertices(in.graph), hat.num_vertices());
    o.result["essential_vertices"] = vertices;
    o.result["hypergraph"] = hypergraph_json(hat);
    o.text = "# essential vertices: " + (vertices.empty() ? std::string("none") : join(vertices, ",")) + "\n" +
             format_hypergraph_text(hat);
    return o;
}

Output cmd_relation_check(const std::string &path, const std::string &construct_path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::runtime_error &e) {
        throw UsageError(e.what());
    }
    GateRelation rel = [&] {
        try {
            return parse_relation_text(text);
        } catch (const ParseError &e) {
            throw ParseError(e.line(), e.column(), path + ": " + e.what());
        }
    }();
    Output o;
    o.digest = fnv1a_hex(text);
    bool holds = relation_holds(rel);
    o.result["m"] = rel.num_qubits();
    o.result["terms"] = static_cast<int>(rel.terms().size());
    o.result["holds"] = holds;
    std::ostringstream out;
    out << "relation on " << rel.num_qubits() << " qubits with " << rel.terms().size() << " terms: "
        << (holds ? "holds" : "does not hold") << "\n";
    if (!construct_path.empty()) {
        RelationFamily fam = build_from_relation(rel);
        write_file(construct_path, format_hypergraph_text(fam.graph));
        o.result["construction"] = {
            {"hypergraph", hypergraph_json(fam.graph)},
            {"element", fam.element.to_string()},
            {"aux_labels", fam.aux_labels},
        };
        out << "construction written to " << construct_path << ": " << fam.graph.to_string() << "\n";
        out << "stabilizing element: " << fam.element.to_string() << "\n";
        out << "auxiliary vertices (term order): " << join(fam.aux_labels, ",") << "\n";
    }
    o.text = out.str();
    return o;
}

struct SymmetryVerdict {
    bool conditions;
    std::optional<bool> dense;
};

Json verdict_json(const SymmetryVerdict &v) {
    return Json{{"conditions", v.conditions}, {"dense", v.dense ? Json(*v.dense) : Json(nullptr)}};
}

std::string verdict_text(const SymmetryVerdict &v) {
    std::string s = v.conditions ? "yes" : "no";
    s += " by parity conditions";
    if (v.dense) {
        s += std::string(", ") + (*v.dense ? "yes" : "no") + " by dense check";
    }
    return s;
}

Output cmd_symmetric(const std::string &path) {
    Input in = load_hypergraph(path);
    Output o;
    o.digest = fnv1a_hex(in.text);
    const Hypergraph &g = in.graph;
    int n = g.num_vertices();
    SignState state = build_state(g);
    std::optional<DickeCoeffs> d;
    try {
        d = dicke_coeffs(state);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::NotSymmetric) {
            throw;
        }
    }
    o.result["symmetric"] = d.has_value();
    if (!d) {
        o.text = "symmetric: no\n";
        return o;
    }
    const auto &pattern = *d->signs;
    auto sizes = complete_sizes_from_pattern(pattern);
    o.result["complete_sizes"] = sizes;
    o.result["weight_signs"] = pattern_string(pattern);

    // Single-size states use the binomial parity conditions; otherwise the
    // equivalent palindrome tests on the weight pattern.
    SymmetryVerdict plus_x{}, minus_x{}, plus_y{};
    if (sizes.size() == 1) {
        XSymmetry x = x_symmetry_class(n, sizes[0]);
        plus_x.conditions = x == XSymmetry::Plus;
        minus_x.conditions = x == XSymmetry::Minus;
        plus_y.conditions = y_symmetric(n, sizes[0]);
    } else {
        bool pal = true, anti = true, y = n % 4 == 0;
        for (int w = 0; w <= n; w++) {
            pal = pal && pattern[w] == pattern[n - w];
            anti = anti && pattern[w] == -pattern[n - w];
            y = y && pattern[w] == (w % 2 ? -1 : 1) * pattern[n - w];
        }
        plus_x.conditions = pal;
        minus_x.conditions = anti;
        plus_y.conditions = y;
    }
    if (n <= kMaxTensorQubits) {
        auto ex = dense_pauli_power_eigenvalue(state, 'X');
        auto ey = dense_pauli_power_eigenvalue(state, 'Y');
        plus_x.dense = ex && *ex == 1;
        minus_x.dense = ex && *ex == -1;
        plus_y.dense = ey && *ey == 1;
    }
    o.result["plus_x"] = verdict_json(plus_x);
    o.result["minus_x"] = verdict_json(minus_x);
    o.result["plus_y"] = verdict_json(plus_y);
    std::ostringstream text;
    text << "symmetric: yes\n";
    text << "complete sizes: " << (sizes.empty() ? std::string("none") : join(sizes, ",")) << "\n";
    text << "signs by weight: " << pattern_string(pattern) << "\n";
    text << "+X^n: " << verdict_text(plus_x) << "\n";
    text << "-X^n: " << verdict_text(minus_x) << "\n";
    text << "+Y^n: " << verdict_text(plus_y) << "\n";
    o.text = text.str();
    return o;
}

std::string majorana_svg(const std::vector<Vec3> &points, const std::vector<Rotation> &rotations) {
    // Orthographic view from the +Y direction: X to the right, Z up.
    std::ostringstream svg;
    const double c = 160, r = 140;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"320\" height=\"320\" viewBox=\"0 0 320 320\">\n";
    svg << "<circle cx=\"160\" cy=\"160\" r=\"140\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<ellipse cx=\"160\" cy=\"160\" rx=\"140\" ry=\"20\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    for (const auto &rot : rotations) {
        if (rot.angle() < 1e-9) {
            continue;
        }
        Vec3 a = rot.axis();
        svg << "<line x1=\"" << fixed(c - r * a[0], 2) << "\" y1=\"" << fixed(c + r * a[2], 2) << "\" x2=\""
            << fixed(c + r * a[0], 2) << "\" y2=\"" << fixed(c - r * a[2], 2)
            << "\" stroke=\"steelblue\" stroke-dasharray=\"2 2\"/>\n";
    }
    for (const auto &p : points) {
        bool front = p[1] <= 0;
        svg << "<circle cx=\"" << fixed(c + r * p[0], 2) << "\" cy=\"" << fixed(c - r * p[2], 2)
            << "\" r=\"6\" fill=\"" << (front ? "crimson" : "white") << "\" stroke=\"crimson\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

Output cmd_majorana(const std::string &path, const std::string &svg_path) {
    Input in = load_hypergraph(path);
    Output o;
    o.digest = fnv1a_hex(in.text);
    int n = in.graph.num_vertices();
    SignState state = build_state(in.graph);
    MajoranaConfig cfg = majorana_config(dicke_coeffs(state));
    SymmetrySearch sym = find_point_symmetries(cfg.points);
    std::ostringstream text;
    Json coeffs = Json::array();
    text << "p(z) = 2^(-" << n << "/2) * (";
    for (int k = 0; k <= n; k++) {
        const BigInt &c = (*cfg.poly.integer_coeffs)[k];
        coeffs.push_back(integer_json(c));
        text << (k == 0 ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ")) << BigInt(abs(c)).get_str();
        if (k >= 1) {
            text << " z";
        }
        if (k >= 2) {
            text << "^" << k;
        }
    }
    text << ")\n";
    o.result["integer_coeffs"] = coeffs;
    Rational scale_log2(-n, 2);
    scale_log2.canonicalize();
    o.result["scale_log2"] = rational_json(scale_log2);
    Json roots = Json::array();
    for (const auto &root : cfg.roots) {
        roots.push_back({{"re", root.value.real()}, {"im", root.value.imag()}, {"multiplicity", root.multiplicity}});
        text << "root " << fixed(root.value.real()) << (root.value.imag() < 0 ? " - " : " + ")
             << fixed(std::abs(root.value.imag())) << "i";
        if (root.multiplicity > 1) {
            text << "  x" << root.multiplicity;
        }
        text << "\n";
    }
    o.result["roots"] = roots;
    o.result["roots_at_infinity"] = cfg.roots_at_infinity;
    Json points = Json::array();
    for (const auto &p : cfg.points) {
        points.push_back(vec_json(p));
        text << "point (" << fixed(p[0]) << ", " << fixed(p[1]) << ", " << fixed(p[2]) << ")\n";
    }
    o.result["points"] = points;
    Json group = Json::array();
    text << "rotation group order " << sym.rotations.size() << (sym.continuous_axis ? " (plus a continuous axis)" : "")
         << "\n";
    for (const auto &rot : sym.rotations) {
        Json entry{{"angle", rot.angle()}, {"axis", vec_json(rot.axis())}, {"order", rot.order()}};
        text << "  angle " << fixed(rot.angle(), 9) << " about (" << fixed(rot.axis()[0], 9) << ", "
             << fixed(rot.axis()[1], 9) << ", " << fixed(rot.axis()[2], 9) << ")";
        if (n <= kMaxTensorQubits) {
            auto phase = tensor_symmetry_phase(state, rot);
            entry["tensor_verified"] = phase.has_value();
            if (phase) {
                entry["phase"] = {phase->real(), phase->imag()};
            }
            if (phase) {
                text << "  tensor symmetry, phase " << fixed(phase->real(), 6) << (phase->imag() < 0 ? " - " : " + ")
                     << fixed(std::abs(phase->imag()), 6) << "i";
            } else {
                text << "  NOT a tensor symmetry";
            }
        }
        text << "\n";
        group.push_back(entry);
    }
    o.result["rotations"] = group;
    o.result["continuous_axis"] = sym.continuous_axis;
    o.result["warnings"] = sym.warnings;
    for (const auto &w : sym.warnings) {
        text << "warning: " << w << "\n";
    }
    if (!svg_path.empty()) {
        write_file(svg_path, majorana_svg(cfg.points, sym.rotations));
        text << "plot written to " << svg_path << "\n";
    }
    o.text = text.str();
    return o;
}

Json mixture_json(const HypergraphMixture &mix) {
    Json comps = Json::array();
    for (const auto &c : mix.components()) {
        comps.push_back({{"weight", rational_json(c.weight)}, {"edges", edges_json(c.graph)}, {"global_minus", c.global_minus}});
    }
    return Json{{"n", mix.num_qubits()}, {"components", comps}};
}

Output cmd_ptrace(const std::string &path, const std::string &qubits) {
    Input in = load_hypergraph(path);
    Output o;
    o.digest = fnv1a_hex(in.text);
    int n = in.graph.num_vertices();
    auto traced = parse_label_list(qubits);
    for (int v : traced) {
        if (v < 1 || v > n) {
            throw UsageError("qubit " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
    }
    std::sort(traced.begin(), traced.end());
    if (std::adjacent_find(traced.begin(), traced.end()) != traced.end()) {
        throw UsageError("qubit listed twice");
    }
    HypergraphMixture mix = trace_set(in.graph, traced);
    Json label_map = Json::array();
    std::ostringstream text;
    text << "label map (old -> new):";
    int next = 1;
    for (int v = 1; v <= n; v++) {
        if (!std::binary_search(traced.begin(), traced.end(), v)) {
            label_map.push_back({v, next});
            text << " " << v << "->" << next;
            next++;
        }
    }
    text << "\n";
    o.result["traced"] = traced;
    o.result["label_map"] = label_map;
    o.result["mixture"] = mixture_json(mix);
    for (const auto &c : mix.components()) {
        text << c.weight.get_str() << "  " << (c.graph.edges().empty() ? "(no edges)" : c.graph.to_string())
             << (c.global_minus ? "  [global -1]" : "") << "\n";
    }
    o.text = text.str();
    return o;
}

Output cmd_reconstruct(const std::string &h_path, const std::string &k_path, int qubit) {
    Input h = load_hypergraph(h_path);
    Input k = load_hypergraph(k_path);
    Output o;
    o.digest = fnv1a_hex(h.text + std::string(1, '\0') + k.text);
    int n = h.graph.num_vertices() + 1;
    if (qubit < 1 || qubit > n) {
        throw UsageError("--qubit must be in 1.." + std::to_string(n));
    }
    auto candidates = reconstruct_candidates(h.graph, k.graph);
    // Candidates carry the new qubit at label 1; move it to `qubit`.
    std::vector<int> perm(n);
    perm[0] = qubit;
    for (int old = 2; old <= n; old++) {
        perm[old - 1] = old - 1 < qubit ? old - 1 : old;
    }
    std::ostringstream text;
    Json list = Json::array();
    if (qubit != 1) {
        o.result["permutation"] = perm;
        text << "new qubit placed at label " << qubit << "\n";
    }
    for (const auto &c : candidates) {
        Hypergraph g = qubit == 1 ? c.graph : permute_vertices(c.graph, perm);
        list.push_back({
            {"hypergraph", hypergraph_json(g)},
            {"branch", c.minus_branch ? "-" : "+"},
            {"swapped", c.swapped},
        });
        text << (c.minus_branch ? "- " : "+ ") << (c.swapped ? "(K,H) " : "(H,K) ") << g.to_string() << "\n";
    }
    o.result["candidates"] = list;
    text << candidates.size() << " verified candidate" << (candidates.size() == 1 ? "" : "s") << "\n";
    o.text = text.str();
    return o;
}

Output cmd_export_dot(const std::string &path) {
    Input in = load_hypergraph(path);
    Output o;
    o.digest = fnv1a_hex(in.text);
    o.text = hypergraph_dot(in.graph);
    o.result["dot"] = o.text;
    return o;
}

Output emit_family(const std::string &name, const std::string &params, const Hypergraph &g, Json expected) {
    Output o;
    o.digest = fnv1a_hex(name + " " + params);
    o.text = format_hypergraph_text(g);
    o.result["family"] = name;
    o.result["hypergraph"] = hypergraph_json(g);
    o.result["file"] = o.text;
    o.result["expected"] = std::move(expected);
    return o;
}

int map_error(const Error &e) {
    switch (e.code()) {
        case ErrorCode::VertexOutOfRange:
        case ErrorCode::ArgOutOfRange:
        case ErrorCode::BadParams:
        case ErrorCode::SizeOutOfRange:
            return kExitUsage;
        default:
            return kExitRefused;
    }
}

}  // namespace

std::string hypergraph_dot(const Hypergraph &graph) {
    std::ostringstream dot;
    int n = graph.num_vertices();
    dot << "graph hypergraph {\n";
    dot << "  node [shape=circle];\n";
    for (int v = 1; v <= n; v++) {
        dot << "  v" << v << " [label=\"" << v << "\"];\n";
    }
    int hub = 0;
    for (VertexSet e : graph.edges()) {
        auto labels = vertex_labels(e, n);
        if (labels.size() == 2) {
            dot << "  v" << labels[0] << " -- v" << labels[1] << ";\n";
            continue;
        }
        hub++;
        dot << "  e" << hub << " [shape=diamond, label=\"\", width=0.2, height=0.2, style=filled, fillcolor=black];\n";
        for (int v : labels) {
            dot << "  e" << hub << " -- v" << v << ";\n";
        }
    }
    dot << "}\n";
    return dot.str();
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hypergraph state toolkit: stabilizer algebras, symmetries and partial traces", "hyperlu"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print a JSON result document instead of text");
    app.set_version_flag("--version", kVersion);
    app.fallthrough();

    std::string file, file2, svg, qubits, construct, out_path;
    int qubit = 1;
    std::function<Output()> action;
    std::string command;

    auto file_command = [&](const char *name, const char *help, std::function<Output()> fn) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("FILE", file, "Hypergraph file")->required();
        sub->callback([&, fn, name] {
            command = name;
            action = fn;
        });
        return sub;
    };
    file_command("build", "Print the sign vector of the hypergraph state", [&] { return cmd_build(file); });
    file_command("stabilizer", "Local unitary stabilizer algebra and structural report", [&] {
        return cmd_stabilizer(file);
    });
    file_command("essential", "Essential hypergraph in file format", [&] { return cmd_essential(file); });
    file_command("symmetric", "Permutation invariance and X/Y tensor symmetry verdicts", [&] {
        return cmd_symmetric(file);
    });
    file_command("export-dot", "Graphviz rendering", [&] { return cmd_export_dot(file); });
    auto *maj = file_command("majorana", "Majorana polynomial, roots, Bloch points and rotation group", [&] {
        return cmd_majorana(file, svg);
    });
    maj->add_option("--svg", svg, "Write a Bloch sphere plot");
    auto *pt = file_command("ptrace", "Partial trace as a hypergraph mixture", [&] { return cmd_ptrace(file, qubits); });
    pt->add_option("--qubits", qubits, "Comma-separated qubits to trace out")->required();

    auto *rel = app.add_subcommand("relation-check", "Check a linear relation among controlled-Z products");
    rel->add_option("FILE", file, "Relation file")->required();
    rel->add_option("-o,--construct", construct, "Also write the auxiliary-qubit hypergraph built from the relation");
    rel->callback([&] {
        command = "relation-check";
        action = [&] { return cmd_relation_check(file, construct); };
    });

    auto *rec = app.add_subcommand("reconstruct", "Hypergraphs whose one-qubit trace is (rho_H + rho_K)/2");
    rec->add_option("H_FILE", file, "First reduced hypergraph")->required();
    rec->add_option("K_FILE", file2, "Second reduced hypergraph")->required();
    rec->add_option("--qubit", qubit, "Label of the reconstructed qubit")->default_val(1);
    rec->callback([&] {
        command = "reconstruct";
        action = [&] { return cmd_reconstruct(file, file2, qubit); };
    });

    auto *fam = app.add_subcommand("family", "Emit a constructed family member");
    fam->require_subcommand(1);
    fam->fallthrough();
    fam->add_option("-o,--output", out_path, "Write the hypergraph file here instead of stdout");
    int r = 2, k = 2, m = 3, n = 1, j = 1, l = 0;
    std::string sizes, kind;
    auto *poly = fam->add_subcommand("polygon", "4r-qubit polygon family");
    poly->add_option("--r", r, "Polygon half-size r >= 2")->required();
    poly->callback([&] {
        command = "family";
        action = [&] {
            Hypergraph g = polygon_family(r);
            Json aux = Json::array();
            for (int v = 2 * r + 1; v <= 4 * r; v++) {
                aux.push_back(v);
            }
            return emit_family("polygon", "r=" + std::to_string(r), g,
                               {{"stabilizer_dimension", 1}, {"element", polygon_element(r).to_string()}, {"aux_labels", aux}});
        };
    });
    auto *star = fam->add_subcommand("star", "k vertices sharing one common (m-1)-set");
    star->add_option("--k", k, "Number of essential vertices")->required();
    star->add_option("--m", m, "Edge size")->required();
    star->callback([&] {
        command = "family";
        action = [&] {
            Hypergraph g = star_family(k, m);
            std::vector<int> essential;
            for (int v = 1; v <= k; v++) {
                essential.push_back(v);
            }
            return emit_family("star", "k=" + std::to_string(k) + " m=" + std::to_string(m), g,
                               {{"stabilizer_dimension", k - 1}, {"essential_vertices", essential}});
        };
    });
    auto *comp = fam->add_subcommand("complete", "All subsets of the listed sizes");
    comp->add_option("--n", n, "Vertex count")->required();
    comp->add_option("--sizes", sizes, "Comma-separated edge sizes")->required();
    comp->callback([&] {
        command = "family";
        action = [&] {
            auto list = parse_label_list(sizes);
            Hypergraph g = make_complete(n, list);
            std::sort(list.begin(), list.end());
            return emit_family("complete", "n=" + std::to_string(n) + " sizes=" + sizes, g,
                               {{"complete_sizes", list}, {"symmetric", true}});
        };
    });
    auto *six = fam->add_subcommand("six-fifteen", "Parity families with X or Y tensor symmetry");
    six->add_option("--kind", kind, "a, b, c or d")->required()->check(CLI::IsMember({"a", "b", "c", "d"}));
    six->add_option("--j", j, "j >= 1")->required();
    six->add_option("--l", l, "l >= 0")->required();
    six->add_option("--m", m, "Edge size for kind a");
    six->callback([&] {
        command = "family";
        action = [&] {
            Family615Kind kk = kind == "a"   ? Family615Kind::A
                               : kind == "b" ? Family615Kind::B
                               : kind == "c" ? Family615Kind::C
                                             : Family615Kind::D;
            Family615 f = family_615(kk, j, l, m);
            if (f.n > kMaxVertices) {
                throw Error(ErrorCode::TooLarge, "instance has " + std::to_string(f.n) + " qubits");
            }
            Hypergraph g = make_complete(f.n, {f.m});
            return emit_family("six-fifteen",
                               "kind=" + kind + " j=" + std::to_string(j) + " l=" + std::to_string(l) +
                                   " m=" + std::to_string(f.m),
                               g, {{"n", f.n}, {"m", f.m}, {"symmetry", expected_symmetry_name(f.expected)}});
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Output o = action();
        if (command == "family" && !out_path.empty()) {
            write_file(out_path, o.text);
            o.text = "wrote " + out_path + "\n";
        }
        if (json) {
            Json doc;
            doc["command"] = command;
            doc["version"] = kVersion;
            doc["input_digest"] = o.digest;
            doc["result"] = o.result;
            out << doc.dump(2) << "\n";
        } else {
            out << o.text;
        }
        return kExitOk;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        int code = map_error(e);
        err << (code == kExitRefused ? "refused: " : "usage error: ") << e.what() << "\n";
        return code;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace hyperlu::cli
