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

#include "formats.h"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "hyperlu/error.h"

namespace hyperlu::cli {

namespace {

struct Line {
    int number;
    std::string text;  // comment stripped
};

std::vector<Line> meaningful_lines(const std::string &text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        number++;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.resize(hash);
        }
        if (raw.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        out.push_back({number, raw});
    }
    return out;
}

// Parses a decimal integer starting at pos; advances pos.
long parse_int(const Line &line, size_t &pos, const char *what) {
    size_t start = pos;
    if (pos < line.text.size() && (line.text[pos] == '+' || line.text[pos] == '-')) {
        pos++;
    }
    size_t digits = pos;
    while (pos < line.text.size() && std::isdigit(static_cast<unsigned char>(line.text[pos]))) {
        pos++;
    }
    if (pos == digits) {
        throw ParseError(line.number, static_cast<int>(start) + 1, std::string("expected ") + what);
    }
    if (pos - digits > 9) {
        throw ParseError(line.number, static_cast<int>(start) + 1, std::string(what) + " is too large");
    }
    return std::stol(line.text.substr(start, pos - start));
}

void skip_blanks(const Line &line, size_t &pos) {
    while (pos < line.text.size() && (line.text[pos] == ' ' || line.text[pos] == '\t')) {
        pos++;
    }
}

int parse_header(const Line &line, char key, int lo, int hi) {
    size_t pos = 0;
    skip_blanks(line, pos);
    if (pos >= line.text.size() || line.text[pos] != key) {
        throw ParseError(line.number, static_cast<int>(pos) + 1, std::string("expected header '") + key + "=<int>'");
    }
    pos++;
    skip_blanks(line, pos);
    if (pos >= line.text.size() || line.text[pos] != '=') {
        throw ParseError(line.number, static_cast<int>(pos) + 1, "expected '='");
    }
    pos++;
    skip_blanks(line, pos);
    size_t at = pos;
    long value = parse_int(line, pos, "vertex count");
    skip_blanks(line, pos);
    if (pos != line.text.size()) {
        throw ParseError(line.number, static_cast<int>(pos) + 1, "unexpected text after header");
    }
    if (value < lo || value > hi) {
        throw ParseError(
            line.number, static_cast<int>(at) + 1,
            "vertex count must be in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    return static_cast<int>(value);
}

VertexSet parse_label(const Line &line, size_t &pos, int n, VertexSet edge) {
    size_t at = pos;
    long v = parse_int(line, pos, "vertex label");
    if (v < 1 || v > n) {
        throw ParseError(
            line.number, static_cast<int>(at) + 1,
            "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    VertexSet bit = vertex_bit(n, static_cast<int>(v));
    if (edge & bit) {
        throw ParseError(line.number, static_cast<int>(at) + 1, "vertex " + std::to_string(v) + " repeated in one edge");
    }
    return bit;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

Hypergraph parse_hypergraph_text(const std::string &text) {
    auto lines = meaningful_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "missing header 'n=<int>'");
    }
    int n = parse_header(lines[0], 'n', 1, kMaxVertices);
    std::vector<VertexSet> edges;
    for (size_t k = 1; k < lines.size(); k++) {
        const Line &line = lines[k];
        size_t pos = 0;
        VertexSet edge = 0;
        skip_blanks(line, pos);
        while (pos < line.text.size()) {
            edge |= parse_label(line, pos, n, edge);
            if (pos < line.text.size() && line.text[pos] != ' ' && line.text[pos] != '\t') {
                throw ParseError(line.number, static_cast<int>(pos) + 1, "expected a space between labels");
            }
            skip_blanks(line, pos);
        }
        edges.push_back(edge);
    }
    return Hypergraph::from_masks(n, edges);
}

std::string format_hypergraph_text(const Hypergraph &graph) {
    std::ostringstream out;
    out << "n=" << graph.num_vertices() << "\n";
    for (VertexSet e : graph.edges()) {
        auto labels = vertex_labels(e, graph.num_vertices());
        for (size_t k = 0; k < labels.size(); k++) {
            out << (k ? " " : "") << labels[k];
        }
        out << "\n";
    }
    return out.str();
}

GateRelation parse_relation_text(const std::string &text) {
    auto lines = meaningful_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "missing header 'm=<int>'");
    }
    int m = parse_header(lines[0], 'm', 1, kMaxVertices);
    std::vector<RelationTerm> terms;
    std::vector<int> term_lines;
    for (size_t k = 1; k < lines.size(); k++) {
        const Line &line = lines[k];
        auto colon = line.text.find(':');
        if (colon == std::string::npos) {
            throw ParseError(line.number, 1, "expected '<coefficient>: <edges>'");
        }
        std::string coef = line.text.substr(0, colon);
        size_t first = coef.find_first_not_of(" \t");
        size_t last = coef.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw ParseError(line.number, 1, "missing coefficient");
        }
        coef = coef.substr(first, last - first + 1);
        if (coef[0] == '+') {
            coef.erase(0, 1);
        }
        Rational value;
        bool ok = !coef.empty() && coef.find_first_not_of("-0123456789/") == std::string::npos &&
                  value.set_str(coef, 10) == 0 && sgn(value.get_den()) != 0;
        if (!ok) {
            throw ParseError(line.number, static_cast<int>(first) + 1, "bad coefficient '" + coef + "'");
        }
        value.canonicalize();
        if (sgn(value) == 0) {
            throw ParseError(line.number, static_cast<int>(first) + 1, "coefficient must be nonzero");
        }
        std::vector<VertexSet> edges;
        size_t pos = colon + 1;
        skip_blanks(line, pos);
        while (pos < line.text.size()) {
            VertexSet edge = 0;
            while (true) {
                skip_blanks(line, pos);
                edge |= parse_label(line, pos, m, edge);
                skip_blanks(line, pos);
                if (pos < line.text.size() && line.text[pos] == ',') {
                    pos++;
                    continue;
                }
                break;
            }
            edges.push_back(edge);
            if (pos < line.text.size()) {
                if (line.text[pos] != ';') {
                    throw ParseError(line.number, static_cast<int>(pos) + 1, "expected ',' or ';'");
                }
                pos++;
                skip_blanks(line, pos);
            }
        }
        terms.push_back({value, edges});
        term_lines.push_back(line.number);
    }
    try {
        return GateRelation(m, terms);
    } catch (const Error &e) {
        int at = term_lines.empty() ? lines[0].number : term_lines.back();
        throw ParseError(at, 1, e.what());
    }
}

std::string format_relation_text(const GateRelation &relation) {
    std::ostringstream out;
    int m = relation.num_qubits();
    out << "m=" << m << "\n";
    for (const auto &term : relation.terms()) {
        out << (sgn(term.coefficient) > 0 ? "+" : "") << term.coefficient.get_str() << ":";
        for (size_t k = 0; k < term.edges.size(); k++) {
            out << (k ? ";" : " ");
            auto labels = vertex_labels(term.edges[k], m);
            for (size_t j = 0; j < labels.size(); j++) {
                out << (j ? "," : "") << labels[j];
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << contents;
}

std::string fnv1a_hex(const std::string &bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

}  // namespace hyperlu::cli
