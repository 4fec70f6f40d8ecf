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

#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>

#include "formats.h"
#include "hyperlu/hypergraph.h"
#include "hyperlu/ptrace.h"

using namespace hyperlu;
using Json = nlohmann::json;
using cli::read_file;
using cli::write_file;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    Result r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
}

std::string data(const std::string &name) {
    return std::string(HYPERLU_TEST_DATA) + "/" + name;
}

class TempDir {
   public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("hyperlu_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::filesystem::remove_all(path_);
    }
    std::string file(const std::string &name) const {
        return (path_ / name).string();
    }

   private:
    std::filesystem::path path_;
};

}  // namespace

TEST(cli, build_fig1) {
    Result r = run({"build", data("fig1.hg")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("signs: +++++++-++++---+"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("minus at: 0111 1100 1101 1110"), std::string::npos) << r.out;
}

TEST(cli, json_document_is_deterministic) {
    Result a = run({"--json", "build", data("fig1.hg")});
    Result b = run({"build", data("fig1.hg"), "--json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    Json doc = Json::parse(a.out);
    EXPECT_EQ(doc["command"], "build");
    EXPECT_EQ(doc["version"], cli::kVersion);
    EXPECT_EQ(doc["input_digest"].get<std::string>().size(), 16u);
    EXPECT_EQ(doc["result"]["minus_indices"], Json::parse(R"(["0111","1100","1101","1110"])"));
}

TEST(cli, build_symmetric_large) {
    TempDir tmp;
    write_file(tmp.file("big.hg"), cli::format_hypergraph_text(make_complete(18, {17})));
    Json doc = run_json({"build", tmp.file("big.hg")});
    std::string pattern(19, '+');
    pattern[17] = '-';
    EXPECT_EQ(doc["result"]["weight_signs"], pattern);

    write_file(tmp.file("chain.hg"), "n=18\n1 2\n");
    EXPECT_EQ(run({"build", tmp.file("chain.hg")}).code, cli::kExitRefused);
}

TEST(cli, stabilizer_fig6) {
    Json doc = run_json({"stabilizer", data("fig6.hg")});
    const Json &res = doc["result"];
    ASSERT_EQ(res["dimension"], 1);
    const Json &b = res["basis"][0];
    // First nonzero entry in theta, r, s, t order is positive.
    EXPECT_EQ(b["t"], Json::parse("[-1,-1,0,0]"));
    EXPECT_EQ(b["r"], Json::parse("[0,0,1,1]"));
    EXPECT_EQ(b["s"], Json::parse("[0,0,0,0]"));
    EXPECT_EQ(b["theta"], 0);
    EXPECT_EQ(b["weight"], 4);
}

TEST(cli, stabilizer_fig5) {
    Json doc = run_json({"stabilizer", data("fig5.hg")});
    EXPECT_EQ(doc["result"]["dimension"], 3);
    Result text = run({"stabilizer", data("fig5.hg")});
    EXPECT_NE(text.out.find("-Z1 - Z2 + X5 + X6"), std::string::npos) << text.out;
}

TEST(cli, stabilizer_polygon_report) {
    TempDir tmp;
    ASSERT_EQ(run({"family", "-o", tmp.file("p.hg"), "polygon", "--r", "2"}).code, 0);
    Json doc = run_json({"stabilizer", tmp.file("p.hg")});
    EXPECT_EQ(doc["result"]["dimension"], 1);
    EXPECT_EQ(doc["result"]["report"]["triviality_hypotheses"], true);
    EXPECT_EQ(doc["result"]["report"]["two_minus_pattern"], false);
    EXPECT_EQ(doc["result"]["report"]["triviality_discrepancy"], true);
    Result text = run({"stabilizer", tmp.file("p.hg")});
    EXPECT_NE(text.out.find("discrepancy (hypotheses hold, dimension != 0): YES"), std::string::npos);
}

TEST(cli, symmetric_complete_4_3) {
    Json res = run_json({"symmetric", data("complete_4_3.hg")})["result"];
    EXPECT_EQ(res["symmetric"], true);
    EXPECT_EQ(res["complete_sizes"], Json::parse("[3]"));
    EXPECT_EQ(res["weight_signs"], "+++-+");
    EXPECT_EQ(res["plus_y"]["conditions"], true);
    EXPECT_EQ(res["plus_y"]["dense"], true);
    EXPECT_EQ(res["plus_x"]["conditions"], false);
    EXPECT_EQ(res["plus_x"]["dense"], false);
    EXPECT_EQ(res["minus_x"]["conditions"], false);
    EXPECT_EQ(res["minus_x"]["dense"], false);
    EXPECT_EQ(run_json({"symmetric", data("fig1.hg")})["result"]["symmetric"], false);
}

TEST(cli, relation_check_and_construct) {
    TempDir tmp;
    Result r = run({"relation-check", data("eq21.rel"), "-o", tmp.file("c.hg")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("holds"), std::string::npos);
    Hypergraph built = cli::parse_hypergraph_text(read_file(tmp.file("c.hg")));
    EXPECT_EQ(built, cli::parse_hypergraph_text(read_file(data("fig5.hg"))));
    EXPECT_EQ(run_json({"relation-check", data("eq24.rel")})["result"]["holds"], true);

    write_file(tmp.file("bad.rel"), "m=1\n1: 1\n");
    EXPECT_EQ(run_json({"relation-check", tmp.file("bad.rel")})["result"]["holds"], false);
    EXPECT_EQ(run({"relation-check", tmp.file("bad.rel"), "-o", tmp.file("x.hg")}).code, cli::kExitRefused);
}

TEST(cli, parse_errors_have_positions) {
    TempDir tmp;
    write_file(tmp.file("bad.hg"), "n=3\n1 2\n1 x\n");
    Result r = run({"stabilizer", tmp.file("bad.hg")});
    EXPECT_EQ(r.code, cli::kExitParse);
    EXPECT_NE(r.err.find("line 3, column 3"), std::string::npos) << r.err;

    write_file(tmp.file("range.hg"), "n=3\n1 4\n");
    r = run({"build", tmp.file("range.hg")});
    EXPECT_EQ(r.code, cli::kExitParse);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;

    write_file(tmp.file("bad.rel"), "m=2\n2 1\n");
    EXPECT_EQ(run({"relation-check", tmp.file("bad.rel")}).code, cli::kExitParse);
    write_file(tmp.file("dup.rel"), "m=2\n1: 1\n-1: 1\n");
    EXPECT_EQ(run({"relation-check", tmp.file("dup.rel")}).code, cli::kExitParse);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"build"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"build", "/nonexistent/file.hg"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"ptrace", data("fig1.hg"), "--qubits", "9"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"ptrace", data("fig1.hg"), "--qubits", "1,1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"family", "six-fifteen", "--kind", "e", "--j", "1", "--l", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"family", "six-fifteen", "--kind", "b", "--j", "1", "--l", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(cli, refusals) {
    TempDir tmp;
    write_file(tmp.file("big.hg"), "n=17\n1 2 3\n");
    EXPECT_EQ(run({"stabilizer", tmp.file("big.hg")}).code, cli::kExitRefused);
    EXPECT_EQ(run({"majorana", data("fig1.hg")}).code, cli::kExitRefused);
    EXPECT_EQ(run({"ptrace", data("fig1.hg"), "--qubits", "1,2,3,4"}).code, cli::kExitRefused);
    EXPECT_EQ(run({"essential", data("fig6.hg")}).code, cli::kExitRefused);
}

TEST(cli, essential_star) {
    TempDir tmp;
    ASSERT_EQ(run({"family", "-o", tmp.file("s.hg"), "star", "--k", "3", "--m", "3"}).code, 0);
    Result r = run({"essential", tmp.file("s.hg")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(cli::parse_hypergraph_text(r.out), parse_hypergraph(5, {{1, 2, 3}}));
}

TEST(cli, family_outputs_reparse) {
    TempDir tmp;
    for (auto [r, dim] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}}) {
        Json doc = run_json({"family", "polygon", "--r", std::to_string(r)});
        write_file(tmp.file("p.hg"), doc["result"]["file"]);
        EXPECT_EQ(run_json({"stabilizer", tmp.file("p.hg")})["result"]["dimension"], dim);
        EXPECT_EQ(doc["result"]["expected"]["stabilizer_dimension"], dim);
    }
    for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {4, 3}, {3, 4}}) {
        Json doc = run_json({"family", "star", "--k", std::to_string(k), "--m", std::to_string(m)});
        write_file(tmp.file("s.hg"), doc["result"]["file"]);
        EXPECT_EQ(run_json({"stabilizer", tmp.file("s.hg")})["result"]["dimension"], k - 1);
    }
    Json comp = run_json({"family", "complete", "--n", "6", "--sizes", "4,2"});
    write_file(tmp.file("c.hg"), comp["result"]["file"]);
    EXPECT_EQ(run_json({"symmetric", tmp.file("c.hg")})["result"]["complete_sizes"], Json::parse("[2,4]"));

    struct Case {
        const char *kind;
        int j, l, m;
        const char *key;
    };
    for (Case c : {Case{"a", 2, 0, 3, "plus_x"}, Case{"a", 1, 2, 1, "plus_x"}, Case{"b", 1, 1, 0, "plus_x"},
                   Case{"c", 1, 0, 0, "minus_x"}, Case{"c", 2, 0, 0, "minus_x"}, Case{"d", 1, 1, 0, "plus_y"},
                   Case{"d", 2, 1, 0, "plus_y"}}) {
        std::vector<std::string> args{"family", "six-fifteen", "--kind", c.kind, "--j", std::to_string(c.j), "--l",
                                      std::to_string(c.l)};
        if (c.m) {
            args.push_back("--m");
            args.push_back(std::to_string(c.m));
        }
        Json doc = run_json(args);
        write_file(tmp.file("f.hg"), doc["result"]["file"]);
        Json res = run_json({"symmetric", tmp.file("f.hg")})["result"];
        EXPECT_EQ(res[c.key]["conditions"], true) << c.kind << c.j << c.l;
        EXPECT_EQ(res[c.key]["dense"], true) << c.kind << c.j << c.l;
    }
}

TEST(cli, majorana) {
    TempDir tmp;
    Json res = run_json({"majorana", data("complete_4_3.hg"), "--svg", tmp.file("m.svg")})["result"];
    EXPECT_EQ(res["integer_coeffs"], Json::parse("[1,-4,6,4,1]"));
    EXPECT_EQ(res["scale_log2"], Json::parse("[-2,1]"));
    EXPECT_EQ(res["points"].size(), 4u);
    ASSERT_EQ(res["rotations"].size(), 4u);
    for (const auto &r : res["rotations"]) {
        EXPECT_EQ(r["tensor_verified"], true);
    }
    std::string svg = read_file(tmp.file("m.svg"));
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n') > 5, true);
}

TEST(cli, ptrace_mixture) {
    Json res = run_json({"ptrace", data("fig1.hg"), "--qubits", "1"})["result"];
    EXPECT_EQ(res["label_map"], Json::parse("[[2,1],[3,2],[4,3]]"));
    const Json &comps = res["mixture"]["components"];
    ASSERT_EQ(comps.size(), 2u);
    for (const auto &c : comps) {
        EXPECT_EQ(c["weight"], Json::parse("[1,2]"));
    }
    EXPECT_EQ(comps[0]["edges"], Json::parse("[[1],[1,2,3]]"));
    EXPECT_EQ(comps[1]["edges"], Json::parse("[[1,2,3]]"));
    Result text = run({"ptrace", data("fig1.hg"), "--qubits", "1,3"});
    EXPECT_EQ(text.code, 0);
    EXPECT_EQ(text.out.find('.'), std::string::npos) << "rationals must not print as decimals";
}

TEST(cli, reconstruct) {
    TempDir tmp;
    Hypergraph g = cli::parse_hypergraph_text(read_file(data("fig1.hg")));
    write_file(tmp.file("h.hg"), cli::format_hypergraph_text(delete_vertex(g, 1)));
    write_file(tmp.file("k.hg"), cli::format_hypergraph_text(shrink_vertex(g, 1).graph));
    Json res = run_json({"reconstruct", tmp.file("h.hg"), tmp.file("k.hg")})["result"];
    bool found = false;
    for (const auto &c : res["candidates"]) {
        found = found || c["hypergraph"]["edges"] == Json::parse("[[1,2],[2,3,4]]");
    }
    EXPECT_TRUE(found);

    // Placing the new qubit at label 3 relabels the candidates accordingly.
    Json moved = run_json({"reconstruct", tmp.file("h.hg"), tmp.file("k.hg"), "--qubit", "3"})["result"];
    EXPECT_EQ(moved["permutation"], Json::parse("[3,1,2,4]"));
    std::vector<int> perm{3, 1, 2, 4};
    Hypergraph expect = permute_vertices(g, perm);
    bool moved_found = false;
    for (const auto &c : moved["candidates"]) {
        std::vector<std::vector<int>> edges = c["hypergraph"]["edges"];
        moved_found = moved_found || parse_hypergraph(4, edges) == expect;
    }
    EXPECT_TRUE(moved_found);
    // Tracing the placed qubit gives back the input pair.
    HypergraphMixture mix = trace_one(expect, 3);
    EXPECT_EQ(mix, trace_one(g, 1));
}

TEST(cli, export_dot) {
    Result r = run({"export-dot", data("fig1.hg")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("v1 -- v2;"), std::string::npos);
    EXPECT_NE(r.out.find("shape=diamond"), std::string::npos);
    EXPECT_NE(r.out.find("e1 -- v4;"), std::string::npos);
}

TEST(cli, file_formats_round_trip) {
    Hypergraph g = parse_hypergraph(5, {{1, 2}, {3}, {2, 4, 5}});
    EXPECT_EQ(cli::parse_hypergraph_text(cli::format_hypergraph_text(g)), g);
    EXPECT_EQ(cli::parse_hypergraph_text("# c\n\nn=3  # header\n 1 2 \n\n2 1\n"), Hypergraph(3));
    GateRelation rel = cli::parse_relation_text(read_file(data("eq24.rel")));
    GateRelation again = cli::parse_relation_text(cli::format_relation_text(rel));
    EXPECT_EQ(again.terms(), rel.terms());
    GateRelation q = cli::parse_relation_text("m=2\n+1/2: 1\n-3/4: 1,2;2\n5:\n");
    EXPECT_EQ(q.terms()[0].coefficient, Rational(1, 2));
    EXPECT_TRUE(q.terms()[2].edges.empty());
}
