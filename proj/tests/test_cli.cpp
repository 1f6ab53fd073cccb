/*
   Copyright 2026 The nutforge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nutforge/cli.hpp"
#include "nutforge/graph_io.hpp"
#include "nutforge/nut.hpp"

using namespace nutforge;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("cli exists") {
    const Run a = run({"exists", "16", "6"});
    CHECK(a.code == 0);
    CHECK(a.out.find("case: d-2-mod-4") != std::string::npos);
    CHECK(run({"exists", "14", "6"}).code == 1);
    CHECK(run({"exists", "-3", "4"}).code == 2);
    CHECK(run({"exists", "x", "4"}).code == 2);
    CHECK(run({"exists", "8"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    const Run j = run({"--output-format", "json", "exists", "8", "4"});
    CHECK(nlohmann::json::parse(j.out)["exists"] == true);
}

TEST_CASE("cli construct") {
    const Run g6 = run({"construct", "12", "6", "--format", "graph6"});
    REQUIRE(g6.code == 0);
    const auto out_lines = lines(g6.out);
    REQUIRE(out_lines.size() == 1);
    CHECK(nut_check_direct(from_graph6(out_lines[0])).is_nut);
    CHECK(g6.err.find("# recipe: sporadic") != std::string::npos);

    const Run adj = run({"construct", "20", "14", "--format", "adjacency-list"});
    CHECK(adj.code == 0);
    CHECK(lines(adj.out).size() == 20);

    const Run rec = run({"construct", "16", "6", "--recipe"});
    CHECK(lines(rec.out).size() == 2);
    CHECK(rec.out.rfind("# recipe: prop1", 0) == 0);

    CHECK(run({"construct", "14", "6"}).code == 1);
    CHECK(run({"construct", "10", "4", "--limit", "0"}).code == 3);
    CHECK(run({"construct", "12", "8", "--format", "dot"}).out.find("graph nut_12_8") != std::string::npos);

    const Run j = run({"--output-format", "json", "construct", "24", "10"});
    const auto obj = nlohmann::json::parse(j.out);
    CHECK(nut_check_direct(from_graph6(obj["graph6"].get<std::string>())).is_nut);
}

TEST_CASE("cli verify") {
    const Run c8 = run({"verify", "--input", "-"}, to_graph6(build_circulant({8, {1, 2}})) + "\n");
    CHECK(c8.code == 0);
    CHECK(c8.out == "nut: true, nullity: 1\n");

    const Run p3 = run({"verify", "--input", "-"}, "0: 1\n1: 2\n");
    CHECK(p3.code == 1);
    CHECK(p3.out == "nut: false (kernel vector has zero entry)\n");

    const Run prism = run({"verify", "--input", "-", "--shift", "1"}, "dihedral m=6 rot=1,5 refl=0\n");
    CHECK(prism.code == 0);
    CHECK(prism.out == "shifted nullity: 1\n");

    const Run both = run({"verify", "--input", "-", "--method", "both"}, "dihedral m=8 rot=1,7 refl=0,1,4,6\n");
    CHECK(both.code == 0);
    CHECK(both.out.find("methods agree") != std::string::npos);

    CHECK(run({"verify", "--input", "-", "--method", "spectral"}, "Bw\n").code == 2);
    CHECK(run({"verify", "--input", "-"}, "dihedral m=8 rot=1 refl=0\n").code == 2);
    CHECK(run({"verify", "--input", "/nonexistent/file"}).code == 2);
    CHECK(run({"verify", "--input", "-", "--shift", "2"}, "Bw\n").code == 2);
}

TEST_CASE("cli lemmas and census") {
    const Run q = run({"lemmas", "--family", "Q", "--t-max", "10"});
    CHECK(q.code == 0);
    CHECK(q.out.find("violations=0") != std::string::npos);
    CHECK(run({"lemmas", "--family", "R", "--t-max", "0", "--beta-max", "100"}).code == 0);
    CHECK(run({"lemmas", "--family", "Q", "--t-max", "0", "--beta-min", "5", "--beta-max", "6"}).code == 1);
    CHECK(run({"lemmas", "--family", "X"}).code == 2);

    const Run c = run({"census", "--family", "circulant", "8", "4"});
    CHECK(c.code == 0);
    CHECK(lines(c.out).size() == 2);
    CHECK(c.out.find("# classes: 1") != std::string::npos);
    CHECK(run({"census", "--family", "circulant", "22", "4"}).code == 2);
    CHECK(run({"census", "--family", "circulant", "22", "4", "--no-dedup"}).code == 0);
    CHECK(run({"census", "--family", "dihedral", "16", "8", "--budget", "10"}).code == 3);

    const Run j = run({"--output-format", "json", "census", "--family", "circulant", "10", "4"});
    for (const auto& l : lines(j.out)) {
        const auto obj = nlohmann::json::parse(l);
        if (obj.contains("graph6")) CHECK(nut_check_direct(from_graph6(obj["graph6"].get<std::string>())).is_nut);
    }
}

TEST_CASE("cli output file and jobs") {
    const std::string path = "cli_test_output.txt";
    CHECK(run({"--jobs", "2", "-o", path, "exists", "8", "4"}).code == 0);
    std::ifstream f(path);
    std::string first;
    std::getline(f, first);
    CHECK(first.rfind("exists: true", 0) == 0);
    std::remove(path.c_str());
}
