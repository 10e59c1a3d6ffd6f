#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "a1weyl/cli.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = a1weyl::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("length and word goldens") {
    auto r = run({"length", "--nullity", "1", R"({"eps":1,"t":[3]})"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");

    r = run({"word", "--nullity", "1", R"({"eps":-1,"t":[1]})"});
    CHECK(r.code == 0);
    CHECK(r.out == "[0,1,0]\n");
}

TEST_CASE("group arithmetic subcommands") {
    auto r = run({"act", "--nullity", "1", R"({"eps":-1,"t":[1]})", R"({"k":1,"sigma":[0]})"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"k":-1,"sigma":[-2]})" "\n");

    r = run({"mul", "--nullity", "2", R"({"eps":-1,"t":[1,0]})", R"({"eps":-1,"t":[0,1]})"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"eps":1,"t":[-1,1]})" "\n");

    r = run({"inv", "--nullity", "1", R"({"eps":1,"t":[5]})"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"eps":1,"t":[-5]})" "\n");

    r = run({"conj", "--nullity", "1", R"({"eps":-1,"t":[0]})", R"({"eps":-1,"t":[1]})"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"eps":-1,"t":[-1]})" "\n");

    r = run({"height", "--nullity", "2", R"({"k":-1,"sigma":[1,-1]})"});
    CHECK(r.code == 0);
    CHECK(r.out == "-3\n");
}

TEST_CASE("roots enumeration output") {
    auto r = run({"roots", "--nullity", "1", "--max-height", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"([{"k":-1,"sigma":[0]},{"k":1,"sigma":[-1]},{"k":0,"sigma":[0]},{"k":-1,"sigma":[1]},{"k":1,"sigma":[0]}])"
          "\n");

    r = run({"roots", "--nullity", "1", "--max-height", "1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "k,sigma1\n-1,0\n1,-1\n0,0\n-1,1\n1,0\n");
}

TEST_CASE("basis subcommands") {
    const std::string pi0 = R"([{"k":1,"sigma":[0,0]},{"k":-1,"sigma":[1,0]},{"k":-1,"sigma":[0,1]}])";
    auto r = run({"basis-check", "--nullity", "2", pi0});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");

    r = run({"basis-check", "--nullity", "1", R"([{"k":1,"sigma":[0]},{"k":1,"sigma":[-1]}])"});
    CHECK(r.code == 0);
    CHECK(r.out == "false\n");

    r = run({"invariant-matrix", "--nullity", "2", pi0});
    CHECK(r.code == 0);
    CHECK(r.out == "[[1,1,0],[1,0,1]]\n");

    r = run({"find-conjugator", "--nullity", "2", pi0, pi0});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"eps":1,"t":[0,0]})" "\n");

    r = run({"pin-family", "--nullity", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"([{"k":1,"sigma":[2,2]},{"k":-1,"sigma":[-1,-4]},{"k":-1,"sigma":[-2,-1]}])"
          "\n");

    r = run({"find-conjugator", "--nullity", "2", pi0,
             R"([{"k":1,"sigma":[2,2]},{"k":-1,"sigma":[-1,-4]},{"k":-1,"sigma":[-2,-1]}])"});
    CHECK(r.code == 0);
    CHECK(r.out == "null\n");
}

TEST_CASE("verification subcommands succeed with exit 0") {
    auto r = run({"verify-bfs", "--nullity", "2", "--depth", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"disagreements\":0") != std::string::npos);
    CHECK(r.out.find("\"elements\":") != std::string::npos);

    r = run({"verify-bfs", "--nullity", "1", "--depth", "2", "--report"});
    CHECK(r.code == 0);
    // one line per element plus the summary
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5 + 1);

    r = run({"verify-affine", "--range", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"failures\":0") != std::string::npos);

    r = run({"growth", "--nullity", "1", "--depth", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "[1,2,2,2,2,2]\n");

    r = run({"growth", "--nullity", "1", "--depth", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "depth,count\n0,1\n1,2\n2,2\n");
}

TEST_CASE("diagnostics and exit codes") {
    // malformed JSON
    auto r = run({"length", "--nullity", "1", "{not json"});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed JSON") != std::string::npos);

    // nullity mismatch
    r = run({"length", "--nullity", "2", R"({"eps":1,"t":[3]})"});
    CHECK(r.code == 2);
    CHECK(r.err.find("nullity") != std::string::npos);

    // out-of-range field
    r = run({"length", "--nullity", "1", R"({"eps":0,"t":[3]})"});
    CHECK(r.code == 2);
    CHECK(r.err.find("parity") != std::string::npos);

    // wrong structure
    r = run({"height", "--nullity", "1", R"({"eps":1,"t":[3]})"});
    CHECK(r.code == 2);

    // wrong arity basis
    r = run({"basis-check", "--nullity", "2", R"([{"k":1,"sigma":[0,0]}])"});
    CHECK(r.code == 2);

    // not a root basis where one is required
    r = run({"invariant-matrix", "--nullity", "1", R"([{"k":1,"sigma":[0]},{"k":1,"sigma":[2]}])"});
    CHECK(r.code == 2);
    CHECK(r.err.find("root basis") != std::string::npos);

    // unknown subcommand / missing required flags
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"length", R"({"eps":1,"t":[3]})"}).code == 2);
    CHECK(run({"verify-affine", "--nullity", "2", "--range", "3"}).code == 2);
    CHECK(run({"pin-family", "--nullity", "2", "--n", "1"}).code == 2);
}

TEST_CASE("byte-identical reruns") {
    const std::vector<std::string> cases[] = {
        {"roots", "--nullity", "2", "--max-height", "3"},
        {"verify-bfs", "--nullity", "2", "--depth", "4", "--report"},
        {"word", "--nullity", "3", R"({"eps":1,"t":[2,-1,3]})"},
    };
    for (const auto& args : cases) {
        const auto first = run(args);
        const auto second = run(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("file input and output") {
    const std::string in_path = "a1weyl_test_in.json";
    const std::string out_path = "a1weyl_test_out.json";
    {
        std::ofstream f(in_path);
        f << R"({"eps":1,"t":[3]})";
    }
    auto r = run({"length", "--nullity", "1", "--output", out_path, "@" + in_path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream result(out_path);
    std::string content((std::istreambuf_iterator<char>(result)), std::istreambuf_iterator<char>());
    CHECK(content == "6\n");
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());

    r = run({"length", "--nullity", "1", "@missing_file.json"});
    CHECK(r.code == 2);
    CHECK(r.err.find("cannot read input file") != std::string::npos);
}

TEST_CASE("help exits zero") {
    CHECK(run({"--help"}).code == 0);
}
