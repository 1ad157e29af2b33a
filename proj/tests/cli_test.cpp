#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include "phigraph/cli.hpp"

using namespace phigraph;
using cli::CommandResult;

namespace {

CommandResult run(std::vector<std::string> args, const std::string& stdin_text = {}) {
    if (stdin_text.empty()) return cli::run(args);
    std::istringstream in(stdin_text);
    return cli::run(args, &in);
}

} // namespace

TEST_CASE("phi command") {
    CommandResult r = run({"phi", "20"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output == "8\n");
    REQUIRE(r.diagnostics.empty());

    r = run({"phi", "20", "--json"});
    REQUIRE(r.output == "{\"n\":20,\"phi\":8}\n");

    REQUIRE(run({"phi", "0"}).exit_code == 2);
    REQUIRE(run({"phi", "forty"}).exit_code == 2);
    REQUIRE(run({"phi"}).exit_code == 2);
}

TEST_CASE("chain command") {
    CommandResult r = run({"chain", "20"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output == "20 8 4 2 1\nR 4\nPhi 15\n");

    r = run({"chain", "1"});
    REQUIRE(r.output == "1\nR 0\nPhi 0\n");

    r = run({"chain", "20", "--json"});
    REQUIRE(r.output == "{\"origin\":20,\"values\":[20,8,4,2,1],\"steps\":4,\"phi_sum\":15}\n");
}

TEST_CASE("invphi command") {
    CommandResult r = run({"invphi", "2"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output == "3 4 6\n");

    REQUIRE(run({"invphi", "1"}).output == "1 2\n");
    REQUIRE(run({"invphi", "3"}).output == "\n");
    REQUIRE(run({"invphi", "2", "--json"}).output == "{\"target\":2,\"solutions\":[3,4,6]}\n");
    REQUIRE(run({"invphi", "2", "--brute", "5"}).output == "3 4\n");
    REQUIRE(run({"invphi", "2", "--brute", "6"}).output == "3 4 6\n");

    REQUIRE(run({"invphi", "4294967296"}).exit_code == 3);
}

TEST_CASE("build command") {
    CommandResult r = run({"build", "3,7,11,20"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output ==
            "{\"vertices\":[1,2,3,4,6,7,8,10,11,20],"
            "\"edges\":[[2,1],[3,2],[4,2],[6,2],[7,6],[8,4],[10,4],[11,10],[20,8]],"
            "\"seed\":[3,7,11,20]}\n");
    REQUIRE_NOTHROW(nlohmann::json::parse(r.output));

    // seeds may also be given as separate arguments
    REQUIRE(run({"build", "3", "7", "11", "20"}).output == r.output);

    r = run({"build", "4", "--dot"});
    REQUIRE(r.output == "graph G {\n  1;\n  2;\n  4;\n  2 -- 1;\n  4 -- 2;\n}\n");

    REQUIRE(run({"build", "3,,4"}).exit_code == 2);
    REQUIRE(run({"build", "0"}).exit_code == 2);
    REQUIRE(run({"build"}).exit_code == 2);
}

TEST_CASE("leaves and seed-min commands") {
    REQUIRE(run({"leaves", "3,7,11,20"}).output == "1 3 7 11 20\n");
    REQUIRE(run({"leaves", "1,2,4,7,11"}).output == "1 7 11\n");
    REQUIRE(run({"seed-min", "1,2,4,7,11"}).output == "7 11\n");
    REQUIRE(run({"seed-min", "1,2,4,7,11", "--json"}).output == "{\"seed\":[7,11]}\n");

    // a one-vertex graph has no leaves to report
    REQUIRE(run({"leaves", "1"}).exit_code == 3);
    REQUIRE(run({"seed-min", "1"}).output == "1\n");
}

TEST_CASE("recognize by family") {
    CommandResult r = run({"recognize", "--family", "star:4"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["verdict"] == "realized");
    std::vector<u64> labels = j["labeling"].get<std::vector<u64>>();
    std::sort(labels.begin(), labels.end());
    REQUIRE(labels == std::vector<u64>{1, 2, 3, 4, 6});

    r = run({"recognize", "--family", "star:5"});
    REQUIRE(r.exit_code == 1);
    j = nlohmann::json::parse(r.output);
    REQUIRE(j["verdict"] == "refuted");
    REQUIRE_FALSE(j.contains("labeling"));

    r = run({"recognize", "--family", "path:5", "--budget", "0"});
    REQUIRE(r.exit_code == 3);
    REQUIRE(nlohmann::json::parse(r.output)["verdict"] == "budget_exceeded");
    REQUIRE_FALSE(r.diagnostics.empty());
}

TEST_CASE("recognize by tree file on stdin") {
    CommandResult r = run({"recognize", "--tree", "-"}, "0 1\n1 2\n1 3\n");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["verdict"] == "realized");

    REQUIRE(run({"recognize", "--tree", "-"}, "order 1\n").exit_code == 0);
    REQUIRE(run({"recognize", "--tree", "-"}, "0 1\n2 3\n").exit_code == 2);
    REQUIRE(run({"recognize", "--tree", "/no/such/file"}).exit_code == 2);
    REQUIRE(run({"recognize"}).exit_code == 2);
    REQUIRE(run({"recognize", "--family", "star:3", "--tree", "-"}).exit_code == 2);
}

TEST_CASE("generate emits both formats and they round trip") {
    REQUIRE(run({"generate", "path:3"}).output == "0 1\n1 2\n");
    REQUIRE(run({"generate", "path:1"}).output == "order 1\n");
    REQUIRE(run({"generate", "star:2", "--dot"}).output ==
            "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n}\n");

    for (const char* spec : {"star:4", "star:5", "centipede:3", "banana:1x6",
                             "isomer:neopentane", "path:7"}) {
        CAPTURE(spec);
        CommandResult by_family = run({"recognize", "--family", spec});
        for (const char* flag : {"", "--dot"}) {
            std::vector<std::string> gen_args{"generate", spec};
            if (*flag) gen_args.push_back(flag);
            CommandResult text = run(gen_args);
            REQUIRE(text.exit_code == 0);
            CommandResult by_tree = run({"recognize", "--tree", "-"}, text.output);
            REQUIRE(by_tree.exit_code == by_family.exit_code);
            REQUIRE(by_tree.output == by_family.output);
        }
    }

    REQUIRE(run({"generate", "plum:3"}).exit_code == 2);
}

TEST_CASE("known-seed command") {
    REQUIRE(run({"known-seed", "path:5"}).output == "16\n");
    REQUIRE(run({"known-seed", "star:4"}).output == "1 2 3 4 6\n");
    REQUIRE(run({"known-seed", "centipede:3", "--json"}).output ==
            "{\"seed\":[1,2,4,8,12,24]}\n");

    CommandResult r = run({"known-seed", "star:5"});
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.output.empty());
    REQUIRE_FALSE(r.diagnostics.empty());

    REQUIRE(run({"known-seed", "path:70"}).exit_code == 3);
    REQUIRE(run({"known-seed", "box:2"}).exit_code == 2);
}

TEST_CASE("ptn command") {
    CommandResult r = run({"ptn", "--upto", "1000"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output == "3\n9\n15\n27\n39\n81\n111\n183\n243\n255\n327\n363\n471\n729\n");
    REQUIRE(run({"ptn", "--upto", "2"}).output.empty());
    REQUIRE(run({"ptn", "--upto", "9", "--json"}).output ==
            "{\"upto\":9,\"values\":[3,9]}\n");
}

TEST_CASE("usage errors and help") {
    REQUIRE(run({}).exit_code == 2);
    REQUIRE(run({"frobnicate"}).exit_code == 2);
    CommandResult help = run({"--help"});
    REQUIRE(help.exit_code == 0);
    REQUIRE(help.output.find("invphi") != std::string::npos);
}

TEST_CASE("output is byte deterministic") {
    for (auto args : {std::vector<std::string>{"build", "3,7,11,20"},
                      std::vector<std::string>{"recognize", "--family", "centipede:4"},
                      std::vector<std::string>{"ptn"}}) {
        CommandResult a = run(args);
        CommandResult b = run(args);
        REQUIRE(a.exit_code == b.exit_code);
        REQUIRE(a.output == b.output);
    }
}

TEST_CASE("verify-paper runs the whole suite") {
    CommandResult r = run({"verify-paper"});
    REQUIRE(r.output.find("11 passed, 0 failed") != std::string::npos);
    REQUIRE(r.exit_code == 0);
}
