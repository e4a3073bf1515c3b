#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MCQ_BINARY_DIR) + "/mcq " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("hilb examples") {
    auto r = run("hilb --family uniform -r 3 -n 3 --variant chow --out latex");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1+4t+t^2\n");
    r = run("hilb --family quniform -r 3 -n 3 --variant chow --out latex");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1+(2+q+q^2)t+t^2\n");
    r = run("hilb --family uniform -n 3");
    CHECK(r.exit_code == 2);
}

TEST_CASE("eulerian example") {
    auto r = run("eulerian --kind binomial -n 2 --q");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1+(2+q)t+t^2\n");
}

TEST_CASE("json output round-trips the schema shape") {
    auto r = run("hilb --family quniform -r 3 -n 3 --out json");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "[{\"t\":0,\"q\":[[0,\"1\"]]},{\"t\":1,\"q\":[[0,\"2\"],[1,\"1\"],"
          "[2,\"1\"]]},{\"t\":2,\"q\":[[0,\"1\"]]}]\n");
    // byte stability
    CHECK(run("hilb --family quniform -r 3 -n 3 --out json").out == r.out);
}

TEST_CASE("cd subcommand") {
    auto r = run("cd -r 3 -n 3 --method eval --out latex");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-q-q^2\n");
    r = run("cd -r 3 -n 3 --method all --out json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"agreement\":true") != std::string::npos);
    r = run("cd -r 3 -n 3 --method bogus");
    CHECK(r.exit_code == 2);
}

TEST_CASE("matroid subcommand and validation exit codes") {
    auto good = write_temp("mcq_u23.json",
                           R"({"ground":3,"flats":[[],[1],[2],[3],[1,2,3]]})");
    auto r = run("matroid --flats " + good + " --variant aug --aut \"(1 2)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("rank:       2") != std::string::npos);
    CHECK(r.out.find("hilb:       1+4t+t^2") != std::string::npos);
    CHECK(r.out.find("cd:         2") != std::string::npos);
    CHECK(r.out.find("(1 2): 0") != std::string::npos);

    auto bad = write_temp("mcq_bad.json", R"({"ground":2,"flats":[[1],[2],[1,2]]})");
    CHECK(run("matroid --flats " + bad).exit_code == 3);
    CHECK(run("matroid --flats /tmp/mcq_missing_file.json").exit_code == 3);
    // non-automorphism of the doubled point
    auto dbl = write_temp("mcq_dbl.json",
                          R"({"ground":4,"flats":[[],[1,2],[3],[4],[1,2,3,4]]})");
    CHECK(run("matroid --flats " + dbl + " --aut \"(1 3)\"").exit_code == 3);
}

TEST_CASE("verify subcommand") {
    auto r = run("verify --suite cd --max-n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
    r = run("verify --suite qsym --max-n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ribbon Schur dual routes") != std::string::npos);
    CHECK(run("verify --suite nosuch").exit_code == 2);
}

TEST_CASE("resource guards surface as exit 4") {
    auto r = run("eulerian --kind A -n 13");
    CHECK(r.exit_code == 4);
}
