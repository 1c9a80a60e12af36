#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef GORFRO_CLI_PATH
#error "GORFRO_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GORFRO_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("check on the twisted cubic prints the documented report") {
    RunResult r = run_cli("check --example veronese:1,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1 . .") != std::string::npos);
    CHECK(r.out.find(". 3 2") != std::string::npos);
    CHECK(r.out.find("gorenstein: no") != std::string::npos);
    CHECK(r.out.find("frobenius: no") != std::string::npos);
    CHECK(r.out.find("dim H_top = 2") != std::string::npos);
}

TEST_CASE("check on an empty ideal file: the polynomial ring is Gorenstein") {
    std::string path = "cli_empty_test.ideal";
    {
        std::ofstream f(path);
        f << "ring n=2\n";
    }
    RunResult r = run_cli("check --ideal " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("gorenstein: yes") != std::string::npos);
    CHECK(r.out.find("frobenius: yes") != std::string::npos);
    CHECK(r.out.find("projective normality") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("betti --json of a degree-2 hypersurface") {
    RunResult r = run_cli("check --example veronese:1,2 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["betti"] == nlohmann::json::parse("[[0,0,1],[1,2,1]]"));
    // JSON round-trips: parse -> re-render is the identity
    CHECK(nlohmann::json::parse(j.dump(2)).dump(2) == j.dump(2));
}

TEST_CASE("betti grid for the twisted cubic") {
    RunResult r = run_cli("betti --example veronese:1,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1 . .") != std::string::npos);
    CHECK(r.out.find(". 3 2") != std::string::npos);
}

TEST_CASE("subcanonical query renders kappa in fundamental weights") {
    RunResult r = run_cli("subcanonical --type A3 --weight 0,1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "subcanonical: yes, N=4, kappa=4*w2\n");

    RunResult no = run_cli("subcanonical --type A1 --weight 3");
    CHECK(no.exit_code == 0);
    CHECK(no.out == "subcanonical: no, kappa=2*w1\n");

    RunResult prod = run_cli("subcanonical --type A1xA2 --weight 1,1,0");
    CHECK(prod.exit_code == 0);
    CHECK(prod.out.find("subcanonical: no") != std::string::npos);
}

TEST_CASE("catalog list includes all ten entries") {
    RunResult r = run_cli("catalog list");
    CHECK(r.exit_code == 0);
    for (const char* id : {"veronese:1,2", "veronese:1,3", "veronese:1,4", "veronese:2,2",
                           "segre:1,1", "segre:1,2", "plucker2:4", "ci2q", "plucker2:5",
                           "veronese:3,2"})
        CHECK(r.out.find(id) != std::string::npos);
}

TEST_CASE("catalog export round-trips through check --ideal") {
    std::string path = "cli_export_test.ideal";
    RunResult ex = run_cli("catalog export veronese:1,3");
    CHECK(ex.exit_code == 0);
    {
        std::ofstream f(path);
        f << ex.out;
    }
    RunResult r = run_cli("check --ideal " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("type=2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("byte-identical output across repeated runs") {
    for (const std::string cmd :
         {std::string("check --example segre:1,2 --json"),
          std::string("verify-theorems --example veronese:1,2 --json"),
          std::string("betti --example ci2q")}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verify-theorems on a single example") {
    RunResult r = run_cli("verify-theorems --example plucker2:4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("theorem1: ok") != std::string::npos);
    CHECK(r.out.find("theorem2: ok") != std::string::npos);
}

TEST_CASE("prime-field mode via --field") {
    RunResult r = run_cli("check --example veronese:1,3 --field p:32003 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["field_mode"] == "p:32003");
    CHECK(j["betti"] == nlohmann::json::parse("[[0,0,1],[1,2,3],[2,3,2]]"));
}

TEST_CASE("parse errors exit with code 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2);
    CHECK(run_cli("check --ideal does_not_exist.ideal").exit_code == 2);
    CHECK(run_cli("check --example veronese:1,3 --field p:32001").exit_code == 2);
    CHECK(run_cli("subcanonical --type Z9 --weight 1").exit_code == 2);

    std::string path = "cli_bad_test.ideal";
    {
        std::ofstream f(path);
        f << "ring n=2\nx0 + 1\n"; // inhomogeneous
    }
    CHECK(run_cli("check --ideal " + path).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("q-max override flag is honored") {
    RunResult r = run_cli("check --example veronese:1,3 --q-max 3 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["betti"] == nlohmann::json::parse("[[0,0,1],[1,2,3],[2,3,2]]"));
}
