#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "treespectra/graph.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the CLI binary with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
    const std::string out_path =
        "/tmp/treespectra_cli_test_" + std::to_string(::getpid()) + ".out";
    const std::string cmd =
        std::string(TREESPECTRA_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    std::remove(out_path.c_str());
    return r;
}

}  // namespace

TEST_CASE("spectrum of a star") {
    const auto r = run_cli("spectrum --family star:5 --operator steklov --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    const auto values = j["steklov"]["values"].get<std::vector<double>>();
    REQUIRE(values.size() == 4);
    CHECK(std::abs(values[0]) < 1e-10);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(values[k] - 1.0) < 1e-10);
}

TEST_CASE("spectrum of a crab with closed form") {
    const auto r =
        run_cli("spectrum --family crab:1,2,1 --operator steklov --closed-form --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    const auto values = j["steklov"]["values"].get<std::vector<double>>();
    REQUIRE(values.size() == 3);
    CHECK(std::abs(values[1] - 0.6) < 1e-10);
    CHECK(std::abs(values[2] - 1.0) < 1e-10);
    REQUIRE(j.contains("closed_form_steklov"));
    CHECK(j["closed_form_steklov"].size() == 3);
}

TEST_CASE("spectrum of an extra special graph emits sigma_pm") {
    const auto r =
        run_cli("spectrum --family es:3,1 --operator steklov --closed-form --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    bool saw_minus = false, saw_plus = false;
    for (const auto& e : j["closed_form_steklov"]) {
        if (e["label"] == "sigma_minus") {
            saw_minus = true;
            CHECK(std::abs(e["value"].get<double>() - 0.38799538) < 1e-6);
        }
        if (e["label"] == "sigma_plus") {
            saw_plus = true;
            CHECK(std::abs(e["value"].get<double>() - 0.70291371) < 1e-6);
        }
    }
    CHECK(saw_minus);
    CHECK(saw_plus);
}

TEST_CASE("spectrum usage errors exit 2") {
    CHECK(run_cli("spectrum --family ring:5").exit_code == 2);
    CHECK(run_cli("spectrum --family crab:1,2").exit_code == 2);
    CHECK(run_cli("spectrum").exit_code == 2);
    CHECK(run_cli("spectrum --family star:5 --operator wrong").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("spectrum from an edge-list file") {
    const std::string path = "/tmp/treespectra_test_tree.txt";
    {
        std::ofstream out(path);
        out << treespectra::to_edge_list_text(treespectra::build_path(6));
    }
    const auto r = run_cli("spectrum --tree " + path + " --operator steklov --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    const auto values = j["steklov"]["values"].get<std::vector<double>>();
    CHECK(std::abs(values[1] - 0.4) < 1e-10);  // sigma_2(P_6) = 2/5
    std::remove(path.c_str());
}

TEST_CASE("enumerate") {
    auto r = run_cli("enumerate --n 7 --count-only");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "11\n");

    r = run_cli("enumerate --n 1 --count-only");
    CHECK(r.output == "1\n");

    // crab graphs CG_{1,2;1} and CG_{2,1;1} collapse to one isomorphism class;
    // the class also holds one diameter-4 tree with matching number 2
    r = run_cli("enumerate --class b=3,m=2 --codes");
    REQUIRE(r.exit_code == 0);
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 2);
    CHECK(r.output.find(treespectra::canonical_code(treespectra::build_crab(1, 2, 1))) !=
          std::string::npos);

    CHECK(run_cli("enumerate").exit_code == 2);
    CHECK(run_cli("enumerate --n 25").exit_code == 2);
}

TEST_CASE("verify exits by outcome") {
    // small ranges pass
    auto r = run_cli("verify --theorem slope --max-n 6 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["all_pass"] == true);

    // n = 7 reaches the tied class T(7,3), where the claimed uniqueness fails
    r = run_cli("verify --theorem slope --max-n 7 --format text");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL") != std::string::npos);

    r = run_cli("verify --theorem older --max-b 5 --max-m 4");
    CHECK(r.exit_code == 0);

    r = run_cli("verify --theorem fell --max-b 4 --max-m 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("class,case,bound", 0) == 0);

    CHECK(run_cli("verify --theorem slope").exit_code == 2);       // missing --max-n
    CHECK(run_cli("verify --theorem fell --max-b 4").exit_code == 2);
    CHECK(run_cli("verify --theorem wrong --max-n 8").exit_code == 2);
}

TEST_CASE("conjecture always reports") {
    const auto r = run_cli("conjecture --b 3 --r 1 --operator steklov");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.contains("gap"));
    CHECK(j.contains("class_max"));
    CHECK(j.contains("argmax_codes"));
    CHECK(j["es_in_class"] == true);
}

TEST_CASE("output files are written and deterministic") {
    const std::string path = "/tmp/treespectra_test_report.json";
    auto r = run_cli("verify --theorem fell --max-b 3 --max-m 3 --out " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string first = buf.str();
    CHECK_FALSE(first.empty());
    run_cli("verify --theorem fell --max-b 3 --max-m 3 --out " + path);
    std::ifstream in2(path);
    std::stringstream buf2;
    buf2 << in2.rdbuf();
    CHECK(buf2.str() == first);
    std::remove(path.c_str());
}

TEST_CASE("TREESPECTRA_TOL is honored") {
    const auto r = run_cli("--help");
    CHECK(r.exit_code == 0);
    // a bad tolerance value is a usage error
    const std::string cmd = std::string("TREESPECTRA_TOL=abc ") + TREESPECTRA_CLI_PATH +
                            " enumerate --n 4 --count-only > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
