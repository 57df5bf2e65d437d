#include "robin/cli/cli.hpp"
#include "robin/cli/format.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using robin::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(robin::cli::fmt(1.0) == "1");
    CHECK(robin::cli::fmt(std::numbers::pi) == "3.14159265");
    CHECK(robin::cli::round9(std::numbers::pi) == 3.14159265);
}

TEST_CASE("zeros") {
    auto r = run({"zeros", "--dim", "3", "--sigma", "1", "--l", "0", "--count", "1"});
    REQUIRE(r.code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"m", "k", "residual"});
    CHECK(std::stod(rows[1][1]) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-7));

    r = run({"zeros", "--dim", "2", "--sigma", "1", "--count", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"schema\": \"robin-spectral/1\"") != std::string::npos);
    CHECK(r.out.find("1.25578371") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"zeros", "--dim", "2", "--sigma", "-1"}).code == 2);
    CHECK(run({"zeros", "--dim", "1"}).code == 2);
    CHECK(run({"zeros", "--format", "svg"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"ratio-curve", "--sigma-min", "10", "--sigma-max", "1"}).code == 2);
    CHECK(run({"verify", "--shape", "disk", "--dim", "3"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--shape", "disk", "--mesh", "x.mesh"}).code == 2);
    CHECK(run({"verify", "--shape", "blob"}).code == 2);
    CHECK(run({"verify", "--mesh", "/nonexistent.mesh"}).code == 2);
    CHECK(run({"critical-sigma", "--rho", "2"}).code == 2);
    CHECK(run({"sweep-boundary", "--shape", "square", "--sigmas", "1,x"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("ratio curve") {
    auto r = run({"ratio-curve", "--dim", "2", "--sigma-min", "0.01", "--sigma-max", "100", "--steps", "41"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 42);
    CHECK(rows[0][3] == "ratio");
    CHECK(std::stod(rows.back()[3]) == doctest::Approx(2.5387).epsilon(0.03));
    // sigma = 1 is a grid point when the grid spans four decades in 40 steps.
    CHECK(std::stod(rows[21][0]) == doctest::Approx(1.0));
    CHECK(std::stod(rows[21][3]) == doctest::Approx(3.66726).epsilon(1e-4));
    r = run({"ratio-curve", "--format", "svg", "--steps", "16"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.out.find("polyline") != std::string::npos);
}

TEST_CASE("trial") {
    const auto r = run({"trial", "--dim", "2", "--sigma", "1", "--samples", "256"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 257);
    for (std::size_t i = 2; i < rows.size(); ++i) {
        CHECK(std::stod(rows[i][1]) > std::stod(rows[i - 1][1]));
        CHECK(std::stod(rows[i][3]) < std::stod(rows[i - 1][3]));
    }
    const auto pos = r.out.find("# rayleigh_residual,");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(r.out.substr(pos + 20)) <= 1e-8);
    CHECK(run({"trial", "--samples", "4"}).code == 2);
}

TEST_CASE("critical sigma and mesh output") {
    auto r = run({"critical-sigma", "--dim", "2", "--rho", "3"});
    REQUIRE(r.code == 0);
    CHECK(std::stod(parse_csv(r.out)[1][1]) == doctest::Approx(1.79715).epsilon(1e-5));

    const auto path = (std::filesystem::temp_directory_path() / "robin_cli_test.mesh").string();
    r = run({"mesh", "--shape", "rect:2,0.5", "--h", "0.1", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "robinmesh 1");
    in.close();
    r = run({"verify", "--mesh", path, "--sigma", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"bound_ok\": true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify reports the required fields") {
    const auto r = run({"verify", "--shape", "perturbed:0.1,3", "--sigma", "5", "--h", "0.08"});
    REQUIRE(r.code == 0);
    for (const char* key : {"\"mu1\"", "\"mu2\"", "\"ratio\"", "\"bound\"", "\"regime\"", "\"R\"", "\"R_tilde\"",
                            "\"chiti_regime\"", "\"lemma31_max_violation\"", "\"faber_krahn_ok\"", "\"eps_discr\""}) {
        CAPTURE(key);
        CHECK(r.out.find(key) != std::string::npos);
    }
}

TEST_CASE("sweep") {
    const auto r = run({"sweep-boundary", "--shape", "square", "--sigmas", "1,10,100", "--h", "0.08"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"sigma", "u_1pM", "u_1M", "R", "R_tilde"});
    CHECK(std::stod(rows[2][1]) < std::stod(rows[1][1]));
    CHECK(std::stod(rows[3][1]) < std::stod(rows[2][1]));
}

TEST_CASE("identical flags give byte-identical output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"zeros", "--count", "4", "--format", "json"},
             {"ratio-curve", "--dim", "3", "--format", "json"},
             {"verify", "--shape", "ellipse:1.4,0.7", "--h", "0.1"}}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
