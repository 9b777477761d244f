#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "packcov/cli.hpp"

using namespace packcov;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("packcov_clitest_" + name);
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (const char c : text) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("no subcommand is a usage error") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("help exits cleanly") {
    const CliRun r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("leaf") != std::string::npos);
    CHECK(r.out.find("scatter") != std::string::npos);
}

TEST_CASE("leaf subcommand writes the arc table") {
    const CliRun r = run({"leaf", "--samples", "256", "--out", "-"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 512);  // header + 511 rows
    CHECK(r.out.rfind("arc,param,delta,theta\n", 0) == 0);

    CHECK(run({"leaf", "--samples", "1", "--out", "-"}).code == 2);
    CHECK(run({"leaf", "--samples", "4", "--out", "/no/such/dir/leaf.csv"}).code == 2);
}

TEST_CASE("dowker subcommand reports the octagon landmark values") {
    const auto path = temp_path("octagon.json");
    {
        std::ofstream f(path);
        f << "{\"vertices\": [";
        for (int k = 0; k < 8; ++k) {
            const double a = k * std::acos(-1.0) / 4.0;
            f << (k ? ", " : "") << "[" << std::cos(a) << ", " << std::sin(a) << "]";
        }
        f << "]}";
    }
    const CliRun r = run({"dowker", path.string()});
    std::filesystem::remove(path);
    REQUIRE(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["delta_L"].get<double>() == doctest::Approx(0.9061637).epsilon(1e-6));
    CHECK(doc["theta_L"].get<double>() == doctest::Approx(1.1715729).epsilon(1e-6));
    CHECK(doc["inscribed"]["vertices"].size() == 6);
    CHECK(doc["circumscribed"]["vertices"].size() == 6);
}

TEST_CASE("dowker subcommand distinguishes bad input from bad geometry") {
    const auto tri = temp_path("triangle.json");
    {
        std::ofstream f(tri);
        f << R"({"vertices": [[0, 0], [1, 0], [0, 1]]})";
    }
    CHECK(run({"dowker", tri.string()}).code == 3);
    std::filesystem::remove(tri);

    const auto bad = temp_path("broken.json");
    {
        std::ofstream f(bad);
        f << "not json at all";
    }
    CHECK(run({"dowker", bad.string()}).code == 2);
    std::filesystem::remove(bad);

    CHECK(run({"dowker", "/no/such/file.json"}).code == 2);
}

TEST_CASE("regions subcommand emits the report") {
    const CliRun r = run({"regions", "0.95 1.1"});
    REQUIRE(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["in_P"].get<bool>());
    CHECK(doc["in_P0"].get<bool>());
    CHECK(doc["in_U"].get<bool>());
    CHECK(doc["in_leaf"].get<bool>());
    CHECK(doc["violated"].empty());

    const CliRun split = run({"regions", "0.95", "1.1"});
    CHECK(split.code == 0);
    CHECK(split.out == r.out);

    CHECK(run({"regions", "one two"}).code == 2);
    CHECK(run({"regions", "0.9"}).code == 2);
}

TEST_CASE("scatter subcommand produces CSV and SVG deterministically") {
    const auto csv = temp_path("rows.csv");
    const auto svg = temp_path("rows.svg");
    const std::vector<std::string> args{"scatter", "--count", "10",  "--seed",
                                        "7",       "--gon",   "4",   "--out",
                                        csv.string(), "--svg", svg.string()};
    REQUIRE(run(args).code == 0);
    std::ostringstream csv1, svg1;
    csv1 << std::ifstream(csv).rdbuf();
    svg1 << std::ifstream(svg).rdbuf();
    REQUIRE(run(args).code == 0);
    std::ostringstream csv2, svg2;
    csv2 << std::ifstream(csv).rdbuf();
    svg2 << std::ifstream(svg).rdbuf();
    std::filesystem::remove(csv);
    std::filesystem::remove(svg);

    CHECK(csv1.str() == csv2.str());
    CHECK(svg1.str() == svg2.str());
    CHECK(count_lines(csv1.str()) == 11);
    CHECK(svg1.str().find("</svg>") != std::string::npos);

    CHECK(run({"scatter", "--count", "0", "--out", "-"}).code == 2);
    CHECK(run({"scatter", "--seed", "1", "--out", "-"}).code == 2);  // missing count
}

TEST_CASE("validate subcommand filters by module") {
    const CliRun r = run({"validate", "--only", "geom"});
    CHECK(r.code == 0);
    CHECK(r.out.find("geom/") != std::string::npos);
    CHECK(r.out.find("leaf/") == std::string::npos);

    CHECK(run({"validate", "--only", "nonsense"}).code == 2);
}
