#include "doctest.h"

#include "solvable/cli/commands.hpp"
#include "solvable/cli/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace solvable;
using namespace solvable::cli;

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "solvable");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("spectrum output") {
        const auto r = invoke({"spectrum", "--model", "soliton", "--h", "5/2"});
        REQUIRE(r.code == 0);
        const auto j = Json::parse(r.out);
        CHECK(j["command"] == "spectrum");
        CHECK(j["results"]["energies"] == Json::array({"-25/4", "-9/4", "-1/4"}));
        CHECK(j["version"] == kVersion);
    }

    TEST_CASE("output is deterministic and round-trips") {
        const std::vector<std::string> args = {"verify", "closure", "--model", "J", "--g", "1", "--h", "3"};
        const auto a = invoke(args), b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(serialize(Json::parse(a.out)) == a.out);
    }

    TEST_CASE("exit codes") {
        CHECK(invoke({}).code == 2);
        CHECK(invoke({"spectrum", "--bogus"}).code == 2);
        CHECK(invoke({"spectrum", "--model", "L", "--g", "1/2"}).code == 2);
        CHECK(invoke({"spectrum", "--model", "L", "--g", "x"}).code == 2);
        CHECK(invoke({"verify", "nosuch", "--model", "H"}).code == 2);
        CHECK(invoke({"verify", "duality", "--model", "H", "--D", "0", "--N", "0"}).code == 0);
        CHECK(invoke({"verify", "kdv", "--k", "1,2", "--c", "6,12", "--t", "1/4"}).code == 0);
        CHECK(invoke({"--help"}).code == 0);
        CHECK(invoke({"--version"}).code == 0);
    }

    TEST_CASE("numeric verdicts report their tolerances") {
        const auto r = invoke({"verify", "unitarity", "--model", "soliton", "--h", "5/2"});
        REQUIRE(r.code == 0);
        const auto j = Json::parse(r.out);
        CHECK(j["results"]["tolerances"]["unitarity"] == 1e-10);
        CHECK(j.size() == 5);
    }

    TEST_CASE("table of virtual polynomials") {
        const auto r = invoke({"table", "--what", "xi", "--model", "L", "--g", "2", "--D", "1I"});
        REQUIRE(r.code == 0);
        CHECK(Json::parse(r.out)["results"]["xi"] == Json::array({"5/2", "1"}));
    }

    TEST_CASE("wavefunction sample as CSV") {
        const auto r = invoke({"sample", "--what", "wavefunction", "--model", "H", "--n", "3", "--points", "64"});
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        std::string line;
        std::getline(in, line);
        CHECK(line.find(',') != std::string::npos);
        int rows = 0;
        while (std::getline(in, line)) ++rows;
        CHECK(rows == 64);
        CHECK(r.out.find('\r') == std::string::npos);
    }

    TEST_CASE("config files") {
        const std::string path = "cli_test_config.ini";
        {
            std::ofstream f(path);
            f << "model=J\ng=3/2\nh=5/2\nn=3\n";
        }
        const auto r = invoke({"spectrum", "--config", path});
        CHECK(r.code == 0);
        CHECK(Json::parse(r.out)["results"]["energies"].size() == 4);
        {
            std::ofstream f(path);
            f << "model=J\nunknown_key=1\n";
        }
        CHECK(invoke({"spectrum", "--config", path}).code == 2);
        std::remove(path.c_str());
    }

    TEST_CASE("serialization details") {
        CHECK(format_double(0.1) == "0.10000000000000001");
        Json j = {{"b", 1}, {"a", std::nan("")}};
        CHECK(serialize(j) == "{\n  \"a\": null,\n  \"b\": 1\n}\n");
        CHECK(poly_json(Poly({1, 0, Rational(1, 2)})) == Json::array({"1", "0", "1/2"}));
    }

    TEST_CASE("CSV quoting") {
        CHECK(csv_field("plain") == "plain");
        CHECK(csv_field("a,b") == "\"a,b\"");
        CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
        Csv c({"x", "y"});
        c.row({"1", "a\nb"});
        CHECK(c.str() == "x,y\n1,\"a\nb\"\n");
    }
}
