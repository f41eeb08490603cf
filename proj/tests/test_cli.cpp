// SPDX-License-Identifier: MIT
#include "hexp/bigreal.hpp"
#include "hexp/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = hexp::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("approximate emits the worked Gamma example") {
    auto res = run({"approximate", "--model", "gamma", "--two-sided", "--n", "1"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("cutoff") == "hx");
    CHECK(std::stod(j.at("drift").get<std::string>()) == doctest::Approx(1.0));
    REQUIRE(j.at("pos_terms").size() == 1);
    CHECK(std::stod(j.at("pos_terms")[0].at("amplitude").get<std::string>()) ==
          doctest::Approx(27.0 / 16.0));
    CHECK(std::stod(j.at("pos_terms")[0].at("rate").get<std::string>()) == doctest::Approx(1.5));
    CHECK(j.at("provenance").at("variant") == "two-sided");
}

TEST_CASE("round trip: approximate then price --from-hep is bit-identical") {
    std::string hep_file = temp_path("hexp_cli_roundtrip.json");
    std::vector<std::string> model_flags = {"--model", "vg",   "--a",  "21.8735",
                                            "--ahat",  "56.4414", "--nu", "0.20",
                                            "--r",     "0.04"};
    std::vector<std::string> grid_flags = {"--umax", "8000", "--du", "0.05", "--tail-tol", "1e-3"};

    std::vector<std::string> approx = {"approximate", "--n", "3", "--k", "1", "-o", hep_file};
    approx.insert(approx.end(), model_flags.begin(), model_flags.end());
    REQUIRE(run(approx).code == 0);

    std::vector<std::string> direct = {"price", "--S0", "100", "--K", "100", "--T", "0.25",
                                       "--n",   "3",   "--k", "1"};
    direct.insert(direct.end(), model_flags.begin(), model_flags.end());
    direct.insert(direct.end(), grid_flags.begin(), grid_flags.end());
    auto p1 = run(direct);
    REQUIRE(p1.code == 0);

    std::vector<std::string> from_hep = {"price", "--from-hep", hep_file, "--S0", "100", "--K",
                                         "100",   "--T",        "0.25",   "--r",  "0.04"};
    from_hep.insert(from_hep.end(), grid_flags.begin(), grid_flags.end());
    auto p2 = run(from_hep);
    REQUIRE(p2.code == 0);

    CHECK(p1.out == p2.out); // same decimal text, bit for bit
    std::remove(hep_file.c_str());
}

TEST_CASE("validation failures exit with code 2") {
    CHECK(run({"cdf", "--model", "gamma", "--n", "5", "--k", "0", "--t", "1", "--x", "0"}).code ==
          2);
    CHECK(run({"price", "--model", "gamma", "--n", "2", "--S0", "100", "--K", "100", "--T",
               "0.25"}).code == 2); // missing --r
    CHECK(run({"approximate", "--model", "weibull", "--n", "2"}).code == 2);
    CHECK(run({"approximate", "--model", "gamma"}).code == 2); // missing --n
    CHECK(run({"frobnicate"}).code == 2);
    // one-sided scheme rejected for a two-sided target without composition:
    // k=0 on an infinite-variation tempered stable tail
    CHECK(run({"approximate", "--model", "tempered-stable", "--alpha", "1.2", "--n", "2", "--k",
               "0"}).code == 2);
}

TEST_CASE("numerical failures exit with code 3") {
    // truncation guard trips on a far-too-short frequency grid
    auto res = run({"cdf", "--model", "gamma", "--n", "3", "--k", "0", "--t", "1", "--x", "0.5",
                    "--umax", "5", "--du", "0.05"});
    CHECK(res.code == 3);
    CHECK(res.err.find("GridInsufficient") != std::string::npos);
}

TEST_CASE("verify subcommand runs the property checks") {
    auto res = run({"verify", "all"});
    CHECK(res.code == 0);
    CHECK(res.out.find("[PASS]") != std::string::npos);
    CHECK(res.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("structured output parses under the declared format") {
    auto density = run({"--format", "json", "density", "--model", "gamma", "--n", "3", "--k", "1",
                        "--x", "0.5,1.0,2.0"});
    REQUIRE(density.code == 0);
    auto dj = nlohmann::json::parse(density.out);
    CHECK(dj.is_array());
    CHECK(dj.size() == 3);
    CHECK(dj[0].contains("x_pi"));

    auto exact = run({"--format", "json", "density", "--model", "gamma", "--exact", "--x", "2.0"});
    REQUIRE(exact.code == 0);
    auto ej = nlohmann::json::parse(exact.out);
    CHECK(std::stod(ej[0].at("x_pi").get<std::string>()) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-9));

    auto conv = run({"--format", "csv", "convergence", "--model", "gamma", "--n-from", "2",
                     "--n-to", "4", "--z", "0.5"});
    REQUIRE(conv.code == 0);
    CHECK(conv.out.find("n,max_error,step_ratio,envelope_factor") != std::string::npos);

    auto cdf = run({"--format", "json", "cdf", "--model", "gamma", "--exact", "--t", "1", "--x",
                    "1.0"});
    REQUIRE(cdf.code == 0);
    auto cj = nlohmann::json::parse(cdf.out);
    CHECK(std::stod(cj[0].at("cdf").get<std::string>()) == doctest::Approx(0.6321205588).epsilon(1e-5));
}

TEST_CASE("model file input") {
    std::string model_file = temp_path("hexp_cli_model.json");
    {
        std::ofstream f(model_file);
        f << R"({"family": "vg", "a": "21.8735", "ahat": "56.4414", "nu": "0.20"})";
    }
    auto res = run({"price", "--model-file", model_file, "--S0", "100", "--K", "100", "--T",
                    "0.25", "--r", "0.04", "--exact", "--umax", "20000"});
    REQUIRE(res.code == 0);
    CHECK(res.out.substr(0, 12) == "2.5002779303");
    std::remove(model_file.c_str());
}

TEST_CASE("precision flag reaches the kernel") {
    auto res = run({"--precision", "60", "approximate", "--model", "gamma", "--two-sided", "--n",
                    "2"});
    CHECK(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("pos_terms").size() == 2);
    // restore the default for the remaining tests
    hexp::set_default_digits(200);
}
