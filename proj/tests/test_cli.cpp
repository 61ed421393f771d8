#include "fusionkit/cli.hpp"

#include "fusionkit/report.hpp"
#include "fusionkit/verify.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

using namespace fusionkit;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("fuse command text output") {
    const auto r = cli({"fuse", "V-", "V-"});
    CHECK(r.code == 0);
    CHECK(r.out == "V+0 + V+1 + V+2 + 2·V-\n");

    CHECK(cli({"fuse", "W_s1^0", "W_s1^0"}).out == "W_s21^0 + W_s21^1 + W_s21^2 + W_s22^0\n");
    CHECK(cli({"fuse", "4", "4"}).out ==
          "V+0 + V+1 + V+2 + V- + 2·V1/8 + 2·V3/8 + V1/4^0 + V1/4^1 + V1/4^2\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({"fuse", "V-"}).code == 2);
    CHECK(cli({"fuse", "V-", "nonsense"}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"verify", "--suite", "bogus"}).code == 2);
    CHECK(cli({"verlinde", "V1/8", "V1/8"}).code == 2); // outside the computable set
}

TEST_CASE("verlinde command") {
    CHECK(cli({"verlinde", "6", "6", "12"}).out == "1\n");
    CHECK(cli({"verlinde", "6", "6", "9"}).out == "0\n");
    const auto full = cli({"verlinde", "W_s1^0", "W_s1^0"});
    CHECK(full.code == 0);
    CHECK(full.out.find("W_s21^0") != std::string::npos);
}

TEST_CASE("deterministic output") {
    const std::vector<std::vector<std::string>> invocations = {
        {"catalog"},
        {"smatrix", "--format", "json"},
        {"verify", "--suite", "qdim", "--format", "json"},
    };
    for (const auto& args : invocations) {
        const auto a = cli(args);
        const auto b = cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("smatrix json round-trips and exposes the mask") {
    const auto r = cli({"smatrix", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.at("matrix") == "sqrt18*S");
    CHECK(j.at("known_mask")[1][3] == false);
    CHECK(j.at("known_mask")[0][3] == true);
    CHECK(j.at("entries")[1][3].is_null());
    // re-serializing the parsed document is the identity
    CHECK(j.dump(2) + "\n" == r.out);

    // approximate value of S_{0,0} after un-normalizing: 1/(4√18)
    const auto raw = cli({"smatrix", "--format", "json", "--raw"});
    const auto jr = nlohmann::ordered_json::parse(raw.out);
    const double re = jr.at("entries")[0][0].at("approx")[0].get<double>();
    CHECK(std::abs(re - 0.0589255650988) < 1e-9);
}

TEST_CASE("catalog formats") {
    CHECK(cli({"catalog"}).out.find("W_s21^0") != std::string::npos);
    CHECK(cli({"catalog", "--format", "latex"}).out.find("W_{\\sigma^{2},1}^{0}") !=
          std::string::npos);
    const auto j = nlohmann::ordered_json::parse(cli({"catalog", "--format", "json"}).out);
    CHECK(j.at("modules").size() == 21);
    CHECK(j.at("modules")[6].at("weight") == "1/36");
}

TEST_CASE("lattice command") {
    const auto r = cli({"lattice", "--half-norm", "2", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(cli({"lattice", "--half-norm", "3", "--check"}).code == 2); // unsupported 2k = 6
}

TEST_CASE("verify suites") {
    CHECK(cli({"verify", "--suite", "ring"}).code == 0);
    CHECK(cli({"verify", "--suite", "global"}).code == 0);

    const auto all = cli({"verify", "--suite", "all", "--format", "json"});
    CHECK(all.code == 0);
    const auto j = nlohmann::ordered_json::parse(all.out);
    CHECK(j.at("exit_status") == 0);
    CHECK(j.at("summary").at("failed") == 0);
    CHECK(j.at("summary").at("expected_discrepancies") > 0);
}

TEST_CASE("shipped ledger file matches the built-in copy") {
    std::ifstream in("data/errata.json");
    if (!in.is_open()) in.open("../data/errata.json");
    REQUIRE_MESSAGE(in.is_open(), "run tests from the repository or build directory");
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(nlohmann::json::parse(buf.str()) == nlohmann::json::parse(default_errata_text()));
}
