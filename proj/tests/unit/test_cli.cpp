#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "basesize/basecount.hpp"
#include "basesize/cli.hpp"

using namespace basesize;
using Json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    Json doc;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    Outcome o{code, {}, err.str()};
    if (code == cli::ok) o.doc = Json::parse(out.str());
    return o;
}

const Json& outputs(const Outcome& o) { return o.doc.at("outputs"); }

}  // namespace

TEST_CASE("basesize-subsets") {
    auto r = run({"basesize-subsets", "--n", "6", "--k", "1"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["base_size"] == "5");
    CHECK(r.doc["methods"]["base_size"] == "formula");

    r = run({"basesize-subsets", "--n", "5", "--k", "2", "--trace"});
    REQUIRE(r.code == 0);
    const auto& trace = outputs(r)["trace"];
    const auto base = std::stoul(outputs(r)["base_size"].get<std::string>());
    REQUIRE(trace.size() == base);
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) CHECK(trace[i]["regular"] == "0");
    CHECK(trace.back()["regular"] != "0");

    CHECK(run({"basesize-subsets", "--n", "4", "--k", "2"}).code == cli::invalid_input);
    CHECK(run({"basesize-subsets", "--n", "10", "--k", "1", "--max-l", "3"}).code == cli::capacity_exceeded);
}

TEST_CASE("orbits") {
    auto r = run({"orbits", "--n", "3", "--k", "1", "--l", "2"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["regular"] == "1");
    CHECK(outputs(r)["o"] == "2");
    CHECK(outputs(r)["o_K"] == "3");

    r = run({"orbits", "--n", "4", "--k", "1", "--l", "1"});
    CHECK(outputs(r)["regular"] == "0");
    CHECK(outputs(r)["o"] == "1");

    r = run({"orbits", "--n", "15", "--k", "5", "--l", "1"});
    CHECK(outputs(r)["regular"] == "0");

    r = run({"orbits", "--n", "6", "--k", "2", "--l", "3", "--oracle"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["agree"] == true);
}

TEST_CASE("wreath") {
    auto r = run({"wreath", "--n", "3", "--k", "1", "--r", "2"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["base_size"] == "3");

    r = run({"wreath", "--n", "5", "--k", "2", "--dist", "1"});
    const auto plain = run({"basesize-subsets", "--n", "5", "--k", "2"});
    CHECK(outputs(r)["base_size"] == outputs(plain)["base_size"]);

    r = run({"wreath", "--n", "4", "--k", "1", "--r", "2", "--oracle"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["agree"] == true);
    CHECK(outputs(r)["base_size"] == outputs(r)["oracle_base_size"]);

    CHECK(run({"wreath", "--n", "4", "--k", "1", "--r", "2", "--dist", "2"}).code == cli::invalid_input);
    CHECK(run({"wreath", "--n", "4", "--k", "1"}).code == cli::invalid_input);
}

TEST_CASE("bounds") {
    auto r = run({"bounds", "--m", "5", "--k", "1", "--r", "2"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["lower"] == "3");
    CHECK(outputs(r)["upper"] == "5");

    r = run({"bounds", "--m", "5", "--k", "1", "--r", "1"});
    CHECK(outputs(r)["lower"] == std::to_string(*base_size_subsets(4, 1).base_size));
    CHECK(outputs(r)["upper"] == std::to_string(*base_size_subsets(5, 1).base_size));

    CHECK(run({"bounds", "--m", "4", "--k", "2", "--r", "2"}).code == cli::invalid_input);
}

TEST_CASE("partitions-action") {
    auto r = run({"partitions-action", "--n", "6", "--r", "3", "--s", "2"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["character"].size() == 11);
    CHECK(outputs(r)["character"].back()["chi"] == "15");
    CHECK(outputs(r)["candidate_only"] == true);
    CHECK(!outputs(r)["min_l"].is_null());
    CHECK(!r.doc["warnings"].empty());

    CHECK(run({"partitions-action", "--n", "6", "--r", "2", "--s", "2"}).code == cli::invalid_input);
    CHECK(run({"partitions-action", "--n", "18", "--r", "3", "--s", "6"}).code == cli::capacity_exceeded);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--group", "pgl2:7"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["base_controlling"] == true);
    CHECK(outputs(r)["base_size"] == "3");
    CHECK(outputs(r)["orbits"][2]["regular"] == "1");
    CHECK(outputs(r)["order"] == "336");

    r = run({"verify", "--group", "sn:6/subsets:2", "--labels", "sgn"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["base_controlling"] == true);
    CHECK(outputs(r)["formula"]["agree"] == true);
    CHECK(outputs(r)["formula"]["base_size"] == outputs(r)["base_size"]);

    r = run({"verify", "--group", "sn:6/partitions:3x2", "--labels", "sgn"});
    REQUIRE(r.code == 0);
    const bool controlling = outputs(r)["base_controlling"].get<bool>();
    if (controlling) CHECK(outputs(r)["formula"]["agree"] == true);

    r = run({"verify", "--group", "sn:3/wreath:2"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["base_size"] == "3");
    CHECK(outputs(r)["formula"]["agree"] == true);

    r = run({"verify", "--group", "an:5"});
    REQUIRE(r.code == 0);
    CHECK(outputs(r)["base_controlling"].is_null());

    CHECK(run({"verify", "--group", "qq:4"}).code == cli::invalid_input);
    CHECK(run({"verify", "--group", "sn:4", "--labels", "odd"}).code == cli::invalid_input);
}

TEST_CASE("documents are deterministic and integers round-trip") {
    const std::vector<std::string> args{"bounds", "--m", "7", "--k", "2", "--r", "3"};
    auto a = run(args);
    auto b = run(args);
    a.doc.erase("timing_ms");
    b.doc.erase("timing_ms");
    CHECK(a.doc == b.doc);

    const auto big = run({"orbits", "--n", "8", "--k", "1", "--l", "40"});
    REQUIRE(big.code == 0);
    const auto text = outputs(big)["o"].get<std::string>();
    CHECK(text.size() > 20);  // beyond 64-bit range
    CHECK(from_decimal(text).get_str() == text);
}

TEST_CASE("unknown subcommands and bad flags exit with code 2") {
    CHECK(run({}).code == cli::invalid_input);
    CHECK(run({"frobnicate"}).code == cli::invalid_input);
    CHECK(run({"orbits", "--n", "x", "--k", "1", "--l", "1"}).code == cli::invalid_input);

    std::ostringstream out, err;
    CHECK(cli::run({"--help"}, out, err) == cli::ok);
    CHECK(out.str().find("basesize-subsets") != std::string::npos);
}
