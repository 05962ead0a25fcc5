#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "sylvester/cli.hpp"

using namespace sylvester;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  args.insert(args.begin(), "sylvester");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  auto r = run({"count", "--summands", "1,2", "--s", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  r = run({"count", "--summands", "1,2,3,4,5,6", "--s", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = run({"count", "--summands", "1,2", "--s", "100000000000000000000"});
  CHECK(r.out == "50000000000000000001\n");
  r = run({"count", "--summands", "1,2", "--s", "4", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == "3");
  CHECK(j["s"] == "4");
}

TEST_CASE("count output is digits only") {
  for (int s = 0; s < 60; ++s) {
    const auto r = run({"count", "--summands", "2,3,5,5", "--s", std::to_string(s)});
    REQUIRE(r.code == 0);
    CHECK(r.out.find_first_not_of("0123456789\n") == std::string::npos);
  }
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"count", "--summands", "1,2"}).code == 2);
  CHECK(run({"count", "--summands", "", "--s", "3"}).code == 2);
  CHECK(run({"count", "--summands", "1,0", "--s", "3"}).code == 2);
  CHECK(run({"count", "--summands", "1,-2", "--s", "3"}).code == 2);
  CHECK(run({"count", "--summands", "1,x", "--s", "3"}).code == 2);
  CHECK(run({"count", "--summands", "1,2", "--s", "-3"}).code == 2);
  CHECK(run({"count", "--summands", "1,2", "--s", "3", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--summands", "1,2", "--max-s", "ten"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--summands", "6,10,15", "--max-s", "300"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
  r = run({"verify", "--summands", "1,2,3", "--max-s", "50", "--route", "eulerian", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["pass"] == true);
}

TEST_CASE("verify reports a corrupted coefficient") {
  cli::Hooks hooks;
  hooks.corrupt_coefficient = {{3, Rational(1)}};
  auto r = run({"verify", "--summands", "2,3,5", "--max-s", "100"}, hooks);
  CHECK(r.code == 1);
  // Class 3 mod 30 is first reached at s = 3.
  CHECK(r.out.find("at s=3:") != std::string::npos);
  r = run({"verify", "--summands", "2,3,5", "--max-s", "100", "--format", "json"}, hooks);
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["first_mismatch"]["s"] == "3");
  CHECK(j["first_mismatch"]["dp"] == "1");
  CHECK(j["first_mismatch"]["closed_form"] == "2");
}

TEST_CASE("quasi and waves emit the JSON schema") {
  auto r = run({"quasi", "--summands", "1,2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["summands"] == nlohmann::json::array({1, 2}));
  CHECK(j["period"] == 2);
  CHECK(j["classes"][1]["coeffs"] == nlohmann::json::array({"1/2", "1/2"}));

  r = run({"waves", "--summands", "1,2", "--format", "json"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["period"] == 1);
  CHECK(j[1]["period"] == 2);
  CHECK(j[1]["classes"][0]["coeffs"] == nlohmann::json::array({"1/4"}));
  CHECK(j[1]["classes"][1]["coeffs"] == nlohmann::json::array({"-1/4"}));

  r = run({"waves", "--summands", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("W_2 (weight 1)") != std::string::npos);
  r = run({"quasi", "--summands", "1,2"});
  CHECK(r.out.find("s = 1 mod 2: 1/2*s + 1/2") != std::string::npos);
}

TEST_CASE("bench") {
  const auto r = run({"bench", "--summands", "1,2,3", "--s", "1000", "--repeat", "1", "--dp-budget",
                      "4096", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == "83834");
  CHECK(j["grid"].size() == 13);
  CHECK(j["dp_ms"].is_number());
  const auto big = run({"bench", "--summands", "1,2,3", "--s", "1000000000000", "--repeat", "1",
                        "--dp-budget", "64"});
  CHECK(big.code == 0);
  CHECK(big.out.find("skipped") != std::string::npos);
}
