#include "doctest.h"
#include "nabla/cli.hpp"

#include <sstream>

using namespace nabla;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verifiers exit 0") {
  CHECK(run({"verify-shuffle", "--n", "3", "--k", "1"}).code == 0);
  CHECK(run({"verify-main", "--n", "2", "--k", "1", "--N", "2", "--D", "2"}).code == 0);
  CHECK(run({"verify-xi", "--n", "3"}).code == 0);
  CHECK(run({"verify-paff", "--n", "2", "--k", "1", "--D", "2", "--N", "2"}).code == 0);
  CHECK(run({"verify-fulltwist", "--n", "2", "--k", "1", "--t-degree", "3"}).code == 0);
}

TEST_CASE("json report") {
  const Run r = run({"verify-involution", "--n", "2", "--k", "1", "--D", "2", "--N", "2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "verify-involution");
  CHECK(j["pass"] == true);
  CHECK(j["params"]["n"] == 2);
  CHECK(j["checks"].is_object());
  CHECK_FALSE(j.contains("first_failure"));
}

TEST_CASE("compute renders") {
  const Run r = run({"compute", "macdonald", "--lambda", "2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "s[2] + q*s[1,1]\n");
  const json j = json::parse(run({"compute", "macdonald", "--lambda", "2,1"}).out);
  CHECK(j["result"]["basis"] == "s");
  CHECK(j["result"]["terms"].size() == 3);
  const json p = json::parse(run({"compute", "parking", "--n", "1", "--k", "1", "--N", "1"}).out);
  REQUIRE(p["result"].size() == 1);
  CHECK(p["result"][0]["q_num"] == json::array({"1"}));
}

TEST_CASE("configuration errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify-main", "--n", "0"}).code == 2);
  CHECK(run({"verify-main", "--k", "0"}).code == 2);
  CHECK(run({"verify-shuffle", "--bogus"}).code == 2);
  CHECK(run({"verify-shuffle", "--format", "xml"}).code == 2);
  CHECK(run({"compute", "macdonald"}).code == 2);
  CHECK(run({"compute", "macdonald", "--lambda", "1,2"}).code == 2);
  CHECK(run({"verify-bundles", "--primes", "7"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output does not depend on workers") {
  const std::vector<std::string> base{"verify-involution", "--n", "3", "--k", "1", "--D", "3", "--N", "2"};
  auto with = [&](const char* w) {
    auto a = base;
    a.insert(a.end(), {"--workers", w});
    return run(a).out;
  };
  CHECK(with("1") == with("2"));
  const std::vector<std::string> om{"compute", "omega", "--n", "2", "--k", "1", "--N", "2", "--D", "2"};
  auto a = om, b = om;
  b.insert(b.end(), {"--workers", "2"});
  CHECK(run(a).out == run(b).out);
}

}  // TEST_SUITE
