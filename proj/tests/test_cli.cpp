#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "pairzeta/cli.hpp"
#include "pairzeta/scalar.hpp"

using namespace pairzeta;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pairs at rank one") {
  auto r = run({"pairs", "--genus", "0", "--symbolic", "false", "--rank", "1", "--degree", "2", "--tau", "3/1"});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["result"]["kind"] == "scalar");
  CHECK(parse_scalar(j["result"]["value"].get<std::string>()) == parse_scalar("1+q+q^2"));
  CHECK(j["query"]["curve"]["mode"] == "numeric");
  CHECK(j["query"]["tau"] == "3");
  CHECK(j["checks"]["q_integral"] == true);
}

TEST_CASE("zeta-r series") {
  auto r = run({"zeta-r", "--genus", "1", "--symbolic", "--rank", "1", "--terms", "3"});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["result"]["kind"] == "series");
  auto v = j["result"]["value"];
  REQUIRE(v.size() == 4);
  CHECK(parse_scalar(v[0].get<std::string>()) == ScalarValue(1));
  CHECK(parse_scalar(v[1].get<std::string>()) == parse_scalar("1+c1+q"));

  auto checked = run({"zeta-r", "--genus", "1", "--rank", "2", "--terms", "2", "--closed-form", "--check", "all"});
  REQUIRE(checked.code == kExitOk);
  auto k = Json::parse(checked.out);
  CHECK(k["checks"]["functional_equation"] == true);
  CHECK(k["checks"]["uniformity"] == true);
  CHECK(k["result"].contains("numerator"));
}

TEST_CASE("every route and the explicit-form guard") {
  auto all = run({"pairs", "--genus", "1", "--symbolic", "--rank", "2", "--degree", "3", "--tau", "7/4", "--all-methods"});
  REQUIRE(all.code == kExitOk);
  auto j = Json::parse(all.out);
  CHECK(j["result"]["routes"].size() == 4);
  CHECK(j["checks"]["routes_agree"] == true);
  CHECK(j["result"].contains("motive"));

  auto wall = run({"pairs", "--genus", "1", "--rank", "2", "--degree", "4", "--tau", "2", "--method", "explicit"});
  CHECK(wall.code == kExitNonGeneric);
  auto lemma = run({"pairs", "--genus", "1", "--rank", "2", "--degree", "4", "--tau", "2", "--method", "lemma"});
  CHECK(lemma.code == kExitOk);
}

TEST_CASE("invalid input") {
  CHECK(run({"pairs", "--rank", "2", "--degree", "1", "--tau", "x/2"}).code == kExitInvalidInput);
  CHECK(run({"pairs", "--rank", "2", "--degree", "1", "--tau", "1/0"}).code == kExitInvalidInput);
  CHECK(run({"pairs", "--rank", "2", "--degree", "1", "--tau", "1/2", "--method", "guess"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--suite", "nothing"}).code == kExitInvalidInput);
  CHECK(run({"betti", "--genus", "2", "--numerator", "c1"}).code == kExitInvalidInput);
  CHECK(run({"betti", "--genus", "1", "--symbolic", "false", "--rank", "1", "--degree", "0"}).code == kExitInvalidInput);
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"frobnicate"}).code == kExitInvalidInput);
}

TEST_CASE("numeric curves and q bindings") {
  auto r = run({"betti", "--genus", "1", "--numerator", "-1", "--rank", "2", "--degree", "1", "--q", "2"});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["query"]["curve"]["mode"] == "numeric");
  CHECK(j["result"].contains("value_at_q"));
  auto info = run({"curve-info", "--genus", "2", "--symbolic", "--terms", "2"});
  REQUIRE(info.code == kExitOk);
  auto k = Json::parse(info.out);
  CHECK(k["result"]["kind"] == "rational_function");
  CHECK(k["result"]["symmetric_powers"].size() == 3);
  CHECK(k["checks"]["functional_equation"] == true);
}

TEST_CASE("outputs are deterministic and round-trip") {
  std::vector<std::string> args{"pairs", "--genus", "1", "--rank", "3", "--degree", "4", "--tau", "3/2"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto j = Json::parse(a.out);
  std::string text = j["result"]["value"].get<std::string>();
  CHECK(parse_scalar(text).to_string() == text);

  auto v1 = run({"verify", "--suite", "slices", "--seed", "3"}), v2 = run({"verify", "--suite", "slices", "--seed", "3"});
  CHECK(v1.code == kExitOk);
  CHECK(v1.out == v2.out);
}

TEST_CASE("text format") {
  auto r = run({"--format", "text", "betti", "--genus", "0", "--rank", "1", "--degree", "0"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("q_integral: true") != std::string::npos);
  auto s = run({"betti", "--genus", "0", "--rank", "1", "--degree", "0", "--format", "text"});
  CHECK(s.out == r.out);
}
