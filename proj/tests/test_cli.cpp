#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "fusion/cli.hpp"
#include "golden.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fusion::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden files") {
  const auto cases = golden::load_cases(FUSION_GOLDEN_DIR);
  REQUIRE(cases.size() >= 14);
  for (const auto& c : cases) {
    const auto o = golden::check(c, FUSION_GOLDEN_DIR);
    INFO(c.name << ": " << o.detail);
    CHECK(o.ok);
  }
}

TEST_CASE("every command has text and JSON goldens") {
  const auto cases = golden::load_cases(FUSION_GOLDEN_DIR);
  for (const std::string cmd : {"coeff", "expand", "lr", "tabloids", "cylindric", "crystal", "crosscheck"}) {
    bool text = false, json = false;
    for (const auto& c : cases) {
      if (c.exit_code != 0) continue;
      bool has_cmd = false, is_json = false;
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        has_cmd |= c.args[i] == cmd;
        is_json |= c.args[i] == "json" && i > 0 && c.args[i - 1] == "--format";
      }
      if (has_cmd) (is_json ? json : text) = true;
    }
    INFO(cmd);
    CHECK(text);
    CHECK(json);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"coeff", "--level", "3", "--rank", "3", "--lambda", "1", "--mu", "1", "--nu", "2"}).code == 0);
  auto r = run({"coeff", "--level", "3", "--rank", "3", "--lambda", "1", "--mu", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"coeff", "--level", "0", "--rank", "3", "--lambda", "1", "--mu", "1", "--nu", "2"}).code == 1);
  CHECK(run({"lr", "--lambda", "1", "--mu", "1", "--nu", "2", "--format", "yaml"}).code == 1);
  r = run({"coeff", "--level", "3", "--rank", "3", "--lambda", "1,1", "--mu", "2,2,2", "--nu", "5,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("nu") != std::string::npos);
  CHECK(run({"crystal", "--op", "e", "--index", "1", "--word", "1,0"}).code == 2);
  CHECK(run({"cylindric", "--level", "2", "--rank", "2", "--outer", "2", "--inner", "3", "--content", "1"}).code == 2);
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("crosscheck") != std::string::npos);
}

TEST_CASE("output is deterministic and JSON round-trips") {
  const std::vector<std::string> args{"expand", "--level", "3", "--rank", "3", "--lambda", "2,1", "--mu", "2,2", "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::ordered_json::parse(a.out);
  CHECK(doc.dump(2) + "\n" == a.out);
  CHECK(doc["command"] == "expand");
  CHECK(doc["inputs"]["lambda"] == nlohmann::ordered_json::array({2, 1}));
}

TEST_CASE("trailing zeros are normalized in the echoed inputs") {
  const auto r = run({"lr", "--lambda", "2,1,0", "--mu", "1", "--nu", "3,1", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["inputs"]["lambda"] == nlohmann::ordered_json::array({2, 1}));
  CHECK(doc["result"] == 1);
}
