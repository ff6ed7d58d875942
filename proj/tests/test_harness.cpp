#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "cellini/harness.hpp"

using namespace cellini;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(CELLINI_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (const auto got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

SuiteConfig small_grid(int workers) {
  return parse_suite_config(Json::parse(R"({
    "workers": )" + std::to_string(workers) + R"(,
    "experiments": [
      {"experiment": "conjecture1", "type": "A", "n": 3, "q": 2},
      {"experiment": "conjecture1", "type": "A", "n": 4, "q": 3},
      {"experiment": "conjecture1", "type": "C", "n": 2, "q": 3},
      {"experiment": "conjecture2", "n": 3, "q": 5},
      {"experiment": "conjecture2", "n": 4, "q": 2},
      {"experiment": "class_consistency", "n": 3, "q": 4}
    ]})"));
}

}  // namespace

TEST_CASE("gating") {
  CHECK(is_gated({"", Experiment::Conjecture1, WeylType::A, 3, 9}));
  CHECK(is_gated({"", Experiment::Conjecture1, WeylType::A, 5, 5}));
  CHECK_FALSE(is_gated({"", Experiment::Conjecture1, WeylType::A, 4, 3}));
  CHECK(is_gated({"", Experiment::Conjecture1, WeylType::C, 3, 5}));
  CHECK_FALSE(is_gated({"", Experiment::Conjecture1, WeylType::C, 2, 4}));
  CHECK(is_gated({"", Experiment::Conjecture2, WeylType::A, 3, 7}));
  CHECK_FALSE(is_gated({"", Experiment::Conjecture2, WeylType::A, 4, 2}));
}

TEST_CASE("single reports") {
  const auto a = verify_conjecture1(WeylType::A, 3, 2);
  CHECK(a.status == Status::Match);
  CHECK(a.left == a.right);
  CHECK(a.diffs.empty());
  CHECK(a.left.size() == 3);
  CHECK(verify_conjecture1(WeylType::C, 2, 3).status == Status::Match);
  CHECK(verify_conjecture2(2, 5).status == Status::Match);
  CHECK(verify_class_consistency(3, 3).status == Status::Match);
  const auto j = a.to_json();
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(a.to_json(true).contains("wall_seconds"));
  CHECK(j.at("status") == "MATCH");
}

TEST_CASE("suite output is deterministic across worker counts") {
  const auto one = run_suite(small_grid(1)).to_json().dump();
  const auto again = run_suite(small_grid(1)).to_json().dump();
  const auto four = run_suite(small_grid(4)).to_json().dump();
  CHECK(one == again);
  CHECK(one == four);
  const auto result = run_suite(small_grid(3));
  CHECK(result.exit_code() == 0);
  std::vector<std::string> ids;
  for (const auto& r : result.reports) ids.push_back(r.spec.id);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(result.to_csv().starts_with("id,experiment,type,n,q,status,side,label,value\n"));
  CHECK(result.summary_table().find("conjecture2") != std::string::npos);
}

TEST_CASE("config parsing") {
  const auto empty = parse_suite_config(Json::parse(R"({"experiments": []})"));
  CHECK(empty.experiments.empty());
  const auto res = run_suite(empty);
  CHECK(res.exit_code() == 0);
  CHECK(res.reports.empty());
  const auto cfg = parse_suite_config(Json::parse(R"({"experiments": [{"experiment": "conjecture2", "n": 2, "q": 2}]})"));
  CHECK(cfg.experiments.at(0).id == "e000");
  CHECK_THROWS_AS(parse_suite_config(Json::parse(R"({"workers": 0})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_suite_config(Json::parse(R"({"bogus": 1})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_suite_config(Json::parse(R"({"experiments": [{"n": 2, "q": 2}]})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_suite_config(Json::parse(R"({"experiments": [{"experiment": "c3", "n": 2, "q": 2}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_suite_config(Json::parse(R"({"experiments": [{"experiment": "conjecture2", "n": "x", "q": 2}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_suite_config("/nonexistent/suite.json"), std::invalid_argument);
}

TEST_CASE("errors inside a report fail the suite") {
  const auto cfg = parse_suite_config(Json::parse(R"({"experiments": [{"experiment": "conjecture1", "type": "A", "n": 3, "q": 6}]})"));
  const auto res = run_suite(cfg);
  REQUIRE(res.reports.size() == 1);
  CHECK(res.reports[0].error.has_value());
  CHECK(res.exit_code() == 1);
}

TEST_CASE("command-line tool") {
  const auto v = run_cli("verify conjecture1 --type A --n 3 --q 2");
  CHECK(v.code == 0);
  const auto j = Json::parse(v.out);
  CHECK(j.at("status") == "MATCH");
  CHECK_FALSE(j.contains("wall_seconds"));

  CHECK(run_cli("verify conjecture2 --n 4 --q 2").code == 0);
  CHECK(run_cli("verify conjecture1 --type A --n 3").code == 2);
  CHECK(run_cli("frobnicate").code == 2);

  const auto t = run_cli("table xk --type A --n 3 --k 2");
  CHECK(t.code == 0);
  CHECK(Json::parse(t.out).at("entries").size() == 6);

  const auto s1 = run_cli("shuffle sample --kind typec --n 3 --k 3 --seed 5 --count 4");
  const auto s2 = run_cli("shuffle sample --kind typec --n 3 --k 3 --seed 5 --count 4");
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(std::count(s1.out.begin(), s1.out.end(), '\n') == 4);

  const auto suite = run_cli(std::string("suite --config ") + CELLINI_DEFAULT_SUITE);
  CHECK(suite.code == 0);
  const auto again = run_cli(std::string("suite --config ") + CELLINI_DEFAULT_SUITE);
  CHECK(suite.out == again.out);
  CHECK(Json::parse(suite.out).at("exit_code") == 0);
}
