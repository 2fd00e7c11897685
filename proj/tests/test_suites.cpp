#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jordanian/error.hpp"
#include "jordanian/suites.hpp"
#include "support.hpp"

using namespace jordanian;
using jordanian::test::S;

TEST_CASE("bindings") {
  const auto b = parse_bindings("h=1, s=2/3,lambda=mu+1");
  CHECK(b.size() == 3);
  CHECK(b.at(sym_h()) == S("1"));
  CHECK(b.at(sym_s()) == S("2/3"));
  CHECK(b.at(Symbol("lambda")) == S("mu + 1"));
  CHECK(parse_bindings("").empty());
  CHECK_THROWS_AS(parse_bindings("h"), Error);
  CHECK_THROWS_AS(parse_bindings("h=1,h=2"), Error);
  CHECK_THROWS_AS(parse_bindings("h=1/0"), Error);
}

TEST_CASE("configuration") {
  const SuiteConfig cfg = make_config({"", "2*nu", "", "", "h=3,nu=5"});
  CHECK(cfg.lambda == colour("lambda"));
  CHECK(cfg.mu == Colour(10));
  CHECK(cfg.nu == Colour(5));
  CHECK(cfg.p.h == S("3"));
  CHECK(cfg.p.s == S("s"));
}

TEST_CASE("names") {
  CHECK(is_suite("ybe"));
  CHECK_FALSE(is_suite("all"));
  CHECK(std::is_sorted(suite_names().begin(), suite_names().end()));
  CHECK(is_emit_target("relations"));
  CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), Error);
  CHECK_THROWS_AS(emit("nope", SuiteConfig{}, OutputFormat::json), Error);
}

TEST_CASE("emission is deterministic and parseable") {
  const SuiteConfig cfg;
  for (const auto& t : emit_targets()) {
    for (auto f : {OutputFormat::json, OutputFormat::latex, OutputFormat::plain}) {
      CAPTURE(t);
      CHECK(emit(t, cfg, f) == emit(t, cfg, f));
    }
    CHECK_FALSE(nlohmann::json::parse(emit(t, cfg, OutputFormat::json)).is_null());
  }
}

TEST_CASE("report formats") {
  const VerificationReport r = run_suite("unitarity", SuiteConfig{});
  CHECK(format_report(r, OutputFormat::plain).ends_with("2/2 identities pass\n"));
  CHECK(nlohmann::json::parse(format_report(r, OutputFormat::json)).size() == 2);
  const nlohmann::json all = summary_json(SuiteConfig{}, {"unitarity"}, {r});
  CHECK(all["status"] == "pass");
  CHECK(all["suites"][0]["identities"] == 2);
}
