#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lefschetz/cli.hpp"
#include "lefschetz/plan_io.hpp"
#include "support.hpp"

using namespace lefschetz;
using nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
  ordered_json doc() const { return ordered_json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lefschetz_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("plan json round trip") {
  for (const auto& plan : {FibrationPlan::bare_w(2), construct_u(3), construct_u_prime(4),
                           run_pipeline(test_support::pres("<g1,g2 | g1^2, g2^3>")).plan}) {
    const std::string text = plan_to_text(plan);
    const FibrationPlan back = plan_from_text(text);
    CHECK(back == plan);
    CHECK(back.kill_list() == plan.kill_list());
    CHECK(plan_to_text(back) == text);
  }
}

TEST_CASE("plan json field order is fixed") {
  const auto doc = plan_to_json(FibrationPlan::bare_w(2));
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "genus", "blocks", "kill_list", "twist_letters"});
  CHECK(doc["blocks"][0]["relation"] == "W");
  CHECK(doc["blocks"][0]["conjugator"].is_null());
  CHECK(doc["twist_letters"] == 8);
  const auto u = plan_to_json(construct_u(2));
  CHECK(u["blocks"][1]["conjugator"] == "b1");
}

TEST_CASE("plan loading validates") {
  auto doc = plan_to_json(construct_u(2));
  SUBCASE("tampered twist count") {
    doc["twist_letters"] = 7;
    CHECK_THROWS_AS(plan_from_json(doc), PlanFormatError);
  }
  SUBCASE("tampered kill list") {
    doc["kill_list"].push_back("a1");
    CHECK_THROWS_AS(plan_from_json(doc), PlanFormatError);
  }
  SUBCASE("unknown generator") {
    doc["blocks"][1]["conjugator"] = "b9";
    CHECK_THROWS_AS(plan_from_json(doc), PlanFormatError);
  }
  SUBCASE("bad relation") {
    doc["blocks"][1]["relation"] = "prefix:9";
    CHECK_THROWS_AS(plan_from_json(doc), PlanFormatError);
  }
  SUBCASE("missing genus") {
    doc.erase("genus");
    CHECK_THROWS_AS(plan_from_json(doc), PlanFormatError);
  }
  SUBCASE("wrong schema") {
    doc["schema"] = "other/2";
    CHECK_THROWS_AS(plan_from_json(doc), PlanFormatError);
  }
  CHECK_THROWS_AS(plan_from_text("{not json"), PlanFormatError);
  CHECK_THROWS_AS(plan_from_text("[]"), PlanFormatError);
}

TEST_CASE("construct") {
  const std::string path = temp_path("construct.json");
  auto r = run({"construct", "<g1 | >", "--out", path, "--json"});
  CHECK(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["schema"] == cli::kResultSchema);
  CHECK(doc["status"] == "ok");
  CHECK(doc["payload"]["genus"] == 2);
  CHECK(doc["payload"]["presentation"] == "<a1 | >");
  CHECK(load_plan(path) == construct_u(2));

  r = run({"construct", "<g1,g2 | g1 g2 g1^-1 g2^-1>"});
  CHECK(r.code == 0);
  CHECK(r.out.find("genus 7") != std::string::npos);

  r = run({"construct", "<g1 | g1>", "--genus", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("below bound 2") != std::string::npos);

  r = run({"construct", "<g1 | g1 g2>"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position") != std::string::npos);

  r = run({"construct", "<g1 | g1^3>", "--seed", "9", "--genus", "3", "--json"});
  CHECK(r.code == 0);
  CHECK(r.doc()["payload"]["matches_expected"] == true);
  CHECK(r.doc()["payload"]["invariants"]["order"] == 3);
}

TEST_CASE("verify") {
  auto r = run({"verify", "w-homology", "--genus", "4"});
  CHECK(r.code == 0);
  CHECK(run({"verify", "w-homology", "--genus", "0"}).code == 2);

  r = run({"verify", "family", "symmetric", "4", "--json"});
  CHECK(r.code == 0);
  CHECK(r.doc()["payload"]["certificate"]["order"] == 24);
  CHECK(run({"verify", "family", "braid", "1"}).code == 2);
  CHECK(run({"verify", "family", "sphere-mcg", "3"}).code == 0);
  CHECK(run({"verify", "family", "hyperelliptic", "2"}).code == 0);
  CHECK(run({"verify", "family", "artin", "5", "--battery", "s3,z2..z3"}).code == 0);
  CHECK(run({"verify", "family", "abelian", "1", "2", "2", "3"}).code == 0);
  CHECK(run({"verify", "family", "surface", "2"}).code == 0);
  CHECK(run({"verify", "family", "small-abelian", "1", "1", "4"}).code == 0);
  CHECK(run({"verify", "family", "planar", "3"}).code == 2);
}

TEST_CASE("verify plan reports mismatches with exit code 1") {
  const std::string path = temp_path("uprime.json");
  CHECK(run({"plan", "u-prime", "4", "--out", path}).code == 0);
  CHECK(run({"verify", "plan", path, "--expect", "<u,v,w | v w v^-1 w^-1>"}).code == 0);
  auto r = run({"verify", "plan", path, "--expect", "<u,v,w | >"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  write_file(path, "{\"genus\": 2, \"blocks\": []}");
  CHECK(run({"verify", "plan", path}).code == 2);
  CHECK(run({"verify", "plan", temp_path("missing.json")}).code == 2);
}

TEST_CASE("invariants") {
  auto r = run({"invariants", "<a,b | a b a^-1 b^-1>", "--json"});
  CHECK(r.code == 0);
  const auto inv = r.doc()["payload"]["invariants"];
  CHECK(inv["abelianization"]["free_rank"] == 2);
  CHECK(inv["abelianization"]["torsion"].empty());
  CHECK(inv["hom_counts"]["S3"] == 18);
  r = run({"invariants", "<x | x^2>", "--json"});
  CHECK(r.doc()["payload"]["invariants"]["abelianization"]["torsion"] == ordered_json::array({2}));
  r = run({"invariants", "<a,b| >", "--json", "--battery", "s3"});
  CHECK(r.doc()["payload"]["invariants"]["hom_counts"]["S3"] == 36);
  CHECK(r.doc()["payload"]["invariants"]["hom_counts"].size() == 1);
  CHECK(run({"invariants", "<a | a", "--json"}).code == 2);
  CHECK(run({"invariants", "<a | a>", "--battery", "q7"}).code == 2);
}

TEST_CASE("bounds, euler, catalog, t2") {
  auto r = run({"genus-bounds", "abelian", "2", "1", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2,4]\n");
  CHECK(run({"genus-bounds", "braid", "2"}).out == "exact 1\n");
  CHECK(run({"genus-bounds", "braid", "1"}).code == 2);

  const std::string path = temp_path("w2.json");
  save_plan(FibrationPlan::bare_w(2), path);
  r = run({"euler", path});
  CHECK(r.out == "4\n");

  r = run({"catalog", "braid", "3", "--json"});
  CHECK(r.doc()["payload"]["relator_count"] == 2);
  CHECK(run({"catalog", "symmetric", "3"}).out == "<x,y | x y x y^-1 x y x^-1 y^-1 x^-1 y x^-1 y^-1, x y x y^-2, x^2>\n");

  CHECK(run({"t2-bundle", "6", "4"}).out == "Z + Z_2\n");
  CHECK(run({"t2-bundle", "0", "0"}).out == "Z^2\n");
  CHECK(run({"t2-bundle", "-3", "0"}).out == "Z + Z_3\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"plan", "v6", "3"}).code == 2);
  CHECK(run({"plan", "u", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"construct", "<a | >", "--max-cosets", "0"}).code == 2);
}
