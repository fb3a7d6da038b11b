#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asmtspp/asm.hpp"
#include "asmtspp/verify.hpp"

using namespace asmtspp;

TEST_CASE("catalog contents") {
  for (const char* id : {"thm1", "thm2a", "thm2b", "thm2c", "opform", "detform", "spec", "sixv", "prop21",
                         "frobcomp", "lemma41", "orient", "ankdet", "giambelli", "recur_cd", "binom71", "matid1",
                         "matid2", "matid3", "statsum"})
    CHECK_MESSAGE(find_identity(id) != nullptr, id);
  CHECK(find_identity("nosuch") == nullptr);
  auto& c = catalog();
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].id < c[i].id);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(verify("nosuch", {}), UnknownIdentity);
  CHECK_THROWS_AS(verify("thm1", {}), ParamOutOfBounds);
  CHECK_THROWS_AS(verify("thm1", {{"n", 99}}), ParamOutOfBounds);
  CHECK_THROWS_AS(verify("thm1", {{"n", 2}, {"k", 1}}), ParamOutOfBounds);
  CHECK_THROWS_AS(verify("binom71", {{"a", 3}, {"b", 2}, {"c", 0}}), ParamOutOfBounds);
}

TEST_CASE("small reports") {
  auto r = verify("thm1", {{"n", 2}});
  CHECK(r.passed);
  REQUIRE(r.parts.size() == 1);
  CHECK(r.parts[0].lhs_text == std::optional<std::string>("v + u*x1*x2"));
  auto b = verify("binom71", {{"a", 0}, {"b", 1}, {"c", 1}});
  CHECK(b.passed);
  CHECK(b.parts[0].lhs_text == std::optional<std::string>("1 + x"));
  CHECK(verify("thm1", {{"n", 3}}).passed);
}

TEST_CASE("reports are deterministic") {
  for (auto& item : suite_plan(SuiteLevel::quick)) {
    auto a = verify(item.id, item.params), b = verify(item.id, item.params);
    auto ja = report_json(a), jb = report_json(b);
    ja.erase("millis");
    jb.erase("millis");
    CHECK_MESSAGE(ja == jb, item.id);
  }
}

TEST_CASE("quick suite passes and keeps plan order") {
  auto plan = suite_plan(SuiteLevel::quick);
  auto reps = run_items(plan, 2);
  REQUIRE(reps.size() == plan.size());
  for (std::size_t i = 0; i < plan.size(); ++i) {
    CHECK(reps[i].id == plan[i].id);
    CHECK(reps[i].params == plan[i].params);
    CHECK_MESSAGE(reps[i].passed, report_text(reps[i]));
  }
  CHECK(summary_table(reps).find("FAIL") == std::string::npos);
}

TEST_CASE("json shape") {
  auto j = report_json(verify("lemma41", {{"n", 2}}));
  CHECK(j["id"] == "lemma41");
  CHECK(j["params"]["n"] == 2);
  CHECK(j["status"] == "pass");
  CHECK(j.contains("lhs_terms"));
  CHECK(j.contains("rhs_terms"));
  CHECK(j["lhs_terms"] == 8);
  CHECK(j.contains("millis"));
}

TEST_CASE("a failing comparison carries a witness") {
  PjFamily flipped = [](int j, std::size_t x, const VarTablePtr& t) {
    auto p = default_pj(j, x, t);
    return j == 2 ? -p : p;
  };
  IdentityReport rep;
  rep.id = "detform";
  rep.compare("bialternant determinant = enumeration", gf_determinant(3, flipped), gf_enumerate(3));
  rep.finish();
  CHECK_FALSE(rep.passed);
  auto j = report_json(rep);
  CHECK(j["status"] == "fail");
  CHECK(j.contains("diff_witness"));
  CHECK(j["diff_witness"].get<std::string>().find("lhs") != std::string::npos);
}
