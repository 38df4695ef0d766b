#include "gkspin/fiber/fiber.hpp"
#include "gkspin/models/models.hpp"
#include "gkspin/report/report.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace gkspin;

namespace {

Report sample() {
  Report r("sample", 42, 3);
  r.add(pass_check("a.one", "first").value("S", "1/2 + (1/3)*sqrt2"));
  r.add(fail_check("a.two", "second", "z1 = 1 + i"));
  Check skip = pass_check("a.three", "third");
  skip.status = Status::Skip;
  r.add(skip);
  return r;
}

} // namespace

TEST(Report, JsonRoundTrip) {
  Report r = sample();
  Report back = Report::from_json(r.json());
  EXPECT_EQ(back.json(), r.json());
  EXPECT_EQ(back.seed(), 42u);
  EXPECT_EQ(back.find("a.two")->witness, "z1 = 1 + i");
  EXPECT_EQ(back.find("a.three")->status, Status::Skip);
  EXPECT_EQ(back.failures(), 1);
}

TEST(Report, SchemaKeys) {
  auto j = nlohmann::json::parse(sample().json());
  for (const char *k : {"suite", "seed", "trials", "passed", "checks"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_FALSE(j.at("passed").get<bool>());
  for (const auto &c : j.at("checks"))
    for (const char *k : {"id", "anchor", "status", "witness", "values"})
      EXPECT_TRUE(c.contains(k)) << k;
}

TEST(Report, RejectsDuplicateIdsAndSilentFailures) {
  Report r = sample();
  EXPECT_THROW(r.add(pass_check("a.one", "again")), std::logic_error);
  Check bad = pass_check("a.four", "no witness");
  bad.status = Status::Fail;
  EXPECT_THROW(r.add(bad), std::logic_error);
}

TEST(Report, MergePrefixes) {
  Report r("outer", 0, 1);
  r.merge(sample(), "inner.");
  EXPECT_NE(r.find("inner.a.two"), nullptr);
  EXPECT_EQ(r.failures(), 1);
  EXPECT_THROW(r.merge(sample(), "inner."), std::logic_error);
}

TEST(Report, TextMarksFailures) {
  std::string t = sample().text();
  EXPECT_NE(t.find("[fail] a.two"), std::string::npos);
  EXPECT_NE(t.find("witness: z1 = 1 + i"), std::string::npos);
  EXPECT_NE(t.find("1 check(s) failed"), std::string::npos);
}

TEST(Report, DeterministicForSeed) {
  EXPECT_EQ(fiber_report(2, 20, 9).json(), fiber_report(2, 20, 9).json());
  EXPECT_EQ(verify_model(model_flat_kahler(), 4, 4).json(),
            verify_model(model_flat_kahler(), 4, 4).json());
}

TEST(Props, AllPass) {
  Report r = props_report(0, 4);
  EXPECT_TRUE(r.all_pass()) << r.text();
  EXPECT_EQ(r.find("mukai.sign-determination")->values.front().second, "++--");
}
