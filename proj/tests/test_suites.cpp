#include <gtest/gtest.h>

#include "modw/suites.hpp"

using namespace modw;

TEST(Suites, SmallConfigPassesAndIsDeterministic) {
  SuiteConfig cfg;
  cfg.pyr = Pyramid::from_q({1, 2});
  cfg.prime = 3;
  cfg.samples = 5;
  auto a = verify(cfg), b = verify(cfg);
  for (const auto& r : a.records()) EXPECT_NE(r.status, "fail") << r.suite << " / " << r.id << ": " << r.details;
  EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
  auto j = a.to_json(false);
  auto it = j.begin();
  EXPECT_EQ(it.key(), "records");
  EXPECT_EQ((++it).key(), "summary");
  std::vector<std::string> keys;
  for (auto& [k, v] : j["records"][0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"suite", "case", "status", "anchor", "details"}));
}

TEST(Suites, SelectedSuitesOnly) {
  SuiteConfig cfg;
  cfg.suites = {"combinatorics"};
  auto rep = verify(cfg);
  for (const auto& r : rep.records()) EXPECT_EQ(r.suite, "combinatorics");
  EXPECT_GT(rep.records().size(), 0u);
}

TEST(Suites, FailuresAreRecordedNotThrown) {
  Report rep;
  SuiteRun run(rep, "x");
  EXPECT_FALSE(run.check("boom", "", []() -> Outcome { throw std::runtime_error("bad"); }));
  EXPECT_EQ(rep.count("fail"), 1);
  EXPECT_FALSE(rep.ok());
}

TEST(Suites, Describe) {
  auto text = describe(Pyramid::from_q({1, 3, 3, 2, 1}));
  EXPECT_NE(text.find("p=(2,3,5)"), std::string::npos);
  EXPECT_NE(text.find("sigma=[[0,1,2],[0,0,1],[1,1,0]]"), std::string::npos);
  EXPECT_NE(describe(Pyramid::from_q({3})).find("e = 0"), std::string::npos);
}
