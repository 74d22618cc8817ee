#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "schmidt/report.hpp"

namespace schmidt {
namespace {

template <class Report>
std::string render(const Report& r, ReportFormat f) {
  std::ostringstream os;
  write_report(os, r, f);
  return os.str();
}

TEST(Verify, SmallRecords) {
  const auto report = run_verify({3, 12, 1});
  ASSERT_EQ(report.records.size(), 3u);
  const auto& one = report.records[0];
  EXPECT_EQ(one.s_count, 2);
  EXPECT_EQ(one.t_count, 2);
  EXPECT_EQ(one.series_count, 2);
  const auto& three = report.records[2];
  EXPECT_EQ(three.n, 3);
  EXPECT_EQ(three.s_count, 10);
  EXPECT_EQ(three.t_count, 10);
  EXPECT_EQ(three.series_count, 10);
  EXPECT_EQ(three.round_trips_checked, 20u);
  EXPECT_TRUE(report.pass);
}

TEST(Verify, CutoffLimitsRoundTrips) {
  const auto report = run_verify({4, 2, 1});
  EXPECT_EQ(report.records[1].round_trips_checked, 10u);
  EXPECT_EQ(report.records[2].round_trips_checked, 0u);
  EXPECT_TRUE(report.pass);
}

TEST(Verify, RejectsZeroMaxN) {
  EXPECT_THROW(run_verify({0, 12, 1}), std::invalid_argument);
}

TEST(Verify, OutputIndependentOfWorkerCount) {
  const auto serial = run_verify({14, 10, 1});
  const auto parallel = run_verify({14, 10, 4});
  for (auto f : {ReportFormat::text, ReportFormat::csv, ReportFormat::json})
    EXPECT_EQ(render(serial, f), render(parallel, f));
}

TEST(Verify, Formats) {
  const auto report = run_verify({2, 12, 1});
  EXPECT_EQ(render(report, ReportFormat::csv),
            "n,s,t,series,pass\n1,2,2,2,true\n2,5,5,5,true\n");
  EXPECT_EQ(render(report, ReportFormat::text),
            "n=1 s=2 t=2 series=2 round_trips=4 pass\n"
            "n=2 s=5 t=5 series=5 round_trips=10 pass\n"
            "overall: PASS\n");
  const auto j = nlohmann::json::parse(render(report, ReportFormat::json));
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("records").at(1).at("t_count").get<int>(), 5);
}

TEST(Verify, TextNamesFirstFailure) {
  VerifyReport report;
  report.records.push_back({1, 2, 2, 2, 4, true, {}});
  report.records.push_back({2, 5, 4, 5, 0, false, "count mismatch"});
  report.pass = false;
  const auto text = render(report, ReportFormat::text);
  EXPECT_NE(text.find("first failure: n=2: count mismatch"), std::string::npos);
  EXPECT_NE(text.find("overall: FAIL"), std::string::npos);
}

TEST(Refined, WitnessRow) {
  const auto report = run_refined({2, 1, 1, 1, 1, 1});
  ASSERT_EQ(report.records.size(), 2u);
  const auto& row = report.records[1];
  EXPECT_EQ(row.query, (RefinedQuery{2, 1, 1, 1, 1}));
  EXPECT_EQ(row.t_refined, 1);
  EXPECT_EQ(row.s_literal, 3);
  EXPECT_EQ(row.transported, 1);
  EXPECT_FALSE(row.literal_match);
  EXPECT_TRUE(row.transported_match);
}

TEST(Refined, ImpossibleWeightAndSingleRow) {
  const auto report = run_refined({3, 2, 1, 9, 9, 1});
  for (const auto& rec : report.records) {
    if (rec.query == RefinedQuery{1, 2, 1, 9, 9}) {
      EXPECT_EQ(rec.t_refined, 0);
      EXPECT_EQ(rec.transported, 0);
    }
    if (rec.query == RefinedQuery{3, 1, 1, 2, 1}) {
      EXPECT_EQ(rec.t_refined, 1);
    }
  }
  EXPECT_TRUE(report.pass);
}

TEST(Refined, GridIsSortedAndStable) {
  const auto a = run_refined({5, 2, 2, 2, 2, 1});
  const auto b = run_refined({5, 2, 2, 2, 2, 3});
  EXPECT_EQ(a.records.size(), 5u * 16u);
  for (std::size_t i = 1; i < a.records.size(); ++i)
    EXPECT_LT(a.records[i - 1].query, a.records[i].query);
  for (auto f : {ReportFormat::text, ReportFormat::csv, ReportFormat::json})
    EXPECT_EQ(render(a, f), render(b, f));
  EXPECT_TRUE(a.pass);
}

TEST(Refined, CsvHeader) {
  const auto csv = render(run_refined({1, 1, 1, 1, 1, 1}), ReportFormat::csv);
  EXPECT_EQ(csv,
            "n,r,l,p,q,t_refined,s_literal,transported,literal_match\n"
            "1,1,1,1,1,0,2,0,false\n");
}

TEST(Refined, RejectsZeroBounds) {
  EXPECT_THROW(run_refined({0, 1, 1, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(run_refined({1, 1, 1, 0, 1, 1}), std::invalid_argument);
}

}  // namespace
}  // namespace schmidt
