#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

#include "ffs/error.hpp"
#include "ffs/report.hpp"
#include "ffs/rng.hpp"

using namespace fqg;

TEST(Rng, MatchesReferenceSplitmix) {
  // First output of the published splitmix64 from state 0.
  EXPECT_EQ(splitmix64_mix(0x9E3779B97F4A7C15ULL), 0xe220a8397b1dcdafULL);

  CounterRng a(1, 0);
  EXPECT_EQ(a(), 0x810145e2f14b896dULL);
  EXPECT_EQ(a(), 0x79e1e88840bb343bULL);
  EXPECT_EQ(a(), 0x0e2fa2ad0fc46356ULL);
  CounterRng b(20240611, 0x736574);
  EXPECT_EQ(b(), 0x27a4cd74b48be52eULL);
  EXPECT_EQ(b(), 0xe95ffd165d791ba5ULL);
  EXPECT_EQ(b(), 0xf1c98e9a5db771a0ULL);
  EXPECT_EQ(b.counter(), 3u);
}

TEST(Rng, UniformStaysInRange) {
  CounterRng rng(5);
  std::vector<int> hits(7);
  for (int i = 0; i < 70000; ++i) ++hits[rng.uniform(7)];
  for (int h : hits) EXPECT_NEAR(h, 10000, 500);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_EQ(rng.uniform(1), 0u);
  EXPECT_THROW(rng.uniform(0), InvalidArgument);
}

TEST(Rng, SamplingWithoutReplacement) {
  CounterRng rng(8);
  const auto s = sample_without_replacement(1000, 300, rng);
  EXPECT_EQ(s.size(), 300u);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::set<std::uint32_t>(s.begin(), s.end()).size(), 300u);
  EXPECT_LT(s.back(), 1000u);
  EXPECT_EQ(sample_without_replacement(10, 10, rng).size(), 10u);
  EXPECT_THROW(sample_without_replacement(3, 4, rng), InvalidArgument);
}

TEST(Report, ExactIntegersAndRoundedReals) {
  EXPECT_TRUE(exact(std::uint64_t{1} << 53).is_number());
  EXPECT_EQ(exact((std::uint64_t{1} << 53) + 1), Json("9007199254740993"));
  EXPECT_EQ(exact(std::int64_t{-5}), Json(-5));
  EXPECT_EQ(real(1.0 / 3).get<double>(), 0.333333333333);
  EXPECT_TRUE(real(std::numeric_limits<double>::quiet_NaN()).is_null());
  EXPECT_TRUE(real(INFINITY).is_null());
}

TEST(Report, ChecksAndSerialization) {
  Report r("demo");
  r.config()["q"] = 5;
  r.metrics()["sizes"] = Json::array({1, 2});
  r.metrics()["label"] = "a,b";
  EXPECT_TRUE(r.pass());
  r.check("first", true);
  EXPECT_TRUE(r.pass());
  r.check("second", false);
  EXPECT_FALSE(r.pass());

  const auto doc = Json::parse(r.to_json());
  EXPECT_EQ(doc["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(doc["command"], "demo");
  EXPECT_EQ(doc["checks"]["second"], false);
  EXPECT_EQ(doc["pass"], false);

  const auto csv = r.to_csv();
  EXPECT_EQ(csv.rfind("key,value\n", 0), 0u);
  EXPECT_NE(csv.find("config.q,5\n"), std::string::npos);
  EXPECT_NE(csv.find("metrics.sizes.1,2\n"), std::string::npos);
  EXPECT_NE(csv.find("metrics.label,\"a,b\"\n"), std::string::npos);
  EXPECT_NE(csv.find("pass,false\n"), std::string::npos);
}
