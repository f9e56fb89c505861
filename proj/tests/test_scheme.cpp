#include <gtest/gtest.h>

#include <set>

#include "ffs/error.hpp"
#include "ffs/oracles.hpp"
#include "ffs/scheme.hpp"

using namespace fqg;

TEST(Omega, SizeMatchesLineScan) {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, int>>{{3, 3}, {5, 3}, {7, 3}, {9, 3}, {3, 5}, {5, 5}}) {
    const auto space = make_space(q, d);
    const Omega omega(space);
    EXPECT_EQ(omega.size(), oracle::omega_size(space->field(), d)) << "q=" << q << " d=" << d;
    EXPECT_EQ(static_cast<std::int64_t>(omega.size()) * 2, sphere_size_formula(space->field(), d, space->field().one()));
  }
  EXPECT_EQ(Omega(make_space(3, 5)).size(), 45u);
  EXPECT_THROW(Omega(make_space(3, 4)), InvalidArgument);
}

TEST(Omega, RepresentativesAndLineLookup) {
  const auto space = make_space(5, 3);
  const Field& f = space->field();
  const Omega omega(space);
  std::set<PointId> seen;
  for (const auto& line : omega.lines()) {
    EXPECT_EQ(space->norm(line.rep), f.one());
    EXPECT_LT(line.rep, space->neg(line.rep));
    EXPECT_TRUE(seen.insert(line.rep).second);
    for (std::uint32_t c = 1; c < 5; ++c) EXPECT_EQ(omega.line_of(space->scale({c}, line.rep)), line.id);
  }
  for (PointId x = 0; x < space->size(); ++x)
    if (f.chi(space->norm(x)) != 1) {
      EXPECT_FALSE(omega.line_of(x).has_value());
    }
}

TEST(Relations, IndexIgnoresRepresentativeSigns) {
  const auto space = make_space(7, 3);
  const Omega omega(space);
  const Field& f = space->field();
  const auto n = static_cast<std::uint32_t>(omega.size());
  for (std::uint32_t u = 0; u < n; u += 5) {
    for (std::uint32_t v = 0; v < n; ++v) {
      const int l = relation_index(omega, u, v);
      ASSERT_EQ(l, relation_index(omega, v, u));
      if (u == v) {
        EXPECT_EQ(l, 0);
        continue;
      }
      ASSERT_GE(l, 1);
      ASSERT_LE(l, relation_count(7));
      // With U.U = V.V = 1, (U+V).(U+V) = 2 + 2 U.V and (U-V).(U-V) = 2 - 2 U.V.
      const Elem uv = space->dot(omega.rep(u), omega.rep(v));
      const Elem two = f.from_int(2);
      if (l == 1) {
        EXPECT_TRUE(uv == f.one() || uv == f.neg(f.one()));
      } else if (l == relation_count(7)) {
        EXPECT_EQ(uv, f.zero());
      } else {
        const Elem alpha = *relation_alpha(f, l);
        const Elem twice = f.mul(two, uv);
        EXPECT_TRUE(twice == alpha || twice == f.neg(alpha));
      }
    }
  }
}

TEST(Relations, AlphaValues) {
  const Field f = Field::of_order(7);  // nu = 3, nu^{-1} = 5
  EXPECT_EQ(relation_alpha(f, 2)->v, 3u);  // 2 * 5 = 10 = 3
  EXPECT_EQ(relation_alpha(f, 3)->v, 1u);  // 2 * 25 = 50 = 1
  EXPECT_FALSE(relation_alpha(f, 1).has_value());
  EXPECT_FALSE(relation_alpha(f, 4).has_value());
  EXPECT_EQ(relation_count(7), 4);
}

TEST(Scheme, ReportOnSmallCases) {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, int>>{{3, 3}, {5, 3}, {7, 3}, {3, 5}}) {
    const auto space = make_space(q, d);
    const Omega omega(space);
    const auto r = scheme_report(omega);
    EXPECT_TRUE(r.symmetric);
    EXPECT_TRUE(r.partition_ok) << "q=" << q << " d=" << d;
    EXPECT_TRUE(r.distance.ok);
    EXPECT_EQ(r.relations.size(), static_cast<std::size_t>(relation_count(static_cast<std::uint32_t>(q))));
    std::size_t total = 0;
    for (const auto& rel : r.relations) {
      EXPECT_TRUE(rel.regular);
      total += rel.valency;
      EXPECT_GE(rel.certified_c, 0.0);
    }
    EXPECT_EQ(total + 1, omega.size());
  }
}

TEST(Scheme, ColoringWorkerInvariant) {
  const auto space = make_space(5, 3);
  const Omega omega(space);
  const SchemeColoring a(omega, 1), b(omega, 3);
  for (std::uint32_t u = 0; u < omega.size(); ++u)
    for (std::uint32_t v = 0; v < omega.size(); ++v) ASSERT_EQ(a.color(u, v), b.color(u, v));
}
