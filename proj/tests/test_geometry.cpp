#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ffs/error.hpp"
#include "ffs/geometry.hpp"
#include "ffs/oracles.hpp"

using namespace fqg;

TEST(Space, CoordinatesRoundTripAndArithmetic) {
  const auto s = make_space(5, 3);
  EXPECT_EQ(s->size(), 125u);
  const Field& f = s->field();
  for (PointId x = 0; x < s->size(); x += 7) {
    const Point px = s->point(x);
    EXPECT_EQ(px.coords, oracle::coordinates(x, 5, 3));
    EXPECT_EQ(s->id(px), x);
    for (PointId y = 0; y < s->size(); y += 11) {
      const Point py = s->point(y);
      Point sum{std::vector<Elem>(3)}, diff{std::vector<Elem>(3)};
      Elem dot = f.zero();
      for (int i = 0; i < 3; ++i) {
        sum.coords[i] = f.add(px.coords[i], py.coords[i]);
        diff.coords[i] = f.sub(px.coords[i], py.coords[i]);
        dot = f.add(dot, f.mul(px.coords[i], py.coords[i]));
      }
      EXPECT_EQ(s->add(x, y), s->id(sum));
      EXPECT_EQ(s->sub(x, y), s->id(diff));
      EXPECT_EQ(s->dot(x, y), dot);
    }
    EXPECT_EQ(s->norm(x), norm(f, px));
    EXPECT_EQ(s->add(x, s->neg(x)), 0u);
    EXPECT_EQ(s->scale(f.from_int(2), x), s->add(x, x));
  }
}

TEST(Space, EnumerationCapIsEnforced) {
  EXPECT_THROW(make_space(3, 5, 100), CapExceeded);
  EXPECT_THROW(make_space(3, 0), InvalidArgument);
}

TEST(Sphere, SizesMatchPointScan) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 25u}) {
    const Field f = Field::of_order(q);
    for (int d = 1; d <= (q > 9 ? 3 : 4); ++d) {
      const auto scan = oracle::sphere_sizes(f, d);
      const Space space(f, d);
      const auto hist = sphere_size_histogram(space);
      for (std::uint32_t t = 0; t < q; ++t) {
        const auto s = sphere(space, {t});
        ASSERT_EQ(s.size(), scan[t]) << "q=" << q << " d=" << d << " t=" << t;
        EXPECT_EQ(hist[t], scan[t]);
        EXPECT_EQ(sphere_size_formula(f, d, {t}), static_cast<std::int64_t>(scan[t]));
        EXPECT_TRUE(std::is_sorted(s.points.begin(), s.points.end()));
        for (auto x : s.points) ASSERT_EQ(space.norm(x), Elem{t});
      }
    }
  }
}

TEST(Sphere, UnitSphereInThreeSpaceOverF3) {
  const auto s = make_space(3, 3);
  EXPECT_EQ(sphere(*s, {1}).size(), 6u);
  EXPECT_EQ(sphere_size_formula(s->field(), 3, {1}), 6);
}

TEST(Sphere, FormulaBeyondEnumeration) {
  // d = 7 over F_11 is far past enumeration; q^{d-1} + chi(-t) q^3 at t = 1.
  const Field f = Field::of_order(11);
  const std::int64_t q3 = 11 * 11 * 11;
  EXPECT_EQ(sphere_size_formula(f, 7, f.one()), q3 * q3 - q3);
  EXPECT_EQ(f.chi(f.neg(f.one())), -1);
}

TEST(Orthogonal, EnumerationMatchesMatrixScan) {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {5, 2}, {7, 2}, {3, 3}}) {
    const auto space = make_space(q, d);
    for (bool special : {false, true}) {
      const auto got = enumerate_orthogonal(*space, special);
      std::set<std::vector<std::uint32_t>> a, b;
      for (const auto& m : got) {
        std::vector<std::uint32_t> v;
        for (auto x : m.entries) v.push_back(x.v);
        a.insert(v);
        EXPECT_EQ(m.special, determinant(space->field(), m) == space->field().one());
      }
      for (const auto& m : oracle::orthogonal_matrices(space->field(), d, special)) {
        std::vector<std::uint32_t> v;
        for (auto x : m) v.push_back(x.v);
        b.insert(v);
      }
      EXPECT_EQ(a.size(), got.size());
      EXPECT_EQ(a, b) << "q=" << q << " d=" << d << " special=" << special;
    }
  }
  // |O_2(F_3)| = 2(q + 1) since -1 is a non-square mod 3.
  EXPECT_EQ(enumerate_orthogonal(*make_space(3, 2), false).size(), 8u);
  EXPECT_THROW(enumerate_orthogonal(*make_space(3, 4), false), InvalidArgument);
}

TEST(Orthogonal, MapsPreserveNorms) {
  const auto space = make_space(5, 3);
  const auto group = enumerate_orthogonal(*space, false);
  for (std::size_t g = 0; g < group.size(); g += 13)
    for (PointId x = 0; x < space->size(); ++x) ASSERT_EQ(space->norm(apply(*space, group[g], x)), space->norm(x));
}

TEST(Nondegenerate, RankOfDifferences) {
  const auto s = make_space(3, 2);
  const Field& f = s->field();
  auto pt = [&](std::uint32_t a, std::uint32_t b) { return s->id({{Elem{a}, Elem{b}}}); };
  const std::vector<PointId> tri = {pt(0, 0), pt(1, 0), pt(0, 1)};
  const std::vector<PointId> line = {pt(0, 0), pt(1, 1), pt(2, 2)};
  const std::vector<PointId> repeat = {pt(1, 2), pt(1, 2)};
  const std::vector<PointId> single = {pt(2, 2)};
  const std::vector<PointId> too_many = {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)};
  EXPECT_TRUE(is_nondegenerate(*s, tri));
  EXPECT_FALSE(is_nondegenerate(*s, line));
  EXPECT_FALSE(is_nondegenerate(*s, repeat));
  EXPECT_TRUE(is_nondegenerate(*s, single));
  EXPECT_FALSE(is_nondegenerate(*s, too_many));
  const std::vector<Point> mixed = {Point{{f.zero(), f.zero()}}, Point{{f.zero()}}};
  EXPECT_THROW(is_nondegenerate(f, mixed), InvalidArgument);
}
