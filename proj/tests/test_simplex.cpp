#include <gtest/gtest.h>

#include "ffs/error.hpp"
#include "ffs/oracles.hpp"
#include "ffs/simplex.hpp"

using namespace fqg;

namespace {

std::vector<PointId> random_tuple(const Space& s, int size, CounterRng& rng) {
  std::vector<PointId> t(size);
  for (auto& x : t) x = static_cast<PointId>(rng.uniform(s.size()));
  return t;
}

}  // namespace

TEST(EdgeNorms, SmallExamples) {
  const Field f = Field::of_order(3);
  const std::vector<Point> tri = {Point{{Elem{0}, Elem{0}}}, Point{{Elem{1}, Elem{0}}}, Point{{Elem{0}, Elem{1}}}};
  const auto v = edge_norm_vector(f, tri);
  EXPECT_EQ(v.k, 2);
  EXPECT_EQ(v.entries, (std::vector<Elem>{{1}, {1}, {2}}));

  const std::vector<Point> same(4, Point{{Elem{2}, Elem{1}}});
  for (auto e : edge_norm_vector(f, same).entries) EXPECT_EQ(e, f.zero());

  const auto code = v.encode(3);
  EXPECT_EQ(code, 1u + 1u * 3 + 2u * 9);
  EXPECT_EQ(EdgeNormVector::decode(code, 2, 3), v);
}

TEST(EdgeNorms, InvariantUnderTranslationAndOrthogonalMaps) {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {5, 2}, {3, 3}, {5, 3}}) {
    const auto space = make_space(q, d);
    const auto group = enumerate_orthogonal(*space, false);
    CounterRng rng(q * 10 + d);
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = random_tuple(*space, d + 1, rng);
      const auto base = edge_norm_vector(*space, t);
      const auto tau = static_cast<PointId>(rng.uniform(space->size()));
      for (const auto& o : group) {
        std::vector<PointId> image;
        for (auto x : t) image.push_back(space->add(apply(*space, o, x), tau));
        ASSERT_EQ(edge_norm_vector(*space, image), base);
      }
    }
  }
}

TEST(Congruence, IdentityTranslationAndDegenerateInput) {
  const auto space = make_space(5, 2);
  CounterRng rng(2);
  std::vector<PointId> p;
  do {
    p = random_tuple(*space, 3, rng);
  } while (!is_nondegenerate(*space, p));
  EXPECT_TRUE(verify_congruence_lemma(*space, p, p));
  std::vector<PointId> shifted;
  const auto tau = static_cast<PointId>(rng.uniform(space->size()));
  for (auto x : p) shifted.push_back(space->add(x, tau));
  EXPECT_TRUE(verify_congruence_lemma(*space, p, shifted));
  const std::vector<PointId> flat = {0, 0, 1};
  EXPECT_THROW(verify_congruence_lemma(*space, p, flat), InvalidArgument);
}

TEST(Congruence, FullOrthogonalGroupClassifiesByEdgeNorms) {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {5, 2}, {3, 3}}) {
    const auto space = make_space(q, d);
    const auto r = congruence_check(*space, 200, 17);
    EXPECT_EQ(r.agree_full, r.trials) << "q=" << q << " d=" << d;
    EXPECT_GT(r.image_pairs, 50u);
  }
}

// A triangle and its mirror image have equal edge norms but are related only
// by a reflection when the triangle has no symmetry of its own.
TEST(Congruence, MirrorTrianglesNeedAReflection) {
  const auto space = make_space(5, 2);
  const Field& f = space->field();
  auto pt = [&](std::uint32_t a, std::uint32_t b) { return space->id({{Elem{a}, Elem{b}}}); };
  const std::vector<PointId> p = {pt(0, 0), pt(1, 0), pt(0, 2)};
  const std::vector<PointId> mirror = {pt(0, 0), pt(f.neg(f.one()).v, 0), pt(0, 2)};
  ASSERT_TRUE(is_nondegenerate(*space, p));
  EXPECT_EQ(edge_norm_vector(*space, p), edge_norm_vector(*space, mirror));
  EXPECT_FALSE(verify_congruence_lemma(*space, p, mirror));
  const auto full = enumerate_orthogonal(*space, false);
  EXPECT_TRUE(find_congruence(*space, full, p, mirror).has_value());
}

TEST(Census, PairsRealizeEveryNorm) {
  const auto space = make_space(3, 3);
  const auto r = census_exact(*space, VertexSet::all(space->size()), 1, kDefaultWorkCap);
  EXPECT_EQ(r.count, 3u);
  EXPECT_EQ(r.classes, 3u);
  EXPECT_EQ(r.nondegenerate, 27u * 26u);
  EXPECT_EQ(r.degenerate, 27u);
}

TEST(Census, TinySetsRealizeNothing) {
  const auto space = make_space(3, 5);
  EXPECT_EQ(census_exact(*space, VertexSet::of({4}), 1, kDefaultWorkCap).count, 0u);
  EXPECT_EQ(census_exact(*space, VertexSet::of({4, 9}), 3, kDefaultWorkCap).count, 0u);
  EXPECT_EQ(census_sampled(*space, VertexSet::of({4, 9}), 3, 1000, 1).count, 0u);
}

TEST(Census, PrunedEnumerationMatchesTupleScan) {
  for (auto [q, d, k, m] : std::vector<std::tuple<std::uint64_t, int, int, std::size_t>>{
           {3, 3, 2, 20}, {5, 2, 2, 25}, {3, 5, 3, 18}, {5, 3, 3, 15}, {3, 4, 4, 9}}) {
    const auto space = make_space(q, d);
    CounterRng rng(q + d + k);
    const auto e = random_subset(space->size(), m, rng);
    const auto naive = oracle::census(space->field(), d, e.members, k);
    const auto r = census_exact(*space, e, k, kDefaultWorkCap);
    EXPECT_EQ(r.realized, naive.realized) << "q=" << q << " d=" << d << " k=" << k;
    EXPECT_EQ(r.nondegenerate, naive.nondegenerate);
    EXPECT_EQ(r.degenerate + r.nondegenerate, r.tuples);
    EXPECT_EQ(census_exact(*space, e, k, kDefaultWorkCap, 3).realized, r.realized);
  }
}

TEST(Census, SampledIsMonotoneLowerBound) {
  const auto space = make_space(3, 3);
  CounterRng rng(4);
  const auto e = random_subset(space->size(), 20, rng);
  const auto exact = census_exact(*space, e, 2, kDefaultWorkCap);
  std::uint64_t previous = 0;
  for (std::uint64_t budget : {10u, 100u, 1000u, 10000u}) {
    const auto s = census_sampled(*space, e, 2, budget, 99, 2);
    EXPECT_GE(s.count, previous);
    EXPECT_LE(s.count, exact.count);
    for (auto code : s.realized) EXPECT_TRUE(std::binary_search(exact.realized.begin(), exact.realized.end(), code));
    previous = s.count;
  }
  const auto again = census_sampled(*space, e, 2, 1000, 99, 2);
  EXPECT_EQ(again.realized, census_sampled(*space, e, 2, 1000, 99, 2).realized);
}

TEST(Census, ExactModeIsCapped) {
  const auto space = make_space(3, 5);
  try {
    census_exact(*space, VertexSet::all(space->size()), 3, 1000);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("sampling"), std::string::npos);
  }
}

TEST(MainTheorem, FullSpaceCountInRange) {
  const auto r = main_theorem_experiment(3, 3, 1.0, 5, 20000);
  EXPECT_EQ(r.set_size, 243u);
  EXPECT_GE(r.census.count, 1u);
  EXPECT_LE(r.census.count, 729u);
  EXPECT_FALSE(r.below_hypothesis);
  const auto sparse = main_theorem_experiment(3, 3, 2.0 / 243, 5, 20000);
  EXPECT_EQ(sparse.set_size, 2u);
  EXPECT_EQ(sparse.census.count, 0u);
  EXPECT_TRUE(sparse.below_hypothesis);
}

TEST(Pipeline, FullSpaceInvariants) {
  const auto space = make_space(3, 5);
  const Field& f = space->field();
  const std::vector<Elem> type(3, f.one());
  const auto r = proof_pipeline(space, VertexSet::all(space->size()), 3, type);
  const std::uint64_t unit = sphere(*space, f.one()).size();
  EXPECT_EQ(r.stars.exact_count, space->size() * unit * unit * unit);
  EXPECT_EQ(r.center, 0u);
  EXPECT_EQ(r.center_stars, unit * unit * unit);
  ASSERT_EQ(r.spheres.size(), 3u);
  for (const auto& s : r.spheres) {
    EXPECT_EQ(s.sphere_subset, unit);
    EXPECT_EQ(s.lines, unit / 2);
    EXPECT_TRUE(s.on_sphere && s.unit_norm && s.half_bound);
  }
  EXPECT_TRUE(r.slices_match_center);
  EXPECT_EQ(r.patterns, 8u);
  // Over all patterns the copies are the ordered triples of distinct lines.
  EXPECT_EQ(r.end_count, 45u * 44u * 43u);
  EXPECT_TRUE(r.invariants_hold);

  const std::vector<Elem> bad = {f.one(), f.from_int(2), f.one()};
  EXPECT_THROW(proof_pipeline(space, VertexSet::all(space->size()), 3, bad), InvalidArgument);
}
