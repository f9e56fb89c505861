#include <gtest/gtest.h>

#include <cmath>

#include "ffs/error.hpp"
#include "ffs/euclid_graph.hpp"
#include "ffs/spectral.hpp"

using namespace fqg;

TEST(EuclideanGraph, ValencyAndSymmetry) {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    const auto space = make_space(q, d);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto g = build_graph(space, {a});
      const auto expected = sphere_size_formula(space->field(), d, {a}) - (a == 0 ? 1 : 0);
      EXPECT_EQ(static_cast<std::int64_t>(g.valency()), expected);
      for (PointId x = 0; x < space->size(); ++x) {
        std::size_t deg = 0;
        for (PointId y = 0; y < space->size(); ++y) {
          const bool adj = x != y && space->norm(space->sub(x, y)) == Elem{a};
          ASSERT_EQ(g.adjacent(x, y), adj);
          deg += adj;
        }
        ASSERT_EQ(deg, g.valency());
      }
    }
  }
  EXPECT_THROW(build_graph(make_space(3, 1), {1}), InvalidArgument);
}

TEST(NormColoring, ClassesAreEuclideanGraphs) {
  const auto space = make_space(5, 2);
  const NormColoring c(space);
  EXPECT_EQ(c.color_count(), 5);
  EXPECT_EQ(c.color(7, 7), -1);
  for (std::uint32_t a = 0; a < 5; ++a) {
    const auto g = build_graph(space, {a});
    EXPECT_EQ(c.valency(static_cast<int>(a)), g.valency());
    for (PointId x = 0; x < space->size(); x += 3) {
      std::vector<PointId> from_coloring, from_graph;
      c.for_each_neighbor(x, static_cast<int>(a), [&](PointId y) { from_coloring.push_back(y); });
      g.for_each_neighbor(x, [&](PointId y) { from_graph.push_back(y); });
      EXPECT_EQ(from_coloring, from_graph);
    }
  }
}

TEST(Spectrum, CharacterSumsMatchDenseEigenvalues) {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {3, 3}, {5, 2}, {9, 2}, {5, 3}}) {
    const auto space = make_space(q, d);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto g = build_graph(space, {a});
      const auto chars = character_spectrum(g);
      const auto dense = dense_spectrum(g);
      ASSERT_EQ(chars.eigenvalues.size(), space->size());
      EXPECT_TRUE(same_multiset(chars.eigenvalues, dense.eigenvalues, 1e-6)) << "q=" << q << " d=" << d << " a=" << a;
      EXPECT_NEAR(chars.trivial_eigenvalue, static_cast<double>(g.valency()), 1e-9);
      EXPECT_NEAR(chars.max_nontrivial_abs, dense.max_nontrivial_abs, 1e-6);
      EXPECT_LE(chars.max_imaginary_residual, kImaginaryTolerance);
    }
  }
}

TEST(Spectrum, WorkerCountDoesNotChangeEigenvalues) {
  const auto space = make_space(5, 3);
  const auto g = build_graph(space, {2});
  const auto one = character_spectrum(g, 1);
  const auto three = character_spectrum(g, 3);
  EXPECT_EQ(one.eigenvalues, three.eigenvalues);
}

TEST(Spectrum, NonzeroNormGraphsMeetTwiceSqrtBound) {
  for (std::uint64_t q : {3u, 5u, 7u}) {
    for (int d = 2; d <= 4; ++d) {
      const auto space = make_space(q, d);
      for (std::uint32_t a = 1; a < q; ++a) {
        const auto spec = character_spectrum(build_graph(space, {a}));
        EXPECT_TRUE(check_ramanujan_bound(spec).holds) << "q=" << q << " d=" << d << " a=" << a;
      }
    }
  }
}

// For even d with isotropic vectors, the zero-norm graph has eigenvalue
// (q-1) q^{d/2-1} - 1 at isotropic characters; at q = 7, d = 4 that is 41,
// above 2 * 7^{3/2} = 37.04.
TEST(Spectrum, ZeroNormGraphHasLargeIsotropicEigenvalue) {
  const auto space = make_space(7, 4);
  const auto spec = character_spectrum(build_graph(space, {0}));
  EXPECT_NEAR(spec.max_nontrivial_abs, 41.0, 1e-6);
  EXPECT_NEAR(spec.bound, 2 * std::pow(7.0, 1.5), 1e-9);
  EXPECT_FALSE(check_ramanujan_bound(spec).holds);

  const auto small = character_spectrum(build_graph(make_space(5, 4), {0}));
  EXPECT_NEAR(small.max_nontrivial_abs, 19.0, 1e-6);
  EXPECT_TRUE(check_ramanujan_bound(small).holds);
}

TEST(Spectrum, DenseMethodIsCapped) {
  const auto g = build_graph(make_space(3, 8), {1});
  EXPECT_THROW(dense_spectrum(g), CapExceeded);
}

TEST(Spectral, GroupingAndMultisets) {
  const std::vector<double> a = {-1.0, -1.0 + 1e-9, 2.0};
  const auto groups = group_values(a, 1e-6);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].second, 2u);
  const std::vector<double> b = {-1.0, -1.0, 2.0 + 1e-3};
  EXPECT_FALSE(same_multiset(a, b, 1e-6));
  EXPECT_TRUE(same_multiset(a, b, 1e-2));
}
