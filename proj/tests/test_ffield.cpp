#include <gtest/gtest.h>

#include <set>

#include "ffs/error.hpp"
#include "ffs/ffield.hpp"

using namespace fqg;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic modulus.
std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    const std::vector<std::uint32_t>& mod, std::uint32_t p) {
  const std::size_t e = mod.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t deg = 2 * e - 1; deg >= e; --deg) {
    const auto c = prod[deg];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i) prod[deg - e + i] = (prod[deg - e + i] + (p - c) * mod[i]) % p;
  }
  return {prod.begin(), prod.begin() + e};
}

// First monic degree-e polynomial, constant term compared first, with no
// factor of degree <= e/2; only used for e in {2, 3}, where that means no root.
std::vector<std::uint32_t> smallest_rootless(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  std::vector<std::vector<std::uint32_t>> candidates;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> c(e + 1, 0);
    auto rest = idx;
    for (std::uint32_t i = 0; i < e; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    c[e] = 1;
    candidates.push_back(c);
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& c : candidates) {
    bool root = false;
    for (std::uint32_t x = 0; x < p && !root; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = c.size(); i-- > 0;) v = (v * x + c[i]) % p;
      root = v == 0;
    }
    if (!root) return c;
  }
  return {};
}

}  // namespace

TEST(Field, RejectsInvalidParameters) {
  EXPECT_THROW(Field::make(2, 1), InvalidArgument);
  EXPECT_THROW(Field::make(9, 1), InvalidArgument);
  EXPECT_THROW(Field::make(3, 0), InvalidArgument);
  EXPECT_THROW(Field::of_order(15), InvalidArgument);
  EXPECT_THROW(Field::of_order(1), InvalidArgument);
  EXPECT_THROW(Field::of_order(16), InvalidArgument);
  EXPECT_THROW(Field::make(3, 20), InvalidArgument);
}

TEST(Field, OfOrderFactorsPrimePowers) {
  const Field f = Field::of_order(125);
  EXPECT_EQ(f.p(), 5u);
  EXPECT_EQ(f.e(), 3u);
  EXPECT_EQ(f.q(), 125u);
}

TEST(Field, ModulusIsSmallestIrreducible) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}, {5, 3}}) {
    const Field f = Field::make(p, e);
    EXPECT_EQ(f.modulus(), smallest_rootless(p, e)) << "q=" << f.q();
  }
  EXPECT_EQ(Field::of_order(9).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(Field::of_order(25).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Field, ArithmeticMatchesPolynomialOracle) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 25u, 27u, 49u}) {
    const Field f = Field::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto ca = f.coeffs({a});
      EXPECT_EQ(f.from_coeffs(ca), Elem{a});
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto cb = f.coeffs({b});
        std::vector<std::uint32_t> sum(f.e());
        for (std::uint32_t i = 0; i < f.e(); ++i) sum[i] = (ca[i] + cb[i]) % f.p();
        ASSERT_EQ(f.add({a}, {b}), f.from_coeffs(sum));
        const auto prod = f.e() == 1 ? std::vector<std::uint32_t>{static_cast<std::uint32_t>(std::uint64_t{a} * b % q)}
                                     : poly_mul(ca, cb, f.modulus(), f.p());
        ASSERT_EQ(f.mul({a}, {b}), f.from_coeffs(prod)) << "q=" << q << " a=" << a << " b=" << b;
        ASSERT_EQ(f.add(f.sub({a}, {b}), {b}), Elem{a});
        if (b != 0) {
          ASSERT_EQ(f.mul(f.div({a}, {b}), {b}), Elem{a});
        }
      }
    }
  }
}

TEST(Field, DivisionByZeroThrows) {
  const Field f = Field::of_order(7);
  EXPECT_THROW(f.div(f.one(), f.zero()), InvalidArgument);
}

TEST(Field, GeneratorIsSmallestFullOrderElement) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
    const Field f = Field::of_order(q);
    auto order = [&](Elem x) {
      std::uint64_t n = 1;
      for (Elem y = x; y != f.one(); y = f.mul(y, x)) ++n;
      return n;
    };
    std::uint32_t smallest = 0;
    for (std::uint32_t v = 1; v < q; ++v) {
      if (order({v}) == q - 1) {
        smallest = v;
        break;
      }
    }
    EXPECT_EQ(f.nu().v, smallest) << "q=" << q;
    for (std::uint32_t k = 0; k < q - 1; ++k) EXPECT_EQ(f.log(f.exp(k)), k);
  }
  EXPECT_EQ(Field::of_order(7).nu().v, 3u);
}

TEST(Field, CharacterAndSquareRoots) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 25u, 27u}) {
    const Field f = Field::of_order(q);
    std::set<std::uint32_t> squares;
    for (std::uint32_t x = 1; x < q; ++x) squares.insert(f.mul({x}, {x}).v);
    EXPECT_EQ(squares.size(), (q - 1) / 2);
    EXPECT_EQ(f.chi(f.zero()), 0);
    for (std::uint32_t a = 1; a < q; ++a) {
      const bool is_square = squares.count(a) > 0;
      EXPECT_EQ(f.chi({a}), is_square ? 1 : -1);
      const auto r = f.sqrt({a});
      ASSERT_EQ(r.has_value(), is_square);
      if (r) {
        EXPECT_EQ(f.mul(*r, *r), Elem{a});
        EXPECT_LE(r->v, f.neg(*r).v);
      }
    }
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) EXPECT_EQ(f.chi(f.mul({a}, {b})), f.chi({a}) * f.chi({b}));
  }
  EXPECT_EQ(Field::of_order(5).sqrt({4})->v, 2u);
}

TEST(Field, TraceIsAdditiveOntoPrimeField) {
  const Field f = Field::of_order(9);
  std::vector<int> hits(3, 0);
  for (std::uint32_t a = 0; a < 9; ++a) {
    ++hits[f.trace({a})];
    for (std::uint32_t b = 0; b < 9; ++b) EXPECT_EQ(f.trace(f.add({a}, {b})), (f.trace({a}) + f.trace({b})) % 3);
  }
  EXPECT_EQ(hits, (std::vector<int>{3, 3, 3}));
  const Field g = Field::of_order(7);
  for (std::uint32_t a = 0; a < 7; ++a) EXPECT_EQ(g.trace({a}), a);
}

TEST(Field, IntegersMapThroughPrimeField) {
  const Field f = Field::of_order(9);
  EXPECT_EQ(f.from_int(-1), f.neg(f.one()));
  EXPECT_EQ(f.from_int(4), f.one());
  EXPECT_EQ(f.pow(f.nu(), 8), f.one());
}
