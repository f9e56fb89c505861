#include <gtest/gtest.h>

#include "ffs/acceptance.hpp"
#include "ffs/error.hpp"
#include "ffs/harness.hpp"

using namespace fqg;

namespace {

RunConfig config(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  return c;
}

}  // namespace

TEST(Harness, FieldCheckOverF9) {
  auto c = config("field-check");
  c.p = 3;
  c.e = 2;
  const auto r = run(c);
  const auto& m = r.document()["metrics"];
  EXPECT_EQ(m["q"], 9);
  EXPECT_EQ(m["modulus"], Json::array({1, 0, 1}));
  EXPECT_EQ(m["nonzero_squares"], 4);
  EXPECT_TRUE(r.pass());
}

TEST(Harness, CharacterChecksum) {
  // chi over F_3 is (0, 1, -1), hashed as bytes 1, 2, 0.
  EXPECT_EQ(char_table_checksum(Field::of_order(3)), "d0aa6318672cf75e");
}

TEST(Harness, SphereAndSpectrum) {
  auto c = config("sphere");
  c.q = 3;
  c.d = 3;
  c.a = {1};
  c.formula = true;
  auto r = run(c);
  EXPECT_EQ(r.document()["metrics"]["size_enumerated"], 6);
  EXPECT_EQ(r.document()["metrics"]["size_formula"], 6);
  EXPECT_TRUE(r.pass());

  c.command = "spectrum";
  c.q = 5;
  c.d = 2;
  c.dense = true;
  r = run(c);
  EXPECT_EQ(r.document()["metrics"]["agree"], true);
  EXPECT_TRUE(r.pass());
}

TEST(Harness, RejectsBadInput) {
  EXPECT_THROW(run(config("nonsense")), InvalidArgument);
  auto c = config("sphere");
  c.q = 5;
  EXPECT_THROW(run(c), InvalidArgument);
  c.d = 2;
  c.workers = 0;
  EXPECT_THROW(run(c), InvalidArgument);
}

TEST(Harness, IdenticalConfigsGiveIdenticalBytes) {
  auto c = config("census");
  c.q = 3;
  c.d = 3;
  c.k = 2;
  c.density = 0.5;
  c.mode = "sample";
  c.samples = 5000;
  c.seed = 42;
  c.workers = 2;
  const auto first = run(c).to_json();
  EXPECT_EQ(first, run(c).to_json());
  c.format = OutputFormat::csv;
  EXPECT_EQ(run(c).to_csv(), run(c).to_csv());
}

TEST(Acceptance, BrokenSphereFormulaFailsFirstCriterion) {
  AcceptanceOptions opt;
  opt.profile = Profile::quick;
  opt.only = {1};
  EXPECT_TRUE(run_criterion(1, opt).checks_pass);
  opt.sphere_formula = [](const Field& f, int d, Elem t) {
    return sphere_size_formula(f, d, t) + (t == f.one() ? 1 : 0);
  };
  EXPECT_FALSE(run_criterion(1, opt).checks_pass);
}
