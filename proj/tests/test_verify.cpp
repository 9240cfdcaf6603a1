#include <cctype>
#include <string>

#include <gtest/gtest.h>

#include "geobary/spaces.hpp"
#include "geobary/verify.hpp"

using namespace geobary;

namespace {

std::string failures(const Report& r) {
  std::string s;
  for (const auto& rec : r) {
    if (!rec.pass) s += to_json(rec).dump() + "\n";
  }
  return s;
}

bool passed(const Report& r, const std::string& name) {
  bool seen = false;
  for (const auto& rec : r) {
    if (rec.check == name) {
      seen = true;
      if (!rec.pass) return false;
    }
  }
  return seen;
}

}  // namespace

class SuiteBySpace : public ::testing::TestWithParam<SpaceDescriptor> {};

TEST_P(SuiteBySpace, AllChecksPass) {
  const Space s = make_space(GetParam());
  const Report r = run_verification(s, std::nullopt, {.samples = 3000, .seed = 42});
  EXPECT_TRUE(all_pass(r)) << s.name() << "\n" << failures(r);
  EXPECT_TRUE(passed(r, "convex_metric"));
  EXPECT_TRUE(passed(r, "uniform_convexity"));
  EXPECT_TRUE(passed(r, "busemann_convexity"));
  if (s->is_cat0()) EXPECT_TRUE(passed(r, "cn_inequality"));
}

INSTANTIATE_TEST_SUITE_P(Kinds, SuiteBySpace,
                         ::testing::Values(SpaceDescriptor{.kind = SpaceKind::euclidean, .dim = 1},
                                           SpaceDescriptor{.kind = SpaceKind::euclidean, .dim = 3},
                                           SpaceDescriptor{.kind = SpaceKind::hyperbolic},
                                           SpaceDescriptor{.kind = SpaceKind::star_tree, .rays = 2},
                                           SpaceDescriptor{.kind = SpaceKind::star_tree, .rays = 5},
                                           SpaceDescriptor{.kind = SpaceKind::lp_plane, .p = 2.0},
                                           SpaceDescriptor{.kind = SpaceKind::lp_plane, .p = 3.0},
                                           SpaceDescriptor{.kind = SpaceKind::lp_plane, .p = 6.0}),
                         [](const ::testing::TestParamInfo<SpaceDescriptor>& info) {
                           std::string name = make_space(info.param).name();
                           for (char& c : name) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return name;
                         });

TEST(Suite, FaultyMidpointIsCaught) {
  const Space f = make_faulty_midpoint_space(make_euclidean(2));
  const Report r = verify_geodesic_core(f, {.samples = 500, .seed = 1});
  EXPECT_FALSE(all_pass(r));
  EXPECT_FALSE(passed(r, "convex_metric"));
  for (const auto& rec : r) {
    if (rec.check == "convex_metric") {
      ASSERT_TRUE(rec.witness.has_value());
      EXPECT_TRUE(rec.witness->contains("x"));
    }
  }
}

TEST(Suite, ReportsAreDeterministic) {
  const Space s = make_hyperbolic();
  const auto a = to_json(run_verification(s, std::nullopt, {.samples = 300, .seed = 9})).dump();
  const auto b = to_json(run_verification(s, std::nullopt, {.samples = 300, .seed = 9})).dump();
  EXPECT_EQ(a, b);
}

TEST(Suite, EuclideanCnIsEquality) {
  const Report r = verify_space_inequalities(make_euclidean(2), {.samples = 2000, .seed = 3});
  EXPECT_TRUE(passed(r, "cn_equality_euclidean"));
}

TEST(Suite, NonCat0SkipsCn) {
  const Report r = verify_space_inequalities(make_lp_plane(4), {.samples = 200, .seed = 3});
  for (const auto& rec : r) EXPECT_NE(rec.check, "cn_inequality");
}
