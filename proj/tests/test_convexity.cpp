#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "geobary/convexity.hpp"
#include "geobary/error.hpp"
#include "geobary/spaces.hpp"

using namespace geobary;

namespace {

Point E(double a, double b) { return Point::euclidean({a, b}); }
Point T(std::size_t ray, double off) { return Point::tree(ray, off); }

const CheckRecord& find(const Report& r, const std::string& name) {
  for (const auto& rec : r) {
    if (rec.check == name) return rec;
  }
  throw std::runtime_error("no record " + name);
}

}  // namespace

TEST(Deficiency, Examples) {
  EXPECT_DOUBLE_EQ(deficiency(make_euclidean(2), {E(0, 0), E(2, 0), E(0, 2)}), 2.0);
  EXPECT_EQ(deficiency(make_hyperbolic(), {Point::hyperbolic_lift(0, 0), Point::hyperbolic_lift(1, 2),
                                           Point::hyperbolic_lift(1, 2)}),
            0.0);
  EXPECT_DOUBLE_EQ(deficiency(make_star_tree(3), {T(0, 0), T(1, 1), T(2, 1)}), 1.0);
}

TEST(Deficiency, EqualsQuarterSquaredDistanceInEuclideanSpace) {
  const Space s = make_euclidean(3);
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const Triple t{s->sample_point(rng), s->sample_point(rng), s->sample_point(rng)};
    const double d = distance(s, t.x, t.y);
    EXPECT_NEAR(deficiency(s, t), d * d / 4.0, 1e-12);
  }
}

TEST(ConstraintSet, Examples) {
  const Space s = make_euclidean(2);
  EXPECT_TRUE(in_constraint_set(s, 1.0, 2.0, {E(0, 0), E(1, 0), E(-1, 0)}));
  EXPECT_FALSE(in_constraint_set(s, 1.0, 2.0, {E(0, 0), E(1, 0), E(1, 0)}));
  EXPECT_TRUE(in_constraint_set(s, 1.0, 0.5, {E(0, 0), E(0.6, 0), E(0, 0.6)}));
  EXPECT_FALSE(in_constraint_set(s, 1.0, 0.5, {E(0, 0), E(1.1, 0), E(0, 0.6)}));
}

TEST(PhiEstimate, EuclideanMatchesFormula) {
  const Space s = make_euclidean(2);
  EXPECT_NEAR(phi_estimate(s, 1.0, 1.0, 10000, 42).value, 0.25, 1e-6);
  EXPECT_NEAR(phi_estimate(s, 2.0, 1.0, 10000, 42).value, 1.0, 1e-5);
}

TEST(PhiEstimate, EuclideanAgreesWithGridOracle) {
  // Dense grid over pairs in the unit disk around the origin.
  const Space s = make_euclidean(2);
  const double r = 1.0, eps = 0.7;
  double best = INFINITY;
  const int n = 60;
  std::vector<Point> pts;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double x = -1.0 + 2.0 * i / n, y = -1.0 + 2.0 * j / n;
      if (x * x + y * y <= 1.0) pts.push_back(E(x, y));
    }
  }
  const Point a = E(0, 0);
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      if (distance(s, x, y) >= eps * r) best = std::min(best, deficiency(s, {a, x, y}));
    }
  }
  const double est = phi_estimate(s, r, eps, 2000, 1).value;
  EXPECT_NEAR(est, eps * eps / 4.0, 1e-9);
  EXPECT_LE(est, best + 1e-12);
  EXPECT_NEAR(best, eps * eps / 4.0, 5e-3);
}

TEST(PhiEstimate, HyperbolicAboveComparisonBound) {
  const PhiEstimate e = phi_estimate(make_hyperbolic(), 1.0, 1.0, 10000, 42);
  EXPECT_GE(e.value, 0.25 - 1e-9);
  EXPECT_EQ(e.samples, 10000u);
}

TEST(PhiEstimate, PrefixMonotoneInSamples) {
  const Space s = make_lp_plane(4);
  double prev = INFINITY;
  for (std::size_t n : {10u, 100u, 1000u, 5000u}) {
    const double v = phi_estimate(s, 1.0, 1.0, n, 7).value;
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(PhiEstimate, DeterministicPerSeed) {
  const Space s = make_star_tree(4);
  const auto a = phi_estimate(s, 1.0, 0.5, 500, 3);
  const auto b = phi_estimate(s, 1.0, 0.5, 500, 3);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness.x, b.witness.x);
}

TEST(PhiEstimate, RejectsParameters) {
  const Space s = make_euclidean(2);
  EXPECT_THROW(phi_estimate(s, 1.0, 0.0, 10, 1), DomainError);
  EXPECT_THROW(phi_estimate(s, 0.0, 1.0, 10, 1), DomainError);
  EXPECT_THROW(phi_estimate(s, 1.0, 1.0, 0, 1), DomainError);
}

TEST(PhiInequality, Examples) {
  EXPECT_TRUE(check_phi_inequality(make_euclidean(2), 1.0, 2.0, {E(0, 0), E(1, 0), E(-1, 0)}));
  const Space lp = make_lp_plane(4);
  EXPECT_TRUE(check_phi_inequality(lp, 1.0, 2.0, {Point::lp_plane({0, 0}), Point::lp_plane({1, 0}),
                                                  Point::lp_plane({-1, 0})}));
  EXPECT_THROW(check_phi_inequality(make_euclidean(2), 1.0, 2.0, {E(0, 0), E(1, 0), E(0.5, 0)}),
               PreconditionError);
}

TEST(PhiInequality, NoCat0CounterexampleInSamples) {
  for (const Space& s : {make_euclidean(2), make_hyperbolic(), make_star_tree(3)}) {
    const TripleSampler sampler(s, 1.0, 1.0, 17);
    for (std::size_t i = 0; i < 100000; ++i) {
      ASSERT_GE(deficiency(s, sampler.draw(i)), 0.25 - 1e-9) << s.name();
    }
  }
}

TEST(PhiLowerBound, Values) {
  EXPECT_DOUBLE_EQ(phi_lower_bound(make_star_tree(3), 1.0, 2.0).value, 1.0);
  EXPECT_EQ(phi_lower_bound(make_hyperbolic(), 1.0, 1.0).kind, PhiBoundKind::cn_comparison);
  EXPECT_EQ(phi_lower_bound(make_euclidean(2), 1.0, 1.0).kind, PhiBoundKind::analytic);
  const double eta = modulus(make_lp_plane(4))(1.0, 1.0);
  EXPECT_DOUBLE_EQ(phi_lower_bound(make_lp_plane(4), 1.0, 1.0).value, eta * (2.0 - eta));
}

TEST(Monotonicity, AnalyticAndInclusionRecords) {
  const Report r = phi_monotonicity_report(make_euclidean(2), {.r = 1.0, .s = 2.0, .eps = 0.5, .delta = 1.5},
                                             10000, 5);
  EXPECT_TRUE(all_pass(r));
  EXPECT_TRUE(find(r, "monotonicity_eps_inclusion").pass);
  EXPECT_TRUE(find(r, "monotonicity_radius_inclusion").pass);
  EXPECT_EQ(find(r, "monotonicity_eps_inclusion").samples, 10000u);
  // Phi(1, 1) = Phi(2, 0.5) in Hilbert space.
  const Report eq = phi_monotonicity_report(make_euclidean(2), {.r = 1.0, .s = 2.0, .eps = 1.0, .delta = 1.0},
                                              100, 5);
  EXPECT_TRUE(find(eq, "monotonicity_radius_phi_analytic").pass);
  EXPECT_NEAR(find(eq, "monotonicity_radius_phi_analytic").margin, 0.0, 1e-15);
}

TEST(Monotonicity, RejectsBadParameters) {
  EXPECT_THROW(phi_monotonicity_report(make_euclidean(2), {.r = 2.0, .s = 1.0, .eps = 0.5, .delta = 1.0}, 10, 1),
               PreconditionError);
  EXPECT_THROW(phi_monotonicity_report(make_euclidean(2), {.r = 1.0, .s = 2.0, .eps = 1.0, .delta = 0.5}, 10, 1),
               PreconditionError);
}

TEST(Positivity, EuclideanGrid) {
  const std::vector<double> rs{0.5, 1.0, 2.0}, es{0.1, 1.0, 2.0};
  const Report r = positivity_check(make_euclidean(2), rs, es, 200, 1);
  EXPECT_TRUE(all_pass(r));
  EXPECT_DOUBLE_EQ(find(r, "positivity_min_lower_bound").margin, 0.1 * 0.1 * 0.5 * 0.5 / 4.0);
  EXPECT_THROW(positivity_check(make_euclidean(2), std::vector<double>{}, es, 10, 1), ConfigError);
}

TEST(Positivity, AllSpaces) {
  const std::vector<double> rs{0.5, 1.0, 2.0}, es{0.1, 1.0, 2.0};
  for (const Space& s : {make_hyperbolic(), make_star_tree(3), make_lp_plane(4), make_lp_plane(3)}) {
    EXPECT_TRUE(all_pass(positivity_check(s, rs, es, 500, 2))) << s.name();
  }
}
