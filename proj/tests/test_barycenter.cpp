#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "geobary/barycenter.hpp"
#include "geobary/error.hpp"
#include "geobary/spaces.hpp"
#include "oracles.hpp"

using namespace geobary;

namespace {

Point E(double a, double b) { return Point::euclidean({a, b}); }
Point T(std::size_t ray, double off) { return Point::tree(ray, off); }

Measure two_point(const Space& s) { return make_measure(s, {E(0, 0), E(2, 0)}, {0.5, 0.5}); }

Measure tree_three(const Space& s) { return make_uniform_measure(s, {T(0, 1), T(1, 1), T(2, 1)}); }

}  // namespace

TEST(Objective, Examples) {
  const Space s = make_euclidean(2);
  const Objective f(s, two_point(s), E(0, 0));
  EXPECT_DOUBLE_EQ(f(E(1, 0)), -1.0);
  EXPECT_DOUBLE_EQ(f(E(0, 0)), 0.0);
  const Point y = E(1, 2);
  const Objective dirac(s, make_dirac(s, y), y);
  EXPECT_EQ(dirac(y), 0.0);
  EXPECT_DOUBLE_EQ(dirac(E(4, 6)), 25.0);
}

TEST(Objective, RejectsForeignPoints) {
  const Space s = make_euclidean(2);
  EXPECT_THROW(Objective(s, two_point(s), T(0, 1)), DomainError);
  const Objective f(s, two_point(s), E(0, 0));
  EXPECT_THROW(f(Point::euclidean({1.0})), DomainError);
}

TEST(G, Examples) {
  const Space s = make_euclidean(2);
  EXPECT_DOUBLE_EQ(g(s, two_point(s), E(1, 0)), 1.0);
  EXPECT_EQ(g(s, make_dirac(s, E(3, 3)), E(3, 3)), 0.0);
  const Space t = make_star_tree(3);
  EXPECT_DOUBLE_EQ(g(t, tree_three(t), T(0, 0)), 1.0);
}

TEST(G, DiffersFromObjectiveByAnchorOffset) {
  const Space h = make_hyperbolic();
  Rng rng(1);
  const Measure P = make_uniform_measure(h, {h->sample_point(rng), h->sample_point(rng), h->sample_point(rng)});
  const Objective f(h, P, h->sample_point(rng));
  for (int i = 0; i < 100; ++i) {
    const Point x = h->sample_point(rng);
    EXPECT_NEAR(g(h, P, x) - f(x), f.anchor_offset(), 1e-12);
  }
}

TEST(Certificate, EuclideanTwoPoint) {
  const Space s = make_euclidean(2);
  const Objective f(s, two_point(s), E(0, 0));
  const auto c = quasiconvexity_certificate(f, E(0, 0), E(2, 0));
  EXPECT_DOUBLE_EQ(c.f_mid, -1.0);
  EXPECT_DOUBLE_EQ(c.f_max, 0.0);
  EXPECT_DOUBLE_EQ(c.deficiency_integral, 1.0);
  EXPECT_NEAR(c.identity_residual, 0.0, 1e-15);
  EXPECT_TRUE(c.identity_holds);
  EXPECT_TRUE(c.chain_holds);
  EXPECT_GT(c.bound, 0.0);
}

TEST(Certificate, TreeThreeUnitPoints) {
  const Space t = make_star_tree(3);
  const Objective f(t, tree_three(t), T(0, 0));
  const auto c = quasiconvexity_certificate(f, T(0, 1), T(1, 1));
  // m = hub; g(hub) = 1, g at a unit point = (0 + 4 + 4)/3.
  EXPECT_DOUBLE_EQ(c.f_mid, 1.0 - 1.0);
  EXPECT_DOUBLE_EQ(c.f_x0, 8.0 / 3.0 - 1.0);
  // S(y0) = S(y1) = 0.5 * 0 + 0.5 * 4 - 1 = 1; S(y2) = 0.5 * 4 + 0.5 * 4 - 1 = 3.
  EXPECT_DOUBLE_EQ(c.deficiency_integral, 5.0 / 3.0);
  EXPECT_TRUE(c.chain_holds);
  EXPECT_GE(c.gap, c.deficiency_integral / 3.0 - 1e-12);
}

TEST(Certificate, RejectsCoincidentPoints) {
  const Space s = make_euclidean(2);
  const Objective f(s, two_point(s), E(0, 0));
  EXPECT_THROW(quasiconvexity_certificate(f, E(1, 1), E(1, 1)), DomainError);
}

TEST(Coercivity, EuclideanDirac) {
  const Space s = make_euclidean(2);
  const Objective f(s, make_dirac(s, E(0, 0)), E(0, 0));
  const std::vector<double> radii{1, 10, 100};
  const auto rep = coercivity_probe(f, E(0, 0), radii);
  ASSERT_EQ(rep.values.size(), 3u);
  EXPECT_DOUBLE_EQ(rep.values[0], 1.0);
  EXPECT_DOUBLE_EQ(rep.values[1], 100.0);
  EXPECT_DOUBLE_EQ(rep.values[2], 10000.0);
  EXPECT_TRUE(rep.pass);
  const std::vector<double> zero{0.0, 1.0};
  EXPECT_EQ(coercivity_probe(f, E(0, 0), zero).values[0], 0.0);
}

TEST(Coercivity, HyperbolicRayIsSquaredDistance) {
  const Space h = make_hyperbolic();
  const Point y = Point::hyperbolic_lift(0.2, 0.1);
  const Objective f(h, make_dirac(h, y), y);
  const std::vector<double> radii{1, 5, 10};
  const auto rep = coercivity_probe(f, y, radii);
  for (std::size_t k = 0; k < radii.size(); ++k) EXPECT_NEAR(rep.values[k], radii[k] * radii[k], 1e-8);
  EXPECT_TRUE(rep.pass);
}

TEST(Coercivity, RejectsBadRadii) {
  const Space s = make_euclidean(2);
  const Objective f(s, make_dirac(s, E(0, 0)), E(0, 0));
  const std::vector<double> one{1.0}, down{2.0, 1.0};
  EXPECT_THROW(coercivity_probe(f, E(0, 0), one), PreconditionError);
  EXPECT_THROW(coercivity_probe(f, E(0, 0), down), PreconditionError);
}

TEST(InductiveMean, DiracIsExact) {
  const Space s = make_euclidean(2);
  EXPECT_EQ(inductive_mean(s, make_dirac(s, E(0.3, 0.7)), 1000, 4), E(0.3, 0.7));
  EXPECT_THROW(inductive_mean(s, make_dirac(s, E(0, 0)), 0, 1), DomainError);
}

TEST(InductiveMean, TwoPointEuclidean) {
  const Space s = make_euclidean(2);
  const Measure P = make_measure(s, {E(0, 0), E(1, 0)}, {0.5, 0.5});
  const Point m = inductive_mean(s, P, 100000, 42);
  EXPECT_LT(distance(s, m, E(0.5, 0)), 5e-3);
}

TEST(InductiveMean, TreeSymmetricNearHub) {
  const Space t = make_star_tree(3);
  const Point m = inductive_mean(t, tree_three(t), 100000, 42);
  EXPECT_LT(distance(t, m, T(0, 0)), 5e-3);
}

TEST(Solve, EuclideanArithmeticMean) {
  const Space s = make_euclidean(3);
  const Measure P = make_uniform_measure(s, {Point::euclidean({0, 0, 0}), Point::euclidean({3, 0, 0}),
                                             Point::euclidean({0, 3, 0})});
  const auto res = solve(s, P, P.atom(0), {.tol = 1e-8});
  EXPECT_LT(distance(s, res.point, Point::euclidean({1, 1, 0})), 1e-8);
  EXPECT_LE(res.certificate.gap, 2e-8);
}

TEST(Solve, TreeTwoAtoms) {
  const Space t = make_star_tree(3);
  const Measure P = make_measure(t, {T(0, 1), T(1, 1)}, {0.9, 0.1});
  const auto res = solve(t, P, P.atom(0));
  EXPECT_EQ(res.point.tree().ray, 0u);
  EXPECT_NEAR(res.point.tree().offset, 0.8, 1e-6);
  const auto grid = oracle::tree_grid_search(3, {{0, 1.0}, {1, 1.0}}, {0.9, 0.1}, 1.5, 300000);
  EXPECT_EQ(grid.ray, 0u);
  EXPECT_NEAR(grid.offset, 0.8, 1e-5);
}

TEST(Solve, HyperbolicTwoPointIsMidpoint) {
  const Space h = make_hyperbolic();
  const Point x = Point::hyperbolic_lift(-0.8, 0.3), y = Point::hyperbolic_lift(1.1, 0.9);
  const Measure P = make_uniform_measure(h, {x, y});
  const auto res = solve(h, P, x, {.tol = 1e-9});
  const Point m = midpoint(h, x, y);
  EXPECT_LT(distance(h, res.point, m), 1e-8);
  // Dense sweep along the geodesic and along perturbations around it.
  for (int i = 0; i <= 2000; ++i) {
    const double t = i / 2000.0;
    EXPECT_GE(g(h, P, geodesic_point(h, x, y, t)), res.g_value - 1e-12);
  }
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Point q = h->sample_at_distance(rng, m, rng.uniform(1e-4, 0.5));
    EXPECT_GE(g(h, P, q), res.g_value);
  }
}

TEST(Solve, DiracReturnsAtom) {
  const Space t = make_star_tree(4);
  const auto res = solve(t, make_dirac(t, T(3, 2.5)), T(3, 2.5));
  EXPECT_EQ(res.point, T(3, 2.5));
  EXPECT_EQ(res.certificate.gap, 0.0);
}

TEST(Solve, ResultIndependentOfAnchor) {
  const Space s = make_lp_plane(3);
  const Measure P = make_uniform_measure(s, {Point::lp_plane({0, 0}), Point::lp_plane({2, 0.5}),
                                             Point::lp_plane({-1, 1.5})});
  const auto a = solve(s, P, P.atom(0));
  const auto b = solve(s, P, Point::lp_plane({5, -5}));
  EXPECT_LE(distance(s, a.point, b.point), 2.0 * a.tol);
  EXPECT_NEAR(a.g_value, b.g_value, 1e-12);
}

TEST(Solve, RejectsNonPositiveTolerance) {
  const Space s = make_euclidean(2);
  EXPECT_THROW(solve(s, two_point(s), E(0, 0), {.tol = 0.0}), DomainError);
  EXPECT_THROW(solve(s, two_point(s), E(0, 0), {.tol = -1.0}), DomainError);
}

TEST(Solve, ExhaustedBudgetReportsBothEndpoints) {
  const Space s = make_hyperbolic();
  Rng rng(2);
  std::vector<Point> atoms;
  for (int i = 0; i < 6; ++i) atoms.push_back(s->sample_point(rng));
  const Measure P = make_uniform_measure(s, atoms);
  try {
    solve(s, P, P.atom(0), {.tol = 1e-14, .max_cycles = 1, .warm_start_iterations = 2});
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_NO_THROW(s.check(e.first()));
    EXPECT_NO_THROW(s.check(e.second()));
  }
}

TEST(DefaultTolerance, PerKind) {
  EXPECT_EQ(default_tolerance(make_euclidean(2)), 1e-8);
  EXPECT_EQ(default_tolerance(make_lp_plane(3)), 1e-8);
  EXPECT_EQ(default_tolerance(make_hyperbolic()), 1e-6);
  EXPECT_EQ(default_tolerance(make_star_tree(3)), 1e-6);
}
